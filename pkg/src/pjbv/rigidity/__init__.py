"""
rigidity
~~~~~~~~

Checks built on the quarter identity osc = TV / 4 and the
segmentation of signals by their quotient maps.


Basic Usage: Rigidity
=====================
Each check takes a signal and reports how far it is from the
behavior of signals whose oscillation is a quarter of their variation
on every window. Affine signals pass every check.

Usage::

    >>> from pjbv.signals import Affine
    >>> one_sided_bound(Affine(1.0), [(0.1, 0.4), (0.2, 0.9)]) < 0
    True


.. automodule:: pjbv.rigidity.lemma
.. automodule:: pjbv.rigidity.taylor
.. automodule:: pjbv.rigidity.power
.. automodule:: pjbv.rigidity.segment


Result Types
============
.. autoclass:: pjbv.rigidity.TaylorCoeffs
.. autoclass:: pjbv.rigidity.LemmaResidualReport
.. autoclass:: pjbv.rigidity.ExpansionReport
.. autoclass:: pjbv.rigidity.ExtremalProbe
.. autoclass:: pjbv.rigidity.Segment
.. autoclass:: pjbv.rigidity.SegmentationReport


Exceptions
==========
.. autoexception:: pjbv.rigidity.BadBranch
.. autoexception:: pjbv.rigidity.BadExponent
.. autoexception:: pjbv.rigidity.BadInterval
.. autoexception:: pjbv.rigidity.EmptyMap
.. autoexception:: pjbv.rigidity.FlatAtMean
.. autoexception:: pjbv.rigidity.IllConditioned
.. autoexception:: pjbv.rigidity.NotMonotone

"""
from pjbv.rigidity.lemma import *
from pjbv.rigidity.model import (
    AFFINE, CONSTANT, JUMP, KINDS, OTHER,
    BadBranch, BadExponent, BadInterval, EmptyMap, ExpansionReport,
    ExtremalProbe, FlatAtMean, IllConditioned, LemmaResidualReport,
    NotMonotone, Segment, SegmentationReport, TaylorCoeffs,
)
from pjbv.rigidity.power import *
from pjbv.rigidity.segment import *
from pjbv.rigidity.taylor import *
