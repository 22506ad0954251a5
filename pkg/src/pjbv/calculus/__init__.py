"""
calculus
~~~~~~~~

Exact interval functionals of signals.


Basic Usage: Calculus
=====================
The functionals take a signal and an interval inside its domain. They
are computed in closed form: per cell for sampled signals and from
antiderivatives and level crossings for analytic ones.

Usage::

    >>> from pjbv.signals import Jump
    >>> stats = interval_stats(Jump(0.5, 0.0, 1.0), (0, 1))
    >>> stats.oscillation, stats.total_variation, stats.quotient
    (0.5, 1.0, 0.5)


Interval Functionals
====================
.. automodule:: pjbv.calculus.ops


Maps and Partitions
===================
.. automodule:: pjbv.calculus.maps


Oracle
======
.. automodule:: pjbv.calculus.oracle


Result Types
============
.. autoclass:: pjbv.calculus.IntervalStats
.. autoclass:: pjbv.calculus.QuotientMap


Exceptions
==========
.. autoexception:: pjbv.calculus.BadMesh
.. autoexception:: pjbv.calculus.BadScale
.. autoexception:: pjbv.calculus.BadSplit
.. autoexception:: pjbv.calculus.NoValidWindow

"""
from pjbv.calculus.cells import Restriction, restrict
from pjbv.calculus.maps import *
from pjbv.calculus.model import (
    BadMesh, BadScale, BadSplit, IntervalStats, NoValidWindow, QuotientMap,
)
from pjbv.calculus.ops import *
from pjbv.calculus.oracle import quadrature_stats
