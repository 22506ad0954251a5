"""
signals
~~~~~~~

One-dimensional signals of bounded variation.


Basic Usage: Signals
====================
A signal is a real function on an interval domain. It is either known
through samples on a grid, or given in closed form. Build one, then
evaluate it or hand it to :mod:`pjbv.calculus`.

Usage::

    >>> f = Affine(2.0, 1.0, (0, 1))
    >>> f.evaluate(0.5)
    2.0
    >>> g = sample(f, 3)
    >>> g.values
    array([1., 2., 3.])


Domain Types
============
.. autoclass:: pjbv.signals.Interval
.. autoclass:: pjbv.signals.AffineMap
.. autoclass:: pjbv.signals.Signal


Signal Classes
==============
.. automodule:: pjbv.signals.sampled
.. automodule:: pjbv.signals.analytic


Operations
==========
.. automodule:: pjbv.signals.ops
.. automodule:: pjbv.signals.families


Exceptions
==========
.. autoexception:: pjbv.signals.OutOfDomain
.. autoexception:: pjbv.signals.EmptyInterval
.. autoexception:: pjbv.signals.BadResolution
.. autoexception:: pjbv.signals.DegenerateMap
.. autoexception:: pjbv.signals.UnknownKind
.. autoexception:: pjbv.signals.InvalidSignal

"""
from pjbv.signals.analytic import *
from pjbv.signals.constants import MODES, PC, PL
from pjbv.signals.families import generate_family, generate_sampled
from pjbv.signals.model import (
    AffineMap, BadResolution, DegenerateMap, EmptyInterval, Interval,
    InvalidSignal, OutOfDomain, Serializable, Signal, UnknownKind,
    families, signal_types,
)
from pjbv.signals.ops import affine_conjugate, evaluate, sample
from pjbv.signals.sampled import SampledSignal, get_mode
