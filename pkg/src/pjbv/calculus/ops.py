"""
Interval Functionals
--------------------

Exact interval functionals of signals. Every function takes a signal
and an interval inside the closed hull of its domain, and raises
:class:`pjbv.signals.OutOfDomain` otherwise.

.. autofunction:: pjbv.calculus.interval_mean
.. autofunction:: pjbv.calculus.interval_oscillation
.. autofunction:: pjbv.calculus.total_variation
.. autofunction:: pjbv.calculus.level_balance
.. autofunction:: pjbv.calculus.poincare_quotient
.. autofunction:: pjbv.calculus.interval_stats
.. autofunction:: pjbv.calculus.level_set_measure
.. autofunction:: pjbv.calculus.tail_integrals

"""
from typing import Optional, Sequence, Union

from pjbv.calculus.cells import Restriction, restrict
from pjbv.calculus.model import IntervalStats
from pjbv.signals import Interval, Signal


# Names available for import.
__all__ = [
    'interval_mean', 'interval_oscillation', 'interval_stats',
    'level_balance', 'level_set_measure', 'poincare_quotient',
    'tail_integrals', 'total_variation',
]


# Typing.
IntervalLike = Union[Interval, Sequence[float]]


# Utility functions.
def _restrict(f: Signal, interval: IntervalLike) -> Restriction:
    interval = Interval.coerce(interval)
    f.check_interval(interval)
    return restrict(f, interval)


def _oscillation(part: Restriction, mean: float) -> float:
    upper, lower = part.tails(mean)
    return (upper + lower) / part.interval.length


def _quotient(osc: float, tv: float) -> Optional[float]:
    if tv == 0:
        return None
    return osc / tv


# Public functions.
def interval_mean(f: Signal, interval: IntervalLike) -> float:
    """The mean value of a signal over an interval.

    :param f: The signal.
    :param interval: The interval.
    :return: The mean as a :class:`float`.
    :rtype: float

    Usage::

        >>> from pjbv.signals import Affine
        >>> interval_mean(Affine(2.0, 1.0), (0, 1))
        2.0
    """
    return _restrict(f, interval).mean()


def interval_oscillation(f: Signal, interval: IntervalLike) -> float:
    """The mean oscillation of a signal over an interval: the average
    of the absolute deviation from the mean.

    :param f: The signal.
    :param interval: The interval.
    :return: The oscillation as a :class:`float`.
    :rtype: float

    Usage::

        >>> from pjbv.signals import Affine
        >>> interval_oscillation(Affine(1.0, 0.0), (0, 1))
        0.25
    """
    part = _restrict(f, interval)
    return _oscillation(part, part.mean())


def total_variation(f: Signal, interval: IntervalLike) -> float:
    """The total variation of a signal inside an interval. Jumps
    sitting exactly on an end of the interval don't count.

    :param f: The signal.
    :param interval: The interval.
    :return: The total variation as a :class:`float`.
    :rtype: float
    """
    return _restrict(f, interval).variation()


def level_balance(f: Signal, interval: IntervalLike) -> float:
    """The measure of the set where a signal is strictly below its
    mean over an interval minus the measure of the set where it is
    strictly above.

    :param f: The signal.
    :param interval: The interval.
    :return: The balance as a :class:`float`.
    :rtype: float
    """
    part = _restrict(f, interval)
    below, above, _ = part.balance(part.mean())
    return below - above


def poincare_quotient(
    f: Signal,
    interval: IntervalLike
) -> Optional[float]:
    """The oscillation of a signal over an interval divided by its
    total variation there.

    :param f: The signal.
    :param interval: The interval.
    :return: The quotient as a :class:`float`, or `None` when the
        signal is constant on the interval.
    :rtype: float
    """
    part = _restrict(f, interval)
    return _quotient(_oscillation(part, part.mean()), part.variation())


def interval_stats(f: Signal, interval: IntervalLike) -> IntervalStats:
    """All interval functionals of a signal over an interval.

    :param f: The signal.
    :param interval: The interval.
    :return: A :class:`IntervalStats` object.
    :rtype: pjbv.calculus.IntervalStats
    """
    part = _restrict(f, interval)
    mean = part.mean()
    osc = _oscillation(part, mean)
    tv = part.variation()
    below, above, _ = part.balance(mean)
    return IntervalStats(
        interval=part.interval,
        mean=mean,
        oscillation=osc,
        total_variation=tv,
        level_balance=below - above,
        quotient=_quotient(osc, tv),
    )


def level_set_measure(
    f: Signal,
    interval: IntervalLike,
    level: float
) -> float:
    """The measure of the set where a signal equals a level inside an
    interval.

    :param f: The signal.
    :param interval: The interval.
    :param level: The level.
    :return: The measure as a :class:`float`.
    :rtype: float
    """
    _, _, flat = _restrict(f, interval).balance(level)
    return flat


def tail_integrals(
    f: Signal,
    interval: IntervalLike
) -> tuple[float, float]:
    """The integrals of the parts of a signal above and below its
    mean over an interval. They are equal, and each is half of the
    integral of the absolute deviation.

    :param f: The signal.
    :param interval: The interval.
    :return: The upper and lower tails as a :class:`tuple`.
    :rtype: tuple
    """
    part = _restrict(f, interval)
    return part.tails(part.mean())
