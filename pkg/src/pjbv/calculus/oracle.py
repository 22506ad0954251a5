"""
Oracle
------

Brute-force versions of the interval functionals, used to check the
exact ones.

.. autofunction:: pjbv.calculus.quadrature_stats

"""
import numpy as np

from pjbv.calculus.model import IntervalStats
from pjbv.calculus.ops import IntervalLike
from pjbv.signals import Interval, Signal
from pjbv.util import ORACLE_SUBDIVISIONS


# Names available for import.
__all__ = ['quadrature_stats']


# Public functions.
def quadrature_stats(
    f: Signal,
    interval: IntervalLike,
    subdivisions: int = ORACLE_SUBDIVISIONS
) -> IntervalStats:
    """Approximate the interval stats of a signal with the midpoint
    rule on a uniform grid. The breakpoints of the signal are added
    to the grid, so no cell straddles a jump or a kink.

    The level balance is only resolved to about one cell per crossing
    of the mean.

    :param f: The signal.
    :param interval: The interval.
    :param subdivisions: (Optional.) The number of uniform cells.
    :return: A :class:`IntervalStats` object.
    :rtype: pjbv.calculus.IntervalStats
    """
    interval = Interval.coerce(interval)
    f.check_interval(interval)
    lo, hi = interval.astuple()
    breaks = f.breakpoints()
    breaks = breaks[(breaks > lo) & (breaks < hi)]
    nodes = np.union1d(np.linspace(lo, hi, subdivisions + 1), breaks)
    nodes[0], nodes[-1] = lo, hi

    widths = np.diff(nodes)
    mids = (nodes[:-1] + nodes[1:]) / 2
    values = f.value(mids)
    mean = float(np.sum(widths * values) / interval.length)
    osc = float(np.sum(widths * np.abs(values - mean)) / interval.length)
    below = float(np.sum(widths[values < mean]))
    above = float(np.sum(widths[values > mean]))

    # Signals are right-continuous, so the value at the right end is
    # taken from inside the interval.
    ends = f.value(nodes)
    ends[-1] = f.value(np.nextafter(hi, lo))
    tv = float(np.sum(np.abs(np.diff(ends))))

    return IntervalStats(
        interval=interval,
        mean=mean,
        oscillation=osc,
        total_variation=tv,
        level_balance=below - above,
        quotient=osc / tv if tv > 0 else None,
    )
