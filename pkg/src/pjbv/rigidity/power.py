"""
Powers
------

Closed forms for the power signals x**s on intervals starting at or
after zero, and the equation that picks out the exponents whose
quotient over (0, b) is a quarter.

.. autofunction:: pjbv.rigidity.power_quotient
.. autofunction:: pjbv.rigidity.crossing_point
.. autofunction:: pjbv.rigidity.phi
.. autofunction:: pjbv.rigidity.exponent_gap
.. autofunction:: pjbv.rigidity.exponent_equation_solve

"""
import logging
from math import log as ln

import numpy as np
from scipy.optimize import bisect

from pjbv.rigidity.model import BadExponent, BadInterval
from pjbv.util import EXPONENT_GRID


# Names available for import.
__all__ = [
    'crossing_point', 'exponent_equation_solve', 'exponent_gap', 'phi',
    'power_quotient',
]


log = logging.getLogger(__name__)


# Utility functions.
def _check_exponent(s: float) -> None:
    if not s > 0:
        raise BadExponent(f'The exponent must be positive: {s}.')


def _check_ends(a: float, b: float) -> None:
    if not 0 <= a < b:
        raise BadInterval(f'Need 0 <= a < b, got a={a}, b={b}.')


# Public functions.
def power_quotient(s: float) -> float:
    """The quotient of x**s over any interval (0, b), which is
    2s / (1 + s)**(2 + 1/s).

    :param s: The exponent.
    :return: The quotient as a :class:`float`.
    :rtype: float

    Usage::

        >>> power_quotient(1.0)
        0.25
    """
    _check_exponent(s)
    return 2 * s / (1 + s) ** (2 + 1 / s)


def crossing_point(s: float, a: float, b: float) -> float:
    """The point where x**s crosses its mean over (a, b).

    :param s: The exponent.
    :param a: The left end.
    :param b: The right end.
    :return: The point as a :class:`float`.
    :rtype: float

    Usage::

        >>> crossing_point(1.0, 0.0, 2.0)
        1.0
    """
    _check_exponent(s)
    _check_ends(a, b)
    mean = (b ** (s + 1) - a ** (s + 1)) / ((s + 1) * (b - a))
    return mean ** (1 / s)


def phi(s: float, a: float, b: float) -> float:
    """A quarter of the variation of x**s over (a, b) minus its
    oscillation there. It vanishes on every interval only for s = 1.

    :param s: The exponent.
    :param a: The left end.
    :param b: The right end.
    :return: The difference as a :class:`float`.
    :rtype: float
    """
    _check_exponent(s)
    _check_ends(a, b)
    x = crossing_point(s, a, b)
    below = (x - a) * x ** s - (x ** (s + 1) - a ** (s + 1)) / (s + 1)
    return (b ** s - a ** s) / 4 - 2 / (b - a) * below


def exponent_gap(s: float) -> float:
    """The log form (2 + 1/s) ln(1 + s) - ln(8s) of the equation
    8s = (1 + s)**(2 + 1/s). It is zero where the quotient of x**s
    over (0, b) is a quarter.

    :param s: The exponent.
    :return: The gap as a :class:`float`.
    :rtype: float
    """
    _check_exponent(s)
    return (2 + 1 / s) * ln(1 + s) - ln(8 * s)


def exponent_equation_solve(
    lo: float = 0.5,
    hi: float = 4.0,
    tol: float = 1e-10
) -> list[float]:
    """Find every root of :func:`exponent_gap` in [lo, hi] where it
    changes sign on a uniform scanning grid, refined by bisection.

    :param lo: (Optional.) The start of the search.
    :param hi: (Optional.) The end of the search.
    :param tol: (Optional.) The bisection tolerance.
    :return: The roots in increasing order as a :class:`list`.
    :rtype: list
    """
    _check_exponent(lo)
    if not lo < hi:
        raise BadInterval(f'Need lo < hi, got lo={lo}, hi={hi}.')

    grid = np.linspace(lo, hi, EXPONENT_GRID)
    gaps = np.array([exponent_gap(s) for s in grid])
    roots = [float(s) for s, g in zip(grid, gaps) if g == 0]
    changes = np.nonzero(gaps[:-1] * gaps[1:] < 0)[0]
    for i in changes:
        root = bisect(exponent_gap, grid[i], grid[i + 1], xtol=tol)
        roots.append(float(root))
    roots.sort()
    log.debug('Exponent equation roots on [%s, %s]: %s.', lo, hi, roots)
    return roots
