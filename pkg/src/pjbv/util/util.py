"""
util
====

General utility functions for :mod:`pjbv`.

.. autofunction:: pjbv.util.get_rng
.. autofunction:: pjbv.util.log_log_slope
.. autofunction:: pjbv.util.richardson

"""
from typing import Optional, Sequence, Union

import numpy as np
from numpy.random import default_rng

from pjbv.util.model import FloatAry


# Exported names.
__all__ = ['Seed', 'get_rng', 'log_log_slope', 'richardson']


# Typing.
Seed = Union[None, int, str, bytes]


# Random number generation.
def get_rng(seed: Seed) -> np.random.Generator:
    """Build an independent random number generator from a seed.

    :param seed: An int, bytes, or string. Strings are converted to
        UTF-8 bytes and bytes to integers before seeding.
    :return: A :class:`numpy.random.Generator` object.
    :rtype: numpy.random.Generator
    """
    if isinstance(seed, str):
        seed = bytes(seed, 'utf_8')
    if isinstance(seed, bytes):
        seed = int.from_bytes(seed, 'little')
    return default_rng(seed)


# Convergence analysis.
def log_log_slope(
    x: Sequence[float],
    y: Sequence[float]
) -> Optional[float]:
    """Fit the exponent p in y ~ C * x**p.

    :param x: The step sizes.
    :param y: The errors observed at those step sizes.
    :return: The fitted exponent, or `None` when fewer than two of
        the errors are nonzero.
    :rtype: float

    Usage::

        >>> log_log_slope([0.1, 0.2, 0.4], [0.01, 0.04, 0.16])
        2.0
    """
    xs = np.asarray(x, dtype=float)
    ys = np.abs(np.asarray(y, dtype=float))
    keep = ys > 0
    if np.count_nonzero(keep) < 2:
        return None
    slope = np.polyfit(np.log(xs[keep]), np.log(ys[keep]), 1)[0]
    return float(np.round(slope, 12))


def richardson(
    h: Sequence[float],
    values: Sequence[float],
    order: int = 2
) -> float:
    """Extrapolate values with an error expansion in powers of
    h**order to h = 0.

    The values are fit as c0 + c1 h**order + c2 h**(2 order) + ...
    with as many terms as there are samples, and c0 is returned.

    :param h: The step sizes.
    :param values: The values observed at those step sizes.
    :param order: (Optional.) The power of the leading error term.
    :return: The extrapolated value.
    :rtype: float

    Usage::

        >>> h = [0.2, 0.1, 0.05]
        >>> values = [1 + 3 * n ** 2 for n in h]
        >>> round(richardson(h, values), 12)
        1.0
    """
    hs = np.asarray(h, dtype=float) ** order
    vs = np.asarray(values, dtype=float)
    degree = min(len(hs) - 1, 2)
    coeffs: FloatAry = np.polyfit(hs, vs, degree)
    return float(coeffs[-1])
