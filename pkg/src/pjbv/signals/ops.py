"""
Operations
----------

Operations on signals.

.. autofunction:: pjbv.signals.affine_conjugate
.. autofunction:: pjbv.signals.evaluate
.. autofunction:: pjbv.signals.sample

"""
import logging

import numpy as np

from pjbv.signals.constants import PL
from pjbv.signals.model import AffineMap, BadResolution, Signal
from pjbv.signals.sampled import SampledSignal, get_mode


# Names available for import.
__all__ = ['affine_conjugate', 'evaluate', 'sample']


log = logging.getLogger(__name__)


# Public functions.
def affine_conjugate(f: Signal, L: AffineMap, F: AffineMap) -> Signal:
    """Build the signal x -> L(f(F(x))). Its domain is the interval
    F maps onto the domain of f.

    :param f: The signal to transform.
    :param L: The map applied to the values of the signal.
    :param F: The map applied to positions before evaluating.
    :return: A new :class:`Signal` of the same kind as `f`.
    :rtype: pjbv.signals.Signal

    Usage::

        >>> from pjbv.signals import Affine
        >>> f = Affine(1.0, 0.0, (0, 1))
        >>> affine_conjugate(f, AffineMap(1.0), AffineMap(0.5))
        Affine(slope=0.5, intercept=0.0, domain=Interval(lo=0.0, hi=2.0))
    """
    return f.conjugate(L, F)


def evaluate(f: Signal, x: float) -> float:
    """Evaluate a signal at a position in the closed hull of its
    domain.

    :param f: The signal.
    :param x: The position.
    :return: The value of the signal as a :class:`float`.
    :rtype: float
    """
    return f.evaluate(x)


def sample(f: Signal, n: int, mode: str = PL) -> SampledSignal:
    """Sample a signal on a uniform grid over its domain.

    Piecewise-linear samples can't hold a jump. Piecewise-constant
    samples can. A jump on a grid point steps there, and a jump between
    grid points steps at the next grid point.

    :param f: The signal to sample.
    :param n: The number of grid points. It must be at least two.
    :param mode: (Optional.) The interpolation mode of the samples.
    :return: A :class:`SampledSignal` object.
    :rtype: pjbv.signals.SampledSignal

    Usage::

        >>> from pjbv.signals import Jump
        >>> sample(Jump(0.5, 0.0, 1.0), 3, 'pc').values
        array([0., 1., 1.])
    """
    mode = get_mode(mode)
    if int(n) != n or n < 2:
        raise BadResolution(f'Sampling needs at least two points, got {n}.')
    grid = np.linspace(f.domain.lo, f.domain.hi, int(n))

    jumps = f.discontinuities()
    if jumps.size and mode == PL:
        msg = (
            f'Piecewise-linear samples cannot hold the jumps at '
            f'{jumps.tolist()}; sample in piecewise-constant mode.'
        )
        raise BadResolution(msg)

    # A jump within rounding of a grid point is snapped onto it, so
    # the sampled step happens in the same place as the original.
    tol = 1e-9 * f.domain.length
    for jump in jumps:
        near = int(np.argmin(np.abs(grid - jump)))
        if abs(grid[near] - jump) <= tol:
            grid[near] = jump
        else:
            log.debug('Jump at %s falls between grid points.', jump)

    log.debug('Sampled %r on %d points in %s mode.', f, n, mode)
    return SampledSignal(grid, f.value(grid), mode)
