"""
Families
--------

Seeded generators of test signals. Each family is a function taking
a :class:`numpy.random.Generator` and keyword parameters, registered
under its name in :data:`pjbv.signals.families`.

.. autofunction:: pjbv.signals.generate_family
.. autofunction:: pjbv.signals.generate_sampled

"""
import logging
from typing import Any, Optional, Sequence

import numpy as np

from pjbv.signals.analytic import (
    Affine, AnalyticSignal, Composite, Jump, Polynomial, Power
)
from pjbv.signals.constants import (
    DEFAULT_DOMAIN, PL, POWER_DOMAIN, SAMPLED_POINTS
)
from pjbv.signals.model import Interval, UnknownKind, families
from pjbv.signals.sampled import SampledSignal
from pjbv.util import Seed, get_rng, register


# Names available for import.
__all__ = ['generate_family', 'generate_sampled']


log = logging.getLogger(__name__)


# Families.
@register(families)
def random_affine(
    rng: np.random.Generator,
    domain: Sequence[float] = DEFAULT_DOMAIN
) -> Affine:
    """A line with a slope of at least 0.1 in magnitude."""
    slope = rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 5.0)
    intercept = rng.uniform(-5.0, 5.0)
    return Affine(slope, intercept, domain)


def _levels(rng: np.random.Generator) -> tuple[float, float]:
    left = rng.uniform(-2.0, 2.0)
    step = rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 2.0)
    return left, left + step


@register(families)
def random_centered_jump(
    rng: np.random.Generator,
    domain: Sequence[float] = DEFAULT_DOMAIN
) -> Jump:
    """A step in the middle of the domain."""
    interval = Interval.coerce(domain)
    return Jump(interval.center, *_levels(rng), interval)


@register(families)
def random_offcenter_jump(
    rng: np.random.Generator,
    domain: Sequence[float] = DEFAULT_DOMAIN
) -> Jump:
    """A step at least a tenth of the domain away from the middle
    and from either end.
    """
    interval = Interval.coerce(domain)
    t = rng.uniform(0.1, 0.4)
    if rng.random() < 0.5:
        t += 0.5
    location = interval.lo + t * interval.length
    return Jump(location, *_levels(rng), interval)


@register(families)
def random_monotone_polynomial(
    rng: np.random.Generator,
    domain: Sequence[float] = DEFAULT_DOMAIN
) -> Polynomial:
    """A nondecreasing cubic. Its slope is a + b t**2 with t the
    distance from a point near the middle measured in domain lengths,
    a in [0, 1] and b in [1, 4].
    """
    interval = Interval.coerce(domain)
    a = rng.uniform(0.0, 1.0)
    b = rng.uniform(1.0, 4.0)
    base = rng.uniform(-1.0, 1.0)
    center = interval.center + rng.uniform(-0.25, 0.25) * interval.length
    cubic = b / (3 * interval.length ** 2)
    return Polynomial([base, a, 0.0, cubic], center, interval)


@register(families)
def random_piecewise_affine(
    rng: np.random.Generator,
    domain: Sequence[float] = DEFAULT_DOMAIN,
    pieces: int = 3
) -> Composite:
    """A continuous chain of lines. Neighboring slopes differ by at
    least a factor of two.
    """
    interval = Interval.coerce(domain)
    widths = rng.uniform(0.5, 1.5, pieces)
    edges = np.concatenate(([0.0], np.cumsum(widths) / widths.sum()))
    edges = interval.lo + edges * interval.length
    edges[-1] = interval.hi

    slope = rng.choice([-1.0, 1.0]) * rng.uniform(0.5, 3.0)
    level = rng.uniform(-1.0, 1.0)
    parts = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        parts.append(Affine(slope, level - slope * lo, (lo, hi)))
        level += slope * (hi - lo)
        factor = rng.uniform(2.0, 3.0)
        if rng.random() < 0.5:
            factor = 1 / factor
        slope *= rng.choice([-1.0, 1.0]) * factor
    return Composite(parts)


@register(families)
def power(
    rng: np.random.Generator,
    exponent: float = 2.5,
    shift: float = 0.0,
    scale: float = 1.0,
    offset: float = 0.0,
    domain: Sequence[float] = POWER_DOMAIN
) -> Power:
    """A power signal. It isn't random, the generator is ignored."""
    return Power(exponent, shift, scale, offset, domain)


# Public functions.
def generate_family(
    kind: str,
    seed: Seed = None,
    params: Optional[dict[str, Any]] = None
) -> AnalyticSignal:
    """Generate a signal from one of the registered families.

    :param kind: The name of the family.
    :param seed: (Optional.) The seed for the random generator. The
        same seed always gives the same signal.
    :param params: (Optional.) Keyword parameters for the family.
    :return: A :class:`AnalyticSignal` object.
    :rtype: pjbv.signals.AnalyticSignal

    Usage::

        >>> generate_family('random_affine', 7) == generate_family(
        ...     'random_affine', 7
        ... )
        True
    """
    try:
        family = families[kind]
    except KeyError:
        msg = f'Unknown signal family: {kind}.'
        raise UnknownKind(msg)
    signal = family(get_rng(seed), **(params or {}))
    log.debug('Generated %r from %s with seed %r.', signal, kind, seed)
    return signal


def generate_sampled(
    seed: Seed = None,
    n: int = SAMPLED_POINTS,
    mode: str = PL,
    domain: Sequence[float] = DEFAULT_DOMAIN
) -> SampledSignal:
    """Generate a random walk on an irregular grid. About one step in
    ten is flat.

    :param seed: (Optional.) The seed for the random generator.
    :param n: (Optional.) The number of samples.
    :param mode: (Optional.) The interpolation mode of the samples.
    :param domain: (Optional.) The domain of the signal.
    :return: A :class:`SampledSignal` object.
    :rtype: pjbv.signals.SampledSignal
    """
    rng = get_rng(seed)
    interval = Interval.coerce(domain)
    gaps = rng.uniform(0.5, 1.5, n - 1)
    grid = np.concatenate(([0.0], np.cumsum(gaps) / gaps.sum()))
    grid = interval.lo + grid * interval.length
    grid[-1] = interval.hi

    steps = rng.normal(size=n)
    steps[rng.random(n) < 0.1] = 0.0
    return SampledSignal(grid, np.cumsum(steps), mode)
