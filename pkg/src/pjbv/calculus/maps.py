"""
Maps
----

Functionals evaluated over many intervals at once.

.. autofunction:: pjbv.calculus.quotient_map
.. autofunction:: pjbv.calculus.partition_osc_sum
.. autofunction:: pjbv.calculus.measure_extension_defect

"""
import logging
from math import floor
from typing import Sequence

import numpy as np

from pjbv.calculus.model import (
    BadMesh, BadScale, BadSplit, NoValidWindow, QuotientMap
)
from pjbv.calculus.ops import (
    IntervalLike, interval_oscillation, interval_stats
)
from pjbv.signals import Interval, Signal


# Names available for import.
__all__ = ['measure_extension_defect', 'partition_osc_sum', 'quotient_map']


log = logging.getLogger(__name__)


# Public functions.
def quotient_map(
    f: Signal,
    scales: Sequence[float],
    stride: float
) -> QuotientMap:
    """Compute the interval stats of a signal over windows of several
    lengths. Window centers start at the left end of the domain and
    step by the stride. Windows that overflow the domain are skipped
    rather than clipped, so each scale keeps its length.

    :param f: The signal.
    :param scales: The window lengths.
    :param stride: The step between window centers.
    :return: A :class:`QuotientMap` object.
    :rtype: pjbv.calculus.QuotientMap

    Usage::

        >>> from pjbv.signals import Affine
        >>> qmap = quotient_map(Affine(3.0, 1.0), [0.5], 0.25)
        >>> [round(e.quotient, 12) for e in qmap.entries]
        [0.25, 0.25, 0.25]
    """
    if not len(scales) or min(scales) <= 0:
        raise BadScale(f'Window scales must be positive: {list(scales)}.')
    if not stride > 0:
        raise BadScale(f'Window stride must be positive: {stride}.')

    domain = f.domain
    dust = 1e-9 * domain.length
    count = floor(domain.length / stride + 1e-9)
    positions = tuple(domain.lo + stride * k for k in range(count + 1))
    scales = tuple(float(s) for s in scales)

    entries, index = [], []
    for i, scale in enumerate(scales):
        for j, center in enumerate(positions):
            lo, hi = center - scale / 2, center + scale / 2
            if lo < domain.lo - dust or hi > domain.hi + dust:
                continue
            window = Interval(max(lo, domain.lo), min(hi, domain.hi))
            entries.append(interval_stats(f, window))
            index.append((i, j))

    skipped = len(scales) * len(positions) - len(entries)
    log.debug(
        'Quotient map: %d windows evaluated, %d skipped.',
        len(entries), skipped
    )
    if not entries:
        msg = (
            f'No window of scales {list(scales)} fits in the domain '
            f'{domain.astuple()}.'
        )
        raise NoValidWindow(msg)
    return QuotientMap(
        tuple(entries), scales, positions, tuple(index), float(stride)
    )


def partition_osc_sum(
    f: Signal,
    interval: IntervalLike,
    mesh: float
) -> float:
    """Sum the oscillation of a signal over a partition of an
    interval into equal pieces no shorter than the mesh and shorter
    than twice the mesh.

    :param f: The signal.
    :param interval: The interval to partition.
    :param mesh: The shortest allowed piece.
    :return: The sum as a :class:`float`.
    :rtype: float

    Usage::

        >>> from pjbv.signals import Affine
        >>> round(partition_osc_sum(Affine(2.0), (0, 1), 0.1), 12)
        0.5
    """
    J = Interval.coerce(interval)
    if not 0 < mesh <= J.length:
        msg = f'Mesh {mesh} must be positive and at most {J.length}.'
        raise BadMesh(msg)
    n = max(1, floor(J.length / mesh + 1e-12))
    edges = np.linspace(J.lo, J.hi, n + 1)
    edges[-1] = J.hi
    return float(sum(
        interval_oscillation(f, Interval(a, b))
        for a, b in zip(edges[:-1], edges[1:])
    ))


def measure_extension_defect(
    f: Signal,
    interval: IntervalLike,
    split: float
) -> float:
    """How far the oscillation of a signal is from being additive
    when an interval is split in two.

    :param f: The signal.
    :param interval: The interval.
    :param split: Where to split it.
    :return: The defect as a :class:`float`.
    :rtype: float
    """
    J = Interval.coerce(interval)
    if not J.lo < split < J.hi:
        msg = f'Split {split} is not strictly inside {J.astuple()}.'
        raise BadSplit(msg)
    left, right = J.split(split)
    whole = interval_oscillation(f, J)
    parts = interval_oscillation(f, left) + interval_oscillation(f, right)
    return abs(whole - parts)
