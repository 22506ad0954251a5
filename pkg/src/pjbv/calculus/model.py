"""
model
-----

Types used for :mod:`pjbv.calculus`.
"""
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from pjbv.signals import Interval
from pjbv.util import DomainError, FloatAry


# Exceptions.
class BadMesh(DomainError):
    """A partition mesh isn't positive or is longer than the interval."""


class BadScale(DomainError):
    """A window scale or stride isn't positive."""


class BadSplit(DomainError):
    """A split point isn't strictly inside the interval."""


class NoValidWindow(DomainError):
    """Every window of a quotient map overflows the domain."""


# Result types.
@dataclass(frozen=True)
class IntervalStats:
    """The interval functionals of a signal over one interval.

    :param interval: The interval.
    :param mean: The mean value of the signal over the interval.
    :param oscillation: The mean absolute deviation from the mean.
    :param total_variation: The variation of the signal inside the
        interval.
    :param level_balance: The measure of the set below the mean minus
        the measure of the set above it.
    :param quotient: The oscillation over the total variation, or
        `None` when the signal is constant on the interval.
    :return: A :class:`IntervalStats` object.
    :rtype: pjbv.calculus.IntervalStats
    """
    interval: Interval
    mean: float
    oscillation: float
    total_variation: float
    level_balance: float
    quotient: Optional[float]

    @classmethod
    def fromdict(cls, record: dict[str, Any]) -> 'IntervalStats':
        """Rebuild the stats from the output of :meth:`asdict`."""
        quotient = record['quotient']
        return cls(
            interval=Interval(record['lo'], record['hi']),
            mean=float(record['mean']),
            oscillation=float(record['osc']),
            total_variation=float(record['tv']),
            level_balance=float(record['R']),
            quotient=None if quotient is None else float(quotient),
        )

    # Public methods.
    def asdict(self) -> dict[str, Any]:
        """Serialize the stats to a flat dictionary."""
        return {
            'lo': self.interval.lo,
            'hi': self.interval.hi,
            'mean': self.mean,
            'osc': self.oscillation,
            'tv': self.total_variation,
            'R': self.level_balance,
            'quotient': self.quotient,
        }


@dataclass(frozen=True)
class QuotientMap:
    """The interval stats of a signal over windows of several scales
    placed on a shared grid of centers.

    :param entries: The stats of each window that fit in the domain.
    :param scales: The lengths of the windows.
    :param positions: The centers of the windows.
    :param index: The (scale, position) indices of each entry.
    :param stride: The step between neighboring centers.
    :return: A :class:`QuotientMap` object.
    :rtype: pjbv.calculus.QuotientMap
    """
    entries: tuple[IntervalStats, ...]
    scales: tuple[float, ...]
    positions: tuple[float, ...]
    index: tuple[tuple[int, int], ...]
    stride: float

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def fromdict(cls, data: dict[str, Any]) -> 'QuotientMap':
        """Rebuild a map from the output of :meth:`asdict`."""
        scales = tuple(float(s) for s in data['scales'])
        positions = tuple(float(p) for p in data['positions'])
        entries, index = [], []
        for record in data['entries']:
            entries.append(IntervalStats.fromdict(record))
            index.append((
                scales.index(float(record['scale'])),
                positions.index(float(record['center'])),
            ))
        return cls(
            tuple(entries), scales, positions, tuple(index),
            float(data['stride'])
        )

    # Public methods.
    def asdict(self) -> dict[str, Any]:
        """Serialize the map to a dictionary of plain values."""
        return {
            'scales': list(self.scales),
            'positions': list(self.positions),
            'stride': self.stride,
            'entries': self.records(),
        }

    def at_scale(self, scale: float) -> list[IntervalStats]:
        """The entries of one scale, ordered by center."""
        i = self.scales.index(scale)
        return [e for e, (s, _) in zip(self.entries, self.index) if s == i]

    def grid(self, field: str = 'quotient') -> FloatAry:
        """Arrange one field of the entries as a scales by positions
        array. Missing windows and undefined quotients are NaN.
        """
        out = np.full((len(self.scales), len(self.positions)), np.nan)
        for entry, (i, j) in zip(self.entries, self.index):
            value = entry.asdict()[field]
            if value is not None:
                out[i, j] = value
        return out

    def records(self) -> list[dict[str, Any]]:
        """Flat per-window records, each with its nominal center and
        scale.
        """
        out = []
        for entry, (i, j) in zip(self.entries, self.index):
            record = {
                'center': self.positions[j],
                'scale': self.scales[i],
            }
            record.update(entry.asdict())
            out.append(record)
        return out
