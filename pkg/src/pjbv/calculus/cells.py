"""
Cells
-----

Exact restriction of signals to intervals. A restriction cuts the
signal on an interval into blocks of cells where it has a simple
form, plus the jumps between blocks. Every interval functional is
then a sum of per-cell closed forms.

.. autoclass:: pjbv.calculus.cells.Restriction
.. autofunction:: pjbv.calculus.cells.restrict

"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import singledispatch

import numpy as np

from pjbv.signals import (
    PL, Affine, Composite, Interval, Jump, SampledSignal, Signal,
    SmoothSignal,
)
from pjbv.util import EXACT_TOL, FloatAry


# Names available for import.
__all__ = [
    'Block', 'ConstantBlock', 'LinearBlock', 'Restriction', 'SmoothBlock',
    'restrict',
]


# Typing.
Tails = tuple[float, float]
Balance = tuple[float, float, float]


# Blocks.
class Block(ABC):
    """Cells of a signal with a shared closed form."""
    @abstractmethod
    def balance(self, level: float) -> Balance:
        """The measures of the sets below, above, and at a level."""

    @abstractmethod
    def integral(self) -> float:
        """The integral of the signal over the block."""

    @abstractmethod
    def tails(self, level: float) -> Tails:
        """The integrals of the parts of the signal above and below a
        level, both as nonnegative numbers.
        """

    @abstractmethod
    def variation(self) -> float:
        """The total variation inside the block."""


class LinearBlock(Block):
    """Cells where the signal is linear between knots.

    :param knots: The strictly increasing cell edges.
    :param values: The value of the signal at each knot.
    """
    def __init__(self, knots: FloatAry, values: FloatAry) -> None:
        self.knots = knots
        self.values = values
        self.widths = np.diff(knots)
        self.scale = max(1.0, float(np.max(np.abs(values))))

    def _offsets(self, level: float) -> tuple[FloatAry, FloatAry]:
        y = self.values - level
        y[np.abs(y) <= EXACT_TOL * self.scale] = 0.0
        return y[:-1], y[1:]

    # Public methods.
    def balance(self, level: float) -> Balance:
        u, v = self._offsets(level)
        h = self.widths
        cross = u * v < 0
        flat = (u == 0) & (v == 0)

        # Cells that keep one side of the level, touching it at most
        # at one end.
        side = np.sign(u + v)
        below = float(np.sum(h[~cross & (side < 0)]))
        above = float(np.sum(h[~cross & (side > 0)]))

        # Cells that cross the level split at the crossing.
        uc, vc, hc = u[cross], v[cross], h[cross]
        t = np.abs(uc) / (np.abs(uc) + np.abs(vc))
        left, right = hc * t, hc * (1 - t)
        below += float(np.sum(left[uc < 0]) + np.sum(right[vc < 0]))
        above += float(np.sum(left[uc > 0]) + np.sum(right[vc > 0]))
        return below, above, float(np.sum(h[flat]))

    def integral(self) -> float:
        ends = self.values[:-1] + self.values[1:]
        return float(np.sum(self.widths * ends) / 2)

    def tails(self, level: float) -> Tails:
        u, v = self._offsets(level)
        h = self.widths
        cross = u * v < 0
        whole = h[~cross] * (u[~cross] + v[~cross]) / 2
        upper = float(np.sum(whole[whole > 0]))
        lower = float(-np.sum(whole[whole < 0]))

        # Each side of a crossing cell is a triangle.
        uc, vc, hc = u[cross], v[cross], h[cross]
        denom = 2 * (np.abs(uc) + np.abs(vc))
        pos = np.maximum(uc, 0) ** 2 + np.maximum(vc, 0) ** 2
        neg = np.minimum(uc, 0) ** 2 + np.minimum(vc, 0) ** 2
        upper += float(np.sum(hc * pos / denom))
        lower += float(np.sum(hc * neg / denom))
        return upper, lower

    def variation(self) -> float:
        return float(np.sum(np.abs(np.diff(self.values))))


class ConstantBlock(Block):
    """Cells where the signal is constant.

    :param knots: The strictly increasing cell edges.
    :param values: The value of the signal in each cell.
    """
    def __init__(self, knots: FloatAry, values: FloatAry) -> None:
        self.knots = knots
        self.values = values
        self.widths = np.diff(knots)
        self.scale = max(1.0, float(np.max(np.abs(values))))

    def _offsets(self, level: float) -> FloatAry:
        y = self.values - level
        y[np.abs(y) <= EXACT_TOL * self.scale] = 0.0
        return y

    # Public methods.
    def balance(self, level: float) -> Balance:
        y = self._offsets(level)
        h = self.widths
        return (
            float(np.sum(h[y < 0])),
            float(np.sum(h[y > 0])),
            float(np.sum(h[y == 0])),
        )

    def integral(self) -> float:
        return float(np.sum(self.widths * self.values))

    def tails(self, level: float) -> Tails:
        y = self._offsets(level)
        h = self.widths
        return (
            float(np.sum(h * np.maximum(y, 0))),
            float(np.sum(h * np.maximum(-y, 0))),
        )

    def variation(self) -> float:
        return float(np.sum(np.abs(np.diff(self.values))))


class SmoothBlock(Block):
    """A smooth analytic signal on one interval, cut into runs where
    it is monotone.

    :param signal: The signal.
    :param lo: The left end of the block.
    :param hi: The right end of the block.
    """
    def __init__(self, signal: SmoothSignal, lo: float, hi: float) -> None:
        self.signal = signal
        turns = signal.turning_points(lo, hi)
        self.knots = np.concatenate(([lo], turns, [hi]))
        self.values = signal.value(self.knots)
        self.scale = max(1.0, float(np.max(np.abs(self.values))))

    def _pieces(self, level: float) -> list[tuple[float, float, float]]:
        """Cut the runs at the crossings of a level. Each piece keeps
        one side of the level and carries the integral of the signal
        minus the level over it.
        """
        pieces = []
        tol = EXACT_TOL * self.scale
        runs = zip(
            self.knots[:-1], self.knots[1:],
            self.values[:-1], self.values[1:]
        )
        for a, b, fa, fb in runs:
            edges = [a, b]
            if (fa - level) * (fb - level) < 0:
                if abs(fa - level) > tol and abs(fb - level) > tol:
                    edges = [a, self.signal.solve(level, a, b), b]
            for lo, hi in zip(edges[:-1], edges[1:]):
                if hi > lo:
                    mass = self.signal.integral(lo, hi) - level * (hi - lo)
                    pieces.append((lo, hi, mass))
        return pieces

    # Public methods.
    def balance(self, level: float) -> Balance:
        below = above = 0.0
        if self.signal.is_constant:
            y = float(self.values[0]) - level
            length = float(self.knots[-1] - self.knots[0])
            if abs(y) <= EXACT_TOL * self.scale:
                return 0.0, 0.0, length
            return (length, 0.0, 0.0) if y < 0 else (0.0, length, 0.0)
        for lo, hi, _ in self._pieces(level):
            side = float(self.signal.value((lo + hi) / 2)) - level
            if side < 0:
                below += hi - lo
            elif side > 0:
                above += hi - lo
        return below, above, 0.0

    def integral(self) -> float:
        return self.signal.integral(self.knots[0], self.knots[-1])

    def tails(self, level: float) -> Tails:
        upper = lower = 0.0
        for _, _, mass in self._pieces(level):
            if mass > 0:
                upper += mass
            else:
                lower -= mass
        return upper, lower

    def variation(self) -> float:
        return float(np.sum(np.abs(np.diff(self.values))))


# Restrictions.
@dataclass
class Restriction:
    """A signal restricted to an interval.

    :param interval: The interval.
    :param blocks: The blocks covering the interval in order.
    :param jumps: The steps between blocks inside the interval.
    """
    interval: Interval
    blocks: list[Block] = field(default_factory=list)
    jumps: list[float] = field(default_factory=list)

    # Public methods.
    def balance(self, level: float) -> Balance:
        parts = np.array([b.balance(level) for b in self.blocks])
        below, above, flat = parts.sum(axis=0)
        return float(below), float(above), float(flat)

    def extend(self, other: 'Restriction') -> None:
        self.blocks.extend(other.blocks)
        self.jumps.extend(other.jumps)

    def integral(self) -> float:
        return float(sum(b.integral() for b in self.blocks))

    def mean(self) -> float:
        return self.integral() / self.interval.length

    def tails(self, level: float) -> Tails:
        parts = np.array([b.tails(level) for b in self.blocks])
        upper, lower = parts.sum(axis=0)
        return float(upper), float(lower)

    def variation(self) -> float:
        inner = sum(b.variation() for b in self.blocks)
        return float(inner + sum(abs(j) for j in self.jumps))


@singledispatch
def restrict(f: Signal, interval: Interval) -> Restriction:
    """Restrict a signal to an interval inside its domain.

    :param f: The signal.
    :param interval: The interval.
    :return: A :class:`Restriction` object.
    :rtype: pjbv.calculus.cells.Restriction
    """
    msg = f'No exact restriction for {type(f).__name__}.'
    raise NotImplementedError(msg)


@restrict.register
def _(f: SampledSignal, interval: Interval) -> Restriction:
    lo, hi = interval.astuple()
    inner = f.grid[(f.grid > lo) & (f.grid < hi)]
    knots = np.concatenate(([lo], inner, [hi]))
    if f.mode == PL:
        values = np.interp(knots, f.grid, f.values)
        block: Block = LinearBlock(knots, values)
    else:
        block = ConstantBlock(knots, f.value(knots[:-1]))
    return Restriction(interval, [block])


@restrict.register
def _(f: Affine, interval: Interval) -> Restriction:
    knots = np.array(interval.astuple())
    return Restriction(interval, [LinearBlock(knots, f.value(knots))])


@restrict.register
def _(f: Jump, interval: Interval) -> Restriction:
    lo, hi = interval.astuple()
    if lo < f.location < hi:
        knots = np.array([lo, f.location, hi])
        values = np.array([f.left_value, f.right_value])
    else:
        knots = np.array([lo, hi])
        level = f.left_value if hi <= f.location else f.right_value
        values = np.array([level])
    return Restriction(interval, [ConstantBlock(knots, values)])


@restrict.register
def _(f: SmoothSignal, interval: Interval) -> Restriction:
    block = SmoothBlock(f, interval.lo, interval.hi)
    return Restriction(interval, [block])


@restrict.register
def _(f: Composite, interval: Interval) -> Restriction:
    lo, hi = interval.astuple()
    out = Restriction(interval)
    steps = f.boundary_jumps()
    for i, piece in enumerate(f.pieces):
        a = max(lo, piece.domain.lo)
        b = min(hi, piece.domain.hi)
        if a >= b:
            continue

        # A step into this piece from the previous one counts when
        # the boundary is inside the interval.
        if i > 0 and a > lo:
            out.jumps.append(float(steps[i - 1]))
        out.extend(restrict(piece, Interval(a, b)))
    return out
