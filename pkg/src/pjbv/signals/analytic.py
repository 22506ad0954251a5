"""
Analytic Signals
----------------

Signals given in closed form. Smooth variants also know how to
integrate themselves, where they turn, and where they cross a level,
which is what the exact calculus in :mod:`pjbv.calculus` runs on.

.. autoclass:: pjbv.signals.AnalyticSignal
.. autoclass:: pjbv.signals.SmoothSignal
.. autoclass:: pjbv.signals.Affine
.. autoclass:: pjbv.signals.Jump
.. autoclass:: pjbv.signals.Power
.. autoclass:: pjbv.signals.Polynomial
.. autoclass:: pjbv.signals.Exponential
.. autoclass:: pjbv.signals.Composite

"""
from abc import abstractmethod
from math import exp, log
from typing import Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial as _Poly
from scipy.optimize import brentq

from pjbv.signals.constants import DEFAULT_DOMAIN
from pjbv.signals.model import (
    AffineMap, Interval, InvalidSignal, OutOfDomain, Signal, signal_types
)
from pjbv.util import EXACT_TOL, ArrayLike, FloatAry, register


# Names available for import.
__all__ = [
    'AnalyticSignal', 'SmoothSignal',
    'Affine', 'Composite', 'Exponential', 'Jump', 'Polynomial', 'Power',
]


# Typing.
DomainLike = Union[Interval, Sequence[float]]


# Base classes.
class AnalyticSignal(Signal):
    """A signal given in closed form on an interval domain."""
    def breakpoints(self) -> FloatAry:
        return np.array([], dtype=float)

    def discontinuities(self) -> FloatAry:
        return np.array([], dtype=float)


class SmoothSignal(AnalyticSignal):
    """An analytic signal that is smooth on its whole domain."""
    @property
    @abstractmethod
    def is_constant(self) -> bool:
        """Whether the signal takes a single value."""

    @abstractmethod
    def integral(self, a: float, b: float) -> float:
        """The integral of the signal over (a, b)."""

    # Public methods.
    def solve(self, level: float, a: float, b: float) -> float:
        """Find where the signal crosses a level on a run (a, b) where
        it is monotone. The level must lie between the values at the
        ends of the run.
        """
        def shifted(x: float) -> float:
            return float(self._value(np.asarray(x))) - level

        fa, fb = shifted(a), shifted(b)
        if fa == 0:
            return a
        if fb == 0:
            return b
        return brentq(shifted, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps)

    def turning_points(self, a: float, b: float) -> FloatAry:
        """The points inside (a, b) where the derivative changes sign.
        Variants that are monotone on their whole domain have none.
        """
        return np.array([], dtype=float)


# Public classes.
@register(signal_types)
class Affine(SmoothSignal):
    """The affine signal x -> slope * x + intercept.

    :param slope: The slope of the line.
    :param intercept: (Optional.) The value of the line at zero.
    :param domain: (Optional.) The domain of the signal.
    :return: A :class:`Affine` object.
    :rtype: pjbv.signals.Affine

    Usage::

        >>> f = Affine(2.0, 1.0)
        >>> f.evaluate(0.5)
        2.0
    """
    def __init__(
        self, slope: float,
        intercept: float = 0.0,
        domain: DomainLike = DEFAULT_DOMAIN
    ) -> None:
        self.slope = float(slope)
        self.intercept = float(intercept)
        self.domain = Interval.coerce(domain)

    def _derivative(self, x: FloatAry, order: int) -> FloatAry:
        if order > 1:
            return np.zeros_like(x)
        return np.full_like(x, self.slope)

    def _value(self, x: FloatAry) -> FloatAry:
        return self.slope * x + self.intercept

    @property
    def is_constant(self) -> bool:
        return self.slope == 0

    # Public methods.
    def conjugate(self, L: AffineMap, F: AffineMap) -> 'Affine':
        slope = L.scale * self.slope * F.scale
        intercept = L.scale * (self.slope * F.offset + self.intercept)
        return Affine(slope, intercept + L.offset, F.preimage(self.domain))

    def integral(self, a: float, b: float) -> float:
        ends = self.slope * (a + b) + 2 * self.intercept
        return (b - a) * ends / 2

    def solve(self, level: float, a: float, b: float) -> float:
        x = (level - self.intercept) / self.slope
        return min(max(x, a), b)


@register(signal_types)
class Jump(AnalyticSignal):
    """A single step between two constant values. The signal takes
    the right value at the location of the step.

    :param location: Where the step happens. It must be inside the
        domain.
    :param left_value: The value before the step.
    :param right_value: The value from the step on.
    :param domain: (Optional.) The domain of the signal.
    :return: A :class:`Jump` object.
    :rtype: pjbv.signals.Jump

    Usage::

        >>> f = Jump(0.5, 0.0, 1.0)
        >>> f.evaluate(0.25), f.evaluate(0.5)
        (0.0, 1.0)
    """
    def __init__(
        self, location: float,
        left_value: float,
        right_value: float,
        domain: DomainLike = DEFAULT_DOMAIN
    ) -> None:
        self.location = float(location)
        self.left_value = float(left_value)
        self.right_value = float(right_value)
        self.domain = Interval.coerce(domain)
        if not self.domain.lo < self.location < self.domain.hi:
            msg = (
                f'Jump location {self.location} is not inside '
                f'{self.domain.astuple()}.'
            )
            raise OutOfDomain(msg)

    def _derivative(self, x: FloatAry, order: int) -> FloatAry:
        return np.zeros_like(x)

    def _value(self, x: FloatAry) -> FloatAry:
        return np.where(x < self.location, self.left_value, self.right_value)

    # Public methods.
    def breakpoints(self) -> FloatAry:
        return np.array([self.location])

    def conjugate(self, L: AffineMap, F: AffineMap) -> 'Jump':
        left, right = L(self.left_value), L(self.right_value)
        if F.scale < 0:
            left, right = right, left
        location = (self.location - F.offset) / F.scale
        return Jump(location, left, right, F.preimage(self.domain))

    def discontinuities(self) -> FloatAry:
        if self.left_value == self.right_value:
            return np.array([], dtype=float)
        return np.array([self.location])


@register(signal_types)
class Power(SmoothSignal):
    """The power signal x -> scale * |x - shift|**exponent + offset.

    :param exponent: The exponent. It must be positive.
    :param shift: (Optional.) The base point of the power. It can't
        be inside the domain, so the signal is monotone.
    :param scale: (Optional.) The factor applied to the power.
    :param offset: (Optional.) The constant added to the power.
    :param domain: (Optional.) The domain of the signal.
    :return: A :class:`Power` object.
    :rtype: pjbv.signals.Power

    Usage::

        >>> f = Power(2.5, domain=(0.0, 4.0))
        >>> f.evaluate(4.0)
        32.0
    """
    def __init__(
        self, exponent: float,
        shift: float = 0.0,
        scale: float = 1.0,
        offset: float = 0.0,
        domain: DomainLike = DEFAULT_DOMAIN
    ) -> None:
        self.exponent = float(exponent)
        self.shift = float(shift)
        self.scale = float(scale)
        self.offset = float(offset)
        self.domain = Interval.coerce(domain)
        if not self.exponent > 0:
            msg = f'Power exponent must be positive: {self.exponent}.'
            raise InvalidSignal(msg)
        if self.domain.lo < self.shift < self.domain.hi:
            msg = (
                f'Power shift {self.shift} is inside the domain '
                f'{self.domain.astuple()}.'
            )
            raise InvalidSignal(msg)

        # Which side of the shift the domain is on.
        self.side = 1.0 if self.shift <= self.domain.lo else -1.0

    def _base(self, x: ArrayLike) -> FloatAry:
        return np.maximum(self.side * (np.asarray(x) - self.shift), 0.0)

    def _derivative(self, x: FloatAry, order: int) -> FloatAry:
        factor = self.scale * self.side ** order
        for n in range(order):
            factor *= self.exponent - n
        with np.errstate(divide='ignore', invalid='ignore'):
            return factor * self._base(x) ** (self.exponent - order)

    def _value(self, x: FloatAry) -> FloatAry:
        return self.scale * self._base(x) ** self.exponent + self.offset

    @property
    def is_constant(self) -> bool:
        return self.scale == 0

    # Public methods.
    def antiderivative(self, x: float) -> float:
        """An antiderivative of the signal."""
        power = float(self._base(x)) ** (self.exponent + 1)
        term = self.side * self.scale * power / (self.exponent + 1)
        return term + self.offset * x

    def conjugate(self, L: AffineMap, F: AffineMap) -> 'Power':
        shift = (self.shift - F.offset) / F.scale
        scale = L.scale * self.scale * abs(F.scale) ** self.exponent
        offset = L.scale * self.offset + L.offset
        domain = F.preimage(self.domain)
        return Power(self.exponent, shift, scale, offset, domain)

    def integral(self, a: float, b: float) -> float:
        return self.antiderivative(b) - self.antiderivative(a)

    def solve(self, level: float, a: float, b: float) -> float:
        ratio = (level - self.offset) / self.scale
        if ratio < 0:
            return super().solve(level, a, b)
        x = self.shift + self.side * ratio ** (1 / self.exponent)
        return min(max(x, a), b)


@register(signal_types)
class Polynomial(SmoothSignal):
    """A polynomial written about a center point:
    x -> sum of coefficients[j] * (x - center)**j.

    :param coefficients: The coefficients, lowest order first.
    :param center: (Optional.) The point the powers are taken about.
    :param domain: (Optional.) The domain of the signal.
    :return: A :class:`Polynomial` object.
    :rtype: pjbv.signals.Polynomial

    Usage::

        >>> f = Polynomial([1.0, 0.0, 1.0], center=1.0, domain=(0, 2))
        >>> f.evaluate(2.0)
        2.0
        >>> f.turning_points(0.0, 2.0)
        array([1.])
    """
    def __init__(
        self, coefficients: Sequence[float],
        center: float = 0.0,
        domain: DomainLike = DEFAULT_DOMAIN
    ) -> None:
        self.coefficients = tuple(float(c) for c in coefficients)
        self.center = float(center)
        self.domain = Interval.coerce(domain)
        if not self.coefficients:
            raise InvalidSignal('A polynomial needs coefficients.')
        self._poly = _Poly(self.coefficients)

    def _derivative(self, x: FloatAry, order: int) -> FloatAry:
        return self._poly.deriv(order)(x - self.center)

    def _value(self, x: FloatAry) -> FloatAry:
        return self._poly(x - self.center)

    @property
    def is_constant(self) -> bool:
        return not any(self.coefficients[1:])

    # Public methods.
    def conjugate(self, L: AffineMap, F: AffineMap) -> 'Polynomial':
        coefficients = [
            L.scale * c * F.scale ** j
            for j, c in enumerate(self.coefficients)
        ]
        coefficients[0] += L.offset
        center = (self.center - F.offset) / F.scale
        return Polynomial(coefficients, center, F.preimage(self.domain))

    def integral(self, a: float, b: float) -> float:
        anti = self._poly.integ()
        return float(anti(b - self.center) - anti(a - self.center))

    def turning_points(self, a: float, b: float) -> FloatAry:
        slope = self._poly.deriv().trim()
        if slope.degree() < 1:
            return np.array([], dtype=float)

        # Only roots where the slope changes sign split the domain
        # into monotone runs, which rules out roots of even order.
        roots = slope.roots()
        real = np.real(roots[np.abs(np.imag(roots)) <= EXACT_TOL])
        points = np.unique(real + self.center)
        points = points[(points > a) & (points < b)]
        edges = np.concatenate(([a], points, [b]))
        mids = (edges[:-1] + edges[1:]) / 2
        signs = np.sign(slope(mids - self.center))
        return points[signs[:-1] * signs[1:] < 0]


@register(signal_types)
class Exponential(SmoothSignal):
    """The exponential signal x -> scale * exp(rate * x) + offset.

    :param scale: (Optional.) The factor applied to the exponential.
    :param rate: (Optional.) The growth rate.
    :param offset: (Optional.) The constant added to the exponential.
    :param domain: (Optional.) The domain of the signal.
    :return: A :class:`Exponential` object.
    :rtype: pjbv.signals.Exponential
    """
    def __init__(
        self, scale: float = 1.0,
        rate: float = 1.0,
        offset: float = 0.0,
        domain: DomainLike = DEFAULT_DOMAIN
    ) -> None:
        self.scale = float(scale)
        self.rate = float(rate)
        self.offset = float(offset)
        self.domain = Interval.coerce(domain)

    def _derivative(self, x: FloatAry, order: int) -> FloatAry:
        return self.scale * self.rate ** order * np.exp(self.rate * x)

    def _value(self, x: FloatAry) -> FloatAry:
        return self.scale * np.exp(self.rate * x) + self.offset

    @property
    def is_constant(self) -> bool:
        return self.scale == 0 or self.rate == 0

    # Public methods.
    def conjugate(self, L: AffineMap, F: AffineMap) -> 'Exponential':
        scale = L.scale * self.scale * exp(self.rate * F.offset)
        rate = self.rate * F.scale
        offset = L.scale * self.offset + L.offset
        return Exponential(scale, rate, offset, F.preimage(self.domain))

    def integral(self, a: float, b: float) -> float:
        flat = self.offset * (b - a)
        if self.rate == 0:
            return flat + self.scale * (b - a)
        growth = exp(self.rate * b) - exp(self.rate * a)
        return flat + self.scale * growth / self.rate

    def solve(self, level: float, a: float, b: float) -> float:
        ratio = (level - self.offset) / self.scale
        if ratio <= 0:
            return super().solve(level, a, b)
        x = log(ratio) / self.rate
        return min(max(x, a), b)


@register(signal_types)
class Composite(AnalyticSignal):
    """Analytic signals on abutting domains joined into one signal.
    At a shared boundary the signal takes the value of the piece on
    the right.

    :param pieces: The pieces, in order. Each piece's domain must end
        where the next one's begins.
    :return: A :class:`Composite` object.
    :rtype: pjbv.signals.Composite

    Usage::

        >>> f = Composite([
        ...     Affine(1.0, 0.0, (0, 1)),
        ...     Affine(0.0, 1.0, (1, 2)),
        ... ])
        >>> f.domain
        Interval(lo=0.0, hi=2.0)
        >>> f.evaluate(1.5)
        1.0
    """
    def __init__(self, pieces: Sequence[AnalyticSignal]) -> None:
        self.pieces = tuple(pieces)
        if not self.pieces:
            raise InvalidSignal('A composite signal needs pieces.')
        for left, right in zip(self.pieces[:-1], self.pieces[1:]):
            gap = abs(left.domain.hi - right.domain.lo)
            scale = max(1.0, abs(left.domain.hi))
            if gap > EXACT_TOL * scale:
                msg = (
                    f'Pieces on {left.domain.astuple()} and '
                    f'{right.domain.astuple()} do not abut.'
                )
                raise InvalidSignal(msg)
        self.domain = Interval(
            self.pieces[0].domain.lo,
            self.pieces[-1].domain.hi
        )
        self.boundaries = np.array([p.domain.lo for p in self.pieces[1:]])

    def _dispatch(self, x: FloatAry) -> FloatAry:
        return np.searchsorted(self.boundaries, x, side='right')

    def _derivative(self, x: FloatAry, order: int) -> FloatAry:
        x = np.atleast_1d(x)
        out = np.zeros_like(x)
        index = self._dispatch(x)
        for i, piece in enumerate(self.pieces):
            mask = index == i
            out[mask] = piece._derivative(x[mask], order)
        return out

    def _value(self, x: FloatAry) -> FloatAry:
        x = np.atleast_1d(x)
        out = np.zeros_like(x)
        index = self._dispatch(x)
        for i, piece in enumerate(self.pieces):
            mask = index == i
            out[mask] = piece._value(x[mask])
        return out

    # Public methods.
    def boundary_jumps(self) -> FloatAry:
        """The size of the step at each boundary between pieces."""
        return np.array([
            right.value(b) - left.value(b)
            for b, left, right
            in zip(self.boundaries, self.pieces[:-1], self.pieces[1:])
        ])

    def breakpoints(self) -> FloatAry:
        points = [p.breakpoints() for p in self.pieces]
        points.append(self.boundaries)
        return np.unique(np.concatenate(points))

    def conjugate(self, L: AffineMap, F: AffineMap) -> 'Composite':
        pieces = [p.conjugate(L, F) for p in self.pieces]
        if F.scale < 0:
            pieces = pieces[::-1]
        return Composite(pieces)                            # type: ignore

    def discontinuities(self) -> FloatAry:
        points = [p.discontinuities() for p in self.pieces]
        if self.boundaries.size:
            jumps = self.boundary_jumps()
            levels = np.abs(self.value(self.boundaries))
            scale = max(1.0, float(np.max(levels)))
            points.append(self.boundaries[np.abs(jumps) > EXACT_TOL * scale])
        return np.unique(np.concatenate(points))
