"""
model
-----

Types used for :mod:`pjbv.signals`.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from inspect import signature
from math import isfinite
from typing import Any, Callable, Union

import numpy as np

from pjbv.util import (
    ArrayLike, DomainError, FloatAry, Real, Registry, scalar_or_array
)


# Exceptions.
class OutOfDomain(DomainError):
    """A position or interval lies outside of the signal's domain."""


class EmptyInterval(DomainError):
    """An interval doesn't satisfy lo < hi."""


class BadResolution(DomainError):
    """A sampling resolution can't represent the signal."""


class DegenerateMap(DomainError):
    """An affine map has a zero scale."""


class UnknownKind(DomainError):
    """A generator was requested for an unregistered family."""


class InvalidSignal(DomainError):
    """The parameters given for a signal break one of its invariants."""


# Domain types.
@dataclass(frozen=True)
class Interval:
    """An open interval (lo, hi) of the real line.

    :param lo: The left endpoint.
    :param hi: The right endpoint. It must be strictly greater than
        `lo`.
    :return: A :class:`Interval` object.
    :rtype: pjbv.signals.Interval

    Usage::

        >>> I = Interval(0.0, 2.0)
        >>> I.length, I.center
        (2.0, 1.0)
        >>> Interval.around(1.0, 0.5)
        Interval(lo=0.75, hi=1.25)
    """
    lo: float
    hi: float

    def __post_init__(self) -> None:
        object.__setattr__(self, 'lo', float(self.lo))
        object.__setattr__(self, 'hi', float(self.hi))
        if not (isfinite(self.lo) and isfinite(self.hi)):
            msg = f'Interval endpoints must be finite: ({self.lo}, {self.hi}).'
            raise EmptyInterval(msg)
        if not self.lo < self.hi:
            msg = f'Interval needs lo < hi, got ({self.lo}, {self.hi}).'
            raise EmptyInterval(msg)

    @classmethod
    def around(cls, center: float, length: float) -> 'Interval':
        """Build the interval of the given length centered on a point."""
        half = length / 2
        return cls(center - half, center + half)

    @classmethod
    def coerce(cls, value: Union['Interval', ArrayLike]) -> 'Interval':
        """Accept an :class:`Interval` or a pair of endpoints."""
        if isinstance(value, Interval):
            return value
        lo, hi = value                                      # type: ignore
        return cls(lo, hi)

    @property
    def center(self) -> float:
        return (self.lo + self.hi) / 2

    @property
    def length(self) -> float:
        return self.hi - self.lo

    # Public methods.
    def astuple(self) -> tuple[float, float]:
        return (self.lo, self.hi)

    def contains(self, x: Real) -> bool:
        """Whether the point lies in the closed hull [lo, hi]."""
        return self.lo <= x <= self.hi

    def covers(self, other: 'Interval') -> bool:
        """Whether the other interval lies inside this one."""
        return self.lo <= other.lo and other.hi <= self.hi

    def split(self, at: float) -> tuple['Interval', 'Interval']:
        """Split the interval into its left and right parts."""
        if not self.lo < at < self.hi:
            msg = f'Split point {at} is not inside {self.astuple()}.'
            raise OutOfDomain(msg)
        return Interval(self.lo, at), Interval(at, self.hi)


@dataclass(frozen=True)
class AffineMap:
    """The affine map x -> scale * x + offset.

    :param scale: The slope of the map. It can't be zero.
    :param offset: (Optional.) The value of the map at zero.
    :return: A :class:`AffineMap` object.
    :rtype: pjbv.signals.AffineMap

    Usage::

        >>> F = AffineMap(0.5)
        >>> F(1.0), F.inverse()(1.0)
        (0.5, 2.0)
        >>> F.preimage(Interval(0.0, 1.0))
        Interval(lo=0.0, hi=2.0)
    """
    scale: float
    offset: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, 'scale', float(self.scale))
        object.__setattr__(self, 'offset', float(self.offset))
        if self.scale == 0 or not isfinite(self.scale):
            msg = f'An affine map needs a finite nonzero scale: {self.scale}.'
            raise DegenerateMap(msg)

    def __call__(self, x: ArrayLike) -> Any:
        return self.scale * np.asarray(x, dtype=float) + self.offset

    @classmethod
    def identity(cls) -> 'AffineMap':
        return cls(1.0, 0.0)

    @classmethod
    def between(cls, source: Interval, target: Interval) -> 'AffineMap':
        """Build the increasing map taking `source` onto `target`."""
        scale = target.length / source.length
        return cls(scale, target.lo - scale * source.lo)

    # Public methods.
    def image(self, interval: Interval) -> Interval:
        """The image of an interval under the map."""
        ends = sorted(float(self(x)) for x in interval.astuple())
        return Interval(*ends)

    def inverse(self) -> 'AffineMap':
        return AffineMap(1 / self.scale, -self.offset / self.scale)

    def preimage(self, interval: Interval) -> Interval:
        """The interval the map takes onto the given interval."""
        return self.inverse().image(interval)


# Base classes.
class Serializable(ABC):
    """An object that can be serialized as either a :class:`tuple` or
    a :class:`dict` of its initialization parameters.
    """
    def __eq__(self, other):
        """Determine the equality of this and another object."""
        if not isinstance(other, self.__class__):
            return NotImplemented
        return self.asdict() == other.asdict()

    def __repr__(self):
        """Return a string representation of the object."""
        cls = self.__class__.__name__
        attrs = self.asdict()
        args = [f'{k}={attrs[k]!r}' for k in attrs]
        args_str = ', '.join(args)
        if len(args_str) > 60:
            args_str = args_str[:25] + '...' + args_str[-25:]
        return f'{cls}({args_str})'

    def asargs(self) -> tuple[Any, ...]:
        """Serialize the object to a tuple."""
        sig = signature(self.__init__)                      # type: ignore
        params = sig.parameters
        return tuple(getattr(self, p) for p in params)

    def asdict(self) -> dict[str, Any]:
        """Serialize the object to a dictionary."""
        sig = signature(self.__init__)                      # type: ignore
        params = sig.parameters
        return {k: getattr(self, k) for k in params}


class Signal(Serializable):
    """A real function f on an interval domain.

    Signals are immutable once built. :meth:`value` evaluates without
    any domain check and accepts arrays, :meth:`evaluate` is the
    checked entry point.
    """
    domain: Interval

    @abstractmethod
    def _value(self, x: FloatAry) -> FloatAry:
        """Evaluate the signal at an array of positions."""

    @abstractmethod
    def _derivative(self, x: FloatAry, order: int) -> FloatAry:
        """Differentiate the signal at an array of positions."""

    @abstractmethod
    def breakpoints(self) -> FloatAry:
        """The points where the signal may fail to be smooth."""

    @abstractmethod
    def discontinuities(self) -> FloatAry:
        """The points where the signal jumps."""

    @abstractmethod
    def conjugate(self, L: AffineMap, F: AffineMap) -> 'Signal':
        """Build x -> L(f(F(x))) on the preimage of the domain."""

    # Public methods.
    def check_interval(self, interval: Interval) -> None:
        """Raise :class:`OutOfDomain` unless the interval lies inside
        the domain of the signal.
        """
        if not self.domain.covers(interval):
            msg = (
                f'Interval {interval.astuple()} is outside of the domain '
                f'{self.domain.astuple()}.'
            )
            raise OutOfDomain(msg)

    @scalar_or_array
    def derivative(self, x: FloatAry, order: int = 1) -> FloatAry:
        """The classical derivative of the signal where it exists.
        Sampled signals use the cell to the right of the position and
        jumps count as flat.

        :param x: The position or positions to differentiate at.
        :param order: (Optional.) The order of the derivative.
        :return: A :class:`float` for a scalar position, otherwise a
            :class:`numpy.ndarray`.
        :rtype: float
        """
        if order < 1:
            raise ValueError(f'Derivative order must be positive: {order}.')
        return self._derivative(x, order)

    def evaluate(self, x: ArrayLike) -> Any:
        """Evaluate the signal at positions inside its domain.

        :param x: The position or positions to evaluate.
        :return: A :class:`float` for a scalar position, otherwise a
            :class:`numpy.ndarray`.
        :rtype: float
        """
        a = np.asarray(x, dtype=float)
        if np.any(a < self.domain.lo) or np.any(a > self.domain.hi):
            msg = f'{x} is outside of the domain {self.domain.astuple()}.'
            raise OutOfDomain(msg)
        return self.value(x)

    @scalar_or_array
    def value(self, x: FloatAry) -> FloatAry:
        """Evaluate the signal without checking the domain."""
        return self._value(x)


# Registries.
Family = Callable[..., Signal]
families: Registry[Family] = dict()
signal_types: Registry[type[Signal]] = dict()
