"""
Sampled Signals
---------------

Signals known through their values on a grid.

.. autoclass:: pjbv.signals.SampledSignal

"""
from typing import Any, Optional

import numpy as np

from pjbv.signals.constants import MODES, PC, PL
from pjbv.signals.model import (
    AffineMap, Interval, InvalidSignal, Signal, signal_types
)
from pjbv.util import ArrayLike, FloatAry, register


# Names available for import.
__all__ = ['SampledSignal', 'get_mode']


# Utility functions.
def get_mode(mode: str) -> str:
    """Resolve an interpolation mode or its short alias.

    Usage::

        >>> get_mode('pc')
        'piecewise-constant'
    """
    try:
        return MODES[mode.lower()]
    except KeyError:
        msg = f'Unknown interpolation mode: {mode}.'
        raise InvalidSignal(msg)


# Public classes.
@register(signal_types, 'sampled')
class SampledSignal(Signal):
    """A signal given by its values on a strictly increasing grid.

    In piecewise-linear mode the values are joined by straight
    segments. In piecewise-constant mode each cell [g_i, g_i+1) holds
    the value at its left knot, so the signal is right-continuous and
    the last value only applies at the last knot. A reflected
    piecewise-constant signal can also hold a value at its first knot
    that differs from its first cell.

    :param grid: The strictly increasing positions of the samples.
    :param values: The value of the signal at each position.
    :param mode: (Optional.) Either 'piecewise-linear' or
        'piecewise-constant'. The aliases 'pl' and 'pc' are accepted.
    :param first_value: (Optional.) The value at the first knot of
        piecewise-constant samples, when it isn't the value of the
        first cell.
    :return: A :class:`SampledSignal` object.
    :rtype: pjbv.signals.SampledSignal

    Usage::

        >>> f = SampledSignal([0.0, 1.0, 2.0], [0.0, 2.0, 0.0])
        >>> f.value(0.5)
        1.0
        >>> f.domain
        Interval(lo=0.0, hi=2.0)
    """
    def __init__(
        self, grid: ArrayLike,
        values: ArrayLike,
        mode: str = PL,
        first_value: Optional[float] = None
    ) -> None:
        self.grid = np.array(grid, dtype=float)
        self.values = np.array(values, dtype=float)
        self.mode = get_mode(mode)
        self.first_value: Optional[float] = None
        if first_value is not None and self.mode == PC:
            self.first_value = float(first_value)

        if self.grid.ndim != 1 or len(self.grid) < 2:
            msg = 'A sampled signal needs at least two grid points.'
            raise InvalidSignal(msg)
        if self.values.shape != self.grid.shape:
            msg = (
                f'Got {self.values.size} values for '
                f'{self.grid.size} grid points.'
            )
            raise InvalidSignal(msg)
        if not np.all(np.isfinite(self.grid)):
            raise InvalidSignal('Grid positions must be finite.')
        if not np.all(np.isfinite(self.values)):
            raise InvalidSignal('Sample values must be finite.')
        if self.first_value is not None:
            if not np.isfinite(self.first_value):
                raise InvalidSignal('Sample values must be finite.')
            if self.first_value == self.values[0]:
                self.first_value = None
        if np.any(np.diff(self.grid) <= 0):
            index = int(np.argmax(np.diff(self.grid) <= 0)) + 1
            msg = f'Grid is not strictly increasing at index {index}.'
            raise InvalidSignal(msg)

        self.grid.flags.writeable = False
        self.values.flags.writeable = False
        self.domain = Interval(self.grid[0], self.grid[-1])

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SampledSignal):
            return NotImplemented
        return (
            self.mode == other.mode
            and np.array_equal(self.grid, other.grid)
            and np.array_equal(self.values, other.values)
            and self.first_value == other.first_value
        )

    def _cell(self, x: FloatAry, last: int) -> Any:
        """Find the cell to the right of each position."""
        i = np.searchsorted(self.grid, x, side='right') - 1
        return np.clip(i, 0, last)

    def _derivative(self, x: FloatAry, order: int) -> FloatAry:
        if self.mode == PC or order > 1:
            return np.zeros_like(x)
        slopes = np.diff(self.values) / np.diff(self.grid)
        return slopes[self._cell(x, len(self.grid) - 2)]

    def _value(self, x: FloatAry) -> FloatAry:
        if self.mode == PL:
            return np.interp(x, self.grid, self.values)
        values = self.values[self._cell(x, len(self.grid) - 1)]
        if self.first_value is not None:
            values = np.where(x == self.grid[0], self.first_value, values)
        return values

    # Public methods.
    def asdict(self) -> dict[str, Any]:
        """Serialize the object to a dictionary."""
        data: dict[str, Any] = {
            'grid': self.grid.tolist(),
            'values': self.values.tolist(),
            'mode': self.mode,
        }
        if self.first_value is not None:
            data['first_value'] = self.first_value
        return data

    def breakpoints(self) -> FloatAry:
        return self.grid.copy()

    def conjugate(self, L: AffineMap, F: AffineMap) -> 'SampledSignal':
        grid = (self.grid - F.offset) / F.scale
        values = L(self.values)
        first = None
        if self.first_value is not None:
            first = float(L(self.first_value))
        if F.scale < 0:
            grid = grid[::-1]
            if self.mode == PL:
                values = values[::-1]

            # Cell j of the reversed signal is cell n - 2 - j of the
            # original. The first and last knots trade point values.
            else:
                last = values[0] if first is None else first
                first = float(values[-1])
                values = np.append(values[-2::-1], last)
        return SampledSignal(grid, values, self.mode, first)

    def discontinuities(self) -> FloatAry:
        if self.mode == PL:
            return np.array([], dtype=float)
        steps = self.values[1:-1] != self.values[:-2]
        return self.grid[1:-1][steps]
