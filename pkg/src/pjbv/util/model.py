"""
model
~~~~~

Common types used by :mod:`pjbv`.
"""
from typing import TypeVar, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray


# Exported names.
__all__ = [
    'ArrayLike', 'DomainError', 'FloatAry', 'Numeric', 'Probe', 'Real',
    'Registry', 'T',
]


# Basic types.
FloatAry = NDArray[np.float64]
Numeric = Union[np.bool_, np.integer, np.inexact]
Real = Union[float, int, np.floating]
Probe = tuple[float, float]

# Compound types.
T = TypeVar('T')
Registry = dict[str, T]


# Exceptions.
class DomainError(ValueError):
    """A mathematical precondition of an operation doesn't hold."""
