"""
Decorators
==========

General purpose decorators.

.. autofunction:: pjbv.util.register
.. autofunction:: pjbv.util.scalar_or_array

"""
from functools import wraps
from typing import Callable

import numpy as np

from pjbv.util.model import ArrayLike, Registry


# Names available for import.
__all__ = ['register', 'scalar_or_array']


# Decorators.
def register(
    registry: Registry,
    key: str = ''
) -> Callable[[Callable], Callable]:
    """Registers the decorated object under its lowercased name, or
    the given key, in the given registry dictionary.

    :param registry: The registry to register the given object in.
    :param key: (Optional.) The key to register the object under.
        Defaults to the lowercased name of the object.
    :return: The registration :mod:`function` pointed to the given
        registry.
    :rtype: function
    """
    def decorator(obj: Callable) -> Callable:
        registry[key or obj.__name__.lower()] = obj
        return obj
    return decorator


def scalar_or_array(fn: Callable) -> Callable:
    """Return a :class:`float` when the wrapped method is given a
    scalar position and a :class:`numpy.ndarray` otherwise. The
    wrapped method always receives an array.
    """
    @wraps(fn)
    def wrapper(self, x: ArrayLike, *args, **kwargs):
        scalar = np.ndim(x) == 0
        result = fn(self, np.asarray(x, dtype=float), *args, **kwargs)
        if scalar:
            return float(np.asarray(result).reshape(-1)[0])
        return np.asarray(result, dtype=float)
    return wrapper
