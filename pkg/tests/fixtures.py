"""
fixtures
~~~~~~~~

Common test fixtures.
"""
import pytest as pt

from pjbv import signals as s


# Fixtures
@pt.fixture
def affine():
    """An affine signal for testing."""
    yield s.Affine(3.0, 1.0, (0.0, 1.0))


@pt.fixture
def composite():
    """An affine ramp up to 1, a centered jump from 1 to 2 at 1.5,
    and a constant 2 after.
    """
    yield s.Composite([
        s.Affine(1.0, 0.0, (0.0, 1.0)),
        s.Jump(1.5, 1.0, 2.0, (1.0, 2.0)),
        s.Affine(0.0, 2.0, (2.0, 3.0)),
    ])


@pt.fixture
def jump():
    """A unit step in the middle of the unit interval."""
    yield s.Jump(0.5, 0.0, 1.0)


@pt.fixture
def square():
    """The signal x**2 on (-1, 1)."""
    yield s.Polynomial([0.0, 0.0, 1.0], domain=(-1.0, 1.0))


@pt.fixture
def walk_pc():
    """A piecewise-constant random walk."""
    yield s.generate_sampled(11, 32, 'pc')


@pt.fixture
def walk_pl():
    """A piecewise-linear random walk."""
    yield s.generate_sampled(7, 32, 'pl')
