"""
test_oracle
~~~~~~~~~~~

Unit tests for :mod:`pjbv.calculus.oracle`.
"""
import pytest as pt

from pjbv import calculus as c
from pjbv import signals as s
from pjbv.util import ORACLE_TOL, get_rng
from tests.common import random_intervals
from tests.fixtures import composite, square, walk_pc, walk_pl


# Utility functions.
def assert_agree(f, interval):
    exact = c.interval_stats(f, interval)
    brute = c.quadrature_stats(f, interval)
    tol = dict(rel=ORACLE_TOL, abs=ORACLE_TOL)
    assert brute.mean == pt.approx(exact.mean, **tol)
    assert brute.oscillation == pt.approx(exact.oscillation, **tol)
    assert brute.total_variation == pt.approx(exact.total_variation, **tol)


# Test cases.
class TestQuadratureStats:
    def test_sampled(self, walk_pl, walk_pc):
        """Given samples, the exact functionals should agree with
        quadrature.
        """
        rng = get_rng(17)
        for f in (walk_pl, walk_pc):
            for interval in random_intervals(rng, f.domain, 5, 0.1):
                assert_agree(f, interval)

    def test_analytic(self, composite, square):
        """Given analytic signals, the exact functionals should agree
        with quadrature.
        """
        assert_agree(composite, (0.0, 3.0))
        assert_agree(composite, (0.5, 2.25))
        assert_agree(square, (-1.0, 1.0))
        assert_agree(square, (-0.3, 0.9))

    def test_outside(self, square):
        """Given an interval leaving the domain,
        :func:`quadrature_stats` should raise :class:`OutOfDomain`.
        """
        with pt.raises(s.OutOfDomain):
            c.quadrature_stats(square, (0.0, 2.0))

    def test_generated(self):
        """Given a hundred random piecewise linear signals, the exact
        functionals should agree with quadrature on an interval of
        each.
        """
        rng = get_rng(19)
        for seed in range(100):
            f = s.generate_sampled(seed, mode=s.PL)
            interval = random_intervals(rng, f.domain, 1, 0.1)[0]
            assert_agree(f, interval)

    @pt.mark.parametrize('f,interval', [
        (s.Polynomial([0.0, 0.0, 1.0], domain=(-1.0, 1.0)), (-1.0, 1.0)),
        (s.Polynomial([0.0, 0.0, 1.0], domain=(-1.0, 1.0)), (-0.3, 0.9)),
        (s.Polynomial([0.0, 0.0, 0.0, 1.0], domain=(-1, 1)), (-1.0, 0.6)),
        (s.Jump(0.5, 0.0, 1.0), (0.1, 0.8)),
        (s.Exponential(domain=(0.0, 1.0)), (0.2, 0.7)),
    ])
    def test_level_balance(self, f, interval):
        """Given an analytic signal, the exact level balance should
        agree with quadrature to within the cells around each crossing
        of the mean.
        """
        subdivisions = 10_000
        exact = c.level_balance(f, interval)
        brute = c.quadrature_stats(f, interval, subdivisions)
        length = interval[1] - interval[0]
        assert brute.level_balance == pt.approx(
            exact, abs=8 * length / subdivisions
        )
