"""
test_ops
~~~~~~~~

Unit tests for :mod:`pjbv.calculus.ops`.
"""
from math import sqrt

import numpy as np
import pytest as pt

from pjbv import calculus as c
from pjbv import signals as s
from pjbv.util import EXACT_TOL, get_rng
from tests.common import random_intervals
from tests.fixtures import affine, composite, jump, square, walk_pc, walk_pl


# Test cases.
class TestIntervalMean:
    def test_affine(self, affine):
        """Given a line, :func:`interval_mean` should return its value
        at the middle of the interval.
        """
        assert c.interval_mean(affine, (0.0, 1.0)) == pt.approx(2.5)
        assert c.interval_mean(affine, (0.2, 0.4)) == pt.approx(1.9)

    def test_composite(self, composite):
        """Given a composite, :func:`interval_mean` should add up the
        integrals of its pieces.
        """
        assert c.interval_mean(composite, (0.0, 3.0)) == pt.approx(4 / 3)

    def test_outside(self, affine):
        """Given an interval leaving the domain, the functionals
        should raise :class:`OutOfDomain`.
        """
        with pt.raises(s.OutOfDomain):
            c.interval_mean(affine, (0.5, 1.5))

    def test_empty(self, affine):
        """Given an empty interval, the functionals should raise
        :class:`EmptyInterval`.
        """
        with pt.raises(s.EmptyInterval):
            c.interval_mean(affine, (0.5, 0.5))


class TestPoincareQuotient:
    def test_affine(self):
        """Given any line and any interval, :func:`poincare_quotient`
        should be a quarter.
        """
        rng = get_rng(3)
        for seed in range(100):
            f = s.generate_family('random_affine', seed)
            for interval in random_intervals(rng, f.domain, 50):
                q = c.poincare_quotient(f, interval)
                assert abs(q - 0.25) <= EXACT_TOL

    @pt.mark.parametrize('t', [0.1, 0.25, 0.5, 0.7])
    def test_jump(self, t):
        """Given a step a fraction t into the interval,
        :func:`poincare_quotient` should be 2t(1 - t).
        """
        f = s.Jump(t, -1.0, 2.0)
        q = c.poincare_quotient(f, (0, 1))
        assert abs(q - 2 * t * (1 - t)) <= EXACT_TOL
        assert t == 0.5 or q < 0.5

    def test_constant(self):
        """Given a constant signal, :func:`poincare_quotient` should
        return None.
        """
        assert c.poincare_quotient(s.Affine(0.0, 2.0), (0, 1)) is None

    def test_bound(self, walk_pc, walk_pl):
        """Given any signal, the oscillation should be at most half
        of the total variation.
        """
        rng = get_rng(5)
        for f in (walk_pc, walk_pl):
            for interval in random_intervals(rng, f.domain, 50):
                q = c.poincare_quotient(f, interval)
                assert q is None or q <= 0.5 + EXACT_TOL

    def test_bound_generated(self):
        """Given many random sampled signals, the oscillation should
        never pass half of the total variation.
        """
        rng = get_rng(11)
        for seed in range(500):
            mode = s.PL if seed % 2 else s.PC
            f = s.generate_sampled(seed, mode=mode)
            for interval in random_intervals(rng, f.domain, 5):
                stats = c.interval_stats(f, interval)
                bound = stats.total_variation / 2 + EXACT_TOL
                assert stats.oscillation <= bound

    @pt.mark.parametrize('L,F', [
        (s.AffineMap(2.0, 1.0), s.AffineMap(0.5, 0.25)),
        (s.AffineMap(-3.0), s.AffineMap(-1.0, 1.0)),
        (s.AffineMap(0.1, -4.0), s.AffineMap(-2.0, 0.5)),
    ])
    def test_affine_invariance(self, L, F, composite, square, walk_pl):
        """Given a signal and two maps, the quotient of the
        conjugated signal over an interval should be the quotient of
        the signal over the image of the interval.
        """
        rng = get_rng(13)
        for f in (composite, square, walk_pl):
            g = s.affine_conjugate(f, L, F)
            lo, hi = g.domain.astuple()
            inner = (lo + 0.01 * (hi - lo), hi - 0.01 * (hi - lo))
            for interval in random_intervals(rng, inner, 20):
                expected = c.poincare_quotient(f, F.image(interval))
                q = c.poincare_quotient(g, interval)
                if expected is None:
                    assert q is None
                else:
                    assert q == pt.approx(expected, rel=1e-9, abs=1e-12)


class TestIntervalStats:
    def test_jump(self, jump):
        """Given a step a third of the way into the interval,
        :func:`interval_stats` should find every functional.
        """
        stats = c.interval_stats(jump, (0.25, 1.0))
        assert stats.interval == s.Interval(0.25, 1.0)
        assert stats.mean == pt.approx(2 / 3)
        assert stats.oscillation == pt.approx(4 / 9)
        assert stats.total_variation == 1.0
        assert stats.level_balance == pt.approx(-0.25)
        assert stats.quotient == pt.approx(4 / 9)

    def test_jump_on_end(self, jump):
        """Given a step on an end of the interval,
        :func:`interval_stats` shouldn't count it.
        """
        stats = c.interval_stats(jump, (0.5, 1.0))
        assert stats.total_variation == 0.0
        assert stats.oscillation == 0.0
        assert stats.quotient is None

    def test_square(self, square):
        """Given x**2 on (-1, 1), :func:`interval_stats` should match
        the closed form.
        """
        stats = c.interval_stats(square, (-1.0, 1.0))
        osc = 4 / (9 * sqrt(3))
        assert stats.mean == pt.approx(1 / 3)
        assert stats.oscillation == pt.approx(osc)
        assert stats.total_variation == pt.approx(2.0)
        assert stats.quotient == pt.approx(osc / 2)

    def test_affine_balance(self, affine):
        """Given a line, the level balance should vanish."""
        stats = c.interval_stats(affine, (0.1, 0.9))
        assert abs(stats.level_balance) <= EXACT_TOL

    def test_asdict(self, jump):
        """Given stats, :meth:`IntervalStats.asdict` and
        :meth:`IntervalStats.fromdict` should give back the same
        stats.
        """
        stats = c.interval_stats(jump, (0.25, 1.0))
        assert c.IntervalStats.fromdict(stats.asdict()) == stats


class TestLevelBalance:
    def test_square(self, square):
        """Given x**2 on (-1, 1), :func:`level_balance` should weigh
        the sublevel set (-1/sqrt(3), 1/sqrt(3)) against the rest.
        """
        expected = 4 / sqrt(3) - 2
        assert c.level_balance(square, (-1.0, 1.0)) == pt.approx(expected)
        assert expected == pt.approx(0.30940, abs=1e-5)

    def test_odd(self):
        """Given a signal odd about the middle of the interval,
        :func:`level_balance` should vanish.
        """
        f = s.Polynomial([0.0, 0.0, 0.0, 1.0], domain=(-1.0, 1.0))
        assert abs(c.level_balance(f, (-1.0, 1.0))) <= EXACT_TOL
        assert abs(c.level_balance(f, (-0.5, 0.5))) <= EXACT_TOL

    def test_jump(self, jump):
        """Given a step, :func:`level_balance` should be the length
        below the step minus the length above.
        """
        assert c.level_balance(jump, (0.0, 1.0)) == pt.approx(0.0)
        assert c.level_balance(jump, (0.0, 0.8)) == pt.approx(0.2)


class TestLevelSets:
    def test_level_set_measure(self, jump, affine):
        """Given a level, :func:`level_set_measure` should measure
        where the signal is flat at it.
        """
        assert c.level_set_measure(jump, (0, 1), 1.0) == pt.approx(0.5)
        assert c.level_set_measure(jump, (0, 1), 0.5) == 0.0
        assert c.level_set_measure(affine, (0, 1), 2.0) == 0.0

    def test_tail_integrals(self, square):
        """Given a signal, the tails above and below the mean should
        be equal.
        """
        upper, lower = c.tail_integrals(square, (-1.0, 1.0))
        assert upper == pt.approx(4 / (9 * sqrt(3)))
        assert lower == pt.approx(upper)

    def test_tails_sampled(self, walk_pl):
        """Given samples, the tails above and below the mean should
        be equal.
        """
        upper, lower = c.tail_integrals(walk_pl, (0.1, 0.8))
        assert upper == pt.approx(lower)


class TestTotalVariation:
    def test_sampled(self, walk_pl, walk_pc):
        """Given samples over their whole domain,
        :func:`total_variation` should add up the steps between
        samples.
        """
        tv = np.sum(np.abs(np.diff(walk_pl.values)))
        assert c.total_variation(walk_pl, walk_pl.domain) == pt.approx(tv)
        steps = np.abs(np.diff(walk_pc.values[:-1]))
        assert c.total_variation(walk_pc, walk_pc.domain) == pt.approx(
            np.sum(steps)
        )

    def test_composite(self, composite):
        """Given a composite, :func:`total_variation` should add the
        ramp and the step.
        """
        assert c.total_variation(composite, (0, 3)) == pt.approx(2.0)
        assert c.total_variation(composite, (1, 3)) == pt.approx(1.0)
