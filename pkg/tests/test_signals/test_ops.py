"""
test_ops
~~~~~~~~

Unit tests for :mod:`pjbv.signals.ops`.
"""
import numpy as np
import pytest as pt

from pjbv import signals as s
from tests.fixtures import affine, composite, jump, walk_pl


# Test cases.
class TestAffineConjugate:
    def test_affine(self):
        """Given a signal and two maps, :func:`affine_conjugate`
        should build the conjugated signal.
        """
        f = s.Affine(1.0, 0.0, (0, 1))
        g = s.affine_conjugate(f, s.AffineMap(1.0), s.AffineMap(0.5))
        assert g == s.Affine(0.5, 0.0, (0.0, 2.0))


class TestEvaluate:
    def test_evaluate(self, jump):
        """Given a position in the domain, :func:`evaluate` should
        return the value there.
        """
        assert s.evaluate(jump, 0.5) == 1.0

    def test_outside(self, jump):
        """Given a position outside the domain, :func:`evaluate`
        should raise :class:`OutOfDomain`.
        """
        with pt.raises(s.OutOfDomain):
            s.evaluate(jump, -0.5)


class TestSample:
    def test_pl(self, affine):
        """Given a continuous signal, :func:`sample` should sample it
        on a uniform grid.
        """
        f = s.sample(affine, 5)
        assert f.grid.tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]
        assert f.values.tolist() == [1.0, 1.75, 2.5, 3.25, 4.0]
        assert f.mode == s.PL

    def test_pl_jump(self, jump):
        """Given a signal with a jump, :func:`sample` should refuse
        piecewise-linear samples.
        """
        with pt.raises(s.BadResolution):
            s.sample(jump, 11)

    def test_pc_jump(self, composite):
        """Given a jump on a grid point, :func:`sample` should hold
        it in piecewise-constant samples.
        """
        f = s.sample(composite, 7, 'pc')
        assert f.grid.tolist() == [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0]
        assert f.values.tolist() == [0.0, 0.5, 1.0, 2.0, 2.0, 2.0, 2.0]
        assert f.discontinuities().tolist() == [0.5, 1.0, 1.5]

    def test_pc_jump_off_grid(self):
        """Given a jump between grid points, :func:`sample` should
        step at the next grid point in piecewise-constant samples.
        """
        f = s.sample(s.Jump(0.3, 0.0, 1.0), 3, 'pc')
        assert f.grid.tolist() == [0.0, 0.5, 1.0]
        assert f.values.tolist() == [0.0, 1.0, 1.0]
        assert f.value(0.4) == 0.0
        assert f.value(0.5) == 1.0

    def test_too_few(self, affine):
        """Given fewer than two points, :func:`sample` should raise
        :class:`BadResolution`.
        """
        with pt.raises(s.BadResolution):
            s.sample(affine, 1)

    def test_reproduces_knots(self, walk_pl):
        """Given samples, sampling them again on their own grid should
        give the same values.
        """
        grid = walk_pl.grid
        assert np.allclose(walk_pl.evaluate(grid), walk_pl.values)
