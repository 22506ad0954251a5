"""
test_sampled
~~~~~~~~~~~~

Unit tests for :mod:`pjbv.signals.sampled`.
"""
import numpy as np
import pytest as pt

from pjbv import signals as s
from tests.fixtures import walk_pc


# Test cases.
class TestGetMode:
    def test_aliases(self):
        """Given a mode or its alias, :func:`get_mode` should return
        the full mode name.
        """
        assert s.get_mode('pl') == s.PL
        assert s.get_mode('PC') == s.PC
        assert s.get_mode(s.PC) == s.PC

    def test_unknown(self):
        """Given an unknown mode, :func:`get_mode` should raise
        :class:`InvalidSignal`.
        """
        with pt.raises(s.InvalidSignal):
            s.get_mode('spline')


class TestSampledSignal:
    # Tests for initialization.
    def test_init(self):
        """Given a grid and values, :class:`SampledSignal` should
        store them read only and take the domain from the grid.
        """
        f = s.SampledSignal([0, 1, 2], [0, 2, 0])
        assert f.domain == s.Interval(0.0, 2.0)
        assert f.mode == s.PL
        with pt.raises(ValueError):
            f.values[0] = 1.0

    @pt.mark.parametrize('grid,values', [
        ([0.0], [0.0]),
        ([0.0, 1.0], [0.0]),
        ([0.0, 1.0, 1.0], [0.0, 1.0, 2.0]),
        ([0.0, 2.0, 1.0], [0.0, 1.0, 2.0]),
        ([0.0, 1.0], [0.0, np.nan]),
    ])
    def test_init_invalid(self, grid, values):
        """Given too few samples, mismatched lengths, a grid that
        doesn't increase, or values that aren't finite,
        :class:`SampledSignal` should raise :class:`InvalidSignal`.
        """
        with pt.raises(s.InvalidSignal):
            s.SampledSignal(grid, values)

    # Tests for evaluation.
    def test_value_pl(self):
        """Given positions, a piecewise-linear :class:`SampledSignal`
        should interpolate between samples.
        """
        f = s.SampledSignal([0.0, 1.0, 2.0], [0.0, 2.0, 0.0])
        result = f.value([0.0, 0.5, 1.0, 1.5, 2.0])
        assert (result == np.array([0.0, 1.0, 2.0, 1.0, 0.0])).all()

    def test_value_pc(self):
        """Given positions, a piecewise-constant :class:`SampledSignal`
        should hold the value of the knot on the left.
        """
        f = s.SampledSignal([0.0, 1.0, 2.0], [1.0, 3.0, 5.0], 'pc')
        result = f.value([0.0, 0.5, 1.0, 1.5, 2.0])
        assert (result == np.array([1.0, 1.0, 3.0, 3.0, 5.0])).all()

    def test_derivative_pl(self):
        """Given positions, :meth:`SampledSignal.derivative` should
        return the slope of the cell to the right, or of the last
        cell at the last knot.
        """
        f = s.SampledSignal([0.0, 1.0, 2.0], [0.0, 2.0, 0.0])
        assert f.derivative(0.5) == 2.0
        assert f.derivative(1.0) == -2.0
        assert f.derivative(2.0) == -2.0

    def test_derivative_pc(self):
        """Given positions, :meth:`SampledSignal.derivative` should be
        zero for piecewise-constant samples.
        """
        f = s.SampledSignal([0.0, 1.0, 2.0], [1.0, 3.0, 5.0], 'pc')
        assert (f.derivative([0.5, 1.5]) == 0.0).all()

    # Tests for structure.
    def test_discontinuities(self):
        """Piecewise-constant samples should jump at the inner knots
        where the value changes, piecewise-linear samples nowhere.
        """
        grid, values = [0.0, 1.0, 2.0, 3.0], [1.0, 1.0, 2.0, 2.0]
        pc = s.SampledSignal(grid, values, 'pc')
        pl = s.SampledSignal(grid, values, 'pl')
        assert pc.discontinuities().tolist() == [2.0]
        assert pl.discontinuities().size == 0
        assert pc.breakpoints().tolist() == grid

    def test_conjugate_reflect_pc(self):
        """Given a decreasing position map,
        :meth:`SampledSignal.conjugate` should reverse the cells of
        piecewise-constant samples.
        """
        f = s.SampledSignal([0.0, 1.0, 2.0], [1.0, 3.0, 5.0], 'pc')
        g = f.conjugate(s.AffineMap.identity(), s.AffineMap(-1.0, 2.0))
        assert g.grid.tolist() == [0.0, 1.0, 2.0]
        assert g.values.tolist() == [3.0, 1.0, 1.0]
        assert g.first_value == 5.0
        assert g.value(0.0) == f.value(2.0)
        assert g.value(0.5) == f.value(1.5)
        assert g.value(1.5) == f.value(0.5)

    def test_conjugate_scale_pl(self):
        """Given maps of positions and values,
        :meth:`SampledSignal.conjugate` should move the grid and map
        the values.
        """
        f = s.SampledSignal([0.0, 1.0, 2.0], [0.0, 2.0, 0.0])
        g = f.conjugate(s.AffineMap(2.0, 1.0), s.AffineMap(2.0))
        assert g.grid.tolist() == [0.0, 0.5, 1.0]
        assert g.values.tolist() == [1.0, 5.0, 1.0]

    def test_eq_and_asdict(self):
        """Samples with the same grid, values, and mode should be
        equal, and :meth:`SampledSignal.asdict` should give lists.
        """
        a = s.SampledSignal([0, 1], [2, 3], 'pc')
        b = s.SampledSignal([0.0, 1.0], [2.0, 3.0], 'pc')
        assert a == b
        assert a != s.SampledSignal([0, 1], [2, 3], 'pl')
        assert a.asdict() == {
            'grid': [0.0, 1.0],
            'values': [2.0, 3.0],
            'mode': s.PC,
        }


class TestConjugateInvolution:
    @pt.mark.parametrize('mode', [s.PC, s.PL])
    @pt.mark.parametrize('seed', range(30))
    def test_round_trip(self, mode, seed):
        """Given random maps, conjugating samples and then
        conjugating back with the inverse maps should give back the
        samples, including the values at both ends of the grid.
        """
        rng = np.random.default_rng(seed)
        f = s.generate_sampled(seed, 20, mode)
        L = s.AffineMap(rng.choice([-1, 1]) * rng.uniform(0.5, 2.0),
                        rng.normal())
        F = s.AffineMap(-rng.uniform(0.5, 2.0), rng.normal())

        g = s.affine_conjugate(f, L, F)
        back = s.affine_conjugate(g, L.inverse(), F.inverse())
        assert np.allclose(back.grid, f.grid)
        assert np.allclose(back.values, f.values)
        assert back.first_value is None
        lo, hi = back.domain.astuple()
        assert back.value(hi) == pt.approx(f.values[-1])
        assert back.value(lo) == pt.approx(f.values[0])

    def test_reflected_ends(self, walk_pc):
        """Given a reflection, the reflected samples should keep the
        value of the last knot at their first knot.
        """
        hi = walk_pc.domain.hi
        g = s.affine_conjugate(
            walk_pc, s.AffineMap.identity(), s.AffineMap(-1.0, hi)
        )
        assert g.value(0.0) == walk_pc.value(hi)
        assert g.value(hi) == walk_pc.value(0.0)
