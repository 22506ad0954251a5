"""
test_maps
~~~~~~~~~

Unit tests for :mod:`pjbv.calculus.maps`.
"""
from math import sqrt

import numpy as np
import pytest as pt

from pjbv import calculus as c
from pjbv import signals as s
from tests.fixtures import affine, square, walk_pl


# Test cases.
class TestQuotientMap:
    def test_windows(self, affine):
        """Given scales and a stride, :func:`quotient_map` should
        evaluate only the windows that fit in the domain.
        """
        qmap = c.quotient_map(affine, [0.25, 0.5], 0.25)
        assert len(qmap) == 6
        assert qmap.positions == (0.0, 0.25, 0.5, 0.75, 1.0)
        grid = qmap.grid()
        assert grid.shape == (2, 5)
        assert np.isnan(grid[:, [0, 4]]).all()
        assert np.allclose(grid[:, 1:4], 0.25)
        assert len(qmap.at_scale(0.5)) == 3

    def test_records(self, affine):
        """Given a map, :meth:`QuotientMap.records` should give each
        window its nominal center and scale.
        """
        qmap = c.quotient_map(affine, [0.5], 0.25)
        records = qmap.records()
        assert [r['center'] for r in records] == [0.25, 0.5, 0.75]
        assert records[0]['lo'] == 0.0
        assert records[0]['hi'] == 0.5
        assert set(records[0]) == {
            'center', 'scale', 'lo', 'hi', 'mean', 'osc', 'tv', 'R',
            'quotient',
        }

    def test_fromdict(self, affine):
        """Given the output of :meth:`QuotientMap.asdict`,
        :meth:`QuotientMap.fromdict` should rebuild the map.
        """
        qmap = c.quotient_map(affine, [0.25, 0.5], 0.125)
        assert c.QuotientMap.fromdict(qmap.asdict()) == qmap

    def test_constant_windows(self):
        """Given a constant stretch, the quotient of its windows
        should be undefined.
        """
        qmap = c.quotient_map(s.Affine(0.0, 1.0), [0.5], 0.25)
        assert all(r['quotient'] is None for r in qmap.records())
        assert np.isnan(qmap.grid()).all()

    @pt.mark.parametrize('scales,stride', [
        ([], 0.1),
        ([0.5, -0.1], 0.1),
        ([0.5], 0.0),
    ])
    def test_bad_scale(self, affine, scales, stride):
        """Given a scale or a stride that isn't positive,
        :func:`quotient_map` should raise :class:`BadScale`.
        """
        with pt.raises(c.BadScale):
            c.quotient_map(affine, scales, stride)

    def test_no_window(self, affine):
        """Given scales longer than the domain, :func:`quotient_map`
        should raise :class:`NoValidWindow`.
        """
        with pt.raises(c.NoValidWindow):
            c.quotient_map(affine, [2.0], 0.25)

    def test_square_near_one(self):
        """Given x**2 and windows of half width r centered on 1, the
        quotient should be a quarter plus r**2/144 to leading order.
        """
        f = s.Polynomial([0.0, 0.0, 1.0], domain=(0.0, 2.0))
        qmap = c.quotient_map(f, [0.2, 0.02], 0.01)
        for r, expected in ((0.1, 0.2500694), (0.01, 0.25 + 1e-4 / 144)):
            entries = [
                e for e in qmap.at_scale(2 * r)
                if abs(e.interval.lo + e.interval.hi - 2.0) < 1e-9
            ]
            assert len(entries) == 1
            assert entries[0].quotient == pt.approx(expected, abs=1e-7)


class TestPartitionOscSum:
    def test_affine(self, affine):
        """Given a line, the sum should be a quarter of the variation
        whatever the mesh.
        """
        for mesh in (0.01, 0.1, 0.3, 1.0):
            total = c.partition_osc_sum(affine, (0, 1), mesh)
            assert total == pt.approx(0.75)

    def test_square(self, square):
        """Given x**2 on (-1, 1) and a mesh longer than half the
        interval, the sum should be the oscillation of the whole.
        """
        total = c.partition_osc_sum(square, (-1, 1), 1.5)
        assert total == pt.approx(4 / (9 * sqrt(3)))

    def test_fine_mesh(self, square, walk_pl):
        """Given a continuous signal, the sum shouldn't fall below a
        quarter of the variation by more than the cells holding a
        kink can account for.
        """
        for f in (square, walk_pl):
            J = f.domain
            tv = c.total_variation(f, J)
            x = np.union1d(f.breakpoints(), np.linspace(J.lo, J.hi, 1001))
            slope = np.max(np.abs(f.derivative(x)))
            kinks = len(f.breakpoints()) + 1
            for mesh in (1e-1, 1e-2, 1e-3):
                step = mesh * J.length
                tol = 2 * kinks * slope * step
                total = c.partition_osc_sum(f, J, step)
                assert total >= tv / 4 - tol

    @pt.mark.parametrize('mesh', [0.0, -0.5, 1.5])
    def test_bad_mesh(self, affine, mesh):
        """Given a mesh that isn't positive or is longer than the
        interval, :func:`partition_osc_sum` should raise
        :class:`BadMesh`.
        """
        with pt.raises(c.BadMesh):
            c.partition_osc_sum(affine, (0, 1), mesh)


class TestMeasureExtensionDefect:
    def test_affine(self, affine):
        """Given a line, the oscillation should be additive."""
        d = c.measure_extension_defect(affine, (0, 1), 0.3)
        assert d == pt.approx(0.0, abs=1e-12)

    def test_square(self, square):
        """Given x**2 split at its turning point, the defect should
        be the oscillation of the whole.
        """
        d = c.measure_extension_defect(square, (-1, 1), 0.0)
        assert d == pt.approx(4 / (9 * sqrt(3)))
        assert d == pt.approx(0.2566, abs=1e-3)

    @pt.mark.parametrize('split', [0.0, 1.0, 2.0])
    def test_bad_split(self, affine, split):
        """Given a split not strictly inside the interval,
        :func:`measure_extension_defect` should raise
        :class:`BadSplit`.
        """
        with pt.raises(c.BadSplit):
            c.measure_extension_defect(affine, (0, 1), split)
