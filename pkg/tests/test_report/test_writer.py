"""
test_writer
~~~~~~~~~~~

Unit tests for :mod:`pjbv.report.writer`.
"""
import json

import pytest as pt

from pjbv import calculus as c
from pjbv import report as rp
from pjbv import rigidity as r
from pjbv import signals as s
from tests.fixtures import affine, composite


# Fixtures.
@pt.fixture
def qmap(affine):
    """A quotient map of a line."""
    yield c.quotient_map(affine, [0.5], 0.25)


@pt.fixture
def segments():
    """A segmentation with one segment of each kind."""
    yield r.SegmentationReport((
        r.Segment(s.Interval(0.0, 1.0), r.AFFINE, {'slope': 1.0}, 0.0),
        r.Segment(s.Interval(1.0, 1.5), r.OTHER, {'tv': 0.5}, None),
    ))


# Test cases.
class TestDump:
    def test_dump_json(self):
        """Given data, :func:`dump_json` should sort keys and indent
        by two spaces.
        """
        text = rp.dump_json({'b': 1, 'a': [1, None]})
        assert text == '{\n  "a": [\n    1,\n    null\n  ],\n  "b": 1\n}\n'

    def test_dump_csv(self):
        """Given records, :func:`dump_csv` should write a header and
        one line per record, with empty cells for None and JSON for
        nested values.
        """
        rows = [
            {'a': 1.5, 'b': None, 'c': {'y': 2, 'x': 1}},
            {'a': 'spam', 'b': 2, 'c': 'eggs'},
        ]
        text = rp.dump_csv(rows, ('a', 'b', 'c'))
        assert text == (
            'a,b,c\n'
            '1.5,,"{""x"": 1, ""y"": 2}"\n'
            'spam,2,eggs\n'
        )


class TestSignalDescriptor:
    def test_affine(self):
        """Given a signal, :func:`signal_descriptor` should name its
        type and list its parameters.
        """
        assert rp.signal_descriptor(s.Affine(3.0, 1.0)) == {
            'type': 'affine',
            'slope': 3.0,
            'intercept': 1.0,
            'domain': [0.0, 1.0],
        }

    def test_composite(self, composite):
        """Given a composite, :func:`signal_descriptor` should nest
        the descriptors of its pieces, and :func:`build_signal`
        should read them back.
        """
        data = rp.signal_descriptor(composite)
        assert data['type'] == 'composite'
        assert [p['type'] for p in data['pieces']] == [
            'affine', 'jump', 'affine'
        ]
        assert rp.build_signal(json.loads(rp.dump_json(data))) == composite


class TestFormat:
    def test_map_json(self, qmap):
        """Given a map, :func:`format_map` should write its scales,
        positions, stride, and entries.
        """
        data = json.loads(rp.format_map(qmap))
        assert data['scales'] == [0.5]
        assert data['stride'] == 0.25
        assert len(data['entries']) == 3
        assert c.QuotientMap.fromdict(data) == qmap

    def test_map_csv(self, qmap):
        """Given a map and the csv format, :func:`format_map` should
        write one row per window.
        """
        lines = rp.format_map(qmap, 'csv').splitlines()
        assert lines[0] == 'center,scale,lo,hi,mean,osc,tv,R,quotient'
        assert len(lines) == 4
        assert lines[1].startswith('0.25,0.5,0.0,0.5,')

    def test_map_constant(self):
        """Given a constant, :func:`format_map` should write null
        quotients in JSON and empty cells in CSV.
        """
        qmap = c.quotient_map(s.Affine(0.0, 1.0), [0.5], 0.25)
        data = json.loads(rp.format_map(qmap))
        assert all(e['quotient'] is None for e in data['entries'])
        lines = rp.format_map(qmap, 'csv').splitlines()
        assert all(line.endswith(',') for line in lines[1:])

    def test_segments(self, segments):
        """Given a segmentation, :func:`format_segments` should write
        each segment.
        """
        data = json.loads(rp.format_segments(segments))
        assert [seg['class'] for seg in data['segments']] == [
            'affine', 'other'
        ]
        assert r.SegmentationReport.fromdict(data) == segments
        lines = rp.format_segments(segments, 'csv').splitlines()
        assert lines == [
            'start,end,class,params,deviation',
            '0.0,1.0,affine,"{""slope"": 1.0}",0.0',
            '1.0,1.5,other,"{""tv"": 0.5}",',
        ]

    def test_checks(self):
        """Given results, :func:`format_checks` should report whether
        every check passed.
        """
        results = [
            rp.CheckResult.judge('spam', 1, 0.0, 1e-10),
            rp.CheckResult.judge('eggs', 2, 1.0, 0.5, 'above', x=1.0),
        ]
        data = json.loads(rp.format_checks('bacon', results))
        assert data['suite'] == 'bacon'
        assert data['passed'] is True
        assert data['checks'][1]['details'] == {'x': 1.0}
        lines = rp.format_checks('bacon', results, 'csv').splitlines()
        assert lines[0] == (
            'check,probes,max_residual,tolerance,passed,criterion'
        )
        assert lines[2] == 'eggs,2,1.0,0.5,True,above'


class TestWriteText:
    def test_stdout(self, capsys):
        """Given no path, :func:`write_text` should write to standard
        output.
        """
        rp.write_text('spam\n')
        assert capsys.readouterr().out == 'spam\n'

    def test_file(self, tmp_path):
        """Given a path, :func:`write_text` should write the file."""
        path = tmp_path / 'out.json'
        rp.write_text('{}\n', path)
        assert path.read_text() == '{}\n'
