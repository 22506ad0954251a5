"""
Writing Reports
===============

Serialize quotient maps, segmentations, and verification results as
JSON or CSV text and write them out.

JSON is written with sorted keys and a two space indent, so the same
report always gives the same bytes. In CSV an undefined quotient is
an empty cell and segment parameters are JSON text.

.. autofunction:: pjbv.report.format_map
.. autofunction:: pjbv.report.format_segments
.. autofunction:: pjbv.report.format_checks
.. autofunction:: pjbv.report.signal_descriptor
.. autofunction:: pjbv.report.write_text

"""
import json
import sys
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

import numpy as np
import pandas as pd

from pjbv.calculus import QuotientMap
from pjbv.report.constants import CHECK_FIELDS, MAP_FIELDS, SEGMENT_FIELDS
from pjbv.report.model import CheckResult
from pjbv.rigidity import SegmentationReport
from pjbv.signals import Interval, Signal, signal_types


# Names available for import.
__all__ = [
    'dump_csv', 'dump_json', 'format_checks', 'format_map',
    'format_segments', 'signal_descriptor', 'write_text',
]


# Utility functions.
def _cell(value: Any) -> Any:
    if value is None:
        return ''
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return value


def _plain(value: Any) -> Any:
    if isinstance(value, Interval):
        return list(value.astuple())
    if isinstance(value, Signal):
        return signal_descriptor(value)
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


# Serialization.
def dump_json(data: Any) -> str:
    """Serialize plain data as JSON text."""
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def dump_csv(
    rows: Iterable[dict[str, Any]],
    fields: Sequence[str]
) -> str:
    """Serialize flat records as CSV text with a header row."""
    frame = pd.DataFrame(
        [[_cell(row[name]) for name in fields] for row in rows],
        columns=list(fields),
        dtype=object,
    )
    return frame.to_csv(index=False, lineterminator='\n')


def signal_descriptor(f: Signal) -> dict[str, Any]:
    """Describe a signal as the JSON descriptor that
    :func:`pjbv.report.build_signal` reads.

    :param f: The signal.
    :return: The descriptor as a :class:`dict`.
    :rtype: dict

    Usage::

        >>> from pjbv.signals import Affine
        >>> signal_descriptor(Affine(3.0, 1.0))
        {'type': 'affine', 'slope': 3.0, 'intercept': 1.0, 'domain': [0.0, 1.0]}
    """
    kinds = {cls: key for key, cls in signal_types.items()}
    descriptor = {'type': kinds[type(f)]}
    for key, value in f.asdict().items():
        descriptor[key] = _plain(value)
    return descriptor


# Report formatting.
def format_map(qmap: QuotientMap, fmt: str = 'json') -> str:
    """Format a quotient map as a report.

    :param qmap: The quotient map.
    :param fmt: (Optional.) Either 'json' or 'csv'. CSV reports have
        one row per window.
    :return: The report as a :class:`str`.
    :rtype: str
    """
    if fmt == 'csv':
        return dump_csv(qmap.records(), MAP_FIELDS)
    return dump_json(qmap.asdict())


def format_segments(report: SegmentationReport, fmt: str = 'json') -> str:
    """Format a segmentation as a report.

    :param report: The segmentation.
    :param fmt: (Optional.) Either 'json' or 'csv'. CSV reports have
        one row per segment.
    :return: The report as a :class:`str`.
    :rtype: str
    """
    if fmt == 'csv':
        rows = [s.asdict() for s in report.segments]
        return dump_csv(rows, SEGMENT_FIELDS)
    return dump_json(report.asdict())


def format_checks(
    suite: str,
    results: Sequence[CheckResult],
    fmt: str = 'json'
) -> str:
    """Format verification results as a report.

    :param suite: The name of the suite that ran.
    :param results: The results of its checks.
    :param fmt: (Optional.) Either 'json' or 'csv'. CSV reports have
        one row per check and leave out the details.
    :return: The report as a :class:`str`.
    :rtype: str
    """
    if fmt == 'csv':
        return dump_csv([r.asdict() for r in results], CHECK_FIELDS)
    return dump_json({
        'suite': suite,
        'passed': all(r.passed for r in results),
        'checks': [r.asdict() for r in results],
    })


# Output.
def write_text(text: str, path: Optional[Union[str, Path]] = None) -> None:
    """Write a report to a file, or to standard output when no path
    is given.
    """
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, 'w', newline='') as fh:
        fh.write(text)
