"""
Reading Signals from Files
==========================

Read sampled signals from CSV files and analytic signals from JSON
descriptors.

A CSV file has two columns, x and y, with an optional header row.
The first row is taken as a header when it isn't numeric. Numbers use
a decimal point whatever the locale.

A JSON descriptor is an object with a "type" key naming the signal
and the parameters of the signal as the other keys. Domains are
two-element lists. Composite signals list their pieces as nested
descriptors::

    {
        "type": "composite",
        "pieces": [
            {"type": "affine", "slope": 1.0, "domain": [0, 1]},
            {"type": "jump", "location": 1.5, "left_value": 1.0,
             "right_value": 2.0, "domain": [1, 2]}
        ]
    }

.. autofunction:: pjbv.report.read_csv
.. autofunction:: pjbv.report.read_signal_json
.. autofunction:: pjbv.report.build_signal

"""
import json
import logging
import re
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np
import pandas as pd

from pjbv.report.model import InputError
from pjbv.signals import (
    PL, InvalidSignal, SampledSignal, Signal, get_mode, signal_types
)
from pjbv.util import DomainError


# Names available for import.
__all__ = ['build_signal', 'read_csv', 'read_signal_json']


log = logging.getLogger(__name__)


# Utility functions.
def _check_file(path: Path) -> None:
    if not path.is_file():
        msg = f'There is no file at {path}.'
        raise FileNotFoundError(msg)


def _load_cells(path: Path) -> pd.DataFrame:
    """Load the non-blank rows of a CSV file as stripped text, indexed
    by line number.
    """
    try:
        frame = pd.read_csv(
            path,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
        )
    except pd.errors.EmptyDataError:
        return pd.DataFrame(columns=[0, 1], dtype=str)
    except pd.errors.ParserError as ex:
        found = re.search(r'line (\d+), saw (\d+)', str(ex))
        if not found:
            raise InputError(f'Unreadable CSV: {ex}'.strip())
        msg = f'Expected two columns, found {found.group(2)}.'
        raise InputError(msg, int(found.group(1)))
    frame = frame.fillna('').apply(lambda col: col.str.strip())
    frame.index = frame.index + 1
    return frame[(frame != '').any(axis=1)]


def _is_numeric(cells: pd.Series) -> bool:
    cells = cells[cells != '']
    numbers = pd.to_numeric(cells, errors='coerce')
    return bool((numbers.notna() | (cells.str.casefold() == 'nan')).all())


def _first_bad_number(
    cells: pd.Series,
    numbers: pd.Series,
    field: str
) -> Optional[tuple[int, int, InputError]]:
    bad = ~np.isfinite(numbers.to_numpy(dtype=float))
    if not bad.any():
        return None
    row = int(cells.index[np.argmax(bad)])
    text = cells[row]
    if pd.isna(numbers[row]) and text.casefold() != 'nan':
        msg = f'Not a number: {text!r}.'
    else:
        msg = f'Not a finite number: {text!r}.'
    priority = 0 if field == 'x' else 1
    return row, priority, InputError(msg, row, field)


# Public functions.
def read_csv(path: Union[str, Path], mode: str = PL) -> SampledSignal:
    """Read a sampled signal from a CSV file.

    :param path: The location of the file.
    :param mode: (Optional.) The interpolation mode of the samples.
    :return: A :class:`pjbv.signals.SampledSignal` object.
    :rtype: pjbv.signals.SampledSignal

    Usage::

        >>> f = read_csv('tests/test_report/data/affine.csv')
        >>> f.domain
        Interval(lo=0.0, hi=1.0)
    """
    path = Path(path)
    _check_file(path)
    try:
        mode = get_mode(mode)
    except InvalidSignal as ex:
        raise InputError(str(ex), field='--mode')

    frame = _load_cells(path)
    if len(frame) and not _is_numeric(frame.iloc[0]):
        log.debug('Skipping header %r in %s.', list(frame.iloc[0]), path)
        frame = frame.iloc[1:]

    # Column counts.
    if len(frame) and frame.shape[1] < 2:
        msg = f'Expected two columns, found {frame.shape[1]}.'
        raise InputError(msg, int(frame.index[0]))
    if frame.shape[1] > 2:
        extra = (frame.iloc[:, 2:] != '').any(axis=1)
        if extra.any():
            row = int(extra.idxmax())
            width = int((frame.loc[row] != '').sum())
            msg = f'Expected two columns, found {width}.'
            raise InputError(msg, row)

    # The first offending row wins, and within a row x before y.
    x = pd.to_numeric(frame[0], errors='coerce')
    y = pd.to_numeric(frame[1], errors='coerce')
    problems = [
        p for p in (
            _first_bad_number(frame[0], x, 'x'),
            _first_bad_number(frame[1], y, 'y'),
        ) if p is not None
    ]
    steps = x.diff()
    backward = steps <= 0
    if backward.any():
        row = int(backward.idxmax())
        prev = x[x.index[x.index.get_loc(row) - 1]]
        msg = f'x must increase, {x[row]} follows {prev}.'
        problems.append((row, 0, InputError(msg, row, 'x')))
    if problems:
        raise min(problems, key=lambda p: (p[0], p[1]))[2]

    if len(frame) < 2:
        msg = f'{path} has {len(frame)} samples, at least two are needed.'
        raise InputError(msg)
    log.info('Read %d samples from %s.', len(frame), path)
    grid, values = x.to_numpy(dtype=float), y.to_numpy(dtype=float)
    return SampledSignal(grid, values, mode)


def build_signal(data: Any, where: str = 'signal') -> Signal:
    """Build a signal from a parsed JSON descriptor.

    :param data: The descriptor.
    :param where: (Optional.) The name of the descriptor used in
        error messages.
    :return: A :class:`pjbv.signals.Signal` object.
    :rtype: pjbv.signals.Signal
    """
    if not isinstance(data, dict):
        raise InputError('A descriptor must be an object.', field=where)
    params = dict(data)
    kind = params.pop('type', None)
    if kind not in signal_types:
        msg = f'Unknown signal type: {kind!r}.'
        raise InputError(msg, field=f'{where}.type')

    if kind == 'composite':
        pieces = params.get('pieces')
        if not isinstance(pieces, list):
            msg = 'A composite needs a list of pieces.'
            raise InputError(msg, field=f'{where}.pieces')
        params['pieces'] = [
            build_signal(piece, f'{where}.pieces[{i}]')
            for i, piece in enumerate(pieces)
        ]

    try:
        return signal_types[kind](**params)
    except DomainError:
        raise
    except (TypeError, ValueError) as ex:
        raise InputError(f'Bad parameters for {kind}: {ex}.', field=where)


def read_signal_json(path: Union[str, Path]) -> Signal:
    """Read an analytic signal from a JSON descriptor.

    :param path: The location of the file.
    :return: A :class:`pjbv.signals.Signal` object.
    :rtype: pjbv.signals.Signal

    Usage::

        >>> read_signal_json('tests/test_report/data/affine.json')
        Affine(slope=3.0, intercept=1.0, domain=Interval(lo=0.0, hi=1.0))
    """
    path = Path(path)
    _check_file(path)
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as ex:
            msg = f'Malformed JSON: {ex.msg}.'
            raise InputError(msg, row=ex.lineno)
    signal = build_signal(data)
    log.info('Read %r from %s.', signal, path)
    return signal
