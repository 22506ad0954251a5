"""
Command Line
============

The `pjbv` command. It has three subcommands:

analyze
    Write the quotient map of a signal.
segment
    Write the segmentation of a signal.
verify
    Run a verification suite.

The exit code is 0 on success, 1 when a verification check fails,
2 when the input can't be read, and 3 when the signal doesn't meet a
mathematical precondition of the command.

.. autofunction:: pjbv.report.main

"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from pjbv.calculus import quotient_map
from pjbv.report.checks import run_suite, suites
from pjbv.report.constants import (
    EXIT_DOMAIN, EXIT_FAILED, EXIT_INPUT, EXIT_OK, FORMATS
)
from pjbv.report.model import InputError, RunConfig
from pjbv.report.reader import read_csv, read_signal_json
from pjbv.report.writer import (
    format_checks, format_map, format_segments, write_text
)
from pjbv.rigidity import classify_segments
from pjbv.signals import Signal
from pjbv.util import CLASSIFY_TOL, DomainError


# Names available for import.
__all__ = ['build_parser', 'main']


log = logging.getLogger(__name__)


# Argument parsing.
def _scales(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(s) for s in text.split(',') if s.strip())
    except ValueError:
        msg = f'Scales must be comma separated numbers: {text!r}.'
        raise argparse.ArgumentTypeError(msg)


def build_parser() -> argparse.ArgumentParser:
    """Build the parser for the command line."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format', dest='fmt', choices=FORMATS, default='json',
        help='Format of the report.'
    )
    common.add_argument(
        '--output', '-o', type=Path,
        help='File to write the report to. Defaults to standard output.'
    )
    common.add_argument(
        '--tol', type=float,
        help='Override the tolerance of the command.'
    )
    common.add_argument(
        '--seed', type=int, default=0,
        help='Seed of the random draws. Analyze and segment draw none.'
    )
    common.add_argument(
        '--verbose', '-v', action='count', default=0,
        help='Log more. Give twice for debugging output.'
    )

    signal = argparse.ArgumentParser(add_help=False)
    source = signal.add_mutually_exclusive_group(required=True)
    source.add_argument('--input', type=Path, help='CSV file of x,y samples.')
    source.add_argument(
        '--signal-json', type=Path,
        help='JSON descriptor of an analytic signal.'
    )
    signal.add_argument(
        '--scales', type=_scales, required=True,
        help='Comma separated window lengths.'
    )
    signal.add_argument(
        '--stride', type=float,
        help='Step between window centers. Defaults to a quarter of '
             'the smallest scale.'
    )
    signal.add_argument(
        '--mode', choices=('pl', 'pc'), default='pl',
        help='Interpolation of CSV samples.'
    )

    parser = argparse.ArgumentParser(
        prog='pjbv',
        description='Oscillation and variation of one dimensional signals.'
    )
    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser(
        'analyze', parents=[common, signal],
        help='Write the quotient map of a signal.'
    )
    commands.add_parser(
        'segment', parents=[common, signal],
        help='Write the segmentation of a signal.'
    )
    verify = commands.add_parser(
        'verify', parents=[common],
        help='Run a verification suite.'
    )
    verify.add_argument(
        '--suite', choices=(*suites, 'all'), default='all',
        help='The suite to run.'
    )
    verify.add_argument(
        '--s', dest='s', type=float, default=2.5,
        help='Exponent for the power suite.'
    )
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    values = vars(args).copy()
    values.pop('verbose')
    return RunConfig(**values)


def _configure_logging(verbose: int) -> None:
    levels = [logging.WARNING, logging.INFO, logging.DEBUG]
    logging.basicConfig(
        level=levels[min(verbose, len(levels) - 1)],
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )


# Commands.
def _load(config: RunConfig) -> Signal:
    if config.input is not None:
        return read_csv(config.input, config.mode)
    return read_signal_json(config.signal_json)             # type: ignore


def cmd_analyze(config: RunConfig) -> int:
    """Write the quotient map of the input signal."""
    f = _load(config)
    qmap = quotient_map(f, config.scales, config.window_stride)
    write_text(format_map(qmap, config.fmt), config.output)
    return EXIT_OK


def cmd_segment(config: RunConfig) -> int:
    """Write the segmentation of the input signal."""
    f = _load(config)
    qmap = quotient_map(f, config.scales, config.window_stride)
    report = classify_segments(f, qmap, config.tol or CLASSIFY_TOL)
    write_text(format_segments(report, config.fmt), config.output)
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    """Run a verification suite and write its results."""
    results = run_suite(config.suite, config.seed, config.tol, config.s)
    text = format_checks(config.suite, results, config.fmt)
    write_text(text, config.output)
    failed = [r.check for r in results if not r.passed]
    if failed:
        log.warning('Failed checks: %s.', ', '.join(failed))
        return EXIT_FAILED
    return EXIT_OK


COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    'analyze': cmd_analyze,
    'segment': cmd_segment,
    'verify': cmd_verify,
}


# Main.
def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line.

    :param argv: (Optional.) The arguments. Defaults to the arguments
        of the process.
    :return: The exit code as an :class:`int`.
    :rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_OK if ex.code == 0 else EXIT_INPUT
    _configure_logging(args.verbose)

    try:
        config = _config(args)
        return COMMANDS[config.command](config)
    except (InputError, OSError) as ex:
        print(f'pjbv: input error: {ex}', file=sys.stderr)
        return EXIT_INPUT
    except DomainError as ex:
        name = type(ex).__name__
        print(f'pjbv: domain error: {name}: {ex}', file=sys.stderr)
        return EXIT_DOMAIN
