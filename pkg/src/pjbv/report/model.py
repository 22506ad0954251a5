"""
model
~~~~~

Types used in :mod:`pjbv.report`.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from pjbv.report.constants import FORMATS


# Exceptions.
class InputError(ValueError):
    """Input to the command line can't be parsed.

    :param msg: What went wrong.
    :param row: (Optional.) The one-based row of the input file.
    :param field: (Optional.) The column, key, or flag at fault.
    """
    def __init__(
        self, msg: str,
        row: Optional[int] = None,
        field: Optional[str] = None
    ) -> None:
        self.row = row
        self.field = field
        where = []
        if row is not None:
            where.append(f'row {row}')
        if field is not None:
            where.append(f'field {field!r}')
        if where:
            msg = f'{", ".join(where)}: {msg}'
        super().__init__(msg)


# Dataclasses.
@dataclass(frozen=True)
class RunConfig:
    """The settings of one run of the command line.

    :param command: One of 'analyze', 'segment', or 'verify'.
    :param input: (Optional.) A CSV file of samples.
    :param signal_json: (Optional.) A JSON file describing an analytic
        signal. Exactly one of `input` and `signal_json` must be set
        for 'analyze' and 'segment'.
    :param scales: (Optional.) The window lengths.
    :param stride: (Optional.) The step between window centers.
        Defaults to a quarter of the smallest scale.
    :param tol: (Optional.) Overrides the tolerance of the command.
    :param fmt: (Optional.) Either 'json' or 'csv'.
    :param output: (Optional.) Where to write the report. Reports go
        to standard output when this isn't set.
    :param seed: (Optional.) The seed of the random draws. Only the
        verification suites draw any.
    :param mode: (Optional.) The interpolation mode of CSV samples.
    :param suite: (Optional.) The verification suite to run.
    :param s: (Optional.) The exponent of the power suite.
    :return: A :class:`RunConfig` object.
    :rtype: pjbv.report.RunConfig
    """
    command: str
    input: Optional[Path] = None
    signal_json: Optional[Path] = None
    scales: tuple[float, ...] = ()
    stride: Optional[float] = None
    tol: Optional[float] = None
    fmt: str = 'json'
    output: Optional[Path] = None
    seed: int = 0
    mode: str = 'pl'
    suite: str = 'all'
    s: float = 2.5

    def __post_init__(self) -> None:
        if self.command in ('analyze', 'segment'):
            sources = [self.input, self.signal_json]
            if sum(src is not None for src in sources) != 1:
                msg = 'Give exactly one of --input and --signal-json.'
                raise InputError(msg, field='--input')
            if not self.scales:
                raise InputError('No scales given.', field='--scales')
            if any(not s > 0 for s in self.scales):
                msg = f'Scales must be positive: {list(self.scales)}.'
                raise InputError(msg, field='--scales')
        if self.stride is not None and not self.stride > 0:
            msg = f'Stride must be positive: {self.stride}.'
            raise InputError(msg, field='--stride')
        if self.tol is not None and not self.tol > 0:
            msg = f'Tolerance must be positive: {self.tol}.'
            raise InputError(msg, field='--tol')
        if self.fmt not in FORMATS:
            raise InputError(f'Unknown format: {self.fmt}.', field='--format')

    @property
    def window_stride(self) -> float:
        """The stride, falling back to a quarter of the smallest
        scale.
        """
        if self.stride is not None:
            return self.stride
        return min(self.scales) / 4


@dataclass(frozen=True)
class CheckResult:
    """The outcome of one verification check.

    :param check: The name of the check.
    :param probes: How many probes the check looked at.
    :param max_residual: The largest residual over the probes.
    :param tolerance: The tolerance the residual is held to.
    :param passed: Whether the check passed.
    :param criterion: (Optional.) 'below' when the residual has to be
        at most the tolerance and 'above' when it has to exceed it.
    :param details: (Optional.) Values worth reporting with the check.
    :return: A :class:`CheckResult` object.
    :rtype: pjbv.report.CheckResult
    """
    check: str
    probes: int
    max_residual: float
    tolerance: float
    passed: bool
    criterion: str = 'below'
    details: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def judge(
        cls, check: str,
        probes: int,
        residual: float,
        tolerance: float,
        criterion: str = 'below',
        **details: Any
    ) -> 'CheckResult':
        """Build a result, deciding whether it passed."""
        if criterion == 'below':
            passed = residual <= tolerance
        else:
            passed = residual > tolerance
        return cls(
            check, probes, float(residual), float(tolerance),
            bool(passed), criterion, details
        )

    # Public methods.
    def asdict(self) -> dict[str, Any]:
        return {
            'check': self.check,
            'probes': self.probes,
            'max_residual': self.max_residual,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'criterion': self.criterion,
            'details': dict(self.details),
        }
