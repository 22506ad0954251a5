"""
model
-----

Types used for :mod:`pjbv.rigidity`.
"""
from dataclasses import dataclass, field
from typing import Any, Optional

from pjbv.signals import Interval
from pjbv.util import DomainError, Probe


# Exceptions.
class BadBranch(DomainError):
    """The base point of a power family is inside the interval."""


class BadExponent(DomainError):
    """An exponent isn't positive."""


class BadInterval(DomainError):
    """The ends of an interval don't satisfy 0 <= a < b."""


class EmptyMap(DomainError):
    """A quotient map has no windows to classify."""


class FlatAtMean(DomainError):
    """A signal equals its mean on a set of positive measure."""


class IllConditioned(DomainError):
    """A least-squares fit is too ill-conditioned to trust."""


class NotMonotone(DomainError):
    """The derivative of a signal changes sign near a point."""


# Segment classes.
AFFINE = 'affine'
CONSTANT = 'constant'
JUMP = 'jump'
OTHER = 'other'
KINDS = (AFFINE, CONSTANT, JUMP, OTHER)


# Result types.
@dataclass(frozen=True)
class TaylorCoeffs:
    """The Taylor coefficients A_j = f^(j)(x0) / j! of a signal.

    :param center: The expansion point x0.
    :param A: The coefficients A_1 through A_4.
    :param window: The interval the coefficients were taken from.
    :param residual: The root mean square error of the fit. It is
        zero for coefficients taken from closed forms.
    :param method: Either 'exact' or 'fit'.
    :return: A :class:`TaylorCoeffs` object.
    :rtype: pjbv.rigidity.TaylorCoeffs
    """
    center: float
    A: tuple[float, float, float, float]
    window: Interval
    residual: float = 0.0
    method: str = 'exact'


@dataclass(frozen=True)
class LemmaResidualReport:
    """How well the one-sided variation identities hold on probes.

    :param probes: The (x, y) pairs checked.
    :param lhs: A quarter of |f'(y)| at each probe.
    :param rhs: The right-endpoint expression at each probe.
    :param fd: The central difference of y -> osc(f, (x, y)).
    :param residual: The larger of the differences between the
        central differences and the expressions at either end.
    :param identity_residual: The larger of the differences between a
        quarter of |f'| and the expressions at either end.
    :param fd_step: The central difference step.
    :return: A :class:`LemmaResidualReport` object.
    :rtype: pjbv.rigidity.LemmaResidualReport
    """
    probes: tuple[Probe, ...]
    lhs: tuple[float, ...]
    rhs: tuple[float, ...]
    fd: tuple[float, ...]
    residual: tuple[float, ...]
    identity_residual: tuple[float, ...]
    fd_step: float

    @property
    def max_identity_residual(self) -> float:
        return max(self.identity_residual)

    @property
    def max_residual(self) -> float:
        return max(self.residual)


@dataclass(frozen=True)
class ExpansionReport:
    """Small-window expansions of a signal around a point compared
    with what its Taylor coefficients predict.

    For each half-width eps the report holds the offset rho of the
    point where the signal crosses its window mean, the oscillation
    h over the window, and a quarter of the total variation over the
    window, each with its prediction and error. The exponents are the
    fitted orders of the errors and the limits are Richardson
    extrapolations of rho / eps**2 and of the cubic coefficient of h.
    """
    center: float
    coeffs: TaylorCoeffs
    eps: tuple[float, ...]
    rho: tuple[float, ...]
    rho_predicted: tuple[float, ...]
    rho_error: tuple[float, ...]
    h: tuple[float, ...]
    h_predicted: tuple[float, ...]
    h_error: tuple[float, ...]
    variation: tuple[float, ...]
    variation_predicted: tuple[float, ...]
    variation_error: tuple[float, ...]
    rho_exponent: Optional[float]
    h_exponent: Optional[float]
    variation_exponent: Optional[float]
    rho_limit: float
    cubic_limit: float


@dataclass(frozen=True)
class ExtremalProbe:
    """Whether a signal that reaches its mean at the right end of a
    probe is constant on the probe.
    """
    x: float
    y: float
    at_mean: bool
    constant: bool

    @property
    def holds(self) -> bool:
        return self.constant or not self.at_mean


@dataclass(frozen=True)
class Segment:
    """A classified piece of a signal's domain.

    :param interval: The piece of the domain.
    :param kind: One of 'affine', 'constant', 'jump', or 'other'.
    :param params: The parameters fitted for the class.
    :param deviation: The largest distance of a window quotient
        inside the segment from the quotient of its class, or `None`
        when no window fits inside.
    :return: A :class:`Segment` object.
    :rtype: pjbv.rigidity.Segment
    """
    interval: Interval
    kind: str
    params: dict[str, float] = field(default_factory=dict)
    deviation: Optional[float] = None

    @classmethod
    def fromdict(cls, data: dict[str, Any]) -> 'Segment':
        return cls(
            interval=Interval(data['start'], data['end']),
            kind=data['class'],
            params={k: float(v) for k, v in data['params'].items()},
            deviation=data['deviation'],
        )

    # Public methods.
    def asdict(self) -> dict[str, Any]:
        return {
            'start': self.interval.lo,
            'end': self.interval.hi,
            'class': self.kind,
            'params': dict(self.params),
            'deviation': self.deviation,
        }


@dataclass(frozen=True)
class SegmentationReport:
    """A partition of a signal's domain into classified segments,
    ordered by start.
    """
    segments: tuple[Segment, ...]

    def __len__(self) -> int:
        return len(self.segments)

    @classmethod
    def fromdict(cls, data: dict[str, Any]) -> 'SegmentationReport':
        segments = tuple(Segment.fromdict(s) for s in data['segments'])
        return cls(segments)

    @property
    def kinds(self) -> list[str]:
        return [s.kind for s in self.segments]

    # Public methods.
    def asdict(self) -> dict[str, Any]:
        return {'segments': [s.asdict() for s in self.segments]}
