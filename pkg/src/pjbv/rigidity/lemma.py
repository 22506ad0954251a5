"""
One-Sided Variations
--------------------

How the oscillation over (x, y) changes as either end moves, and the
checks built on it.

.. autofunction:: pjbv.rigidity.osc_derivative_rhs
.. autofunction:: pjbv.rigidity.lemma_residual
.. autofunction:: pjbv.rigidity.one_sided_bound
.. autofunction:: pjbv.rigidity.extremal_check
.. autofunction:: pjbv.rigidity.local_density

"""
from typing import Literal, Sequence

from pjbv.calculus import (
    interval_oscillation, interval_stats, level_set_measure, total_variation
)
from pjbv.rigidity.model import ExtremalProbe, FlatAtMean, LemmaResidualReport
from pjbv.signals import Interval, Signal
from pjbv.util import EXACT_TOL, Probe


# Names available for import.
__all__ = [
    'extremal_check', 'lemma_residual', 'local_density',
    'one_sided_bound', 'osc_derivative_rhs',
]


# Typing.
Endpoint = Literal['left', 'right']


# Public functions.
def osc_derivative_rhs(
    f: Signal,
    x: float,
    y: float,
    endpoint: Endpoint = 'right'
) -> float:
    """The derivative of the oscillation over (x, y) as an expression
    in the interval functionals.

    With m the mean, R the level balance, and L = y - x, the right
    form is

        -osc / L + |f(y) - m| / L + R (f(y) - m) / L**2

    and equals d/dy osc(f, (x, y)). The left form swaps f(y) for f(x)
    and equals -d/dx osc(f, (x, y)). For signals whose oscillation is
    a quarter of their variation on every interval both forms equal a
    quarter of |f'| at their end.

    :param f: The signal.
    :param x: The left end.
    :param y: The right end.
    :param endpoint: (Optional.) Which end moves.
    :return: The expression as a :class:`float`.
    :rtype: float

    Usage::

        >>> from pjbv.signals import Affine
        >>> osc_derivative_rhs(Affine(2.0), 0.25, 0.75)
        0.5
    """
    interval = Interval(x, y)
    stats = interval_stats(f, interval)
    mean = stats.mean
    flat = level_set_measure(f, interval, mean)
    if flat > EXACT_TOL * interval.length:
        msg = (
            f'The signal equals its mean {mean} on a set of measure '
            f'{flat} in {interval.astuple()}.'
        )
        raise FlatAtMean(msg)

    end = y if endpoint == 'right' else x
    offset = float(f.value(end)) - mean
    length = interval.length
    return (
        -stats.oscillation / length
        + abs(offset) / length
        + stats.level_balance * offset / length ** 2
    )


def lemma_residual(
    f: Signal,
    probes: Sequence[Probe],
    fd_step: float = 1e-4
) -> LemmaResidualReport:
    """Compare central differences of the oscillation against
    :func:`osc_derivative_rhs` at both ends of each probe, and compare
    the expressions against a quarter of |f'|.

    :param f: The signal.
    :param probes: The (x, y) pairs. Each end must stay in the domain
        when moved by the step.
    :param fd_step: (Optional.) The central difference step.
    :return: A :class:`LemmaResidualReport` object.
    :rtype: pjbv.rigidity.LemmaResidualReport
    """
    h = fd_step
    lhs, rhs, fd, residual, identity = [], [], [], [], []
    for x, y in probes:
        right = osc_derivative_rhs(f, x, y, 'right')
        left = osc_derivative_rhs(f, x, y, 'left')
        d_right = (
            interval_oscillation(f, (x, y + h))
            - interval_oscillation(f, (x, y - h))
        ) / (2 * h)
        d_left = -(
            interval_oscillation(f, (x + h, y))
            - interval_oscillation(f, (x - h, y))
        ) / (2 * h)
        quarter_y = abs(float(f.derivative(y))) / 4
        quarter_x = abs(float(f.derivative(x))) / 4

        lhs.append(quarter_y)
        rhs.append(right)
        fd.append(d_right)
        residual.append(max(abs(d_right - right), abs(d_left - left)))
        identity.append(max(abs(quarter_y - right), abs(quarter_x - left)))

    return LemmaResidualReport(
        probes=tuple((float(x), float(y)) for x, y in probes),
        lhs=tuple(lhs),
        rhs=tuple(rhs),
        fd=tuple(fd),
        residual=tuple(residual),
        identity_residual=tuple(identity),
        fd_step=fd_step,
    )


def one_sided_bound(f: Signal, probes: Sequence[Probe]) -> float:
    """The largest excess of osc(f, (x, y)) over twice the distance of
    f(y) from the mean over the probes. It isn't positive for signals
    whose oscillation is a quarter of their variation everywhere.

    :param f: The signal.
    :param probes: The (x, y) pairs.
    :return: The largest excess as a :class:`float`.
    :rtype: float
    """
    excess = []
    for x, y in probes:
        stats = interval_stats(f, (x, y))
        bound = 2 * abs(float(f.value(y)) - stats.mean)
        excess.append(stats.oscillation - bound)
    return max(excess)


def extremal_check(
    f: Signal,
    probes: Sequence[Probe],
    tol: float = EXACT_TOL
) -> list[ExtremalProbe]:
    """For each probe, find whether the signal reaches its mean at the
    right end and whether it is constant on the probe. For solutions
    reaching the mean at an end forces the signal to be constant.

    :param f: The signal.
    :param probes: The (x, y) pairs.
    :param tol: (Optional.) The tolerance for both tests.
    :return: A :class:`list` of :class:`ExtremalProbe` objects.
    :rtype: list
    """
    out = []
    for x, y in probes:
        stats = interval_stats(f, (x, y))
        scale = max(1.0, abs(stats.mean))
        at_mean = abs(float(f.value(y)) - stats.mean) <= tol * scale
        constant = total_variation(f, (x, y)) <= tol * scale
        out.append(ExtremalProbe(float(x), float(y), at_mean, constant))
    return out


def local_density(
    f: Signal,
    x0: float,
    radii: Sequence[float]
) -> list[float]:
    """The oscillation over (x0 - r, x0 + r) divided by 2r for each
    radius. Where f' is continuous this tends to a quarter of |f'(x0)|
    for solutions as r shrinks.

    :param f: The signal.
    :param x0: The center.
    :param radii: The radii.
    :return: A :class:`list` of densities.
    :rtype: list
    """
    return [
        interval_oscillation(f, Interval.around(x0, 2 * r)) / (2 * r)
        for r in radii
    ]
