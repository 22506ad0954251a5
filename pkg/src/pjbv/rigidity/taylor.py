"""
Taylor Rigidity
---------------

Local expansions of signals and the conditions they must meet for
the oscillation to be a quarter of the variation on small windows.

.. autofunction:: pjbv.rigidity.fit_taylor
.. autofunction:: pjbv.rigidity.rigidity_defect
.. autofunction:: pjbv.rigidity.taylor_expansion_check
.. autofunction:: pjbv.rigidity.ode_residual
.. autofunction:: pjbv.rigidity.ode_family_check

"""
import logging
from math import factorial
from typing import Literal, Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from pjbv.calculus import interval_mean, interval_oscillation, total_variation
from pjbv.calculus.ops import IntervalLike
from pjbv.rigidity.model import (
    BadBranch, ExpansionReport, IllConditioned, NotMonotone, TaylorCoeffs
)
from pjbv.signals import Interval, Power, Signal, SmoothSignal
from pjbv.util import (
    FIT_COND_LIMIT, FIT_PROBES, HALFWIDTH_RATIO, log_log_slope, richardson
)


# Names available for import.
__all__ = [
    'fit_taylor', 'ode_family_check', 'ode_residual', 'rigidity_defect',
    'taylor_expansion_check',
]


# Typing.
Method = Literal['auto', 'exact', 'fit']


log = logging.getLogger(__name__)


# Utility functions.
def _crossing(f: Signal, level: float, lo: float, hi: float) -> float:
    return brentq(lambda x: float(f.value(x)) - level, lo, hi, xtol=1e-15)


# Public functions.
def fit_taylor(
    f: Signal,
    x0: float,
    halfwidth: Optional[float] = None,
    method: Method = 'auto'
) -> TaylorCoeffs:
    """Find the first four Taylor coefficients of a signal at a point.

    The 'exact' method differentiates smooth analytic signals in
    closed form. The 'fit' method fits a quartic without a constant
    term to f(x) - f(x0) by least squares on a dense grid over the
    window. The 'auto' method picks 'exact' when it can.

    :param f: The signal.
    :param x0: The expansion point.
    :param halfwidth: (Optional.) Half the width of the window.
        Defaults to a twentieth of the length of the domain.
    :param method: (Optional.) One of 'auto', 'exact', or 'fit'.
    :return: A :class:`TaylorCoeffs` object.
    :rtype: pjbv.rigidity.TaylorCoeffs

    Usage::

        >>> from pjbv.signals import Polynomial
        >>> f = Polynomial([0.0, 0.0, 1.0], domain=(0, 2))
        >>> fit_taylor(f, 1.0).A
        (2.0, 1.0, 0.0, 0.0)
    """
    if halfwidth is None:
        halfwidth = HALFWIDTH_RATIO * f.domain.length
    window = Interval.around(x0, 2 * halfwidth)
    f.check_interval(window)

    if method == 'auto':
        method = 'exact' if isinstance(f, SmoothSignal) else 'fit'
    if method == 'exact':
        if not isinstance(f, SmoothSignal):
            name = type(f).__name__
            raise ValueError(f'No closed form derivatives for {name}.')
        A = tuple(
            float(f.derivative(x0, j)) / factorial(j)
            for j in range(1, 5)
        )
        return TaylorCoeffs(x0, A, window)                 # type: ignore
    if method != 'fit':
        raise ValueError(f'Unknown Taylor method: {method}.')

    t = np.linspace(-halfwidth, halfwidth, FIT_PROBES)
    y = f.value(x0 + t) - float(f.value(x0))
    design = np.stack([t ** j for j in range(1, 5)], axis=1)
    cond = np.linalg.cond(design)
    if cond > FIT_COND_LIMIT:
        msg = (
            f'Taylor fit at {x0} with half-width {halfwidth} has '
            f'condition number {cond:.3g}.'
        )
        raise IllConditioned(msg)
    coeffs, *_ = np.linalg.lstsq(design, y, rcond=None)
    residual = float(np.sqrt(np.mean((design @ coeffs - y) ** 2)))
    A = tuple(float(c) for c in coeffs)
    return TaylorCoeffs(x0, A, window, residual, 'fit')     # type: ignore


def rigidity_defect(coeffs: TaylorCoeffs) -> float:
    """The third order rigidity defect 9 A_3 A_1 - 2 A_2**2. It is
    zero exactly when 3 f' f''' = (f'')**2 at the expansion point.

    :param coeffs: The Taylor coefficients.
    :return: The defect as a :class:`float`.
    :rtype: float
    """
    A1, A2, A3, _ = coeffs.A
    return 9 * A3 * A1 - 2 * A2 ** 2


def taylor_expansion_check(
    f: Signal,
    x0: float,
    eps_list: Sequence[float],
    method: Method = 'auto'
) -> ExpansionReport:
    """Compare the behavior of a signal on the windows
    (x0 - eps, x0 + eps) with the predictions of its Taylor
    coefficients at x0.

    With f increasing, the point where f crosses its window mean sits
    at x0 + rho with rho close to A_2 eps**2 / (3 A_1). The oscillation
    is close to (A_1 / 2) eps + (A_3 / 4 + A_2**2 / (18 A_1)) eps**3 and
    a quarter of the variation is close to (A_1 / 2) eps +
    (A_3 / 2) eps**3. Decreasing signals are handled by symmetry.

    :param f: The signal. It must be strictly monotone near x0.
    :param x0: The center of the windows.
    :param eps_list: The half-widths of the windows.
    :param method: (Optional.) How to find the coefficients, as in
        :func:`fit_taylor`.
    :return: A :class:`ExpansionReport` object.
    :rtype: pjbv.rigidity.ExpansionReport
    """
    eps = np.sort(np.asarray(eps_list, dtype=float))[::-1]
    widest = float(eps[0])
    probes = np.linspace(x0 - widest, x0 + widest, FIT_PROBES)
    slopes = f.derivative(probes)
    if not (np.all(slopes > 0) or np.all(slopes < 0)):
        msg = f'The derivative changes sign within {widest} of {x0}.'
        raise NotMonotone(msg)

    coeffs = fit_taylor(f, x0, widest, method)
    sign = 1.0 if coeffs.A[0] > 0 else -1.0
    A1, A2, A3, _ = (sign * a for a in coeffs.A)

    rho, h, variation = [], [], []
    for e in eps:
        lo, hi = x0 - e, x0 + e
        mean = interval_mean(f, (lo, hi))
        rho.append(_crossing(f, mean, lo, hi) - x0)
        h.append(interval_oscillation(f, (lo, hi)))
        variation.append(total_variation(f, (lo, hi)) / 4)

    rho_pred = A2 * eps ** 2 / (3 * A1)
    h_pred = A1 / 2 * eps + (A3 / 4 + A2 ** 2 / (18 * A1)) * eps ** 3
    var_pred = A1 / 2 * eps + A3 / 2 * eps ** 3
    rho_err = np.asarray(rho) - rho_pred
    h_err = np.asarray(h) - h_pred
    var_err = np.asarray(variation) - var_pred

    rho_scaled = np.asarray(rho) / eps ** 2
    cubic = (np.asarray(h) - A1 / 2 * eps) / eps ** 3
    report = ExpansionReport(
        center=x0,
        coeffs=coeffs,
        eps=tuple(eps.tolist()),
        rho=tuple(rho),
        rho_predicted=tuple(rho_pred.tolist()),
        rho_error=tuple(rho_err.tolist()),
        h=tuple(h),
        h_predicted=tuple(h_pred.tolist()),
        h_error=tuple(h_err.tolist()),
        variation=tuple(variation),
        variation_predicted=tuple(var_pred.tolist()),
        variation_error=tuple(var_err.tolist()),
        rho_exponent=log_log_slope(eps, rho_err),
        h_exponent=log_log_slope(eps, h_err),
        variation_exponent=log_log_slope(eps, var_err),
        rho_limit=richardson(eps, rho_scaled),
        cubic_limit=richardson(eps, cubic),
    )
    log.debug(
        'Expansion at %s: rho limit %s, cubic limit %s.',
        x0, report.rho_limit, report.cubic_limit
    )
    return report


def ode_residual(
    g: SmoothSignal,
    interval: IntervalLike,
    probes: int = 100
) -> float:
    """The largest value of |3 g g'' - (g')**2| on a uniform grid of
    probes over an interval. Probes where g'' isn't finite, such as
    the base point of a power, are left out.

    :param g: The signal.
    :param interval: The interval.
    :param probes: (Optional.) The number of probes.
    :return: The largest residual as a :class:`float`.
    :rtype: float

    Usage::

        >>> from pjbv.signals import Polynomial
        >>> g = Polynomial([0.0, 0.0, 1.0], domain=(0.5, 2))
        >>> ode_residual(g, (0.5, 2))
        8.0
    """
    interval = Interval.coerce(interval)
    g.check_interval(interval)
    x = np.linspace(interval.lo, interval.hi, probes)
    with np.errstate(divide='ignore', invalid='ignore'):
        residual = (
            3 * g.value(x) * g.derivative(x, 2)
            - g.derivative(x) ** 2
        )
    residual = np.abs(residual[np.isfinite(residual)])
    return float(np.max(residual)) if residual.size else 0.0


def ode_family_check(
    A: float,
    B: float,
    interval: IntervalLike,
    probes: int = 100
) -> float:
    """The largest residual of 3 g g'' = (g')**2 for
    g(x) = A |x - B|**(3/2) over an interval.

    :param A: The scale of the family member.
    :param B: The base point. It can't be inside the interval.
    :param interval: The interval.
    :param probes: (Optional.) The number of probes.
    :return: The largest residual as a :class:`float`.
    :rtype: float
    """
    interval = Interval.coerce(interval)
    if interval.lo < B < interval.hi:
        msg = f'Base point {B} is inside {interval.astuple()}.'
        raise BadBranch(msg)
    g = Power(1.5, shift=B, scale=A, domain=interval)
    return ode_residual(g, interval, probes)
