"""
Verification Suites
===================

Named groups of checks run by the verify command. Each suite is a
function taking a random generator, an optional tolerance override,
and the exponent of the power suite, registered in
:data:`pjbv.report.suites`. Every check draws its probes from the
generator, so a seed always gives the same report.

.. autofunction:: pjbv.report.run_suite

"""
import logging
from typing import Callable, Optional

import numpy as np

from pjbv.calculus import (
    interval_stats, measure_extension_defect, partition_osc_sum,
    poincare_quotient, quadrature_stats, quotient_map
)
from pjbv.report.model import CheckResult, InputError
from pjbv.rigidity import (
    exponent_equation_solve, exponent_gap, fit_taylor, lemma_residual,
    ode_family_check, one_sided_bound, phi, power_quotient,
    rigidity_defect, taylor_expansion_check
)
from pjbv.signals import (
    Exponential, Interval, Jump, Polynomial, Power, generate_family,
    generate_sampled
)
from pjbv.util import (
    EXACT_TOL, JUMP_QUOTIENT, ORACLE_TOL, QUARTER, Registry, Seed, get_rng,
    register
)


# Names available for import.
__all__ = ['run_suite', 'suites']


# Typing.
Suite = Callable[
    [np.random.Generator, Optional[float], float],
    list[CheckResult]
]


log = logging.getLogger(__name__)


# Registry.
suites: Registry[Suite] = dict()


# Utility functions.
def _intervals(
    rng: np.random.Generator,
    domain: Interval,
    n: int,
    shortest: float = 1e-2
) -> list[Interval]:
    out = []
    while len(out) < n:
        a, b = np.sort(rng.uniform(domain.lo, domain.hi, 2))
        if b - a >= shortest * domain.length:
            out.append(Interval(a, b))
    return out


def _probes(
    rng: np.random.Generator,
    left: tuple[float, float],
    right: tuple[float, float],
    n: int
) -> list[tuple[float, float]]:
    xs = rng.uniform(*left, n)
    ys = rng.uniform(*right, n)
    return [(float(x), float(y)) for x, y in zip(xs, ys)]


def _relative(value: float, reference: float) -> float:
    return abs(value - reference) / max(1.0, abs(reference))


def _seed(rng: np.random.Generator) -> int:
    return int(rng.integers(2 ** 32))


# Suites.
@register(suites, 'affine')
def affine_suite(
    rng: np.random.Generator,
    tol: Optional[float],
    s: float
) -> list[CheckResult]:
    """Affine signals meet every identity exactly."""
    tol = tol or 1e-10
    signals = [
        generate_family('random_affine', _seed(rng)) for _ in range(20)
    ]

    gaps, lemma, bound, defect = [], [], [], []
    for f in signals:
        for interval in _intervals(rng, f.domain, 10):
            q = poincare_quotient(f, interval)
            gaps.append(abs(q - QUARTER))
            split = rng.uniform(*interval.astuple())
            defect.append(measure_extension_defect(f, interval, split))
        probes = _probes(rng, (0.1, 0.4), (0.6, 0.9), 5)
        lemma.append(lemma_residual(f, probes).max_identity_residual)
        bound.append(max(0.0, one_sided_bound(f, probes)))

    n = len(gaps)
    return [
        CheckResult.judge('affine_quotient', n, max(gaps), tol),
        CheckResult.judge('affine_lemma', 5 * len(signals), max(lemma), tol),
        CheckResult.judge(
            'affine_one_sided', 5 * len(signals), max(bound), tol
        ),
        CheckResult.judge('affine_measure', n, max(defect), tol),
    ]


@register(suites, 'power')
def power_suite(
    rng: np.random.Generator,
    tol: Optional[float],
    s: float
) -> list[CheckResult]:
    """Check that x**s on (0, 1) meets the quarter identity when s is
    1 and misses it otherwise. The closed form quotient is checked
    against the exact functionals.
    """
    tol = tol or 1e-10
    f = Power(s, domain=(0.0, 1.0))
    closed = power_quotient(s)
    exact = poincare_quotient(f, f.domain)
    gap = phi(s, 0.0, 1.0)
    criterion = 'below' if abs(s - 1) <= tol else 'above'
    return [
        CheckResult.judge(
            'power_closed_form', 1, abs(closed - (exact or 0.0)), 1e-9,
            quotient=closed, exact=exact,
        ),
        CheckResult.judge(
            'power_phi', 1, abs(gap), tol, criterion,
            exponent=s, phi=gap, quotient=closed,
            solution=abs(gap) <= tol,
        ),
    ]


@register(suites, 'exponent')
def exponent_suite(
    rng: np.random.Generator,
    tol: Optional[float],
    s: float
) -> list[CheckResult]:
    """The exponent equation has a root at 1 and none at 5/2."""
    tol = tol or 1e-10
    roots = exponent_equation_solve(0.5, 4.0, tol * 1e-2)
    unit = min(abs(r - 1.0) for r in roots) if roots else np.inf
    gap = exponent_gap(2.5)
    return [
        CheckResult.judge('exponent_unit_root', 1, unit, tol, roots=roots),
        CheckResult.judge(
            'exponent_excludes_five_halves', 1, abs(gap), 0.01, 'above',
            gap=gap, roots=roots,
        ),
    ]


@register(suites, 'lemma')
def lemma_suite(
    rng: np.random.Generator,
    tol: Optional[float],
    s: float
) -> list[CheckResult]:
    """Central differences of the oscillation match the one-sided
    derivative expressions, and the match improves as the step
    halves.
    """
    tol = tol or ORACLE_TOL
    cases = [
        ('square', Polynomial([0.0, 0.0, 1.0], domain=(0.5, 2.0)),
         (0.6, 1.1), (1.4, 1.9)),
        ('exp', Exponential(domain=(0.0, 1.0)), (0.05, 0.4), (0.6, 0.95)),
        ('five_halves', Power(2.5, domain=(0.1, 2.0)),
         (0.2, 0.9), (1.2, 1.9)),
    ]
    out = []
    for name, f, left, right in cases:
        probes = _probes(rng, left, right, 10)
        coarse = lemma_residual(f, probes, 1e-4).max_residual
        fine = lemma_residual(f, probes, 5e-5).max_residual
        out.append(CheckResult.judge(
            f'lemma_{name}', len(probes), coarse, tol,
            identity=lemma_residual(f, probes).max_identity_residual,
        ))
        out.append(CheckResult.judge(
            f'lemma_{name}_convergence', len(probes), coarse / fine, 3.5,
            'above', coarse=coarse, fine=fine,
        ))
    return out


@register(suites, 'taylor')
def taylor_suite(
    rng: np.random.Generator,
    tol: Optional[float],
    s: float
) -> list[CheckResult]:
    """Small window expansions of x**2 at 1 and the rigidity defect
    of x**3 and of x**(5/2).
    """
    square = Polynomial([0.0, 0.0, 1.0], domain=(0.0, 2.0))
    report = taylor_expansion_check(square, 1.0, [0.2, 0.1, 0.05])
    rho = report.rho[-1] / report.eps[-1] ** 2

    cube = Polynomial([0.0, 0.0, 0.0, 1.0], domain=(0.0, 2.0))
    cubic_defect = rigidity_defect(fit_taylor(cube, 1.0))

    f = Power(2.5, domain=(0.1, 2.0))
    centers = rng.uniform(0.3, 1.8, 20)
    family = [abs(rigidity_defect(fit_taylor(f, x0))) for x0 in centers]

    return [
        CheckResult.judge(
            'taylor_rho', 1, abs(rho * 6 - 1), tol or 0.02,
            rho_over_eps2=rho, rho_limit=report.rho_limit,
        ),
        CheckResult.judge(
            'taylor_cubic', 1, abs(report.cubic_limit * 36 - 1),
            tol or 0.05, cubic_limit=report.cubic_limit,
        ),
        CheckResult.judge(
            'taylor_defect_cube', 1, abs(cubic_defect - 9), tol or 1e-6,
            defect=cubic_defect,
        ),
        CheckResult.judge(
            'taylor_defect_family', len(family), max(family), tol or 1e-8
        ),
    ]


@register(suites, 'ode')
def ode_suite(
    rng: np.random.Generator,
    tol: Optional[float],
    s: float
) -> list[CheckResult]:
    """The powers A |x - B|**(3/2) solve 3 g g'' = (g')**2."""
    tol = tol or 1e-10
    residuals = []
    for _ in range(10):
        A = rng.uniform(0.5, 2.0)
        B = rng.uniform(-1.0, 1.0)
        if rng.random() < 0.5:
            interval = (B + 0.5, B + 2.0)
        else:
            interval = (B - 2.0, B - 0.5)
        residuals.append(ode_family_check(A, B, interval))
    return [CheckResult.judge('ode_family', 1000, max(residuals), tol)]


@register(suites, 'measure')
def measure_suite(
    rng: np.random.Generator,
    tol: Optional[float],
    s: float
) -> list[CheckResult]:
    """Oscillation is additive over splits for affine signals and
    isn't for x**2.
    """
    f = generate_family('random_affine', _seed(rng))
    splits = rng.uniform(0.05, 0.95, 20)
    affine = [measure_extension_defect(f, (0, 1), x) for x in splits]
    mesh = [
        abs(partition_osc_sum(f, (0, 1), m) - abs(f.slope) / 4)
        for m in (0.5, 0.1, 0.01)
    ]

    square = Polynomial([0.0, 0.0, 1.0], domain=(-1.0, 1.0))
    defect = measure_extension_defect(square, (-1, 1), 0.0)
    return [
        CheckResult.judge(
            'measure_affine', len(splits), max(affine), tol or EXACT_TOL
        ),
        CheckResult.judge(
            'measure_partition_affine', len(mesh), max(mesh),
            tol or EXACT_TOL,
        ),
        CheckResult.judge(
            'measure_square', 1, abs(defect - 0.2566), tol or 1e-3,
            defect=defect,
        ),
    ]


@register(suites, 'poincare')
def poincare_suite(
    rng: np.random.Generator,
    tol: Optional[float],
    s: float
) -> list[CheckResult]:
    """The oscillation is at most half the variation, jumps reach the
    bound, and nothing but affine signals keeps a quarter at every
    scale.
    """
    tol = tol or EXACT_TOL
    excess = []
    for i in range(500):
        mode = 'pl' if i % 2 == 0 else 'pc'
        f = generate_sampled(_seed(rng), mode=mode)
        for interval in _intervals(rng, f.domain, 5):
            stats = interval_stats(f, interval)
            excess.append(stats.oscillation - stats.total_variation / 2)

    centered = poincare_quotient(Jump(0.5, 0.0, 1.0), (0, 1))
    ts = rng.uniform(0.05, 0.95, 10)
    offcenter = [
        abs(poincare_quotient(Jump(t, 0.0, 1.0), (0, 1)) - 2 * t * (1 - t))
        for t in ts
    ]

    kinds = [
        'random_centered_jump', 'random_offcenter_jump',
        'random_monotone_polynomial', 'random_piecewise_affine',
    ]
    spread = []
    for i in range(50):
        f = generate_family(kinds[i % len(kinds)], _seed(rng))
        qmap = quotient_map(f, [0.25, 0.5, 1.0], 0.125)
        gaps = [
            abs(e.quotient - QUARTER)
            for e in qmap.entries if e.quotient is not None
        ]
        spread.append(max(gaps))

    return [
        CheckResult.judge(
            'poincare_bound', len(excess), max(0.0, max(excess)), tol
        ),
        CheckResult.judge(
            'poincare_centered_jump', 1,
            abs((centered or 0.0) - JUMP_QUOTIENT), tol,
        ),
        CheckResult.judge(
            'poincare_offcenter_jump', len(ts), max(offcenter), tol
        ),
        CheckResult.judge(
            'poincare_not_affine', len(spread), min(spread), 1e-3, 'above'
        ),
    ]


@register(suites, 'oracle')
def oracle_suite(
    rng: np.random.Generator,
    tol: Optional[float],
    s: float
) -> list[CheckResult]:
    """The exact functionals agree with dense quadrature."""
    tol = tol or ORACLE_TOL
    gaps = []
    for _ in range(100):
        f = generate_sampled(_seed(rng))
        for interval in _intervals(rng, f.domain, 1, 0.1):
            exact = interval_stats(f, interval)
            brute = quadrature_stats(f, interval)
            gaps.extend([
                _relative(exact.mean, brute.mean),
                _relative(exact.oscillation, brute.oscillation),
                _relative(exact.total_variation, brute.total_variation),
            ])
    return [
        CheckResult.judge('oracle_agreement', len(gaps) // 3, max(gaps), tol)
    ]


# Public functions.
def run_suite(
    name: str,
    seed: Seed = 0,
    tol: Optional[float] = None,
    s: float = 2.5
) -> list[CheckResult]:
    """Run a verification suite.

    :param name: The name of the suite, or 'all' to run every suite.
    :param seed: (Optional.) The seed of the probes. Each suite draws
        from its own generator built from the seed, so a suite gives
        the same results alone or as part of 'all'.
    :param tol: (Optional.) Replaces the tolerance of every check.
    :param s: (Optional.) The exponent of the power suite.
    :return: A :class:`list` of :class:`CheckResult` objects.
    :rtype: list
    """
    if name == 'all':
        names = list(suites)
    elif name in suites:
        names = [name]
    else:
        msg = f'Unknown suite: {name}.'
        raise InputError(msg, field='--suite')

    results = []
    for key in names:
        found = suites[key](get_rng(seed), tol, s)
        failed = [r.check for r in found if not r.passed]
        log.info('Suite %s: %d checks, failed %s.', key, len(found), failed)
        results.extend(found)
    return results
