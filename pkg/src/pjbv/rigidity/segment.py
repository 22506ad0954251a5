"""
Segmentation
------------

Split the domain of a signal into affine, constant, jump, and other
segments from its quotient map.

A window center is affine when the quotient is a quarter at every
scale, constant when there is no variation at any scale, and other
otherwise. Jumps are points where the quotient reaches a half at the
two finest scales. Centers become runs, jumps are cut into the runs,
short transitions between classified runs are split between their
neighbors, a jump takes in the flat runs beside it up to the nearest
break of the signal, and neighbors with matching fits are merged.

.. autofunction:: pjbv.rigidity.classify_segments

"""
import logging
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
from scipy.optimize import minimize_scalar

from pjbv.calculus import (
    QuotientMap, interval_mean, poincare_quotient, total_variation
)
from pjbv.rigidity.model import (
    AFFINE, CONSTANT, JUMP, OTHER, EmptyMap, Segment, SegmentationReport
)
from pjbv.signals import Interval, Signal
from pjbv.util import (
    CLASSIFY_TOL, FIT_PROBES, JUMP_QUOTIENT, MIN_SCALES, QUARTER
)


# Names available for import.
__all__ = ['classify_segments']


log = logging.getLogger(__name__)


# Quotients below this never refine into a jump. A unit step a
# quarter of the way into a window gives 2 * 1/4 * 3/4.
CANDIDATE_QUOTIENT = 0.375


@dataclass
class _Run:
    """Consecutive centers with one label, and the span of those that
    were classified rather than filled in from a neighbor.
    """
    kind: str
    lo: float
    hi: float
    core: Optional[tuple[float, float]] = None
    location: Optional[float] = None

    @property
    def width(self) -> float:
        return self.hi - self.lo


# Center labels.
def _label_centers(
    qmap: QuotientMap,
    tol: float,
    min_scales: int
) -> tuple[list[str], list[bool]]:
    quotient = qmap.grid('quotient')
    variation = qmap.grid('tv')
    exists = ~np.isnan(variation)
    counts = exists.sum(axis=0)
    need = min(min_scales, int(counts.max()))

    labels: list[Optional[str]] = []
    for j in range(len(qmap.positions)):
        col = exists[:, j]
        if counts[j] < need:
            labels.append(None)
            continue
        tv, q = variation[col, j], quotient[col, j]
        if np.all(tv == 0):
            labels.append(CONSTANT)
        elif np.all(tv > 0) and np.all(np.abs(q - QUARTER) <= tol):
            labels.append(AFFINE)
        else:
            labels.append(OTHER)

    # Centers without enough windows take the nearest label.
    verified = [label is not None for label in labels]
    known = np.nonzero(verified)[0]
    filled = []
    for j, label in enumerate(labels):
        if label is None:
            label = labels[known[np.argmin(np.abs(known - j))]]
        filled.append(label)
    return filled, verified                                 # type: ignore


def _runs(
    labels: list[str],
    verified: list[bool],
    positions: tuple[float, ...],
    domain: Interval
) -> list[_Run]:
    runs: list[_Run] = []
    start = 0
    for j in range(1, len(labels) + 1):
        if j < len(labels) and labels[j] == labels[start]:
            continue
        lo = domain.lo if start == 0 else runs[-1].hi
        if j < len(labels):
            hi = (positions[j - 1] + positions[j]) / 2
        else:
            hi = domain.hi
        checked = [positions[k] for k in range(start, j) if verified[k]]
        core = (checked[0], checked[-1]) if checked else None
        runs.append(_Run(labels[start], lo, hi, core))
        start = j
    return runs


# Jumps.
def _find_jumps(f: Signal, qmap: QuotientMap, tol: float) -> list[float]:
    order = np.argsort(qmap.scales)
    finest = [qmap.scales[i] for i in order[:2]]
    row = qmap.grid('quotient')[order[0]]
    row = np.where(np.isnan(row), -np.inf, row)
    padded = np.concatenate(([-np.inf], row, [-np.inf]))
    peaks = (
        (row >= CANDIDATE_QUOTIENT)
        & (row >= padded[:-2])
        & (row >= padded[2:])
    )

    domain = f.domain
    stride = qmap.stride
    s0 = finest[0]

    def negative_quotient(c: float) -> float:
        q = poincare_quotient(f, Interval.around(c, s0))
        return -(q or 0.0)

    jumps: list[float] = []
    for j in np.nonzero(peaks)[0]:
        center = qmap.positions[j]
        lo = max(center - stride, domain.lo + s0 / 2)
        hi = min(center + stride, domain.hi - s0 / 2)
        if lo < hi:
            result = minimize_scalar(
                negative_quotient,
                bounds=(lo, hi),
                method='bounded',
                options={'xatol': 1e-10 * domain.length},
            )
            point = float(result.x)
        else:
            point = center
        if not _is_jump(f, point, finest, tol):
            continue
        if jumps and point - jumps[-1] <= stride:
            continue
        log.debug('Jump refined from center %s to %s.', center, point)
        jumps.append(point)
    return jumps


def _is_jump(
    f: Signal,
    point: float,
    scales: list[float],
    tol: float
) -> bool:
    for scale in scales:
        window = Interval.around(point, scale)
        if not f.domain.covers(window):
            return False
        q = poincare_quotient(f, window)
        if q is None or q < JUMP_QUOTIENT - tol:
            return False
    return True


def _place_jumps(
    runs: list[_Run],
    jumps: list[float],
    stride: float,
    limit: float
) -> list[_Run]:
    half = stride / 2
    for point in jumps:
        k = next(
            (i for i, r in enumerate(runs) if r.lo <= point < r.hi),
            len(runs) - 1
        )
        run = runs[k]
        lo = max(point - half, run.lo)
        hi = min(point + half, run.hi)
        jump = _Run(JUMP, lo, hi, location=point)

        # A short transition run around the jump is handed to the
        # classified runs on either side.
        left_kind = right_kind = run.kind
        if run.kind == OTHER and run.width <= limit:
            if k > 0 and runs[k - 1].kind in (AFFINE, CONSTANT):
                left_kind = runs[k - 1].kind
            if k < len(runs) - 1 and runs[k + 1].kind in (AFFINE, CONSTANT):
                right_kind = runs[k + 1].kind

        parts = []
        if lo > run.lo:
            if left_kind != run.kind:
                runs[k - 1].hi = lo
            else:
                parts.append(replace(run, hi=lo))
        parts.append(jump)
        if hi < run.hi:
            if right_kind != run.kind:
                runs[k + 1].lo = hi
            else:
                parts.append(replace(run, lo=hi))
        runs[k:k + 1] = parts
    return runs


def _close_transitions(runs: list[_Run], limit: float) -> list[_Run]:
    classified = (AFFINE, CONSTANT)
    k = 1
    while k < len(runs) - 1:
        left, run, right = runs[k - 1:k + 2]
        if (
            run.kind == OTHER
            and run.width <= limit
            and left.kind in classified
            and right.kind in classified
        ):
            middle = (run.lo + run.hi) / 2
            left.hi = middle
            right.lo = middle
            del runs[k]
            continue
        k += 1
    return runs


def _absorb_flanks(
    f: Signal,
    runs: list[_Run],
    slack: float
) -> list[_Run]:
    dust = 1e-9 * f.domain.length
    breaks = np.union1d(f.breakpoints(), f.domain.astuple())
    k = 0
    while k < len(runs):
        run = runs[k]
        if run.kind != JUMP:
            k += 1
            continue

        # A flat run beside a jump is part of the jump up to the
        # nearest break of the signal on that side.
        if k > 0 and runs[k - 1].kind == CONSTANT:
            flank = runs[k - 1]
            below = breaks[breaks < run.lo - dust]
            edge = max(below.max(), flank.lo) if below.size else flank.lo
            if edge - flank.lo <= slack:
                run.lo = flank.lo
                del runs[k - 1]
                k -= 1
            else:
                flank.hi = run.lo = edge
        if k < len(runs) - 1 and runs[k + 1].kind == CONSTANT:
            flank = runs[k + 1]
            above = breaks[breaks > run.hi + dust]
            edge = min(above.min(), flank.hi) if above.size else flank.hi
            if flank.hi - edge <= slack:
                run.hi = flank.hi
                del runs[k + 1]
            else:
                flank.lo = run.hi = edge
        log.debug('Jump at %s spans (%s, %s).', run.location, run.lo, run.hi)
        k += 1
    return runs


# Fitting.
def _deviation(
    f: Signal,
    qmap: QuotientMap,
    run: _Run
) -> Optional[float]:
    if run.kind == JUMP:
        order = np.argsort(qmap.scales)
        gaps = []
        for i in order[:2]:
            window = Interval.around(run.location, qmap.scales[i])
            if f.domain.covers(window):
                q = poincare_quotient(f, window)
                gaps.append(abs((q or 0.0) - JUMP_QUOTIENT))
        return max(gaps) if gaps else None

    dust = 1e-9 * f.domain.length
    gaps = []
    inside = False
    for entry in qmap.entries:
        window = entry.interval
        if window.lo < run.lo - dust or window.hi > run.hi + dust:
            continue
        inside = True
        if entry.quotient is None:
            continue
        reference = 0.0 if run.kind == CONSTANT else QUARTER
        gaps.append(abs(entry.quotient - reference))
    if not inside:
        return None
    return max(gaps) if gaps else 0.0


def _fit(f: Signal, qmap: QuotientMap, run: _Run) -> Segment:
    interval = Interval(run.lo, run.hi)
    span = interval
    if run.core is not None:
        reach = max(qmap.scales) / 2
        lo = max(run.lo, run.core[0] - reach)
        hi = min(run.hi, run.core[1] + reach)
        if lo < hi:
            span = Interval(lo, hi)

    params: dict[str, float]
    if run.kind == AFFINE:
        x = np.linspace(span.lo, span.hi, FIT_PROBES)
        slope, intercept = np.polyfit(x, f.value(x), 1)
        params = {'slope': float(slope), 'intercept': float(intercept)}
    elif run.kind == CONSTANT:
        params = {'value': interval_mean(f, span)}
    elif run.kind == JUMP:
        p = float(run.location)                             # type: ignore
        reach = min(qmap.scales) / 2
        left = Interval(max(f.domain.lo, p - reach), p)
        right = Interval(p, min(f.domain.hi, p + reach))
        params = {
            'location': p,
            'left': interval_mean(f, left),
            'right': interval_mean(f, right),
        }
    else:
        params = {
            'mean': interval_mean(f, interval),
            'tv': total_variation(f, interval),
        }
    return Segment(interval, run.kind, params, _deviation(f, qmap, run))


def _matches(a: Segment, b: Segment, tol: float) -> bool:
    if a.kind != b.kind or a.kind == JUMP:
        return False
    if a.kind == OTHER:
        return True
    for key in a.params:
        x, y = a.params[key], b.params[key]
        if abs(x - y) > tol * max(1.0, abs(x), abs(y)):
            return False
    return True


def _merge(
    f: Signal,
    qmap: QuotientMap,
    runs: list[_Run],
    tol: float
) -> list[Segment]:
    segments = [_fit(f, qmap, run) for run in runs]
    k = 1
    while k < len(runs):
        if _matches(segments[k - 1], segments[k], tol):
            left, right = runs[k - 1], runs[k]
            cores = [c for c in (left.core, right.core) if c is not None]
            core = None
            if cores:
                core = (cores[0][0], cores[-1][1])
            runs[k - 1] = _Run(left.kind, left.lo, right.hi, core)
            del runs[k]
            segments[k - 1] = _fit(f, qmap, runs[k - 1])
            del segments[k]
            log.debug(
                'Merged %s segments into (%s, %s).',
                left.kind, left.lo, right.hi
            )
            continue
        k += 1
    return segments


# Public functions.
def classify_segments(
    f: Signal,
    qmap: QuotientMap,
    tol: float = CLASSIFY_TOL,
    min_scales: int = MIN_SCALES
) -> SegmentationReport:
    """Partition the domain of a signal into classified segments.

    :param f: The signal.
    :param qmap: The quotient map of the signal.
    :param tol: (Optional.) How far a quotient can be from a quarter
        or a half and still count.
    :param min_scales: (Optional.) How many scales must agree before
        a center is classified. Centers with fewer windows take the
        label of the nearest classified center.
    :return: A :class:`SegmentationReport` object.
    :rtype: pjbv.rigidity.SegmentationReport

    Usage::

        >>> from pjbv.calculus import quotient_map
        >>> from pjbv.signals import Affine
        >>> f = Affine(2.0, 1.0, (0, 1))
        >>> qmap = quotient_map(f, [0.1, 0.2, 0.4], 0.025)
        >>> classify_segments(f, qmap).kinds
        ['affine']
    """
    if not len(qmap):
        raise EmptyMap('The quotient map has no windows.')

    limit = max(qmap.scales) + 2 * qmap.stride
    labels, verified = _label_centers(qmap, tol, min_scales)
    runs = _runs(labels, verified, qmap.positions, f.domain)
    jumps = _find_jumps(f, qmap, tol)
    runs = _place_jumps(runs, jumps, qmap.stride, limit)
    runs = _close_transitions(runs, limit)
    runs = _absorb_flanks(f, runs, 2 * qmap.stride)
    segments = _merge(f, qmap, runs, tol)
    log.debug(
        'Segmented into %d segments: %s.',
        len(segments), [s.kind for s in segments]
    )
    return SegmentationReport(tuple(segments))
