"""
common
~~~~~~

General purpose tools used in tests.
"""
import numpy as np

from pjbv.signals import Interval


# Utility functions.
def random_intervals(rng, domain, n, shortest=0.01):
    """Draw intervals inside a domain no shorter than a fraction of
    its length.
    """
    domain = Interval.coerce(domain)
    out = []
    while len(out) < n:
        a, b = np.sort(rng.uniform(domain.lo, domain.hi, 2))
        if b - a >= shortest * domain.length:
            out.append(Interval(a, b))
    return out


def write_csv(path, rows, header=None):
    """Write x,y rows to a CSV file for a reader test."""
    lines = [] if header is None else [header]
    lines.extend(f'{x!r},{y!r}' for x, y in rows)
    path.write_text('\n'.join(lines) + '\n')
    return path
