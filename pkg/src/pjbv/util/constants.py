"""
constants
~~~~~~~~~

Common constants used in :mod:`pjbv`.
"""
# Exportable names.
__all__ = [
    'CLASSIFY_TOL', 'EXACT_TOL', 'EXPONENT_GRID', 'FIT_COND_LIMIT',
    'FIT_PROBES', 'HALFWIDTH_RATIO', 'JUMP_QUOTIENT', 'MIN_SCALES',
    'ORACLE_SUBDIVISIONS', 'ORACLE_TOL', 'QUARTER',
]

# Reference quotients.
QUARTER = 0.25
JUMP_QUOTIENT = 0.5

# Tolerances. Exact paths are only subject to floating point noise,
# quadrature comparisons also carry discretization error.
EXACT_TOL = 1e-12
ORACLE_TOL = 1e-6
CLASSIFY_TOL = 1e-3

# Resolutions and limits.
ORACLE_SUBDIVISIONS = 100_000
EXPONENT_GRID = 10_000
FIT_PROBES = 201
FIT_COND_LIMIT = 1e12
HALFWIDTH_RATIO = 0.05
MIN_SCALES = 3
