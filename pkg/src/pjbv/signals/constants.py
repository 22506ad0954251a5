"""
constants
---------

Constants used by :mod:`pjbv.signals`.
"""
# Interpolation modes for sampled signals.
PL = 'piecewise-linear'
PC = 'piecewise-constant'
MODES = {
    'pl': PL,
    'pc': PC,
    PL: PL,
    PC: PC,
}

# Defaults for generated signals.
DEFAULT_DOMAIN = (0.0, 1.0)
POWER_DOMAIN = (0.1, 2.0)
SAMPLED_POINTS = 64
