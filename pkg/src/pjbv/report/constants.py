"""
constants
~~~~~~~~~

Common constants used in :mod:`pjbv.report`.
"""
# Report formats.
FORMATS = ('json', 'csv')

# Column order of CSV reports.
MAP_FIELDS = (
    'center', 'scale', 'lo', 'hi', 'mean', 'osc', 'tv', 'R', 'quotient',
)
SEGMENT_FIELDS = ('start', 'end', 'class', 'params', 'deviation')
CHECK_FIELDS = (
    'check', 'probes', 'max_residual', 'tolerance', 'passed', 'criterion',
)

# Exit codes.
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3
