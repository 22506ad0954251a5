"""
pjbv
~~~~

Oscillation, variation, and rigidity of one dimensional signals.
"""
import pjbv.calculus as calculus
import pjbv.report as report
import pjbv.rigidity as rigidity
import pjbv.signals as signals
import pjbv.util as util
