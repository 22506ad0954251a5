"""
util
~~~~

Common utilities for the :mod:`pjbv` packages.

.. automodule:: pjbv.util.util
.. automodule:: pjbv.util.decorators

"""
from pjbv.util.constants import *
from pjbv.util.decorators import *
from pjbv.util.model import *
from pjbv.util.util import *
