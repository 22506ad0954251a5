"""
report
~~~~~~

Reading signals, writing reports, and the `pjbv` command line.


Basic Usage: Command Line
=========================
The command line reads a signal from a CSV file of samples or a JSON
descriptor, runs an analysis, and writes a JSON or CSV report::

    $ pjbv analyze --input samples.csv --scales 0.1,0.2
    $ pjbv segment --signal-json composite.json --scales 0.05,0.1,0.2
    $ pjbv verify --suite power --s 2.5

Logs go to standard error and never mix with the report.

.. automodule:: pjbv.report.reader
.. automodule:: pjbv.report.writer
.. automodule:: pjbv.report.checks
.. automodule:: pjbv.report.cli


Configuration
=============
.. autoclass:: pjbv.report.RunConfig
.. autoclass:: pjbv.report.CheckResult


Exceptions
==========
.. autoexception:: pjbv.report.InputError

"""
from pjbv.report.checks import run_suite, suites
from pjbv.report.cli import build_parser, main
from pjbv.report.model import CheckResult, InputError, RunConfig
from pjbv.report.reader import build_signal, read_csv, read_signal_json
from pjbv.report.writer import *
