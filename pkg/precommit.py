#! .venv/bin/python
"""
precommit
~~~~~~~~~

Checks to run on pjbv before committing changes to the repo.
"""
import configparser
import doctest
import glob
import importlib
import os
import sys
from fnmatch import fnmatch
from itertools import zip_longest
from textwrap import wrap

import mypy.api
import pycodestyle as pcs
import pytest
import rstcheck_core.checker as rstchecker


# Script configuration.
CONFIG_FILE = 'setup.cfg'
PACKAGE = 'pjbv'


def get_config(filepath):
    """Pull configuration settings from the configuration file."""
    config = configparser.ConfigParser()
    with open(filepath) as fh:
        config.read_file(fh)
    return config['precommit']


def get_list(config, key):
    """Split a multiline configuration value into its entries."""
    if key not in config:
        return []
    return [line.strip() for line in config[key].split('\n') if line.strip()]


# Precommit checks.
def check_doctests(names):
    """Run the examples in the docstrings of the given modules.
    Returns the number of failed examples.
    """
    print('Running doctests...')
    failed = 0
    for name in names:
        mod = importlib.import_module(name)
        result = doctest.testmod(mod)
        if result.failed:
            print(f'  {name}: {result.failed} of {result.attempted} failed.')
        failed += result.failed
    print('Doctests complete.')
    return failed


def check_requirements():
    """Compare the installed packages with requirements.txt and offer
    to freeze them when they differ.
    """
    print('Checking requirements...')
    os.putenv('PIPENV_VERBOSITY', '-1')
    cmd = '.venv/bin/python -m pipenv requirements'
    current = wrap_lines(os.popen(cmd).readlines(), 35, '', '  ')
    with open('requirements.txt') as fh:
        old = wrap_lines(fh.readlines(), 35, '', '  ')

    if current != old:
        print('requirements.txt out of date.')
        print()
        tmp = '{:<35} {:<35}'
        print(tmp.format('current', 'old'))
        print('─' * 70)
        for c, o in zip_longest(current, old, fillvalue=''):
            print(tmp.format(c, o))
        print()
        update = input('Update? [y/N]: ')
        if update.casefold() == 'y':
            os.system(f'{cmd} > requirements.txt')
    os.unsetenv('PIPENV_VERBOSITY')
    print('Requirements checked...')


def check_rst(file_paths, ignore):
    """Check the reStructuredText documents."""
    def action(files):
        results = []
        for file in files:
            with open(file) as fh:
                source = fh.read()
            for error in rstchecker.check_source(source):
                results.append(f'{file}: {error}')
        return results

    def result_handler(result):
        for line in result:
            print(' ' * 4 + line)

    run_check_on_files(
        'Checking RSTs', action, file_paths, ignore, '.rst', result_handler
    )


def check_style(file_paths, ignore):
    """Check the code against the style guide."""
    def result_handler(result):
        if result.get_count():
            for msg in result.result_messages:
                lines = wrap(msg, 78)
                print(' ' * 4 + lines[0])
                for line in lines[1:]:
                    print(' ' * 6 + line)
            result.result_messages = []

    class StyleReport(pcs.BaseReport):
        def __init__(self, *args, **kwargs):
            super().__init__(*args, **kwargs)
            self.result_messages = []

        def error(self, line_number, offset, text, check):
            super().error(line_number, offset, text, check)
            msg = f'{self.filename} {line_number}:{offset} {text}'
            self.result_messages.append(msg)

    style = pcs.StyleGuide(config_file=CONFIG_FILE, reporter=StyleReport)
    run_check_on_files(
        'Checking style', style.check_files, file_paths, ignore, '.py',
        result_handler
    )


def check_type_hints(path):
    """Check the type hinting."""
    print('Running type hinting check...')
    results = mypy.api.run([path, ])
    for report in results[:-1]:
        for p in report.split('\n'):
            for line in wrap(p, initial_indent='  ', subsequent_indent='    '):
                print(line)
    print('Type hint checks complete.')


def check_unit_tests(path):
    """Run the unit tests, leaving out the slow ones."""
    print('Running unit tests...')
    result = pytest.main(['--capture', 'fd', '-m', 'not slow', path])
    print('Unit tests complete.')
    return result


def check_venv():
    """Ensure this is running from the virtual environment of the
    repo.
    """
    expected = os.path.join(os.getcwd(), '.venv', 'bin', 'python')
    if sys.executable != expected:
        msg = (
            f'precommit run from unexpected python: {sys.executable}. '
            f'Run from {expected} instead.'
        )
        raise ValueError(msg)


def check_whitespace(file_paths, ignore):
    """Remove trailing whitespace."""
    run_check_on_files(
        'Checking whitespace', remove_whitespace, file_paths, ignore, '.py'
    )


# Utility functions.
def in_ignore(name, ignore):
    return any(fnmatch(name, item) for item in ignore)


def run_check_on_files(
    title, action, file_paths, ignore, file_ext=None, result_handler=None
):
    print(f'{title}...')
    result = None
    for file_path in file_paths:
        print(' ' * 2 + f'Checking {file_path}...', end='')
        files = glob.glob(file_path, recursive=True)
        if file_ext:
            files = [name for name in files if name.endswith(file_ext)]
        if ignore:
            files = [name for name in files if not in_ignore(name, ignore)]
        result = action(files)
        print('. Done.')
        if result and result_handler:
            result_handler(result)
    print(f'{title} complete.')
    return result


def remove_whitespace(filename):
    if isinstance(filename, (list, tuple)):
        for item in filename:
            remove_whitespace(item)
        return
    with open(filename) as fh:
        lines = [line.rstrip() + '\n' for line in fh.readlines()]
    with open(filename, 'w') as fh:
        fh.writelines(lines)


def wrap_lines(lines, width, initial_indent, subsequent_indent):
    """Perform word wrapping on a sequence of lines of text."""
    out = []
    for line in lines:
        out.extend(wrap(
            line.rstrip('\n'),
            width=width,
            initial_indent=initial_indent,
            subsequent_indent=subsequent_indent,
        ))
    return out


def main():
    # Files git ignores aren't checked.
    ignore = []
    if os.path.exists('.gitignore'):
        with open('.gitignore') as fh:
            ignore = [line.strip() for line in fh if line.strip()]

    config = get_config(CONFIG_FILE)
    doctest_modules = get_list(config, 'doctest_modules')
    python_files = get_list(config, 'python_files')
    rst_files = get_list(config, 'rst_files')

    check_venv()
    check_whitespace(python_files, ignore)
    result = check_unit_tests(config['unit_tests'])

    # Only continue when the unit tests pass.
    if result != pytest.ExitCode.OK:
        print('Unit tests failed. Precommit checks aborted. Do not commit.')
        return
    check_requirements()
    if check_doctests(doctest_modules):
        print('Doctests failed. Do not commit.')
    check_style(python_files, ignore)
    check_rst(rst_files, ignore)
    check_type_hints(f'src/{PACKAGE}')


if __name__ == '__main__':
    main()
