import sys
from io import StringIO
from contextlib import contextmanager

from powersums import PowerSumEnv, cli

__all__ = ['psenv', 'captured_output', 'run_psum']

_DEBUG = 5
psenv = PowerSumEnv(debug=_DEBUG)

prog = "psum.py"

@contextmanager
def captured_output():
    new_out, new_err = StringIO(), StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    try:
        sys.stdout, sys.stderr = new_out, new_err
        yield sys.stdout, sys.stderr
    finally:
        sys.stdout, sys.stderr = old_out, old_err


def run_psum(*args):
    """
    Run the psum command line with args.
    Returns
    -------
    (exit code, stdout text, stderr text)
    """
    with captured_output() as (out, err):
        try:
            cli.main([prog, *args])
            code = 0
        except SystemExit as e:
            code = e.code
    return code, out.getvalue(), err.getvalue()
