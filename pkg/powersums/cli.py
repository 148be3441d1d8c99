# --------------------------------------------------------------------
# Copyright (C) the PowerSums contributors 2026
#
# You are free to use, redistribute, or even print and eat a copy of
# this software so long as you include this copyright notice.
# --------------------------------------------------------------------
# PowerSums :: Command Line App :: Main Module
#
# psum is the command-line front end to the powersums package: it prints
# Faulhaber polynomials, single power sums by any route, Bernoulli
# numbers, progression sums, and the full cross-method verification.
#
# END USERS: see "README.md" or run "psum -h".
#
# DEVELOPERS: the routes live in powersum, chebyshev, bernoulli, series
# and arithprog; crosscheck ties them together. Commands are modules
# named <verb>_cmd under powersums/commands.

import os
import sys
import traceback

from . import commands
from . import sumexcept
from .commands import exceptions
from .sumenv import CONSOLE, STDERR

if "CPROF" in os.environ:
    import cProfile


EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def main(argv = None):
    if not argv:
        argv = sys.argv
    if sys.hexversion < 0x30900F0:
        raise SystemExit("Sorry: psum requires Python 3.9 or higher.")
    
    try:
        try:
            if "CPROF" in os.environ:
                cProfile.runctx("psum(argv)", globals(), {"argv": argv})
            else:
                psum(argv)
        except exceptions.UsageError as e:
            CONSOLE.print(str(e), markup=False, highlight=False, soft_wrap=True)
            sys.exit(EXIT_OK)
        except exceptions.CommandLineError as e:
            STDERR.print("{}: {}".format(argv[0], e), markup=False, highlight=False, soft_wrap=True)
            if 'EXCEPTIONS' in os.environ:
                raise e
            sys.exit(EXIT_USAGE)
        except sumexcept.PowerSumException as e:
            STDERR.print("{}: {}".format(argv[0], e), markup=False, highlight=False, soft_wrap=True)
            if 'EXCEPTIONS' in os.environ:
                raise e
            sys.exit(EXIT_FAILED)
    except (UnicodeEncodeError, UnicodeDecodeError):
        STDERR.print("ERROR: Unexpected unicode error in the wild!", markup=False)
        STDERR.print(traceback.format_exc(), markup=False, highlight=False, soft_wrap=True)
        STDERR.print(
            "You may be able to work around it by using the '-q' parameter "
            "or '--format json'.", markup=False,
        )
        sys.exit(EXIT_FAILED)


def psum(argv):
    """
    Parse the command line, run the command and render its results.
    """
    cmdIndex = commands.CommandIndex()
    cmdenv = cmdIndex.parse(argv)
    
    results = cmdenv.run()
    if results:
        results.render()
