#!/usr/bin/env python3
# --------------------------------------------------------------------
# Copyright (C) the PowerSums contributors 2026
#
# You are free to use, redistribute, or even print and eat a copy of
# this software so long as you include this copyright notice.
# --------------------------------------------------------------------

"""
PowerSums computes sums of powers of integers, 1^k + 2^k + ... + n^k, and
of arithmetic progressions, by many independent exact routes (recurrences,
determinants, partition sums, Chebyshev derivatives, polynomial operators
and formal series) and cross-checks them against direct summation.

Everything is exact: values are ints or fractions.Fraction, never float.
"""
from .version import *          # noqa: F401, F403

from .sumenv import PowerSumEnv  # noqa: F401
from .sumexcept import PowerSumException  # noqa: F401
