#!/usr/bin/env python3
# --------------------------------------------------------------------
# Copyright (C) the PowerSums contributors 2026
#
# You are free to use, redistribute, or even print and eat a copy of
# this software so long as you include this copyright notice.
# --------------------------------------------------------------------

"""just keeper of current version"""

__version__ = '1.0.0'
