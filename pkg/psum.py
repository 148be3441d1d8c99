#!/usr/bin/env python3
# --------------------------------------------------------------------
# Copyright (C) the PowerSums contributors 2026
#
# You are free to use, redistribute, or even print and eat a copy of
# this software so long as you include this copyright notice.
# --------------------------------------------------------------------
# PowerSums :: Command Line App :: Launcher
#
# This is the main entry point into the psum CLI.
from powersums import cli

import sys

def main(argv = None):
    cli.main(argv or sys.argv)

if __name__ == "__main__":
    cli.main(sys.argv)
