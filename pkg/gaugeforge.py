#####################################################################
#
# Entry script of gaugeforge: null Lagrangians, gauge functions and
# the forces and nonlinearities they generate in one-dimensional
# oscillators.
#
#   python gaugeforge.py derive --gauge "c1*x*t"
#   python gaugeforge.py catalog --verify
#   python gaugeforge.py simulate --system duffing --x0 1 --v0 0 \
#                                 --t0 0 --t1 50 --dt 0.001 --out out/duffing.csv
#   python gaugeforge.py action-check --gauge "x^2*t" --system duffing
#   python gaugeforge.py roundtrip
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

import sys

from lib.cli import run

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
