#####################################################################
#
# This script writes integrated trajectories to CSV files and reads
# them back.
#
# Columns are t, x, v and, when an energy expression is given, E.
# Values are written with 17 significant digits so a file reads back
# to the exact doubles that were integrated, and identical runs give
# byte-identical files.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

import argparse
import os
import sys

import numpy as np

from lib.dynamics import Trajectory


def trajectory_columns(traj, energy=None, binding=None):
    """
    Stack the trajectory (and optionally its energy) into columns.

    :param traj: Trajectory
    :param energy: Optional expression over (t, x, xdot) evaluated at every sample
    :param binding: Parameter values for `energy`
    :return: (header, 2-D array)
    """
    columns = [traj.times, traj.x, traj.v]
    header = 't,x,v'
    if energy is not None:
        columns.append(traj.evaluate(energy, binding))
        header += ',E'
    return header, np.column_stack(columns)


def write_trajectory(traj, filepath, energy=None, binding=None):
    """
    Write a trajectory as CSV with a `t,x,v[,E]` header line.

    :param traj: Trajectory
    :param filepath: Output path, '-' for standard output
    :param energy: Optional energy expression for the E column
    :param binding: Parameter values for `energy`
    """
    header, data = trajectory_columns(traj, energy, binding)
    if filepath == '-':
        np.savetxt(sys.stdout, data, fmt='%.17g', delimiter=',', header=header, comments='')
        return

    # Create the directory holding the file
    directory = os.path.dirname(filepath)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)

    np.savetxt(filepath, data, fmt='%.17g', delimiter=',', header=header, comments='')
    print(f"Trajectory file written to: {filepath}")


def read_trajectory(filepath, dt=None):
    """
    Read a CSV written by write_trajectory.

    :param filepath: CSV path
    :param dt: Nominal step; taken from the first two samples when omitted
    :return: (Trajectory, energy column or None)
    """
    data = np.loadtxt(filepath, delimiter=',', skiprows=1, ndmin=2)
    times = data[:, 0]
    if dt is None:
        dt = float(times[1] - times[0]) if len(times) > 1 else 0.0
    steps = np.diff(times)
    uniform = bool(len(steps) == 0 or np.allclose(steps, steps[0], rtol=1e-9, atol=0.0))
    energy = data[:, 3] if data.shape[1] > 3 else None
    return Trajectory(times, data[:, 1], data[:, 2], dt, 'rk4', uniform), energy


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Summarise a trajectory CSV written by gaugeforge")
    parser.add_argument('filepath', help="CSV file")
    parser.add_argument('--dt', type=float, default=None, help="Nominal step (default: first sample spacing)")
    args = parser.parse_args()

    traj, energy = read_trajectory(args.filepath, args.dt)
    print(f"{len(traj)} samples on [{traj.t0:g}, {traj.t1:g}], dt = {traj.dt:g}"
          f"{'' if traj.uniform else ' (last step shortened)'}")
    print(f"x in [{traj.x.min():.6g}, {traj.x.max():.6g}], v in [{traj.v.min():.6g}, {traj.v.max():.6g}]")
    if energy is not None:
        print(f"E in [{energy.min():.12g}, {energy.max():.12g}]")

# Example command, run from the repository root:
# python -m lib.write_trajectory out/duffing.csv
