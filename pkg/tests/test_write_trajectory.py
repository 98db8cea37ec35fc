import numpy as np
import pytest

from lib.catalog import lookup
from lib.dynamics import DynamicalSystem
from lib.mechanics import energy_function
from lib.write_trajectory import read_trajectory, trajectory_columns, write_trajectory


@pytest.fixture
def driven():
    system = lookup('driven-cos').system()
    return system, system.integrate(1.0, 0.0, 0.0, 1.0, 0.01)


def test_columns(driven):
    system, traj = driven
    header, data = trajectory_columns(traj)
    assert header == 't,x,v'
    assert data.shape == (101, 3)
    header, data = trajectory_columns(traj, energy_function(system.lagrangian()), system.binding)
    assert header == 't,x,v,E'
    assert data.shape == (101, 4)


def test_written_files_read_back_exactly(driven, tmp_path, capsys):
    system, traj = driven
    energy = energy_function(system.lagrangian())
    path = tmp_path / 'runs' / 'driven.csv'
    write_trajectory(traj, str(path), energy, system.binding)
    assert f"Trajectory file written to: {path}" in capsys.readouterr().out

    with open(path) as file:
        assert file.readline() == 't,x,v,E\n'
    loaded, column = read_trajectory(str(path))
    assert np.array_equal(loaded.times, traj.times)
    assert np.array_equal(loaded.x, traj.x)
    assert np.array_equal(loaded.v, traj.v)
    assert np.array_equal(column, traj.evaluate(energy, system.binding))
    assert loaded.dt == pytest.approx(0.01)
    assert loaded.uniform


def test_identical_runs_give_identical_bytes(tmp_path):
    paths = []
    for name in ('first.csv', 'second.csv'):
        traj = DynamicalSystem().integrate(1.0, 0.0, 0.0, 2.0, 0.1)
        paths.append(tmp_path / name)
        write_trajectory(traj, str(paths[-1]))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_standard_output(capsys):
    traj = DynamicalSystem().integrate(1.0, 0.0, 0.0, 0.3, 0.1)
    write_trajectory(traj, '-')
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 't,x,v'
    assert len(lines) == 5
    assert lines[1] == '0,1,0'


def test_shortened_last_step_reads_back_non_uniform(tmp_path):
    traj = DynamicalSystem().integrate(1.0, 0.0, 0.0, 1.0, 0.3)
    path = tmp_path / 'short.csv'
    write_trajectory(traj, str(path))
    loaded, column = read_trajectory(str(path), dt=0.3)
    assert column is None
    assert not loaded.uniform
    assert loaded.t1 == 1.0
    assert loaded.dt == 0.3
