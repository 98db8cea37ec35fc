import os

import pytest

from lib.catalog import export_entries
from lib.cli import run

GOLDEN = os.path.join(os.path.dirname(__file__), 'golden', 'roundtrip.txt')


def lines(capsys):
    return capsys.readouterr().out.splitlines()


def test_derive(capsys):
    assert run(['derive', '--gauge', 'c1*x*t']) == 0
    out = lines(capsys)
    assert out[0] == 'phi = c1*x*t'
    assert out[1] == 'L_n = c1*x + c1*xdot*t'
    assert out[2] == 'E_n = -c1*x'
    assert out[3] == 'F = c1'


def test_derive_with_parameters_and_sign(capsys):
    assert run(['derive', '--gauge', 'x*F0*sin(t)', '--param', 'F0=2', '--sign', '-1']) == 0
    assert lines(capsys)[-1] == 'F = -2*cos(t)'


def test_parse_errors_exit_2_and_echo_the_input(capsys):
    assert run(['derive', '--gauge', 'x +']) == 2
    err = capsys.readouterr().err
    assert err.startswith('error: unexpected end of input at byte 3')
    assert err.endswith(': x +\n')


def test_out_of_range_numbers_exit_2(capsys):
    assert run(['derive', '--gauge', '1e999']) == 2
    err = capsys.readouterr().err
    assert err.startswith('error: number out of range at byte 0')
    assert err.endswith(': 1e999\n')


def test_long_sums_derive(capsys):
    assert run(['derive', '--gauge', '+'.join(['x*t'] * 600)]) == 0
    out = lines(capsys)
    assert out[1] == 'L_n = 600*x + 600*xdot*t'
    assert out[-1] == 'F = 600'


def test_deep_nesting_exits_2(capsys):
    text = '(' * 2000 + 'x' + ')' * 2000
    assert run(['derive', '--gauge', text]) == 2
    err = capsys.readouterr().err
    assert err.startswith('error: expression nested too deeply: ((')


def test_missing_arguments_exit_2(capsys):
    assert run(['derive']) == 2
    assert 'use --gauge' in capsys.readouterr().err
    assert run([]) == 2
    assert run(['transmogrify']) == 2
    assert run(['derive', '--gauge', 'x*t', '--sign', '3']) == 2


def test_verify(capsys):
    assert run(['verify', '--lagrangian', 'x*xdot + t', '--expect-null']) == 0
    assert lines(capsys)[-1] == 'null: yes'
    assert run(['verify', '--lagrangian', 'xdot^2/2 - x^2/2', '--expect-null']) == 1
    out = lines(capsys)
    assert 'EL = x + xddot' in out
    assert out[-1] == 'null: no'
    assert run(['verify', '--lagrangian', 'xdot^2/2 - x^2/2']) == 0


def test_verify_rejects_accelerations(capsys):
    assert run(['verify', '--lagrangian', 'x*xddot']) == 2
    assert capsys.readouterr().err.endswith(': x*xddot\n')


def test_catalog_listing(capsys):
    assert run(['catalog']) == 0
    out = lines(capsys)
    assert len(out) == 12
    assert out[6].split() == ['duffing', 'nonlinearity', 'phi', '=', '-1/4*eps*x^4*t', 'H', '=',
                              '-eps*x^3']


def test_catalog_export(capsys):
    assert run(['catalog', '--export']) == 0
    assert capsys.readouterr().out == export_entries()


@pytest.mark.parametrize('jobs', ['1', '4'])
def test_catalog_verify(jobs, capsys):
    assert run(['catalog', '--verify', '--jobs', jobs]) == 0
    out = lines(capsys)
    assert out[-1] == '12/12 entries verified'
    assert all(line.startswith('PASS ') for line in out[:-1])
    assert out[6].startswith('PASS duffing: H = -eps*x^3 (max deviation ')
    assert out[6].endswith('; g1: C[4,1] = -0.25*eps')


def test_catalog_verify_is_deterministic(capsys):
    run(['catalog', '--verify'])
    first = capsys.readouterr().out
    run(['catalog', '--verify', '--jobs', '3'])
    assert capsys.readouterr().out == first


def test_roundtrip_matches_golden_file(capsys):
    assert run(['roundtrip']) == 0
    with open(GOLDEN) as file:
        assert capsys.readouterr().out == file.read()


def test_simulate_writes_identical_files(tmp_path, capsys):
    outputs = []
    for name in ('a.csv', 'b.csv'):
        path = tmp_path / name
        assert run(['simulate', '--system', 'duffing', '--x0', '1', '--v0', '0', '--t0', '0',
                    '--t1', '2', '--dt', '0.001', '--out', str(path)]) == 0
        outputs.append(path.read_bytes())
    out = lines(capsys)
    assert outputs[0] == outputs[1]
    assert outputs[0].startswith(b't,x,v,E\n0,1,0,')
    assert out[0] == 'L = -0.5*x^2 + 0.5*xdot^2 - 0.25*eps*x^4'
    assert out[1] == 'xddot = -x - eps*x^3'
    assert out[-1].startswith('energy balance: PASS')


def test_simulate_from_a_config_file(tmp_path, capsys):
    config = tmp_path / 'driven.ini'
    config.write_text('[run]\ngauge = x*F0*sin(t)\nparams = F0=0.5\nt1 = 1\ndt = 0.01\n')
    assert run(['simulate', '--config', str(config)]) == 0
    out = lines(capsys)
    assert out[1] == 'xddot = -x + F0*cos(t)'
    assert out[-2].startswith('energy drift: ')


def test_simulate_needs_exactly_one_system(capsys):
    assert run(['simulate', '--system', 'duffing', '--gauge', 'x*t']) == 2
    assert run(['simulate']) == 2
    assert run(['simulate', '--system', 'van-der-pol']) == 2
    assert 'valid ids' in capsys.readouterr().err


def test_numeric_failures_exit_3(capsys):
    assert run(['simulate', '--lagrangian', 'xdot^2/2 - ln(x)', '--x0', '0', '--t1', '1']) == 3
    err = capsys.readouterr().err
    assert err.startswith('error: division by zero')
    assert 'at t = 0.0' in err
    assert err.endswith(': xdot^2/2 - ln(x)\n')


def test_action_check(capsys):
    assert run(['action-check', '--gauge', 'x^2*t', '--system', 'duffing', '--t1', '1']) == 0
    assert lines(capsys)[-1].startswith('PASS deviation ')
    assert run(['action-check', '--gauge', 'x*F0*sin(t)', '--drive', 'x*t', '--param', 'F0=1',
                '--t1', '0.9', '--dt', '0.3']) == 0
    assert lines(capsys)[-1].startswith('PASS')


def test_action_check_needs_a_gauge_and_a_system(capsys):
    assert run(['action-check', '--system', 'duffing']) == 2
    assert run(['action-check', '--gauge', 'x*t']) == 2
    assert run(['action-check', '--gauge', 'xdot', '--system', 'duffing']) == 2
    assert capsys.readouterr().err.splitlines()[-1].endswith(': xdot')
