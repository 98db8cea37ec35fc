#####################################################################
#
# Command line front end of gaugeforge.
#
#   derive        gauge function -> null Lagrangian, energy term, force
#   verify        Lagrangian -> Euler-Lagrange expression, null verdict
#   catalog       list, verify or export the catalog entries
#   simulate      integrate a catalog or inline system, write CSV,
#                 report energy drift and energy balance
#   action-check  compare the action of a null Lagrangian with the
#                 change of its gauge function along a trajectory
#   roundtrip     re-derive every catalog force and nonlinearity
#
# Exit codes: 0 success, 1 verification failure, 2 usage or parse
# error, 3 numeric or domain failure. Errors go to stderr as
# `error: <message>: <offending input>`.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

import argparse
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
import logging
import sys

from lib.catalog import FORCE, export_entries, list_entries, verify_entry
from lib.dynamics import energy_balance_check, energy_drift, verify_action_boundary
from lib.errors import ConfigError, GaugeForgeError, NestingDepthError, QuadratureError
from lib.evaluate import bind
from lib.mechanics import (GaugeFunction, Lagrangian, energy_from_gauge, energy_function,
                           euler_lagrange, force_from_gauge, is_null, null_from_gauge)
from lib.run_config import build_system, resolve_config
from lib.write_trajectory import write_trajectory

logger = logging.getLogger(__name__)

SUCCESS = 0
VERIFICATION_FAILED = 1
USAGE_ERROR = 2

ROUNDTRIP_HEADER = 'gaugeforge roundtrip: gauge function -> force (F) or nonlinearity (H), sign +1'


@contextmanager
def _echo(text):
    # attach the offending input to errors raised inside the block
    try:
        yield
    except GaugeForgeError as err:
        if getattr(err, 'input', None) is None:
            err.input = text
        raise
    except RecursionError:
        err = NestingDepthError('expression nested too deeply')
        err.input = text
        raise err from None


def _inputs(*texts):
    return ' / '.join(text for text in texts if text)


def _flags(args):
    keys = ('system', 'gauge', 'drive', 'lagrangian', 'sign', 'x0', 'v0', 't0', 't1', 'dt',
            'out', 'seed')
    flags = {key: getattr(args, key, None) for key in keys}
    flags['params'] = args.param or None
    return flags


def _config(args):
    return resolve_config(_flags(args), args.config)


def _show(label, e, binding):
    print(f"{label} = {bind(e, binding) if binding else e}")


def cmd_derive(args):
    config = _config(args)
    if not config.gauge:
        raise ConfigError('derive needs a gauge function: use --gauge EXPR')
    with _echo(config.gauge):
        phi = GaugeFunction(config.gauge)
        null = null_from_gauge(phi)
        _show('phi', phi.body, config.params)
        _show('L_n', null.body, config.params)
        _show('E_n', energy_from_gauge(phi), config.params)
        _show('F', force_from_gauge(phi, config.sign), config.params)
    return SUCCESS


def cmd_verify(args):
    config = _config(args)
    if not config.lagrangian:
        raise ConfigError('verify needs a Lagrangian: use --lagrangian EXPR')
    with _echo(config.lagrangian):
        lagrangian = Lagrangian(config.lagrangian)
        _show('L', lagrangian.body, config.params)
        _show('EL', euler_lagrange(lagrangian), config.params)
        null = is_null(bind(lagrangian.body, config.params), seed=config.seed)
    print(f"null: {'yes' if null else 'no'}")
    if args.expect_null and not null:
        return VERIFICATION_FAILED
    return SUCCESS


def _symbol(entry):
    return 'F' if entry.kind == FORCE else 'H'


def _verify_all(entries, jobs, seed):
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda entry: verify_entry(entry, seed=seed), entries))
    return [verify_entry(entry, seed=seed) for entry in entries]


def cmd_catalog(args):
    config = _config(args)
    entries = list_entries()
    if args.export:
        sys.stdout.write(export_entries(entries))
        return SUCCESS
    if not args.verify:
        for entry in entries:
            print(f"{entry.id:<16} {entry.kind:<13} phi = {entry.phi_text}  "
                  f"{_symbol(entry)} = {entry.declared_text}")
        return SUCCESS

    if args.jobs < 1:
        raise ConfigError(f"--jobs must be at least 1: {args.jobs}")
    reports = _verify_all(entries, args.jobs, config.seed)
    for report in reports:
        verdict = 'PASS' if report.passed else 'FAIL'
        print(f"{verdict} {report.entry.id}: {_symbol(report.entry)} = {report.force} "
              f"(max deviation {report.comparison.max_deviation:.3g}); {report.identification}")
        if report.comparison.diagnostic:
            print(f"    {report.comparison.diagnostic}")
    failed = sum(not report.passed for report in reports)
    print(f"{len(reports) - failed}/{len(reports)} entries verified")
    return VERIFICATION_FAILED if failed else SUCCESS


def cmd_simulate(args):
    config = _config(args).check_system(('gauge', 'lagrangian'))
    with _echo(_inputs(config.system, config.gauge, config.lagrangian)):
        system = build_system(config)
        lagrangian = system.lagrangian()
        ode = system.equation_of_motion()
        print(f"L = {lagrangian}")
        print(ode)
        traj = system.integrate(config.x0, config.v0, config.t0, config.t1, config.dt)
        if config.out:
            write_trajectory(traj, config.out, energy_function(lagrangian), system.binding)
        drift = energy_drift(lagrangian, traj, system.binding)
        balance = energy_balance_check(lagrangian, traj, system.binding)

    print(f"energy drift: {drift:.6g} over [{config.t0:g}, {config.t1:g}] with dt = {config.dt:g}")
    verdict = 'PASS' if balance.passed else 'FAIL'
    print(f"energy balance: {verdict} max mismatch {balance.max_mismatch:.3g} "
          f"at t = {balance.worst_time:.6g} (tolerance {balance.tolerance:.3g})")
    return SUCCESS if balance.passed else VERIFICATION_FAILED


def cmd_action_check(args):
    config = _config(args)
    if not config.gauge:
        raise ConfigError('action-check needs the gauge function to check: use --gauge EXPR')
    config.check_system(('drive', 'lagrangian'))
    with _echo(config.gauge):
        phi = GaugeFunction(config.gauge)
    with _echo(_inputs(config.system, config.drive, config.lagrangian)):
        system = build_system(config, inline_gauge='drive')
        traj = system.integrate(config.x0, config.v0, config.t0, config.t1, config.dt)
        if traj.intervals % 2:
            logger.warning('odd interval count %d, integrating again with dt = %g',
                           traj.intervals, config.dt / 2)
            traj = system.integrate(config.x0, config.v0, config.t0, config.t1, config.dt / 2)
    if traj.intervals % 2:
        raise QuadratureError(f"cannot reach an even interval count on [{config.t0:g}, {config.t1:g}]"
                              f" with dt = {config.dt:g}")

    binding = dict(system.binding)
    with _echo(config.gauge):
        report = verify_action_boundary(phi, traj, binding)
    print(f"action of the null Lagrangian: {report.action:.12g}")
    print(f"phi(t1) - phi(t0):             {report.boundary:.12g}")
    verdict = 'PASS' if report.passed else 'FAIL'
    print(f"{verdict} deviation {report.deviation:.3g} (tolerance {report.tolerance:.3g})")
    return SUCCESS if report.passed else VERIFICATION_FAILED


def roundtrip_lines(reports):
    """ Lines of the roundtrip report, header and footer included.
    """
    lines = [ROUNDTRIP_HEADER]
    for report in reports:
        entry = report.entry
        verdict = 'PASS' if report.passed else 'FAIL'
        lines.append(f"{verdict} | {entry.kind} | {entry.id} | phi = {entry.phi_text} | "
                     f"{_symbol(entry)} = {entry.declared_text} | {report.preferred or '-'}")
    passed = sum(report.passed for report in reports)
    lines.append(f"{passed}/{len(reports)} entries reproduced")
    return lines


def cmd_roundtrip(args):
    config = _config(args)
    reports = [verify_entry(entry, seed=config.seed) for entry in list_entries()]
    for line in roundtrip_lines(reports):
        print(line)
    return SUCCESS if all(report.passed for report in reports) else VERIFICATION_FAILED


def _add_common(parser):
    parser.add_argument('-v', '--verbose', action='store_true', help='Log progress to stderr')
    parser.add_argument('--config', help='INI file of run settings (key = value lines)')
    parser.add_argument('--seed', type=int, help='Seed of numeric comparisons (default 42)')
    parser.add_argument('--param', action='append', metavar='NAME=VALUE',
                        help='Parameter value, repeatable')


def _add_window(parser):
    parser.add_argument('--lagrangian', '--ls', dest='lagrangian',
                        help='Standard Lagrangian, default 0.5*xdot^2 - 0.5*x^2')
    parser.add_argument('--sign', help='Driving sign, +1 or -1 (default +1)')
    parser.add_argument('--x0', type=float, help='Initial position (default 1)')
    parser.add_argument('--v0', type=float, help='Initial velocity (default 0)')
    parser.add_argument('--t0', type=float, help='Start time (default 0)')
    parser.add_argument('--t1', type=float, help='End time (default 10)')
    parser.add_argument('--dt', type=float, help='Time step (default 0.001)')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='gaugeforge',
        description='Null Lagrangians, gauge functions and the forces they generate. '
                    'Expressions use x, t, xdot, xddot, + - * / ^ and sin, cos, tan, exp, ln, '
                    'sinh, cosh, tanh, sqrt; quote them for the shell, e.g. --gauge "x*F0*sin(t)".')
    commands = parser.add_subparsers(dest='command', required=True)

    derive = commands.add_parser('derive', help='Null Lagrangian, energy term and force of a gauge function')
    _add_common(derive)
    derive.add_argument('--gauge', help='Gauge function phi(x, t)')
    derive.add_argument('--sign', help='Driving sign, +1 or -1 (default +1)')
    derive.set_defaults(handler=cmd_derive)

    verify = commands.add_parser('verify', help='Euler-Lagrange expression and null verdict')
    _add_common(verify)
    verify.add_argument('--lagrangian', help='Lagrangian L(xdot, x, t)')
    verify.add_argument('--expect-null', action='store_true',
                        help='Exit 1 unless the Lagrangian is null')
    verify.set_defaults(handler=cmd_verify)

    catalog = commands.add_parser('catalog', help='List, verify or export catalog entries')
    _add_common(catalog)
    catalog.add_argument('--verify', action='store_true', help='Verify every entry')
    catalog.add_argument('--jobs', type=int, default=1, help='Entries verified in parallel')
    catalog.add_argument('--export', action='store_true', help='Print entries as structured text')
    catalog.set_defaults(handler=cmd_catalog)

    simulate = commands.add_parser('simulate', help='Integrate a driven or nonlinear oscillator')
    _add_common(simulate)
    simulate.add_argument('--system', help='Catalog entry id')
    simulate.add_argument('--gauge', help='Inline driving gauge function')
    _add_window(simulate)
    simulate.add_argument('--out', help="CSV output path, '-' for stdout")
    simulate.set_defaults(handler=cmd_simulate)

    action = commands.add_parser('action-check', help='Action of a null Lagrangian along a trajectory')
    _add_common(action)
    action.add_argument('--gauge', help='Gauge function whose null Lagrangian is integrated')
    action.add_argument('--system', help='Catalog entry id of the simulated system')
    action.add_argument('--drive', help='Inline driving gauge function of the simulated system')
    _add_window(action)
    action.set_defaults(handler=cmd_action_check)

    roundtrip = commands.add_parser('roundtrip', help='Re-derive every catalog force and nonlinearity')
    _add_common(roundtrip)
    roundtrip.set_defaults(handler=cmd_roundtrip)
    return parser


def run(argv=None):
    """ Run the command line.

    :param argv: Arguments without the program name, sys.argv[1:] by default
    :return: Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else USAGE_ERROR

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    try:
        return args.handler(args)
    except GaugeForgeError as err:
        offending = getattr(err, 'input', None)
        message = f"error: {err}: {offending}" if offending else f"error: {err}"
        print(message, file=sys.stderr)
        return err.exit_code
    except RecursionError:
        print('error: expression nested too deeply', file=sys.stderr)
        return USAGE_ERROR
