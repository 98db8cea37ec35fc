import pytest

from lib import expression as ex
from lib.catalog import VERIFY_DOMAINS, list_entries
from lib.dynamics import equation_of_motion
from lib.errors import GaugeFunctionError, LagrangianError
from lib.evaluate import equal_numeric, fixed_domains
from lib.mechanics import (GaugeFunction, Lagrangian, Role, drive_with_gauge, energy_from_gauge,
                           energy_function, energy_split, euler_lagrange, force_from_gauge,
                           is_null, null_from_gauge, standard_oscillator, total_with_null)
from lib.parser import parse
from lib.simplify import simplify

ENTRIES = list_entries()


def canonical(text):
    return simplify(parse(text))


def domains_of(entry):
    return dict(VERIFY_DOMAINS, xdot=(-2.0, 2.0), xddot=(-2.0, 2.0),
                **fixed_domains(entry.parameters))


def test_gauge_functions_depend_on_x_and_t_only():
    assert str(GaugeFunction('F0*x*t')) == 'F0*x*t'
    with pytest.raises(GaugeFunctionError):
        GaugeFunction('xdot*t')
    with pytest.raises(GaugeFunctionError):
        GaugeFunction('x*xddot')


def test_lagrangians_reject_acceleration_and_false_null_tags():
    with pytest.raises(LagrangianError):
        Lagrangian('xddot*x')
    with pytest.raises(LagrangianError):
        Lagrangian('x^2', Role.NULL)
    assert Lagrangian('x*xdot', 'null').role is Role.NULL


def test_standard_oscillator(sho):
    assert sho.role is Role.STANDARD
    assert sho.body == canonical('xdot^2/2 - x^2/2')
    assert euler_lagrange(sho) == canonical('xddot + x')
    assert energy_function(sho) == canonical('xdot^2/2 + x^2/2')
    assert standard_oscillator(mass=2, stiffness=3).body == canonical('xdot^2 - 3/2*x^2')


def test_null_lagrangian_of_a_gauge_function():
    L_n = null_from_gauge('x*F0*sin(t)')
    assert L_n.role is Role.NULL
    assert L_n.body == canonical('F0*x*cos(t) + F0*xdot*sin(t)')
    assert euler_lagrange(L_n).is_number(0)
    assert is_null(L_n)


def test_is_null():
    assert is_null('x*xdot + t')
    assert not is_null(standard_oscillator())
    assert is_null('xdot*cos(x)^2 + xdot*sin(x)^2')


@pytest.mark.parametrize('text, force', [
    ('c1*x*t', 'c1'),
    ('x*F0*sin(t)', 'F0*cos(t)'),
    ('-1/4*eps*x^4*t', '-eps*x^3'),
    ('sin(t)^2', '0'),
    ('x^3 + exp(t)', '0'),
])
def test_force_from_gauge(text, force):
    assert force_from_gauge(text) == canonical(force)
    assert force_from_gauge(text, -1) == simplify(ex.neg(canonical(force)))


def test_force_sign_must_be_unit():
    with pytest.raises(ValueError):
        force_from_gauge('x*t', 0)


def test_energy_of_a_gauge_function():
    assert energy_from_gauge('x*F0*sin(t)') == canonical('-F0*x*cos(t)')
    assert energy_from_gauge('x^3 + sin(x)').is_number(0)


def test_time_only_gauge_function():
    phi = 't^3 + sin(t)'
    L_n = null_from_gauge(phi)
    assert not ex.depends_on(L_n.body, 'xdot')
    assert L_n.body == simplify(ex.neg(energy_from_gauge(phi)))
    assert force_from_gauge(phi).is_number(0)


def test_only_standard_lagrangians_take_gauge_terms():
    total = total_with_null(standard_oscillator(), 'x*t')
    assert total.role is Role.TOTAL
    with pytest.raises(LagrangianError):
        total_with_null(total, 'x*t')
    with pytest.raises(LagrangianError):
        drive_with_gauge(null_from_gauge('x*t'), 'x*t')


@pytest.mark.parametrize('entry', ENTRIES, ids=lambda entry: entry.id)
def test_catalog_gauge_functions_generate_null_lagrangians(entry):
    assert is_null(null_from_gauge(entry.phi), domains_of(entry))


@pytest.mark.parametrize('entry', ENTRIES, ids=lambda entry: entry.id)
def test_null_addition_leaves_the_equation_of_motion_alone(entry, sho):
    binding = entry.parameters
    plain = equation_of_motion(sho, binding)
    augmented = equation_of_motion(total_with_null(sho, entry.phi), binding)
    assert equal_numeric(augmented.rhs, plain.rhs, domains_of(entry))


@pytest.mark.parametrize('sign', [1, -1])
@pytest.mark.parametrize('entry', ENTRIES, ids=lambda entry: entry.id)
def test_driving_adds_the_signed_force(entry, sign, sho):
    ode = equation_of_motion(drive_with_gauge(sho, entry.phi, sign), entry.parameters)
    expected = ex.add(ex.neg(ex.X), force_from_gauge(entry.phi, sign))
    assert equal_numeric(ode.rhs, expected, domains_of(entry))


@pytest.mark.parametrize('entry', ENTRIES, ids=lambda entry: entry.id)
def test_energy_split(entry, sho):
    split = energy_split(sho, entry.phi)
    assert split.standard == energy_function(sho)
    assert equal_numeric(split.total, ex.add(split.standard, split.gauge), domains_of(entry))
