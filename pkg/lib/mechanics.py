#####################################################################
#
# Lagrangian mechanics of one-dimensional systems with gauge
# functions.
#
# A gauge function Phi(x, t) generates the null Lagrangian
#     L_n = dPhi/dt = dPhi/dt|_x + xdot dPhi/dx,
# whose Euler-Lagrange expression vanishes identically, so adding it
# to a standard Lagrangian L_s leaves the equation of motion alone.
# Its energy term E_n = -dPhi/dt|_x, on the other hand, changes the
# dynamics when added to L_s: with the sign convention sigma used
# throughout gaugeforge,
#     L_tot = L_s + sigma * dPhi/dt|_x
# produces the force (or nonlinearity)
#     F = sigma * d^2 Phi / dt dx
# on the right-hand side of the L_s equation of motion. sigma = +1
# reproduces the force and nonlinearity tables in the catalog as
# printed.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

from dataclasses import dataclass
from enum import Enum

from lib import expression as ex
from lib.calculus import diff, mixed_partial, total_time_derivative
from lib.errors import GaugeFunctionError, LagrangianError
from lib.evaluate import DEFAULT_SEED, compare_numeric, default_domains
from lib.simplify import simplify

# Fallback sampling interval of is_null when the default one leaves the real domain
POSITIVE_INTERVAL = (0.1, 3.0)


class Role(str, Enum):
    STANDARD = 'standard'
    NULL = 'null'
    TOTAL = 'total'


@dataclass(frozen=True)
class GaugeFunction:
    """ A gauge function Phi(x, t).

    :param body: Expression (or text) over x and t only
    """
    body: ex.Expression

    def __post_init__(self):
        body = ex.as_expression(self.body)
        velocities = ex.reserved_symbols(body) & {'xdot', 'xddot'}
        if velocities:
            raise GaugeFunctionError(
                f"gauge function '{body}' may depend on x and t only, not on "
                + ', '.join(sorted(velocities)))
        object.__setattr__(self, 'body', body)

    def __str__(self):
        return ex.to_text(self.body)


@dataclass(frozen=True)
class Lagrangian:
    """ A Lagrangian L(xdot, x, t) tagged with its role.

    A Lagrangian tagged null is checked with `is_null` on construction.

    :param body: Expression (or text) over xdot, x and t
    :param role: Role.STANDARD, Role.NULL or Role.TOTAL
    """
    body: ex.Expression
    role: Role = Role.STANDARD

    def __post_init__(self):
        body = ex.as_expression(self.body)
        if ex.depends_on(body, 'xddot'):
            raise LagrangianError(f"Lagrangian '{body}' must not depend on xddot")
        object.__setattr__(self, 'body', body)
        object.__setattr__(self, 'role', Role(self.role))
        if self.role is Role.NULL and not is_null(self):
            raise LagrangianError(f"'{body}' is tagged null but its Euler-Lagrange expression does not vanish")

    def __str__(self):
        return ex.to_text(self.body)


@dataclass(frozen=True)
class EnergySplit:
    standard: ex.Expression
    gauge: ex.Expression
    total: ex.Expression


def _body(value):
    if isinstance(value, (Lagrangian, GaugeFunction)):
        return value.body
    return ex.as_expression(value)


def as_gauge(value):
    return value if isinstance(value, GaugeFunction) else GaugeFunction(value)


def as_lagrangian(value, role=Role.STANDARD):
    return value if isinstance(value, Lagrangian) else Lagrangian(value, role)


def check_sign(sign):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return int(sign)


def standard_oscillator(mass=1, stiffness=1):
    """ Standard Lagrangian of the harmonic oscillator, m xdot^2/2 - k x^2/2.

    The unit mass, unit stiffness default is the normalisation of every
    catalog system.
    """
    body = ex.add(ex.mul(0.5, mass, ex.power(ex.XDOT, 2)),
                  ex.neg(ex.mul(0.5, stiffness, ex.power(ex.X, 2))))
    return Lagrangian(simplify(body), Role.STANDARD)


def null_from_gauge(phi):
    """ Null Lagrangian generated by a gauge function.

    :param phi: GaugeFunction (or expression text)
    :return: Lagrangian tagged null, dPhi/dt|_x + xdot dPhi/dx
    """
    phi = as_gauge(phi)
    return Lagrangian(total_time_derivative(phi.body), Role.NULL)


def euler_lagrange(L):
    """ Euler-Lagrange expression d/dt(dL/dxdot) - dL/dx.

    :param L: Lagrangian (or expression text)
    :return: Simplified expression over xddot, xdot, x, t
    """
    body = _body(L)
    momentum = diff(body, 'xdot')
    return simplify(ex.add(total_time_derivative(momentum), ex.neg(diff(body, 'x'))))


def is_null(L, domains=None, seed=DEFAULT_SEED):
    """ Whether the Euler-Lagrange expression of `L` vanishes identically.

    The simplifier decides first; identities it cannot close (trigonometric
    ones mostly) are settled by comparing d/dt(dL/dxdot) with dL/dx at
    seeded sample points. When a sample leaves the real domain the
    comparison is repeated with the reserved symbols sampled on
    POSITIVE_INTERVAL.

    :param L: Lagrangian (or expression text)
    :param domains: Optional sampling intervals per name
    :param seed: Sampler seed
    :return: bool
    """
    body = _body(L)
    if euler_lagrange(body).is_number(0):
        return True
    left = total_time_derivative(diff(body, 'xdot'))
    right = diff(body, 'x')
    if domains is not None:
        return compare_numeric(left, right, domains, seed=seed).equal
    result = compare_numeric(left, right, default_domains(left, right), seed=seed)
    if not result.equal and result.diagnostic:
        # non-integer powers of x: sample where every base is positive
        positive = {name: POSITIVE_INTERVAL for name in ex.reserved_symbols(ex.add(left, right))}
        result = compare_numeric(left, right, default_domains(left, right, overrides=positive), seed=seed)
    return result.equal


def energy_function(L):
    """ Energy function xdot dL/dxdot - L.
    """
    body = _body(L)
    return simplify(ex.add(ex.mul(ex.XDOT, diff(body, 'xdot')), ex.neg(body)))


def energy_from_gauge(phi):
    """ Gauge energy term E_n = -dPhi/dt; zero when Phi does not depend on t.
    """
    return simplify(ex.neg(diff(as_gauge(phi).body, 't')))


def force_from_gauge(phi, sign=1):
    """ Force (or nonlinearity) a gauge function introduces.

    :param phi: GaugeFunction (or expression text)
    :param sign: +1 or -1
    :return: sign * d^2 Phi / dt dx
    """
    sign = check_sign(sign)
    return simplify(ex.mul(sign, mixed_partial(as_gauge(phi).body)))


def _require_standard(L_s):
    L_s = as_lagrangian(L_s)
    if L_s.role is not Role.STANDARD:
        raise LagrangianError(f"expected a standard Lagrangian, got one tagged {L_s.role.value}")
    return L_s


def total_with_null(L_s, phi):
    """ L_s plus the null Lagrangian of `phi`; the equation of motion is unchanged.
    """
    L_s = _require_standard(L_s)
    L_n = null_from_gauge(phi)
    return Lagrangian(simplify(ex.add(L_s.body, L_n.body)), Role.TOTAL)


def drive_with_gauge(L_s, phi, sign=1):
    """ L_s - sign * E_n = L_s + sign * dPhi/dt.

    The equation of motion of the result is that of L_s with
    force_from_gauge(phi, sign) on its right-hand side.

    :param L_s: Standard Lagrangian
    :param phi: GaugeFunction (or expression text)
    :param sign: +1 or -1
    :return: Lagrangian tagged total
    """
    sign = check_sign(sign)
    L_s = _require_standard(L_s)
    phi = as_gauge(phi)
    return Lagrangian(simplify(ex.add(L_s.body, ex.mul(sign, diff(phi.body, 't')))), Role.TOTAL)


def energy_split(L_s, phi):
    """ Energy function of L_s + L_n and its two parts E_s(xdot, x) and E_n(x, t).
    """
    L_s = _require_standard(L_s)
    return EnergySplit(standard=energy_function(L_s),
                       gauge=energy_from_gauge(phi),
                       total=energy_function(total_with_null(L_s, phi)))
