#####################################################################
#
# Equations of motion, time integration and the numeric identity
# checks of gaugeforge.
#
# 1. `equation_of_motion` solves the Euler-Lagrange expression
#    A * xddot + B = 0 for xddot = -B/A.
# 2. `integrate_rk4` steps the first-order system (x, v)' = (v, rhs)
#    with the classical fourth-order Runge-Kutta scheme at fixed dt.
# 3. `action`, `verify_action_boundary`, `energy_drift` and
#    `energy_balance_check` evaluate quantities along a trajectory:
#    the action of a null Lagrangian equals the change of its gauge
#    function between the endpoints, and the energy function obeys
#    dE/dt = -dL/dt|explicit on solutions.
# 4. `estimate_period` measures the period from upward zero crossings.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

from dataclasses import dataclass, field
import logging
import math

import numpy as np
from scipy.integrate import simpson

from lib import expression as ex
from lib.calculus import diff, total_time_derivative
from lib.errors import (ConfigError, DegenerateLagrangianError, EvaluationDomainError,
                        IntegrationError, NonlinearAccelerationError, QuadratureError)
from lib.evaluate import bind, compare_numeric, default_domains, lambdify
from lib.mechanics import (GaugeFunction, Lagrangian, as_gauge, as_lagrangian, check_sign,
                           drive_with_gauge, energy_function, euler_lagrange,
                           null_from_gauge, standard_oscillator)
from lib.simplify import simplify

logger = logging.getLogger(__name__)

# Argument order of every compiled right-hand side and Lagrangian
STATE_NAMES = ('t', 'x', 'xdot')

# Tolerance of the action boundary identity: max(floor, scale * dt^4)
ACTION_TOLERANCE_FLOOR = 1e-8
ACTION_TOLERANCE_SCALE = 1.0

# Tolerance of the energy balance check: max(floor, scale * dt^2)
BALANCE_TOLERANCE_FLOOR = 1e-6
BALANCE_TOLERANCE_SCALE = 10.0

# Relative slack when deciding that (t1 - t0) / dt is an integer
UNIFORM_SLACK = 1e-9


def _binding(binding):
    return dict(binding or {})


@dataclass(frozen=True)
class ExplicitODE:
    """ xddot = rhs(xdot, x, t), with the Lagrangian it came from.
    """
    rhs: ex.Expression
    lagrangian: Lagrangian = None
    binding: dict = field(default_factory=dict)

    def __post_init__(self):
        if ex.depends_on(self.rhs, 'xddot'):
            raise NonlinearAccelerationError(f"right-hand side '{self.rhs}' still contains xddot")

    def compiled(self, backend='math'):
        """ rhs with the binding applied, compiled over (t, x, xdot).
        """
        return lambdify(bind(self.rhs, self.binding), STATE_NAMES, backend)

    def __str__(self):
        return f"xddot = {self.rhs}"


def equation_of_motion(L, binding=None):
    """ Explicit equation of motion of a Lagrangian.

    :param L: Lagrangian (or expression text)
    :param binding: Parameter values, used when checking the coefficient of xddot
    :return: ExplicitODE
    :raises DegenerateLagrangianError: When the Euler-Lagrange expression has no xddot
    :raises NonlinearAccelerationError: When it is not affine in xddot
    """
    L = as_lagrangian(L)
    binding = _binding(binding)
    el = euler_lagrange(L)
    inertia = diff(el, 'xddot')
    if ex.depends_on(inertia, 'xddot'):
        raise NonlinearAccelerationError(
            f"Euler-Lagrange expression '{el}' is not affine in xddot")
    if inertia.is_number(0):
        raise DegenerateLagrangianError(
            f"Lagrangian '{L}' does not involve the acceleration; it defines no equation of motion")
    if not inertia.is_constant:
        bound = bind(inertia, binding)
        if bound.is_number(0) or compare_numeric(bound, ex.ZERO, default_domains(bound)).equal:
            raise DegenerateLagrangianError(
                f"coefficient of xddot in the equation of motion of '{L}' vanishes identically")
    rest = simplify(ex.substitute(el, {'xddot': 0}))
    rhs = simplify(ex.neg(ex.quotient(rest, inertia)))
    logger.debug('equation of motion of %s: xddot = %s', L, rhs)
    return ExplicitODE(rhs, L, binding)


@dataclass
class Trajectory:
    """ Samples (t, x, v) of an integrated path.

    :param times: Sample times, t0 + i*dt (the last one is t1)
    :param x: Positions
    :param v: Velocities
    :param dt: Nominal step
    :param method: Integrator tag
    :param uniform: False when the final step was shortened to land on t1
    """
    times: np.ndarray
    x: np.ndarray
    v: np.ndarray
    dt: float
    method: str = 'rk4'
    uniform: bool = True

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.x = np.asarray(self.x, dtype=float)
        self.v = np.asarray(self.v, dtype=float)
        if not (self.times.shape == self.x.shape == self.v.shape) or self.times.ndim != 1:
            raise ValueError('times, x and v must be one-dimensional arrays of equal length')

    @property
    def t0(self):
        return float(self.times[0])

    @property
    def t1(self):
        return float(self.times[-1])

    @property
    def intervals(self):
        return len(self.times) - 1

    def __len__(self):
        return len(self.times)

    def evaluate(self, e, binding=None):
        """ Values of an expression over (t, x, xdot) at every sample.
        """
        compiled = lambdify(bind(ex.as_expression(e), _binding(binding)), STATE_NAMES, 'numpy')
        return compiled(self.times, self.x, self.v)


def sample_times(t0, t1, dt):
    """ Sample times t0 + i*dt, ending exactly on t1.

    :return: (times, uniform)
    """
    if not (math.isfinite(t0) and math.isfinite(t1) and math.isfinite(dt)):
        raise ConfigError('integration window must be finite')
    if dt <= 0:
        raise ConfigError(f"time step must be positive, got {dt!r}")
    if t1 <= t0:
        raise ConfigError(f"t1 must exceed t0, got t0 = {t0!r}, t1 = {t1!r}")
    steps = (t1 - t0) / dt
    count = round(steps)
    if count >= 1 and abs(steps - count) <= UNIFORM_SLACK * max(1.0, steps):
        times = t0 + np.arange(count + 1) * dt
        times[-1] = t1
        return times, True
    count = int(math.floor(steps))
    times = np.append(t0 + np.arange(count + 1) * dt, t1)
    return times, False


def integrate_rk4(ode, x0, v0, t0, t1, dt):
    """ Classical fourth-order Runge-Kutta at fixed step.

    :param ode: ExplicitODE
    :param x0: Initial position
    :param v0: Initial velocity
    :param t0: Start time
    :param t1: End time (> t0)
    :param dt: Step (> 0); the final step is shortened to land on t1 if needed
    :return: Trajectory
    :raises IntegrationError: When the right-hand side cannot be evaluated, naming the time
    """
    times, uniform = sample_times(float(t0), float(t1), float(dt))
    f = ode.compiled('math')
    xs = np.empty_like(times)
    vs = np.empty_like(times)
    x, v = float(x0), float(v0)
    xs[0], vs[0] = x, v
    logger.info('integrating %s on [%g, %g] with dt = %g (%d steps)',
                ode, t0, t1, dt, len(times) - 1)

    for i in range(len(times) - 1):
        t = times[i]
        h = times[i + 1] - t
        half = 0.5 * h
        try:
            a1 = f(t, x, v)
            x2, v2 = x + half * v, v + half * a1
            a2 = f(t + half, x2, v2)
            x3, v3 = x + half * v2, v + half * a2
            a3 = f(t + half, x3, v3)
            x4, v4 = x + h * v3, v + h * a3
            a4 = f(t + h, x4, v4)
        except EvaluationDomainError as err:
            raise IntegrationError(str(err), time=float(t)) from err
        x = x + h / 6.0 * (v + 2.0 * v2 + 2.0 * v3 + v4)
        v = v + h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        if not (math.isfinite(x) and math.isfinite(v)):
            raise IntegrationError('state left the finite range', time=float(times[i + 1]))
        xs[i + 1], vs[i + 1] = x, v

    return Trajectory(times, xs, vs, float(dt), 'rk4', uniform)


def action(L, traj, binding=None):
    """ Composite-Simpson action of a Lagrangian along a trajectory.

    :param L: Lagrangian (or expression text)
    :param traj: Trajectory with an even number of intervals
    :param binding: Parameter values
    :return: float
    :raises QuadratureError: On fewer than 3 samples or an odd interval count
    """
    if len(traj) < 3:
        raise QuadratureError(f"the action needs at least 3 samples, got {len(traj)}")
    if traj.intervals % 2:
        raise QuadratureError(
            f"composite Simpson needs an even number of intervals, got {traj.intervals}")
    body = L.body if isinstance(L, Lagrangian) else ex.as_expression(L)
    values = traj.evaluate(body, binding)
    return float(simpson(values, x=traj.times))


@dataclass(frozen=True)
class ActionBoundaryReport:
    action: float
    boundary: float
    deviation: float
    tolerance: float

    @property
    def passed(self):
        return self.deviation <= self.tolerance


def action_tolerance(dt):
    return max(ACTION_TOLERANCE_FLOOR, ACTION_TOLERANCE_SCALE * dt ** 4)


def verify_action_boundary(phi, traj, binding=None):
    """ Compare the action of the null Lagrangian of `phi` with
    phi(x(t1), t1) - phi(x(t0), t0).

    :param phi: GaugeFunction (or expression text)
    :param traj: Trajectory
    :param binding: Parameter values
    :return: ActionBoundaryReport
    """
    phi = as_gauge(phi)
    binding = _binding(binding)
    integral = action(null_from_gauge(phi), traj, binding)
    at = lambdify(bind(phi.body, binding), ('t', 'x'), 'math')
    boundary = at(traj.t1, float(traj.x[-1])) - at(traj.t0, float(traj.x[0]))
    return ActionBoundaryReport(integral, boundary, abs(integral - boundary),
                                action_tolerance(traj.dt))


def energy_drift(L, traj, binding=None):
    """ max |E(t) - E(t0)| along the trajectory, E the energy function of L.
    """
    energy = traj.evaluate(energy_function(L), binding)
    return float(np.max(np.abs(energy - energy[0])))


@dataclass(frozen=True)
class EnergyBalanceReport:
    max_mismatch: float
    worst_time: float
    tolerance: float

    @property
    def passed(self):
        return self.max_mismatch <= self.tolerance


def balance_tolerance(dt):
    return max(BALANCE_TOLERANCE_FLOOR, BALANCE_TOLERANCE_SCALE * dt ** 2)


def energy_balance_check(L, traj, binding=None):
    """ Check dE/dt = -dL/dt|explicit at interior samples.

    dE/dt is the centered finite difference of the energy function along
    the trajectory; the explicit time derivative is evaluated exactly.

    :param L: Lagrangian the trajectory solves
    :param traj: Trajectory with at least 3 samples
    :param binding: Parameter values
    :return: EnergyBalanceReport
    """
    L = as_lagrangian(L)
    if len(traj) < 3:
        raise QuadratureError('the energy balance needs at least 3 samples')
    energy = traj.evaluate(energy_function(L), binding)
    explicit = traj.evaluate(diff(L.body, 't'), binding)
    stop = len(traj) - 1 if traj.uniform else len(traj) - 2
    if stop <= 1:
        raise QuadratureError('the energy balance needs an interior sample on the uniform grid')
    rate = (energy[2:stop + 1] - energy[:stop - 1]) / (traj.times[2:stop + 1] - traj.times[:stop - 1])
    mismatch = np.abs(rate + explicit[1:stop])
    worst = int(np.argmax(mismatch))
    return EnergyBalanceReport(float(mismatch[worst]), float(traj.times[1 + worst]),
                               balance_tolerance(traj.dt))


def energy_condition_residual(L, binding=None):
    """ dE/dt + dL/dt|explicit with xddot taken from the equation of motion.

    Vanishes identically for every Lagrangian that defines an equation of
    motion; the numeric counterpart is `energy_balance_check`.
    """
    L = as_lagrangian(L)
    ode = equation_of_motion(L, binding)
    rate = total_time_derivative(energy_function(L))
    residual = ex.add(ex.substitute(rate, {'xddot': ode.rhs}), diff(L.body, 't'))
    return simplify(residual)


def estimate_period(traj):
    """ Mean spacing of upward zero crossings of x, located by linear
    interpolation.

    :raises IntegrationError: When fewer than two upward crossings exist
    """
    x, t = traj.x, traj.times
    index = np.nonzero((x[:-1] < 0.0) & (x[1:] >= 0.0))[0]
    if len(index) < 2:
        raise IntegrationError(f"need two upward zero crossings to estimate a period, found {len(index)}")
    crossings = t[index] - x[index] * (t[index + 1] - t[index]) / (x[index + 1] - x[index])
    return float((crossings[-1] - crossings[0]) / (len(crossings) - 1))


@dataclass(frozen=True)
class DynamicalSystem:
    """ A standard Lagrangian, optionally driven by a gauge function.

    :param standard: Standard Lagrangian, the unit oscillator by default
    :param gauge: Optional GaugeFunction entering as L_s + sign * dPhi/dt
    :param sign: +1 or -1
    :param binding: Parameter values
    """
    standard: Lagrangian = field(default_factory=standard_oscillator)
    gauge: GaugeFunction = None
    sign: int = 1
    binding: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'standard', as_lagrangian(self.standard))
        if self.gauge is not None:
            object.__setattr__(self, 'gauge', as_gauge(self.gauge))
        object.__setattr__(self, 'sign', check_sign(self.sign))
        object.__setattr__(self, 'binding', dict(self.binding))

    def lagrangian(self):
        if self.gauge is None:
            return self.standard
        return drive_with_gauge(self.standard, self.gauge, self.sign)

    def equation_of_motion(self):
        return equation_of_motion(self.lagrangian(), self.binding)

    def integrate(self, x0, v0, t0, t1, dt):
        return integrate_rk4(self.equation_of_motion(), x0, v0, t0, t1, dt)
