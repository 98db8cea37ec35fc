#####################################################################
#
# Generalised gauge-function families and their closed forms.
#
#   g1: Phi = sum C_mn x^m t^n
#       L_n = sum C_mn (m xdot t + n x) x^(m-1) t^(n-1)
#       F   = sum m n C_mn x^(m-1) t^(n-1)
#   g2: Phi = sum c_m x^m f_m(t)
#       L_n = sum (m f_m xdot + f_m' x) c_m x^(m-1)
#       F   = sum m f_m' c_m x^(m-1)
#   g3: Phi = sum c f(t) g(x)
#       L_n = sum c (f' g + xdot f g')
#       F   = sum c f' g'
#
# The closed forms are built term by term from these formulas, not
# from the generic pipeline in mechanics.py, so the two can be checked
# against each other. For g3 the force is summed over every term
# (both indices of the double sum).
#
# `identify_family` goes the other way: it splits each term of a gauge
# function into a constant part, a t part and an x part and reports
# every family the gauge function belongs to.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

from dataclasses import dataclass
import numbers

from lib import expression as ex
from lib.calculus import diff
from lib.errors import FamilySpecError
from lib.mechanics import GaugeFunction, Lagrangian, Role
from lib.simplify import simplify

FAMILIES = ('g1', 'g2', 'g3')


def _exponent(value, label):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 1:
        raise FamilySpecError(f"{label} must be a positive integer, got {value!r}")
    return int(value)


def _restricted(value, allowed, label):
    e = simplify(ex.as_expression(value))
    extra = ex.reserved_symbols(e) - set(allowed)
    if extra:
        over = ' and '.join(allowed) if allowed else 'no variable'
        raise FamilySpecError(f"{label} '{e}' must depend on {over} only, found "
                              + ', '.join(sorted(extra)))
    return e


@dataclass(frozen=True)
class PowerSeriesSpec:
    """ g1 family: map (m, n) -> C_mn, with m, n positive integers.
    """
    coefficients: tuple
    family = 'g1'

    def __init__(self, coefficients=()):
        items = coefficients.items() if hasattr(coefficients, 'items') else coefficients
        terms = {}
        for (m, n), value in items:
            key = (_exponent(m, 'm'), _exponent(n, 'n'))
            terms[key] = _restricted(value, (), f"coefficient C_{key[0]},{key[1]}")
        object.__setattr__(self, 'coefficients', tuple(sorted(terms.items())))


@dataclass(frozen=True)
class PowerTimeSpec:
    """ g2 family: terms (m, c_m, f_m(t)).
    """
    terms: tuple
    family = 'g2'

    def __init__(self, terms=()):
        checked = tuple((_exponent(m, 'm'),
                         _restricted(c, (), 'coefficient c_m'),
                         _restricted(f, ('t',), 'f_m'))
                        for m, c, f in terms)
        object.__setattr__(self, 'terms', checked)


@dataclass(frozen=True)
class SeparatedSpec:
    """ g3 family: terms (c, f(t), g(x)).
    """
    terms: tuple
    family = 'g3'

    def __init__(self, terms=()):
        checked = tuple((_restricted(c, (), 'coefficient c'),
                         _restricted(f, ('t',), 'f'),
                         _restricted(g, ('x',), 'g'))
                        for c, f, g in terms)
        object.__setattr__(self, 'terms', checked)


@dataclass(frozen=True)
class GaugeFamilyResult:
    phi: GaugeFunction
    null_lagrangian: Lagrangian
    force: ex.Expression


def _result(phi_terms, lagrangian_terms, force_terms):
    return GaugeFamilyResult(
        phi=GaugeFunction(simplify(ex.add(*phi_terms))),
        null_lagrangian=Lagrangian(simplify(ex.add(*lagrangian_terms)), Role.NULL),
        force=simplify(ex.add(*force_terms)),
    )


def _monomial(name, degree):
    return ex.power(ex.variable(name), degree)


def family_g1(spec):
    """ Closed forms of the power-series family.

    :param spec: PowerSeriesSpec or a map (m, n) -> C_mn
    :return: GaugeFamilyResult
    """
    if not isinstance(spec, PowerSeriesSpec):
        spec = PowerSeriesSpec(spec)
    phi, lagrangian, force = [], [], []
    for (m, n), c in spec.coefficients:
        phi.append(ex.mul(c, _monomial('x', m), _monomial('t', n)))
        lagrangian.append(ex.mul(c, ex.add(ex.mul(m, ex.XDOT, ex.T), ex.mul(n, ex.X)),
                                 _monomial('x', m - 1), _monomial('t', n - 1)))
        force.append(ex.mul(m * n, c, _monomial('x', m - 1), _monomial('t', n - 1)))
    return _result(phi, lagrangian, force)


def family_g2(spec):
    """ Closed forms of the x-power family with arbitrary f_m(t).

    :param spec: PowerTimeSpec or a list of (m, c_m, f_m)
    :return: GaugeFamilyResult
    """
    if not isinstance(spec, PowerTimeSpec):
        spec = PowerTimeSpec(spec)
    phi, lagrangian, force = [], [], []
    for m, c, f in spec.terms:
        f_dot = diff(f, 't')
        phi.append(ex.mul(c, _monomial('x', m), f))
        lagrangian.append(ex.mul(ex.add(ex.mul(m, f, ex.XDOT), ex.mul(f_dot, ex.X)),
                                 c, _monomial('x', m - 1)))
        force.append(ex.mul(m, f_dot, c, _monomial('x', m - 1)))
    return _result(phi, lagrangian, force)


def family_g3(spec):
    """ Closed forms of the separated family c f(t) g(x).

    :param spec: SeparatedSpec or a list of (c, f, g)
    :return: GaugeFamilyResult
    """
    if not isinstance(spec, SeparatedSpec):
        spec = SeparatedSpec(spec)
    phi, lagrangian, force = [], [], []
    for c, f, g in spec.terms:
        f_dot = diff(f, 't')
        g_prime = diff(g, 'x')
        phi.append(ex.mul(c, f, g))
        lagrangian.append(ex.mul(c, ex.add(ex.mul(f_dot, g), ex.mul(ex.XDOT, f, g_prime))))
        force.append(ex.mul(c, f_dot, g_prime))
    return _result(phi, lagrangian, force)


_BUILDERS = {'g1': family_g1, 'g2': family_g2, 'g3': family_g3}


def family_result(spec):
    """ Closed forms for any family spec, dispatching on its family tag.
    """
    try:
        builder = _BUILDERS[spec.family]
    except (AttributeError, KeyError):
        raise FamilySpecError(f"not a gauge family spec: {spec!r}") from None
    return builder(spec)


def _degree(part, name):
    # degree of part when it is name^k with k a positive integer
    if part.kind == ex.SYMBOL and part.name == name:
        return 1
    if part.kind == ex.POWER:
        base, exponent = part.children
        if (base.kind == ex.SYMBOL and base.name == name and exponent.kind == ex.CONSTANT
                and exponent.value >= 1 and exponent.value == int(exponent.value)):
            return int(exponent.value)
    return None


def _separate(term):
    factors = term.children if term.kind == ex.PRODUCT else (term,)
    parts = {'': [], 't': [], 'x': []}
    for factor in factors:
        symbols = ex.reserved_symbols(factor)
        if not symbols:
            parts[''].append(factor)
        elif symbols == {'t'}:
            parts['t'].append(factor)
        elif symbols == {'x'}:
            parts['x'].append(factor)
        else:
            return None
    return tuple(simplify(ex.mul(*parts[key])) for key in ('', 't', 'x'))


def identify_family(phi):
    """ Every family whose spec reproduces the gauge function.

    :param phi: GaugeFunction (or expression)
    :return: dict family tag -> spec, in order g1, g2, g3; empty when the
             gauge function does not separate into t and x parts
    """
    body = simplify(phi.body if isinstance(phi, GaugeFunction) else ex.as_expression(phi))
    terms = () if body.is_number(0) else (body.children if body.kind == ex.SUM else (body,))
    split = [_separate(term) for term in terms]
    if any(parts is None for parts in split):
        return {}

    found = {}
    degrees = [(_degree(x_part, 'x'), _degree(t_part, 't')) for _, t_part, x_part in split]
    if all(m is not None and n is not None for m, n in degrees):
        coefficients = {}
        for (c, _, _), key in zip(split, degrees):
            coefficients[key] = simplify(ex.add(coefficients.get(key, ex.ZERO), c))
        found['g1'] = PowerSeriesSpec(coefficients)
    if all(m is not None for m, _ in degrees):
        found['g2'] = PowerTimeSpec([(m, c, f) for (c, f, _), (m, _) in zip(split, degrees)])
    found['g3'] = SeparatedSpec(split)
    return found


def describe(spec):
    """ One-line text of a family spec, e.g. 'g1: C[4,1] = -0.25*eps'.
    """
    if spec.family == 'g1':
        parts = [f"C[{m},{n}] = {c}" for (m, n), c in spec.coefficients]
    elif spec.family == 'g2':
        parts = [f"m = {m}, c = {c}, f = {f}" for m, c, f in spec.terms]
    else:
        parts = [f"c = {c}, f = {f}, g = {g}" for c, f, g in spec.terms]
    return f"{spec.family}: " + ('; '.join(parts) if parts else 'empty')
