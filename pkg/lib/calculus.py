#####################################################################
#
# Symbolic differentiation of expression trees.
#
# `diff` takes exact partial derivatives with respect to one of the
# reserved symbols, treating parameters as constants and the other
# reserved symbols as independent. `total_time_derivative` applies
# the chain rule along a path x(t):
#
#     d/dt e = de/dt + xdot * de/dx + xddot * de/dxdot
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

from functools import lru_cache

from lib import expression as ex
from lib.simplify import simplify


def _chain(outer, inner, var):
    return ex.mul(outer, _diff(inner, var))


def _d_function(e, var):
    u = e.children[0]
    name = e.name
    if name == 'sin':
        outer = ex.apply('cos', u)
    elif name == 'cos':
        outer = ex.neg(ex.apply('sin', u))
    elif name == 'tan':
        outer = ex.power(ex.apply('cos', u), -2)
    elif name == 'exp':
        outer = e
    elif name == 'ln':
        outer = ex.power(u, -1)
    elif name == 'sinh':
        outer = ex.apply('cosh', u)
    elif name == 'cosh':
        outer = ex.apply('sinh', u)
    elif name == 'tanh':
        outer = ex.add(1, ex.neg(ex.power(e, 2)))
    else:
        # sqrt
        outer = ex.quotient(1, ex.mul(2, e))
    return _chain(outer, u, var)


@lru_cache(maxsize=65536)
def _diff(e, var):
    if not ex.depends_on(e, var):
        return ex.ZERO
    kind = e.kind
    if kind == ex.SYMBOL:
        return ex.ONE
    if kind == ex.SUM:
        return ex.add(*(_diff(child, var) for child in e.children))
    if kind == ex.NEGATION:
        return ex.neg(_diff(e.children[0], var))
    if kind == ex.PRODUCT:
        factors = e.children
        terms = []
        for index, factor in enumerate(factors):
            if not ex.depends_on(factor, var):
                continue
            others = factors[:index] + factors[index + 1:]
            terms.append(ex.mul(_diff(factor, var), *others))
        return ex.add(*terms)
    if kind == ex.QUOTIENT:
        numerator, denominator = e.children
        top = ex.add(ex.mul(_diff(numerator, var), denominator),
                     ex.neg(ex.mul(numerator, _diff(denominator, var))))
        return ex.quotient(top, ex.power(denominator, 2))
    if kind == ex.POWER:
        base, exponent = e.children
        if not ex.depends_on(exponent, var):
            return ex.mul(exponent, ex.power(base, ex.add(exponent, -1)), _diff(base, var))
        if not ex.depends_on(base, var):
            return ex.mul(e, ex.apply('ln', base), _diff(exponent, var))
        # u^v = exp(v ln u)
        return ex.mul(e, ex.add(ex.mul(_diff(exponent, var), ex.apply('ln', base)),
                                ex.mul(exponent, _diff(base, var), ex.power(base, -1))))
    return _d_function(e, var)


def diff(e, var):
    """ Exact partial derivative of `e` with respect to a reserved symbol.

    :param e: Expression
    :param var: One of 'x', 't', 'xdot', 'xddot'
    :return: Simplified derivative
    """
    if var not in ex.SYMBOLS:
        raise ValueError(f"can only differentiate with respect to {', '.join(ex.SYMBOLS)}, not '{var}'")
    return simplify(_diff(e, var))


def mixed_partial(e):
    """ d^2 e / dt dx, the operator that turns a gauge function into a force.
    """
    return diff(diff(e, 't'), 'x')


def total_time_derivative(e):
    """ Total derivative along a path x(t).

    :param e: Expression over x, t and xdot at most
    :return: de/dt + xdot de/dx + xddot de/dxdot, simplified
    """
    if ex.depends_on(e, 'xddot'):
        raise ValueError('total_time_derivative takes expressions over x, t and xdot only')
    return simplify(ex.add(
        _diff(e, 't'),
        ex.mul(ex.XDOT, _diff(e, 'x')),
        ex.mul(ex.XDDOT, _diff(e, 'xdot')),
    ))
