#####################################################################
#
# Algebraic simplifier producing the canonical form of expressions.
#
# Rules, applied bottom-up:
#   - negation becomes a product with -1, a quotient a product with
#     the denominator raised to -1
#   - constants are folded, 0 and 1 identities applied; functions of
#     constants are evaluated when the result is finite
#   - sums and products are flattened, like terms and like powers of
#     identical bases merged, and the operands sorted by
#     expression.sort_key
#   - integer powers distribute over products, products distribute
#     over sums
#
# No trigonometric rewriting is attempted; identities such as
# cos(t)^2 = (1 + cos(2*t))/2 are established numerically with
# evaluate.equal_numeric.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

from functools import lru_cache
import math

from lib import expression as ex
from lib.errors import SimplificationError

_FOLD = {
    'sin': math.sin, 'cos': math.cos, 'tan': math.tan, 'exp': math.exp,
    'ln': math.log, 'sinh': math.sinh, 'cosh': math.cosh, 'tanh': math.tanh,
    'sqrt': math.sqrt,
}


def _is_integer(value):
    return math.isfinite(value) and value == int(value)


@lru_cache(maxsize=65536)
def simplify(e):
    """ Canonical form of an expression.

    :param e: Expression
    :return: Value-preserving canonical Expression
    :raises SimplificationError: On division by the constant zero
    """
    kind = e.kind
    if kind in (ex.CONSTANT, ex.SYMBOL, ex.PARAMETER):
        return e
    if kind == ex.NEGATION:
        return _product([ex.MINUS_ONE, simplify(e.children[0])])
    if kind == ex.QUOTIENT:
        numerator, denominator = (simplify(child) for child in e.children)
        if denominator.is_number(0):
            raise SimplificationError(f"division by the constant zero in '{ex.to_text(e)}'")
        return _product([numerator, _power(denominator, ex.MINUS_ONE)])
    if kind == ex.SUM:
        return _sum([simplify(child) for child in e.children])
    if kind == ex.PRODUCT:
        return _product([simplify(child) for child in e.children])
    if kind == ex.POWER:
        base, exponent = (simplify(child) for child in e.children)
        return _power(base, exponent)
    return _function(e.name, simplify(e.children[0]))


def _function(name, argument):
    if argument.kind == ex.CONSTANT:
        try:
            value = _FOLD[name](argument.value)
        except (ValueError, OverflowError):
            value = None
        if value is not None and math.isfinite(value):
            return ex.constant(value)
    return ex.apply(name, argument)


def _power(base, exponent):
    if exponent.is_number(0):
        return ex.ONE
    if exponent.is_number(1):
        return base
    if base.is_number(1):
        return ex.ONE
    if base.kind == ex.CONSTANT and exponent.kind == ex.CONSTANT:
        b, p = base.value, exponent.value
        if b == 0 and p < 0:
            raise SimplificationError('division by the constant zero (0 raised to a negative power)')
        if b >= 0 or _is_integer(p):
            try:
                value = math.pow(b, p)
            except (ValueError, OverflowError):
                value = None
            if value is not None and math.isfinite(value):
                return ex.constant(value)
        return ex.power(base, exponent)
    if base.is_number(0) and exponent.kind == ex.CONSTANT and exponent.value > 0:
        return ex.ZERO
    if exponent.kind == ex.CONSTANT and _is_integer(exponent.value):
        if base.kind == ex.POWER:
            inner_base, inner_exponent = base.children
            return _power(inner_base, _product([inner_exponent, exponent]))
        if base.kind == ex.PRODUCT:
            return _product([_power(factor, exponent) for factor in base.children])
    return ex.power(base, exponent)


def _split_power(factor):
    if factor.kind == ex.POWER:
        return factor.children[0], factor.children[1]
    return factor, ex.ONE


def _product(factors):
    coefficient = 1.0
    exponents = {}
    order = []
    pending = list(factors)
    while pending:
        factor = pending.pop(0)
        if factor.kind == ex.PRODUCT:
            pending[:0] = factor.children
            continue
        if factor.kind == ex.CONSTANT:
            coefficient *= factor.value
            continue
        base, exponent = _split_power(factor)
        if base in exponents:
            exponents[base].append(exponent)
        else:
            exponents[base] = [exponent]
            order.append(base)

    if coefficient == 0:
        return ex.ZERO
    if not math.isfinite(coefficient):
        raise SimplificationError('constant overflow while folding a product')

    merged = []
    refold = []
    for base in order:
        parts = exponents[base]
        if len(parts) == 1 and parts[0].is_number(1):
            merged.append(base)
            continue
        combined = _power(base, parts[0] if len(parts) == 1 else _sum(parts))
        if combined.kind in (ex.CONSTANT, ex.PRODUCT):
            refold.append(combined)
        else:
            merged.append(combined)
    if refold:
        return _product([ex.constant(coefficient)] + merged + refold)

    sums = [factor for factor in merged if factor.kind == ex.SUM]
    if sums:
        others = [factor for factor in merged if factor.kind != ex.SUM]
        return _distribute(coefficient, others, sums)

    merged.sort(key=ex.sort_key)
    if coefficient != 1:
        merged.insert(0, ex.constant(coefficient))
    if not merged:
        return ex.constant(coefficient)
    if len(merged) == 1:
        return merged[0]
    return ex.Expression(ex.PRODUCT, merged)


def _distribute(coefficient, others, sums):
    terms = [ex.constant(coefficient)] + others
    expanded = [terms]
    for factor in sums:
        expanded = [partial + [term] for partial in expanded for term in factor.children]
    return _sum([_product(partial) for partial in expanded])


def _split_term(term):
    """ Split a canonical term into (numeric coefficient, remainder).
    """
    if term.kind == ex.CONSTANT:
        return term.value, ex.ONE
    if term.kind == ex.PRODUCT and term.children[0].kind == ex.CONSTANT:
        rest = term.children[1:]
        remainder = rest[0] if len(rest) == 1 else ex.Expression(ex.PRODUCT, rest)
        return term.children[0].value, remainder
    return 1.0, term


def _sum(terms):
    coefficients = {}
    order = []
    pending = list(terms)
    while pending:
        term = pending.pop(0)
        if term.kind == ex.SUM:
            pending[:0] = term.children
            continue
        coefficient, remainder = _split_term(term)
        if remainder in coefficients:
            coefficients[remainder] += coefficient
        else:
            coefficients[remainder] = coefficient
            order.append(remainder)

    result = []
    for remainder in sorted(order, key=ex.sort_key):
        coefficient = coefficients[remainder]
        if coefficient == 0:
            continue
        if not math.isfinite(coefficient):
            raise SimplificationError('constant overflow while folding a sum')
        if remainder.is_number(1):
            result.append(ex.constant(coefficient))
        elif coefficient == 1:
            result.append(remainder)
        elif remainder.kind == ex.PRODUCT:
            result.append(ex.Expression(ex.PRODUCT, (ex.constant(coefficient),) + remainder.children))
        else:
            result.append(ex.Expression(ex.PRODUCT, (ex.constant(coefficient), remainder)))

    if not result:
        return ex.ZERO
    if len(result) == 1:
        return result[0]
    return ex.Expression(ex.SUM, result)


def is_zero(e):
    """ True when `e` simplifies to the constant zero.
    """
    return simplify(e).is_number(0)
