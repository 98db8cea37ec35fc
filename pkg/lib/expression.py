#####################################################################
#
# Immutable expression trees over the reserved symbols x, t, xdot,
# xddot and free real parameters. This is the carrier of every
# Lagrangian, gauge function and force handled by gaugeforge.
#
# The module provides:
# 1. `Expression`: the tree node, with structural equality and a
#    cached hash so trees can key dictionaries and caches cheaply.
# 2. Constructors (`constant`, `symbol`, `parameter`, `add`, `mul`,
#    `power`, `neg`, `quotient`, `apply`) and `as_expression`.
# 3. `to_text`: the printer, emitting the same grammar `parser.parse`
#    reads.
# 4. `free_names`, `substitute` and `sort_key` (the fixed total order
#    the simplifier sorts sums and products by).
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

from functools import lru_cache
import numbers

CONSTANT = 'constant'
SYMBOL = 'symbol'
PARAMETER = 'parameter'
SUM = 'sum'
PRODUCT = 'product'
POWER = 'power'
NEGATION = 'negation'
QUOTIENT = 'quotient'
FUNCTION = 'function'

# Reserved symbols, in the order products and sums list them
SYMBOLS = ('x', 'xdot', 'xddot', 't')
FUNCTIONS = ('sin', 'cos', 'tan', 'exp', 'ln', 'sinh', 'cosh', 'tanh', 'sqrt')

_SYMBOL_RANK = {name: rank for rank, name in enumerate(SYMBOLS)}


class Expression:
    """ A node of an expression tree.

    Nodes never change after construction; two nodes are equal when
    their kind, payload and children are equal.

    :param kind: One of the node kind constants of this module
    :param children: Ordered child nodes
    :param value: Numeric value of a constant node
    :param name: Symbol, parameter or function name
    """
    __slots__ = ('kind', 'children', 'value', 'name', '_hash')

    def __init__(self, kind, children=(), value=0.0, name=''):
        children = tuple(children)
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'children', children)
        object.__setattr__(self, 'value', float(value))
        object.__setattr__(self, 'name', name)
        object.__setattr__(self, '_hash', hash((kind, self.value, name, children)))

    def __setattr__(self, key, value):
        raise AttributeError('Expression nodes are immutable')

    def __delattr__(self, key):
        raise AttributeError('Expression nodes are immutable')

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Expression):
            return NotImplemented
        return (self._hash == other._hash
                and self.kind == other.kind
                and self.value == other.value
                and self.name == other.name
                and self.children == other.children)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __reduce__(self):
        return (Expression, (self.kind, self.children, self.value, self.name))

    def __repr__(self):
        return f"Expression({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # Operator overloads build raw (unsimplified) trees
    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __sub__(self, other):
        return add(self, neg(other))

    def __rsub__(self, other):
        return add(other, neg(self))

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(other, self)

    def __truediv__(self, other):
        return quotient(self, other)

    def __rtruediv__(self, other):
        return quotient(other, self)

    def __pow__(self, other):
        return power(self, other)

    def __rpow__(self, other):
        return power(other, self)

    def __neg__(self):
        return neg(self)

    @property
    def is_constant(self):
        return self.kind == CONSTANT

    def is_number(self, value):
        """ True when the node is the constant `value`.
        """
        return self.kind == CONSTANT and self.value == value


def constant(value):
    return Expression(CONSTANT, value=value)


def symbol(name):
    if name not in _SYMBOL_RANK:
        raise ValueError(f"'{name}' is not a reserved symbol; use one of {', '.join(SYMBOLS)}")
    return Expression(SYMBOL, name=name)


def parameter(name):
    if name in _SYMBOL_RANK or name in FUNCTIONS:
        raise ValueError(f"'{name}' is reserved and cannot name a parameter")
    if not name.isidentifier():
        raise ValueError(f"'{name}' is not a valid parameter name")
    return Expression(PARAMETER, name=name)


def variable(name):
    """ Symbol node for reserved names, parameter node for anything else.
    """
    return symbol(name) if name in _SYMBOL_RANK else parameter(name)


def as_expression(value):
    """ Coerce numbers and expression text to an `Expression`.

    :param value: An Expression, a real number or expression text
    :return: The corresponding Expression
    """
    if isinstance(value, Expression):
        return value
    if isinstance(value, bool):
        raise TypeError('booleans are not expressions')
    if isinstance(value, numbers.Real):
        return constant(value)
    if isinstance(value, str):
        from lib.parser import parse
        return parse(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an expression")


def add(*terms):
    terms = tuple(as_expression(term) for term in terms)
    if not terms:
        return ZERO
    if len(terms) == 1:
        return terms[0]
    return Expression(SUM, terms)


def mul(*factors):
    factors = tuple(as_expression(factor) for factor in factors)
    if not factors:
        return ONE
    if len(factors) == 1:
        return factors[0]
    return Expression(PRODUCT, factors)


def power(base, exponent):
    return Expression(POWER, (as_expression(base), as_expression(exponent)))


def neg(operand):
    return Expression(NEGATION, (as_expression(operand),))


def quotient(numerator, denominator):
    return Expression(QUOTIENT, (as_expression(numerator), as_expression(denominator)))


def apply(function, argument):
    if function not in FUNCTIONS:
        raise ValueError(f"unknown function '{function}'")
    return Expression(FUNCTION, (as_expression(argument),), name=function)


ZERO = constant(0)
ONE = constant(1)
MINUS_ONE = constant(-1)
X = symbol('x')
T = symbol('t')
XDOT = symbol('xdot')
XDDOT = symbol('xddot')


@lru_cache(maxsize=65536)
def free_names(e):
    """ Names of all symbols and parameters occurring in `e`.

    :param e: Expression
    :return: frozenset of names
    """
    if e.kind in (SYMBOL, PARAMETER):
        return frozenset((e.name,))
    names = frozenset()
    for child in e.children:
        names |= free_names(child)
    return names


def depends_on(e, name):
    return name in free_names(e)


def reserved_symbols(e):
    return free_names(e) & frozenset(SYMBOLS)


def parameters(e):
    return free_names(e) - frozenset(SYMBOLS)


def substitute(e, mapping):
    """ Replace names by expressions or numbers.

    The result is not simplified.

    :param e: Expression
    :param mapping: Map from symbol/parameter name to replacement
    :return: Expression with every mapped name replaced
    """
    replacements = {name: as_expression(value) for name, value in mapping.items()}
    if not replacements:
        return e

    def visit(node):
        if node.kind in (SYMBOL, PARAMETER):
            return replacements.get(node.name, node)
        if not node.children or not (free_names(node) & replacements.keys()):
            return node
        return Expression(node.kind, (visit(child) for child in node.children),
                          node.value, node.name)

    return visit(e)


_ONE_KEY = (0, 1.0, ())


@lru_cache(maxsize=65536)
def sort_key(e):
    """ Key of the fixed total order on canonical nodes.

    Constants come first, then parameters by name, reserved symbols,
    function applications, products and sums. A power sorts with its
    base and is ordered after it by exponent, so x, x^2 and x^3 end up
    next to each other.
    """
    kind = e.kind
    if kind == CONSTANT:
        return (0, e.value, ())
    if kind == PARAMETER:
        return (1, e.name, _ONE_KEY)
    if kind == SYMBOL:
        return (2, _SYMBOL_RANK[e.name], _ONE_KEY)
    if kind == FUNCTION:
        return (3, (e.name, sort_key(e.children[0])), _ONE_KEY)
    if kind == PRODUCT:
        return (4, tuple(sort_key(child) for child in e.children), _ONE_KEY)
    if kind == SUM:
        return (5, tuple(sort_key(child) for child in e.children), _ONE_KEY)
    if kind == POWER:
        base, exponent = e.children
        if base.kind in (POWER, CONSTANT):
            return (6, (sort_key(base), sort_key(exponent)), _ONE_KEY)
        rank, payload, _ = sort_key(base)
        return (rank, payload, sort_key(exponent))
    if kind == NEGATION:
        return (7, (sort_key(e.children[0]),), _ONE_KEY)
    return (8, tuple(sort_key(child) for child in e.children), _ONE_KEY)


### Printer

_SUM_LEVEL = 1
_PRODUCT_LEVEL = 2
_UNARY_LEVEL = 3
_POWER_LEVEL = 4
_ATOM_LEVEL = 5


def format_number(value):
    """ Shortest text that reads back to exactly `value`.
    """
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def _level(e):
    kind = e.kind
    if kind == SUM:
        return _SUM_LEVEL
    if kind in (PRODUCT, QUOTIENT):
        return _PRODUCT_LEVEL
    if kind == NEGATION or (kind == CONSTANT and e.value < 0):
        return _UNARY_LEVEL
    if kind == POWER:
        return _POWER_LEVEL
    return _ATOM_LEVEL


def _wrap(e, level):
    text = to_text(e)
    return f"({text})" if _level(e) < level else text


def to_text(e):
    """ Print an expression in the surface grammar.

    :param e: Expression
    :return: Text that `parser.parse` reads back to an equal tree
             (after simplification)
    """
    kind = e.kind
    if kind == CONSTANT:
        return format_number(e.value)
    if kind in (SYMBOL, PARAMETER):
        return e.name
    if kind == FUNCTION:
        return f"{e.name}({to_text(e.children[0])})"
    if kind == NEGATION:
        return '-' + _wrap(e.children[0], _UNARY_LEVEL)
    if kind == SUM:
        first, *rest = e.children
        parts = [_wrap(first, _SUM_LEVEL)]
        for term in rest:
            text = _wrap(term, _PRODUCT_LEVEL)
            if text.startswith('-') and term.kind in (CONSTANT, PRODUCT, NEGATION):
                parts.append(' - ' + text[1:])
            else:
                parts.append(' + ' + text)
        return ''.join(parts)
    if kind == PRODUCT:
        factors = e.children
        if factors[0].is_number(-1) and len(factors) > 1:
            rest = '*'.join(_wrap(factor, _PRODUCT_LEVEL) for factor in factors[1:])
            return '-' + rest
        return '*'.join(_wrap(factor, _PRODUCT_LEVEL) for factor in factors)
    if kind == QUOTIENT:
        numerator, denominator = e.children
        return _wrap(numerator, _PRODUCT_LEVEL) + '/' + _wrap(denominator, _UNARY_LEVEL)
    base, exponent = e.children
    return _wrap(base, _ATOM_LEVEL) + '^' + _wrap(exponent, _UNARY_LEVEL)
