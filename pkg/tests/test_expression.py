import pytest

from lib import expression as ex
from lib.catalog import list_entries
from lib.parser import parse
from lib.simplify import simplify


def test_nodes_are_immutable():
    e = parse('x*t')
    with pytest.raises(AttributeError):
        e.kind = ex.SUM
    with pytest.raises(AttributeError):
        del e.children


def test_structural_equality_and_hash():
    assert parse('x*t') == ex.mul(ex.X, ex.T)
    assert hash(parse('x*t')) == hash(ex.mul(ex.X, ex.T))
    assert parse('x*t') != parse('t*x')
    assert {parse('sin(t)'): 1}[ex.apply('sin', ex.T)] == 1


def test_reserved_names_are_symbols_everything_else_is_a_parameter():
    assert ex.variable('xdot').kind == ex.SYMBOL
    assert ex.variable('F0').kind == ex.PARAMETER
    assert ex.variable('eps').kind == ex.PARAMETER
    with pytest.raises(ValueError):
        ex.parameter('x')
    with pytest.raises(ValueError):
        ex.parameter('sin')
    with pytest.raises(ValueError):
        ex.symbol('y')


def test_free_names_and_parameters():
    e = parse('F0*x*sin(t) + eps*xdot')
    assert ex.free_names(e) == {'F0', 'x', 't', 'eps', 'xdot'}
    assert ex.reserved_symbols(e) == {'x', 't', 'xdot'}
    assert ex.parameters(e) == {'F0', 'eps'}
    assert ex.depends_on(e, 'xdot')
    assert not ex.depends_on(e, 'xddot')


def test_substitute_replaces_names_without_simplifying():
    e = parse('F0*x')
    replaced = ex.substitute(e, {'F0': 2, 'x': parse('t^2')})
    assert replaced == ex.mul(2, parse('t^2'))
    assert ex.substitute(e, {}) is e


def test_operator_overloads_build_raw_trees():
    assert ex.X * ex.T + 1 == ex.add(ex.mul(ex.X, ex.T), 1)
    assert 2 - ex.X == ex.add(2, ex.neg(ex.X))
    assert ex.X ** 2 / ex.T == ex.quotient(ex.power(ex.X, 2), ex.T)


def test_as_expression_coercions():
    assert ex.as_expression(3) == ex.constant(3.0)
    assert ex.as_expression('x') == ex.X
    with pytest.raises(TypeError):
        ex.as_expression(True)
    with pytest.raises(TypeError):
        ex.as_expression([1])


@pytest.mark.parametrize('value, text', [
    (2.0, '2'),
    (-3.0, '-3'),
    (0.5, '0.5'),
    (0.1, '0.1'),
    (1 / 3, '0.3333333333333333'),
])
def test_format_number(value, text):
    assert ex.format_number(value) == text


@pytest.mark.parametrize('text, printed', [
    ('x - t', 'x - t'),
    ('-(x + t)', '-(x + t)'),
    ('x^(t + 1)', 'x^(t + 1)'),
    ('(x*t)^2', '(x*t)^2'),
    ('x^-1', 'x^-1'),
    ('(-2)^2', '(-2)^2'),
])
def test_printer(text, printed):
    assert ex.to_text(parse(text)) == printed


@pytest.mark.parametrize('text, printed', [
    ('x + -1*t', 'x - t'),
    ('-1*x', '-x'),
    ('t*x*2', '2*x*t'),
    ('-1/4*x^4', '-0.25*x^4'),
])
def test_printer_on_canonical_forms(text, printed):
    assert ex.to_text(simplify(parse(text))) == printed


def test_sort_key_groups_powers_with_their_base():
    keys = [ex.sort_key(parse(text)) for text in ('2', 'F0', 'x', 'x^2', 'x^3', 't', 'sin(t)')]
    assert keys == sorted(keys)


def _catalog_expressions():
    for entry in list_entries():
        yield entry.phi.body
        yield entry.declared


@pytest.mark.parametrize('e', list(_catalog_expressions()), ids=str)
def test_print_parse_round_trip(e):
    canonical = simplify(e)
    assert simplify(parse(ex.to_text(canonical))) == canonical
    assert simplify(parse(ex.to_text(e))) == canonical
