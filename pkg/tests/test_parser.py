import pytest

from lib import expression as ex
from lib.errors import ExpressionSyntaxError, ParseError, UnknownFunctionError
from lib.parser import parse, tokenize


def test_tokenize_reports_byte_offsets():
    tokens = tokenize('sin(x) + 2.5e-1')
    assert [(token.kind, token.text, token.offset) for token in tokens] == [
        ('name', 'sin', 0), ('op', '(', 3), ('name', 'x', 4), ('op', ')', 5),
        ('op', '+', 7), ('number', '2.5e-1', 9), ('end', '', 15),
    ]


@pytest.mark.parametrize('text, tree', [
    ('x + t*2', ex.add(ex.X, ex.mul(ex.T, 2))),
    ('x - t - 1', ex.add(ex.X, ex.neg(ex.T), ex.neg(1))),
    ('x*t*xdot', ex.mul(ex.X, ex.T, ex.XDOT)),
    ('x*t/2*xdot', ex.mul(ex.quotient(ex.mul(ex.X, ex.T), 2), ex.XDOT)),
    ('x/t/2', ex.quotient(ex.quotient(ex.X, ex.T), 2)),
    ('-x^2', ex.neg(ex.power(ex.X, 2))),
    ('x^2^3', ex.power(ex.X, ex.power(2, 3))),
    ('2^-x', ex.power(2, ex.neg(ex.X))),
    ('2*-x', ex.mul(2, ex.neg(ex.X))),
    ('+x', ex.X),
    ('(x + t)*xdot', ex.mul(ex.add(ex.X, ex.T), ex.XDOT)),
    ('cos(2*t)', ex.apply('cos', ex.mul(2, ex.T))),
    ('F0*xddot', ex.mul(ex.parameter('F0'), ex.XDDOT)),
])
def test_precedence_and_associativity(text, tree):
    assert parse(text) == tree


@pytest.mark.parametrize('text, value', [
    ('2', 2.0),
    ('2.5', 2.5),
    ('.5', 0.5),
    ('1e-3', 1e-3),
    ('3E2', 300.0),
])
def test_numbers(text, value):
    assert parse(text) == ex.constant(value)


def test_numbers_must_be_finite():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse('x + 1e999')
    assert info.value.offset == 4
    assert 'number out of range' in str(info.value)


def test_long_chains_parse_into_one_node():
    tree = parse(' + '.join(['x*t'] * 600))
    assert tree.kind == ex.SUM
    assert len(tree.children) == 600
    assert parse('*'.join(['x'] * 600)).kind == ex.PRODUCT


def test_names_other_than_reserved_ones_are_parameters():
    assert parse('x2').kind == ex.PARAMETER
    assert parse('eps').kind == ex.PARAMETER
    assert parse('xdot').kind == ex.SYMBOL


@pytest.mark.parametrize('text, offset', [
    ('', 0),
    ('   ', 0),
    ('x +', 3),
    ('x t', 2),
    ('(x + t', 6),
    ('sin x', 4),
    ('sin(x, t)', 5),
    ('x # y', 2),
    ('x + é', 4),
    ('é+$', 0),
    ('x*)', 2),
])
def test_syntax_errors_report_the_byte_offset(text, offset):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse(text)
    assert info.value.offset == offset
    assert info.value.expected
    assert f"at byte {offset}" in str(info.value)


def test_offsets_count_bytes_not_characters():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse('x\u00a0+\u00a0$')
    assert info.value.offset == 6


def test_unknown_function():
    with pytest.raises(UnknownFunctionError) as info:
        parse('2 * bar(t)')
    assert info.value.name == 'bar'
    assert info.value.offset == 4
    assert 'sin' in info.value.expected


def test_parse_errors_are_value_errors_with_usage_exit_code():
    with pytest.raises(ValueError):
        parse('x +')
    assert issubclass(UnknownFunctionError, ParseError)
    assert ParseError.exit_code == 2
