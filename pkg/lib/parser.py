#####################################################################
#
# Recursive descent parser for the gaugeforge expression grammar.
#
#   expr   := term (('+' | '-') term)*          one n-ary sum
#   term   := unary (('*' | '/') unary)*        n-ary product, '/' left associative
#   unary  := ('-' | '+') unary | power
#   power  := atom ('^' unary)?                 right associative,
#                                               binds tighter than
#                                               unary minus
#   atom   := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'
#
# Names x, t, xdot and xddot are the reserved symbols, names listed
# in expression.FUNCTIONS are functions, every other name is a free
# real parameter. Errors report the byte offset of the offending
# token and what was expected there.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

import logging
import math
import re
from collections import namedtuple

from lib import expression as ex
from lib.errors import ExpressionSyntaxError, UnknownFunctionError

logger = logging.getLogger(__name__)

Token = namedtuple('Token', 'kind text offset')

_TOKEN_RE = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
""", re.VERBOSE)

_DESCRIPTIONS = {
    'number': 'a number',
    'name': 'a name',
    'end': 'end of input',
}


def tokenize(text):
    """ Split expression text into tokens.

    :param text: Expression text
    :return: List of tokens, terminated by an 'end' token
    :raises ExpressionSyntaxError: On characters outside the grammar
    """
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(f"unexpected character {text[position]!r}",
                                        _byte_offset(text, position),
                                        'a number, a name, an operator or a parenthesis')
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), _byte_offset(text, position)))
        position = match.end()
    tokens.append(Token('end', '', _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text, index):
    return len(text[:index].encode('utf-8'))


class Parser:
    """ Recursive descent parser over a token list.
    """

    def __init__(self, tokens):
        self._tokens = list(tokens)
        self._index = 0

    @property
    def token(self):
        return self._tokens[self._index]

    def advance(self):
        token = self.token
        if token.kind != 'end':
            self._index += 1
        return token

    def at(self, text):
        return self.token.kind == 'op' and self.token.text == text

    def expect(self, text):
        if not self.at(text):
            self._fail(f"'{text}'")
        return self.advance()

    def _fail(self, expected):
        token = self.token
        found = _DESCRIPTIONS['end'] if token.kind == 'end' else repr(token.text)
        raise ExpressionSyntaxError(f"unexpected {found}", token.offset, expected)

    def parse(self):
        result = self.expr()
        if self.token.kind != 'end':
            self._fail("an operator or end of input")
        return result

    def expr(self):
        # a '+'/'-' chain becomes one n-ary sum
        terms = [self.term()]
        while self.at('+') or self.at('-'):
            operator = self.advance().text
            right = self.term()
            terms.append(right if operator == '+' else ex.neg(right))
        return ex.add(*terms)

    def term(self):
        factors = [self.unary()]
        while self.at('*') or self.at('/'):
            operator = self.advance().text
            right = self.unary()
            if operator == '*':
                factors.append(right)
            else:
                factors = [ex.quotient(ex.mul(*factors), right)]
        return ex.mul(*factors)

    def unary(self):
        if self.at('-'):
            self.advance()
            return ex.neg(self.unary())
        if self.at('+'):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at('^'):
            self.advance()
            return ex.power(base, self.unary())
        return base

    def atom(self):
        token = self.token
        if token.kind == 'number':
            self.advance()
            value = float(token.text)
            if not math.isfinite(value):
                raise ExpressionSyntaxError('number out of range', token.offset, 'a finite number')
            return ex.constant(value)
        if token.kind == 'name':
            self.advance()
            if self.at('('):
                if token.text not in ex.FUNCTIONS:
                    raise UnknownFunctionError(token.text, token.offset, ex.FUNCTIONS)
                self.advance()
                argument = self.expr()
                self.expect(')')
                return ex.apply(token.text, argument)
            if token.text in ex.FUNCTIONS:
                self._fail(f"'(' after function name '{token.text}'")
            return ex.variable(token.text)
        if self.at('('):
            self.advance()
            inner = self.expr()
            self.expect(')')
            return inner
        self._fail('a number, a name, a function call or \'(\'')


def parse(text):
    """ Parse expression text into a tree.

    :param text: Non-empty expression text
    :return: Expression (unsimplified)
    :raises ParseError: With byte offset and expected-token description
    """
    if not text or not text.strip():
        raise ExpressionSyntaxError('empty expression', 0, 'an expression')
    tree = Parser(tokenize(text)).parse()
    logger.debug('parsed %r', text)
    return tree
