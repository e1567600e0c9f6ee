"""Text forms of scalars and algebra elements

Expressions are read by a small recursive descent parser::

    poly   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (['*' | '/'] factor)*
    factor := atom "'"* ['^' ['-'] NUMBER]
    atom   := NUMBER | 'q' | 'i' | 'z'INDEX | 'u' | 'e(' J ',' K ',' L ')'
            | '(' poly ')'

Juxtaposed factors are multiplied without commuting them. A prime is the
star, ``/`` divides by a scalar, and negative powers are accepted only for
scalars and the unitary ``u`` of the circle algebra.
"""

from collections import namedtuple
import logging
import re

import attr

from qsphere.coeffq import GaussianRational, QMode, QRat
from qsphere.errors import (
    DivisionByZero, NegativeWordPower, PolySyntaxError, UnknownGenerator)
from qsphere.ncpoly import NCPoly, word_text


log = logging.getLogger(__name__)

ALGEBRAS = ('sphere', 'suq2', 'circle', 'scalar')

Token = namedtuple('Token', ['kind', 'text', 'offset'])

_SPACE = re.compile(r"\s*")
_TOKEN = re.compile(
    r"(?P<num>\d+)|(?P<gen>z\d+)|(?P<name>[A-Za-z])|(?P<op>[-+*/^'(),])")

_SIMPLE_COEFF = re.compile(r"^(\d+|q(\^\d+)?)$")


@attr.s(slots=True, frozen=True)
class ExprContext(object):
    """How to read an expression.

    Attributes
    ----------
    arity : int
        Generators z0 through z<arity> are accepted.
    gaussian_mode : bool
        Whether the imaginary unit ``i`` may appear in scalars.
    algebra : str
        One of 'sphere', 'suq2', 'circle', or 'scalar'.
    qmode : QMode
        Symbolic q, or a fixed value substituted for ``q``.
    """

    arity = attr.ib(default=1)
    gaussian_mode = attr.ib(default=False)
    algebra = attr.ib(default='sphere',
                      validator=attr.validators.in_(ALGEBRAS))
    qmode = attr.ib(default=attr.Factory(QMode.symbolic))


def tokenize(text):
    """Generate Tokens, ending with an 'eof' token."""
    pos = 0
    while True:
        pos = _SPACE.match(text, pos).end()
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolySyntaxError(
                "Unexpected character {!r}".format(text[pos]), text, pos)
        yield Token(m.lastgroup, m.group(), pos)
        pos = m.end()
    yield Token('eof', '', len(text))


def _star(value):
    if isinstance(value, QRat):
        return value.conjugate()
    return value.star()


class _Parser(object):

    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.tokens = list(tokenize(text))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        token = self.tokens[self.pos]
        if token.kind != 'eof':
            self.pos += 1
        return token

    def error(self, message, token, cls=PolySyntaxError):
        return cls(message, self.text, token.offset)

    def expect(self, text):
        token = self.next()
        if token.text != text:
            raise self.error("Expected {!r}".format(text), token)
        return token

    def parse(self):
        value = self.poly()
        token = self.peek()
        if token.kind != 'eof':
            raise self.error("Unexpected {!r}".format(token.text), token)
        return value

    def poly(self):
        negate = False
        if self.peek().text in ('+', '-'):
            negate = self.next().text == '-'
        value = self.term()
        if negate:
            value = -value
        while self.peek().text in ('+', '-'):
            op = self.next().text
            rhs = self.term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            token = self.peek()
            if token.text == '*':
                self.next()
                value = value * self.factor()
            elif token.text == '/':
                self.next()
                start = self.peek()
                value = self.divide(value, self.factor(), start)
            elif token.kind in ('num', 'gen', 'name') or token.text == '(':
                value = value * self.factor()
            else:
                return value

    def divide(self, value, divisor, token):
        if not isinstance(divisor, QRat):
            raise self.error("Division by a non-scalar", token)
        if divisor.is_zero():
            raise self.error("Division by zero", token)
        return value * divisor.inverse()

    def factor(self):
        start = self.peek()
        value = self.atom()
        while self.peek().text == "'":
            self.next()
            value = _star(value)
        if self.peek().text == '^':
            self.next()
            negative = False
            if self.peek().text == '-':
                self.next()
                negative = True
            token = self.next()
            if token.kind != 'num':
                raise self.error("Expected an exponent", token)
            k = int(token.text)
            value = self.power(value, -k if negative else k, start)
        return value

    def power(self, value, k, token):
        if k >= 0:
            return value ** k
        if isinstance(value, QRat):
            if value.is_zero():
                raise self.error("Division by zero", token)
            return value ** k
        try:
            return value.inverse() ** -k
        except (AttributeError, ValueError, DivisionByZero):
            raise self.error(
                "Negative power of a non-invertible element", token,
                NegativeWordPower)

    def atom(self):
        token = self.next()
        if token.kind == 'num':
            return QRat(int(token.text))
        elif token.kind == 'gen':
            return self.generator(token)
        elif token.kind == 'name':
            return self.name(token)
        elif token.text == '(':
            value = self.poly()
            self.expect(')')
            return value
        elif token.kind == 'eof':
            raise self.error("Unexpected end of input", token)
        else:
            raise self.error("Unexpected {!r}".format(token.text), token)

    def generator(self, token):
        index = int(token.text[1:])
        algebra = self.ctx.algebra
        if algebra in ('circle', 'scalar') or index > self.ctx.arity:
            raise self.error(
                "Unknown generator {}".format(token.text), token,
                UnknownGenerator)
        if algebra == 'suq2':
            from qsphere.suq2 import BasisVector
            return BasisVector.generator(index, self.ctx.qmode)
        return NCPoly.generator(self.ctx.arity, index)

    def name(self, token):
        algebra = self.ctx.algebra
        if token.text == 'q':
            return self.ctx.qmode.q
        elif token.text == 'i' and self.ctx.gaussian_mode:
            return QRat(GaussianRational(0, 1))
        elif token.text == 'u' and algebra == 'circle':
            from qsphere.quotients import LaurentPoly
            return LaurentPoly.unitary()
        elif token.text == 'e' and algebra == 'suq2':
            from qsphere.suq2 import BasisVector
            self.expect('(')
            j = self.integer()
            self.expect(',')
            k = self.integer()
            self.expect(',')
            l = self.integer()
            close = self.expect(')')
            if k < 0 or l < 0:
                raise self.error(
                    "Basis exponents k and l must be non-negative", close)
            return BasisVector.term(j, k, l, self.ctx.qmode)
        raise self.error(
            "Unknown symbol {!r}".format(token.text), token, UnknownGenerator)

    def integer(self):
        sign = 1
        if self.peek().text == '-':
            self.next()
            sign = -1
        token = self.next()
        if token.kind != 'num':
            raise self.error("Expected an integer", token)
        return sign * int(token.text)


def parse_expr(text, ctx):
    """Parse text into a QRat or an element of ctx's algebra."""
    log.debug("Parsing %r in %r", text, ctx)
    return _Parser(text, ctx).parse()


def parse_poly(text, ctx=None):
    """Parse a polynomial in the sphere algebra generators.

    Parameters
    ----------
    text : str
    ctx : ExprContext, optional

    Returns
    -------
    NCPoly

    Raises
    ------
    PolySyntaxError, UnknownGenerator, NegativeWordPower
    """
    ctx = ctx or ExprContext()
    value = parse_expr(text, ctx)
    if isinstance(value, QRat):
        return NCPoly.scalar(ctx.arity, value)
    return value


def parse_qrat(text, gaussian_mode=False, qmode=None):
    """Parse a scalar expression in q."""
    ctx = ExprContext(arity=0, gaussian_mode=gaussian_mode, algebra='scalar',
                      qmode=qmode or QMode.symbolic())
    return parse_expr(text, ctx)


def parse_basis(text, qmode=None, gaussian_mode=False):
    """Parse an element of A(SU_q(2)) written with e(j,k,l), z0 and z1."""
    from qsphere.suq2 import BasisVector
    qmode = qmode or QMode.symbolic()
    ctx = ExprContext(arity=1, gaussian_mode=gaussian_mode, algebra='suq2',
                      qmode=qmode)
    value = parse_expr(text, ctx)
    if isinstance(value, QRat):
        return BasisVector.scalar(value, qmode)
    return value


def parse_laurent(text, qmode=None, gaussian_mode=False):
    """Parse an element of the circle algebra written in u."""
    from qsphere.quotients import LaurentPoly
    ctx = ExprContext(arity=0, gaussian_mode=gaussian_mode, algebra='circle',
                      qmode=qmode or QMode.symbolic())
    value = parse_expr(text, ctx)
    if isinstance(value, QRat):
        return LaurentPoly.scalar(value)
    return value


def format_qrat(value):
    return str(value)


def _format_terms(pairs):
    """Join (coefficient, monomial text) pairs; '1' marks the unit."""
    if not pairs:
        return "0"
    parts = []
    for coeff, mono in pairs:
        negative = coeff.sign() < 0
        mag = -coeff if negative else coeff
        text = str(mag)
        if not _SIMPLE_COEFF.match(text):
            text = "({})".format(text)
        if mono == "1":
            body = text
        elif mag.is_one():
            body = mono
        else:
            body = "{} {}".format(text, mono)
        if not parts:
            parts.append("-" + body if negative else body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return ' '.join(parts)


def format_poly(poly):
    """Deterministic text of an NCPoly that parse_poly reads back."""
    return _format_terms([(c, word_text(w)) for w, c in poly.terms()])


def format_basis(vector):
    return _format_terms(
        [(c, "e({},{},{})".format(*t)) for t, c in vector.terms()])


def _unitary_text(k):
    if k == 0:
        return "1"
    elif k == 1:
        return "u"
    else:
        return "u^{}".format(k)


def format_laurent(laurent):
    return _format_terms([(c, _unitary_text(k)) for k, c in laurent.terms()])
