"""Reading and writing expressions."""

from fractions import Fraction

import pytest

from qsphere.coeffq import GaussianRational, QMode, QRat
from qsphere.errors import (
    NegativeWordPower, PolySyntaxError, UnknownGenerator)
from qsphere.ncpoly import Letter, NCPoly
from qsphere.parser import (
    ExprContext, format_poly, parse_basis, parse_laurent, parse_poly,
    parse_qrat, tokenize)
from qsphere.quotients import LaurentPoly
from qsphere.suq2 import BasisVector


def test_tokenize():
    kinds = [t.kind for t in tokenize("z0' ^2")]
    assert kinds == ['gen', 'op', 'op', 'num', 'eof']


def test_parse_word():
    assert parse_poly("z0' z0") == NCPoly.monomial(
        1, (Letter(0, True), Letter(0, False)))


def test_parse_coefficients(gens, q):
    z0, z1, _, _ = gens
    assert parse_poly("2 z1^2 - q z0") == z1 * z1 * 2 - z0 * q
    assert parse_poly("z0 / (1 - q)") == z0 * (1 / (1 - q))


def test_parse_fixed_q(gens):
    ctx = ExprContext(qmode=QMode("1/3"))
    assert parse_poly("q z0", ctx) == gens[0] * Fraction(1, 3)


def test_parse_star_of_group(gens):
    z0, z1, z0s, z1s = gens
    assert parse_poly("(z0 z1)'") == z1s * z0s


def test_parse_scalar_poly():
    assert parse_poly("3", ExprContext(arity=2)) == NCPoly.scalar(2, 3)


@pytest.mark.parametrize('text,offset', [
    ("z0 + * z1", 5),
    ("z0 z1)", 5),
    ("(z0", 3),
    ("z0 $", 3),
    ("1/0", 2),
])
def test_syntax_error_offset(text, offset):
    with pytest.raises(PolySyntaxError) as exc_info:
        parse_poly(text)
    assert exc_info.value.offset == offset
    assert exc_info.value.text == text


def test_syntax_error_str():
    with pytest.raises(PolySyntaxError) as exc_info:
        parse_poly("z0 + * z1")
    assert "position 5" in str(exc_info.value)


@pytest.mark.parametrize('text', ["z2", "x", "i"])
def test_unknown_generator(text):
    with pytest.raises(UnknownGenerator):
        parse_poly(text, ExprContext(arity=1))


def test_negative_word_power():
    with pytest.raises(NegativeWordPower):
        parse_poly("z0^-1")


def test_scalar_negative_power():
    assert parse_qrat("q^-2") == QRat.q(-2)
    assert parse_qrat("(1 - q)^-1") == 1 / (1 - QRat.q())


def test_gaussian_scalar():
    value = parse_qrat("3/5+4/5*i", gaussian_mode=True)
    assert value.constant() == GaussianRational(Fraction(3, 5), Fraction(4, 5))


def test_parse_basis(half):
    x = parse_basis("e(-1,0,2) + 2 z1", half)
    assert x == (BasisVector.term(-1, 0, 2, half) +
                 BasisVector.term(0, 1, 0, half, 2))


def test_parse_basis_negative_exponent():
    with pytest.raises(PolySyntaxError):
        parse_basis("e(0,-1,0)")


def test_parse_laurent():
    a = parse_laurent("u^-2 + 3 u")
    assert a == LaurentPoly({-2: 1, 1: 3})
    assert parse_laurent("(2 u)^-1") == LaurentPoly.monomial(-1, Fraction(1, 2))


def test_generators_not_in_circle():
    with pytest.raises(UnknownGenerator):
        parse_laurent("z0")


@pytest.mark.parametrize('text', [
    "1 - (1/9) z1 z1'",
    "-q z0' + z1^2",
    "(1-q^2) z1 z1'",
    "z0 z1 z1' z0'",
])
def test_format_reads_back(text):
    poly = parse_poly(text)
    assert format_poly(poly) == text
    assert parse_poly(format_poly(poly)) == poly
