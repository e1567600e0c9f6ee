"""A(SU_q(2)) in the basis e(j,k,l)."""

from fractions import Fraction
import itertools
import math

from hypothesis import given, settings, strategies as st
import pytest

from qsphere.coeffq import QMode
from qsphere.errors import QModeMismatch, QZeroUnsupported
from qsphere.ncpoly import Letter, NCPoly
from qsphere.parser import parse_poly
from qsphere.suq2 import (
    BasisVector, alpha_power_product, alpha_star_power_product,
    basis_to_word, word_to_basis)


HALF = QMode(Fraction(1, 2))

terms = st.tuples(st.integers(min_value=-2, max_value=2),
                  st.integers(min_value=0, max_value=2),
                  st.integers(min_value=0, max_value=2))
vectors = st.dictionaries(terms, st.integers(min_value=-2, max_value=2),
                          min_size=1, max_size=2).map(
                              lambda found: BasisVector(found, HALF))


@pytest.fixture
def alpha():
    return BasisVector.generator(0)


@pytest.fixture
def beta():
    return BasisVector.generator(1)


def test_commutation(alpha, beta, q):
    assert beta * alpha == alpha * beta * q
    assert beta.star() * alpha == alpha * beta.star() * q
    assert beta * beta.star() == beta.star() * beta


def test_unitarity(alpha, beta, q):
    one = BasisVector.one()
    assert alpha * alpha.star() == one - beta * beta.star()
    assert alpha.star() * alpha == one - beta * beta.star() * q ** 2


def test_star(alpha):
    assert BasisVector.term(2, 1, 0).star() == BasisVector.term(-2, 0, 1)
    assert alpha.star() == BasisVector.term(-1, 0, 0)


def test_degree():
    x = BasisVector.term(0, 1, 2) + BasisVector.term(3, 2, 0)
    assert x.degree() == 2
    assert x.truncate(3) == BasisVector.term(3, 2, 0)
    assert x.degree_part(3) == BasisVector.term(0, 1, 2)
    assert BasisVector.zero().degree() == math.inf


def test_word_to_basis(q):
    found = word_to_basis(parse_poly("z0' z0"))
    assert found == BasisVector({(0, 0, 0): 1, (0, 1, 1): -q ** 2})


def test_basis_to_word():
    word = basis_to_word(BasisVector.term(-1, 1, 1))
    assert word == NCPoly.monomial(
        1, (Letter(1, False), Letter(1, True), Letter(0, True)))


@pytest.mark.parametrize('j,k', list(itertools.product(range(6), repeat=2)))
def test_alpha_power_products(j, k):
    word = (Letter(0, False),) * j + (Letter(0, True),) * k
    assert alpha_power_product(j, k) == word_to_basis(
        NCPoly.monomial(1, word))
    word = (Letter(0, True),) * j + (Letter(0, False),) * k
    assert alpha_star_power_product(j, k) == word_to_basis(
        NCPoly.monomial(1, word))


def test_alpha_power_products_mod_v2(alpha):
    alpha_star = alpha.star()
    for j in range(1, 6):
        assert (alpha * alpha_star ** j - alpha_star ** (j - 1)).degree() >= 2
        assert (alpha_star * alpha ** j - alpha ** (j - 1)).degree() >= 2
        assert (alpha_star ** j * alpha - alpha_star ** (j - 1)).degree() >= 2
        assert (alpha ** j * alpha_star - alpha ** (j - 1)).degree() >= 2


@settings(max_examples=40, deadline=None)
@given(vectors, vectors, vectors)
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@settings(max_examples=40, deadline=None)
@given(vectors, vectors)
def test_star_antimultiplicative(x, y):
    assert (x * y).star() == y.star() * x.star()


@settings(max_examples=40, deadline=None)
@given(vectors, vectors)
def test_filtration_is_multiplicative(x, y):
    assert (x * y).degree() >= x.degree() + y.degree()


def test_q_zero_unsupported():
    with pytest.raises(QZeroUnsupported):
        BasisVector.one(QMode("0"))


def test_qmode_mismatch():
    with pytest.raises(QModeMismatch):
        BasisVector.one(HALF) + BasisVector.one()


def test_fixed_q_coefficients(q):
    x = BasisVector.term(1, 0, 0, HALF, 1 - q ** 2)
    assert x.coeff(1, 0, 0) == Fraction(3, 4)
