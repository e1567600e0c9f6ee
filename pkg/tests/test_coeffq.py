"""Exact scalars and the rational function field Q(q)."""

from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from qsphere.coeffq import (
    GaussianRational, QMode, QRat, qrat_arith, qrat_eval)
from qsphere.errors import DivisionByZero, InvalidQ, PoleAtPoint


coeff_lists = st.lists(st.integers(min_value=-3, max_value=3), max_size=4)
nonzero_lists = coeff_lists.filter(any)
qrats = st.builds(QRat.from_coeffs, coeff_lists, nonzero_lists)
nonzero_qrats = st.builds(QRat.from_coeffs, nonzero_lists, nonzero_lists)


def test_gaussian_demotes_to_fraction():
    value = GaussianRational(3, 0)
    assert isinstance(value, Fraction)
    assert value == 3


def test_gaussian_norm_one():
    lam = GaussianRational(Fraction(3, 5), Fraction(4, 5))
    assert lam.norm() == 1
    assert lam * lam.conjugate() == 1
    assert isinstance(lam * lam.conjugate(), Fraction)


def test_gaussian_str():
    assert str(GaussianRational(Fraction(3, 5), Fraction(4, 5))) == "3/5+4/5*i"
    assert str(GaussianRational(0, -1)) == "-i"


def test_gaussian_division():
    i = GaussianRational(0, 1)
    assert 1 / i == -i
    with pytest.raises(DivisionByZero):
        i / Fraction(0)


def test_common_factor_cancels():
    # (q^2 - 1) / (2 - 2q) = -(1 + q) / 2
    value = QRat.from_coeffs([-1, 0, 1], [2, -2])
    assert value == QRat.from_coeffs([-1, -1], [2])
    assert str(value) == "-1/2-1/2*q"


def test_canonical_denominator():
    # Scaling numerator and denominator together does not change the value
    # or its printed form.
    a = QRat.from_coeffs([1], [1, -1])
    b = QRat.from_coeffs([Fraction(-1, 3)], [Fraction(-1, 3), Fraction(1, 3)])
    assert a == b
    assert hash(a) == hash(b)
    assert str(a) == str(b) == "-1/(-1+q)"


def test_from_coeffs_zero_denominator():
    with pytest.raises(DivisionByZero):
        QRat.from_coeffs([1], [0, 0])


def test_cancellation(q):
    assert (1 - q ** 2) / (1 - q) == 1 + q


def test_canonical_constant(q):
    value = q / (2 * q)
    assert value == Fraction(1, 2)
    assert value.is_constant()
    assert hash(value) == hash(Fraction(1, 2))


def test_str(q):
    assert str(1 - q ** 2) == "1-q^2"
    assert str(1 / q ** 2) == "1/q^2"
    assert str(QRat(Fraction(1, 9))) == "1/9"


def test_negative_powers(q):
    assert QRat.q(-2) == 1 / q ** 2
    assert q ** -1 * q == 1


def test_evaluate(q):
    assert (1 - q ** 2).evaluate(Fraction(1, 3)) == Fraction(8, 9)
    assert qrat_eval(q / (1 + q), "1/2") == Fraction(1, 3)


def test_pole_at_point(q):
    with pytest.raises(PoleAtPoint):
        (1 / (1 - q)).evaluate(1)


def test_division_by_zero(q):
    with pytest.raises(DivisionByZero):
        q / QRat(0)
    with pytest.raises(ZeroDivisionError):
        QRat(0).inverse()


def test_qrat_arith(q):
    assert qrat_arith(q, q, 'div') == 1
    with pytest.raises(ValueError):
        qrat_arith(q, q, 'pow')


def test_conjugate_gaussian():
    i = QRat(GaussianRational(0, 1))
    assert i.conjugate() == -i
    assert not i.is_real()


def test_sign(q):
    assert (q - 1).sign() == -1
    assert (1 - q).sign() == 1
    assert QRat(0).sign() == 0


@given(qrats, qrats, qrats)
def test_distributive(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(qrats, qrats)
def test_commutative(a, b):
    assert a * b == b * a
    assert hash(a * b) == hash(b * a)


@given(qrats, nonzero_qrats)
def test_division_inverts_multiplication(a, b):
    assert (a / b) * b == a


@given(qrats)
def test_additive_inverse(a):
    assert (a - a).is_zero()
    assert a + (-a) == 0


def test_qmode_parse():
    assert QMode.parse("1/3").value == Fraction(1, 3)
    assert QMode.parse("q").is_symbolic
    assert QMode.parse(None).is_symbolic
    assert QMode.parse("0").is_zero
    assert str(QMode.parse("2/7")) == "2/7"


@pytest.mark.parametrize('value', ["1", "3/2", "-1/2", "abc"])
def test_qmode_invalid(value):
    with pytest.raises(InvalidQ):
        QMode(value)


def test_qmode_power():
    third = QMode(Fraction(1, 3))
    assert third.power(2) == Fraction(1, 9)
    assert third.power(-1) == 3
    with pytest.raises(DivisionByZero):
        QMode("0").power(-1)


def test_qmode_specialize(q):
    assert QMode("1/2").specialize(1 - q ** 2) == Fraction(3, 4)
    assert QMode.symbolic().specialize(1 - q ** 2) == 1 - q ** 2


def test_gaussian_function_demotes(q):
    i = QRat(GaussianRational(0, 1))
    value = i * q / (1 + q)
    assert not value.is_real()
    assert value.conjugate() == -value
    product = value * value.conjugate()
    assert product.is_real()
    assert product == q ** 2 / (1 + q) ** 2
    assert str(i * q) == "(i)*q"
