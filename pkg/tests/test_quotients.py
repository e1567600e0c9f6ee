"""Commutator ideals, the circle algebra and homomorphism checks."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from qsphere.coeffq import GaussianRational, QMode
from qsphere.errors import ArityMismatch, NotCertifiable, NotUnit
from qsphere.ncpoly import NCPoly
from qsphere.parser import ExprContext, parse_poly
from qsphere.quotients import (
    CircleMap, HomSpec, LaurentPoly, character_eval, check_homomorphism,
    commutator_ideal_certificate, factor_element, factor_through_beta,
    induced_circle_map, is_unitary_laurent, project_to_circle, quotient_map,
    relations)
from qsphere.rewrite import get_rules
from qsphere.suq2 import BasisVector


def naive_map():
    qmode = QMode(Fraction(1, 2))
    return HomSpec(1, QMode(Fraction(1, 3)), 'suq2', qmode,
                   [BasisVector.generator(0, qmode),
                    BasisVector.generator(1, qmode)])


def test_relation_labels():
    labels = [label for label, _ in relations(1)]
    assert labels == ['commute(0,1)', 'cross(0,1)', 'cross(1,0)',
                      'normal(0)', 'normal(1)', 'sphere']


def test_naive_map_violations(half):
    check = check_homomorphism(naive_map())
    assert not check.ok
    assert check.first[0] == 'commute(0,1)'
    labels = set(label for label, _ in check.violations)
    assert labels == {'commute(0,1)', 'cross(0,1)', 'cross(1,0)', 'normal(0)'}
    residues = dict(check.violations)
    assert residues['normal(0)'] == BasisVector.term(
        0, 1, 1, half, Fraction(-5, 36))


def test_quotient_maps_are_homomorphisms(half):
    assert check_homomorphism(quotient_map(2, 'suq2', half)).ok
    assert check_homomorphism(quotient_map(2, 'sphere')).ok


def test_identity_of_sphere():
    qmode = QMode(Fraction(1, 3))
    images = [NCPoly.generator(2, i) for i in range(3)]
    hom = HomSpec(2, qmode, 'sphere', qmode, images, 2)
    assert check_homomorphism(hom).ok


def test_homspec_from_json(half):
    hom = HomSpec.from_json({
        'source': {'n': 1, 'q': '1/3'}, 'target': 'suq2',
        'target_q': '1/2', 'images': {'z0': 'z0', 'z1': 'e(0,1,0)'}})
    assert hom.images[1] == BasisVector.generator(1, half)
    assert hom.to_json()['images'] == {'z0': 'e(1,0,0)', 'z1': 'e(0,1,0)'}


def test_homspec_missing_image():
    with pytest.raises(ArityMismatch):
        HomSpec.from_json({'source': {'n': 1}, 'images': {'z0': 'z0'}})


@pytest.mark.parametrize('n,text', [
    (1, "z1"),
    (1, "z1'"),
    (2, "z2 z1'"),
    (2, "z0' z1 z0 + 3 z2"),
    (1, "z0 z0' - 1"),
])
def test_certificates_verify(n, text):
    target = parse_poly(text, ExprContext(arity=n))
    cert = commutator_ideal_certificate(n, target)
    assert cert.verify()


def test_certificate_fixed_q():
    qmode = QMode(Fraction(1, 3))
    target = parse_poly("z2' z0", ExprContext(arity=2, qmode=qmode))
    cert = commutator_ideal_certificate(2, target, qmode)
    assert cert.terms
    assert cert.verify(get_rules(2, qmode))
    assert cert.star().verify(get_rules(2, qmode))


def test_zero_certificate_is_empty(gens, q):
    z0, z1, _, _ = gens
    cert = commutator_ideal_certificate(1, z1 * z0 - z0 * z1 * q)
    assert cert.terms == ()
    assert cert.verify()


def test_not_certifiable():
    with pytest.raises(NotCertifiable):
        commutator_ideal_certificate(1, parse_poly("z0 + z1"))


def test_projection(gens):
    z0, z1, z0s, _ = gens
    assert project_to_circle(z0s * z0) == LaurentPoly.scalar(1)
    assert project_to_circle(z0 * z0 * z0s) == LaurentPoly.unitary()
    assert project_to_circle(z0s * z0s) == LaurentPoly.monomial(-2)
    assert project_to_circle(z1 + z0 * z1).is_zero()


def test_projection_is_multiplicative(gens):
    z0, z1, z0s, z1s = gens
    a = z0s * z0 + z1 * z0 * 2
    b = z0 * z0s * z0 - z1s
    assert project_to_circle(a * b) == (
        project_to_circle(a) * project_to_circle(b))


def test_character_eval(gens):
    z0, _, z0s, _ = gens
    assert character_eval(z0 * z0, -1) == 1
    lam = GaussianRational(Fraction(3, 5), Fraction(4, 5))
    assert character_eval(z0 * z0s, lam) == 1
    assert character_eval(z0, lam) == lam


def test_character_requires_unit(gens):
    with pytest.raises(NotUnit):
        character_eval(gens[0], 2)


def test_unitary_monomial():
    lam = GaussianRational(Fraction(3, 5), Fraction(4, 5))
    verdict = is_unitary_laurent(LaurentPoly.monomial(2, lam))
    assert verdict.unitary
    assert verdict.exponent == 2
    assert verdict.coeff == lam


@pytest.mark.parametrize('terms,exponent,coeff', [
    ({0: 1, 1: 1}, 1, 1),
    ({1: 2}, 0, 3),
    ({}, 0, -1),
])
def test_not_unitary(terms, exponent, coeff):
    verdict = is_unitary_laurent(LaurentPoly(terms))
    assert not verdict.unitary
    assert verdict.exponent == exponent
    assert verdict.coeff == coeff


def test_laurent_star():
    a = LaurentPoly({2: GaussianRational(0, 1), -1: 3})
    assert a.star() == LaurentPoly({-2: GaussianRational(0, -1), 1: 3})


@pytest.mark.parametrize('term', [(-2, 1, 0), (1, 0, 2), (0, 3, 1), (-1, 0, 1)])
def test_factor_through_beta(term, half):
    coeff, rest, generator = factor_through_beta(term, half)
    assert generator == ('beta' if term[1] else "beta'")
    product = (BasisVector.term(*rest, qmode=half) *
               factor_element(generator, half) * coeff)
    assert product == BasisVector.term(*term, qmode=half)


def test_factor_through_beta_coefficient(half):
    coeff, rest, generator = factor_through_beta((-2, 1, 0), half)
    assert coeff == 4
    assert rest == (-2, 0, 0)


def test_induced_circle_map(half):
    hom = quotient_map(1, 'suq2', half)
    circle = induced_circle_map(hom)
    assert circle(LaurentPoly.monomial(-3)) == LaurentPoly.monomial(-3)


def test_certificate_at_q_zero():
    qmode = QMode("0")
    target = parse_poly("z1", ExprContext(arity=1, qmode=qmode))
    cert = commutator_ideal_certificate(1, target, qmode)
    assert cert.verify() in (True, None)


def circle_hom(exponent, sign, half):
    image = BasisVector.term(exponent, 0, 0, half, sign)
    image = image + BasisVector.generator(1, half)
    return HomSpec(1, half, 'suq2', half,
                   [image, BasisVector.generator(1, half)])


laurents = st.dictionaries(
    st.integers(min_value=-2, max_value=2),
    st.integers(min_value=-3, max_value=3)).map(LaurentPoly)
circle_images = st.tuples(st.integers(min_value=-2, max_value=2),
                          st.sampled_from([1, -1]))


@settings(max_examples=30, deadline=None)
@given(circle_images, circle_images, laurents, laurents)
def test_induced_circle_map_is_functorial(first, second, p, r):
    half = QMode(Fraction(1, 2))
    f = induced_circle_map(circle_hom(first[0], first[1], half))
    g = induced_circle_map(circle_hom(second[0], second[1], half))
    assert f.image == LaurentPoly.monomial(first[0], first[1])
    assert f(p * r) == f(p) * f(r)
    assert f(p.star()) == f(p).star()
    assert g(f(p)) == CircleMap(g(f.image))(p)
