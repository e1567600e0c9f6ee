"""Normal forms in A(S^{2n+1}_q)."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from qsphere.coeffq import QMode
from qsphere.errors import ArityMismatch, InvalidQ, NonCanonicalWarning
from qsphere.ncpoly import Letter, NCPoly
from qsphere.parser import ExprContext, parse_poly
from qsphere.quotients import relations
from qsphere.rewrite import (
    CACHE_SIZE, RuleSet, build_rules, check_local_confluence, gap_words,
    get_rules, measure, normalize)


letters = st.builds(Letter, st.integers(min_value=0, max_value=1),
                    st.booleans())
words = st.lists(letters, max_size=3).map(tuple)
small_polys = st.dictionaries(
    words, st.integers(min_value=-2, max_value=2), max_size=3).map(
        lambda terms: NCPoly(1, terms))


def test_normal_z0_star_z0():
    result = normalize(parse_poly("z0' z0"))
    assert str(result) == "1 - q^2 z1 z1'"


def test_normal_z0_star_z0_fixed_q():
    rules = build_rules(1, "1/3")
    result = rules.normalize(parse_poly("z0' z0"))
    assert str(result) == "1 - (1/9) z1 z1'"


@pytest.mark.parametrize('text,expected', [
    ("z1 z0", "q z0 z1"),
    ("z0 z0'", "1 - z1 z1'"),
    ("z1' z0", "q z0 z1'"),
    ("z1' z1", "z1 z1'"),
])
def test_base_rules(text, expected):
    assert normalize(parse_poly(text)) == parse_poly(expected)


def test_gap_rule(gens, q):
    z0, z1, z0s, z1s = gens
    result = normalize(z0 * z1 * z0s)
    assert result == (z1 - z1 * z1 * z1s) * q ** -1


def test_n0_is_circle():
    z0 = NCPoly.generator(0, 0)
    rules = build_rules(0)
    assert rules.normalize(z0 * z0.star()) == NCPoly.one(0)
    assert rules.normalize(z0.star() * z0) == NCPoly.one(0)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_relations_vanish(n):
    rules = get_rules(n, QMode.symbolic())
    for label, relation in relations(n):
        assert rules.normalize(relation).is_zero(), label


def test_normal_words_are_irreducible():
    rules = build_rules(2, "1/2")
    a = parse_poly("z2' z0 z1 z0' z2 + z0' z2' z1 z0",
                   ExprContext(arity=2, qmode=QMode("1/2")))
    assert rules.is_normal(rules.normalize(a))


@settings(max_examples=50, deadline=None)
@given(small_polys, small_polys)
def test_normalize_respects_products(a, b):
    rules = get_rules(1, QMode(Fraction(1, 3)))
    assert rules.normalize(a * b) == rules.normalize(
        rules.normalize(a) * rules.normalize(b))


@settings(max_examples=50, deadline=None)
@given(small_polys)
def test_normalize_idempotent(a):
    rules = get_rules(1, QMode.symbolic())
    once = rules.normalize(a)
    assert rules.normalize(once) == once


@pytest.mark.parametrize('n,q', [(1, None), (2, "1/3")])
def test_critical_pairs_join(n, q):
    rules = build_rules(n, q, schema_check_bound=2)
    reports = check_local_confluence(rules, schema_bound=2)
    assert reports
    assert all(r.joined for r in reports)


def test_critical_pairs_join_n3():
    rules = build_rules(3, "1/2", schema_check_bound=3)
    reports = check_local_confluence(rules, schema_bound=3)
    assert reports
    assert [r for r in reports if not r.joined] == []


def test_rules_decrease_measure():
    rules = build_rules(2)
    for rule in rules.rules:
        for word, _ in rule.rhs:
            assert measure(word, 2) < measure(rule.lhs, 2)


def test_gap_words():
    found = gap_words(1, 2)
    assert len(found) == 3
    assert (Letter(1, False), Letter(1, True)) in found
    assert gap_words(0, 2) == []


def test_q_zero_warns():
    with pytest.warns(NonCanonicalWarning):
        rules = build_rules(1, "0")
    assert not rules.has_gap_rule
    with pytest.raises(InvalidQ):
        rules.gap_rule((Letter(1, False),))


def test_q_zero_base_rules():
    with pytest.warns(NonCanonicalWarning):
        rules = build_rules(1, "0")
    assert rules.normalize(parse_poly("z1 z0")).is_zero()


def test_invalid_arity():
    with pytest.raises(ArityMismatch):
        build_rules(-1)
    with pytest.raises(ArityMismatch):
        get_rules(1, QMode.symbolic()).normalize(NCPoly.generator(2, 0))


def test_invalid_q():
    with pytest.raises(InvalidQ):
        build_rules(1, "3/2")


def test_word_caches_are_bounded():
    rules = RuleSet(1, QMode("1/3"), cache_size=4)
    a = parse_poly("z0' z0 z1 z0' + z1' z0 z0' z1 + z0 z1 z0' z0'",
                   ExprContext(arity=1, qmode=QMode("1/3")))
    first = rules.normalize(a)
    info = rules.cache_info()
    assert info['reduce'].maxsize == 4
    assert info['reduce'].currsize <= 4
    assert info['normal'].currsize <= 4
    assert rules.normalize(a) == first
    assert first == get_rules(1, QMode("1/3")).normalize(a)


def test_default_cache_size():
    info = get_rules(1, QMode.symbolic()).cache_info()
    assert info['normal'].maxsize == CACHE_SIZE
