"""The seeded property suites behind qs verify-lemmas."""

import pytest

from qsphere.config import RunConfig
from qsphere.suites import (
    BASIS_AT_ZERO, NORMAL_FORMS_AT_ZERO, PASS, SKIPPED, SUITES, run_suite,
    run_suites)


def test_registry():
    assert list(SUITES) == [
        'relations', 'confluence', 'basis', 'alpha-powers', 'filtration',
        'ideal', 'beta-factor', 'unitary', 'descent', 'obstruction']


@pytest.mark.parametrize('name', [
    'basis', 'alpha-powers', 'filtration', 'beta-factor'])
def test_basis_suites_skip_at_q_zero(name):
    result = run_suite(name, RunConfig(q="0"))
    assert result.status == SKIPPED
    assert result.reason == BASIS_AT_ZERO
    assert result.passed


@pytest.mark.parametrize('name,config', [
    ('relations', RunConfig(n=2)),
    ('relations', RunConfig(n=3, q="1/2")),
    ('confluence', RunConfig(n=1, schema_bound=2)),
    ('confluence', RunConfig(n=3, q="1/2", schema_bound=3)),
    ('basis', RunConfig(q="1/2", samples=10)),
    ('alpha-powers', RunConfig(q="1/3")),
    ('filtration', RunConfig(q="1/2", samples=10)),
    ('ideal', RunConfig(n=2, q="1/3", samples=5)),
    ('beta-factor', RunConfig(q="1/2", samples=5)),
    ('unitary', RunConfig(samples=30, gaussian_mode=True)),
    ('descent', RunConfig(samples=10, depth=3)),
    ('obstruction', RunConfig(depth=2)),
])
def test_suite_passes(name, config):
    result = run_suite(name, config)
    assert result.status == PASS, result.failures
    assert result.checked > 0


def test_relations_suite_at_q_zero():
    result = run_suite('relations', RunConfig(q="0"))
    assert result.status == PASS


def test_seeded_samples_repeat():
    config = RunConfig(samples=20, seed=5)
    first = run_suite('unitary', config)
    second = run_suite('unitary', config)
    assert first == second


def test_run_suites_order():
    results = run_suites(['unitary', 'relations'], RunConfig(samples=5))
    assert [r.name for r in results] == ['unitary', 'relations']


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite('no-such-suite')


def test_result_json():
    data = run_suite('relations', RunConfig()).to_json()
    assert data['name'] == 'relations'
    assert data['status'] == PASS
    assert data['failures'] == []


def test_ideal_suite_skips_at_q_zero():
    result = run_suite('ideal', RunConfig(n=2, q="0", samples=5))
    assert result.status == SKIPPED
    assert result.reason == NORMAL_FORMS_AT_ZERO
    assert result.passed


def test_alpha_powers_grid():
    # j, k in 0..5 for both orders
    result = run_suite('alpha-powers', RunConfig(q="1/2"))
    assert result.checked == 72


def test_filtration_grid():
    result = run_suite('filtration', RunConfig(q="1/3", samples=1))
    # 70 terms of degree <= 3 give 4900 products with two checks each,
    # then 112 star degrees, 20 congruences mod V_2 and one truncation.
    assert result.status == PASS, result.failures
    assert result.checked == 2 * 70 * 70 + 112 + 20 + 1
