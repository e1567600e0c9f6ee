"""Run configuration layering."""

from fractions import Fraction

import pytest

from qsphere.config import RunConfig, load_config_file
from qsphere.errors import ConfigError


def test_defaults():
    config = RunConfig()
    assert config.n == 1
    assert config.q.is_symbolic
    assert config.depth == 4
    assert config.schema_bound == 3
    assert config.output == 'text'
    assert config.samples == 100


def test_overrides():
    config = RunConfig.from_sources(env={}, depth=6, q="1/3", n=None)
    assert config.depth == 6
    assert config.q.value == Fraction(1, 3)
    assert config.n == 1


def test_env_depth():
    assert RunConfig.from_sources(env={'QS_DEPTH': '7'}).depth == 7
    assert RunConfig.from_sources(env={'QS_DEPTH': '7'}, depth=2).depth == 2


def test_file_then_env_then_options(config_file):
    path = config_file({'n': 2, 'q': '1/3', 'depth': 5, 'seed': 11})
    config = RunConfig.from_sources(path, env={'QS_DEPTH': '7'}, seed=3)
    assert config.n == 2
    assert config.q.value == Fraction(1, 3)
    assert config.depth == 7
    assert config.seed == 3


def test_data_overlay():
    config = RunConfig.from_sources(env={}, data={'gaussian_mode': True})
    assert config.gaussian_mode


@pytest.mark.parametrize('data', [
    {'colour': 'red'},
    {'q': '2'},
    {'depth': 0},
    {'n': 'two'},
    {'output': 'xml'},
    {'samples': 0},
])
def test_invalid_config(data):
    with pytest.raises(ConfigError):
        RunConfig.from_sources(env={}, data=data)


def test_unreadable_file(tmpdir, config_file):
    with pytest.raises(ConfigError):
        load_config_file(str(tmpdir.join('missing.json')))
    with pytest.raises(ConfigError):
        load_config_file(config_file("{not json"))
    with pytest.raises(ConfigError):
        load_config_file(config_file([1, 2]))


def test_replace():
    config = RunConfig(depth=3)
    assert config.replace(depth=None).depth == 3
    assert config.replace(output='json').output == 'json'


def test_to_json():
    data = RunConfig(q="1/2").to_json()
    assert data['q'] == "1/2"
    assert data['depth'] == 4
