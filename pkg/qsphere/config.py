"""Run configuration

A RunConfig starts from the class defaults, which are overlaid by a JSON
configuration file, then by the QS_DEPTH environment variable (depth
only), then by explicit options.
"""

import json
import logging
import os

import attr

from qsphere.coeffq import QMode
from qsphere.errors import ConfigError, InvalidQ


log = logging.getLogger(__name__)

DEPTH_ENV = 'QS_DEPTH'


def _integer(value):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError("Not an integer: {!r}".format(value))


def _qmode(value):
    if isinstance(value, QMode):
        return value
    try:
        return QMode.parse(value)
    except InvalidQ as err:
        raise ConfigError(str(err))


def _at_least(bound):
    def validator(instance, attribute, value):
        if value < bound:
            raise ConfigError("{} must be at least {}, got {}".format(
                attribute.name, bound, value))
    return validator


def _output(instance, attribute, value):
    if value not in ('text', 'json'):
        raise ConfigError(
            "output must be 'text' or 'json', got {!r}".format(value))


@attr.s(slots=True, frozen=True)
class RunConfig(object):
    """Parameters shared by qs commands.

    Attributes
    ----------
    n : int
        Sphere arity.
    q : QMode
        Symbolic q or a rational in [0, 1).
    gaussian_mode : bool
        Allow Gaussian rational scalars.
    depth : int
        Filtration depth M of descents.
    schema_bound : int
        Longest gap rule word checked by the confluence audit.
    output : str
        'text' or 'json'.
    seed : int
        Seed of the sampled property suites.
    samples : int
        Number of random samples per sampled property.
    """

    n = attr.ib(default=1, converter=_integer, validator=_at_least(0))
    q = attr.ib(default=None, converter=_qmode)
    gaussian_mode = attr.ib(default=False, converter=bool)
    depth = attr.ib(default=4, converter=_integer, validator=_at_least(1))
    schema_bound = attr.ib(default=3, converter=_integer,
                           validator=_at_least(1))
    output = attr.ib(default='text', validator=_output)
    seed = attr.ib(default=0, converter=_integer)
    samples = attr.ib(default=100, converter=_integer, validator=_at_least(1))

    @classmethod
    def field_names(cls):
        return [a.name for a in attr.fields(cls)]

    @classmethod
    def from_sources(cls, path=None, env=None, data=None, **overrides):
        """Merge a config file, the environment, and explicit values.

        Parameters
        ----------
        path : str, optional
            JSON file of RunConfig fields.
        env : mapping, optional
            Defaults to os.environ.
        data : dict, optional
            Config file contents already read with load_config_file,
            used in place of path.
        overrides : dict
            Values that are None are ignored.

        Raises
        ------
        ConfigError
        """
        data = dict(data or {})
        if path:
            data.update(load_config_file(path))
        env = os.environ if env is None else env
        if env.get(DEPTH_ENV):
            data['depth'] = env[DEPTH_ENV]
        data.update({k: v for k, v in overrides.items() if v is not None})
        unknown = set(data) - set(cls.field_names())
        if unknown:
            raise ConfigError(
                "Unknown configuration keys: {}".format(
                    ', '.join(sorted(unknown))))
        log.debug("Run configuration data: %r", data)
        return cls(**data)

    def replace(self, **overrides):
        """A copy with the non-None overrides applied."""
        return attr.evolve(
            self, **{k: v for k, v in overrides.items() if v is not None})

    def to_json(self):
        data = attr.asdict(self)
        data['q'] = str(self.q)
        return data


def load_config_file(path):
    """Read a JSON object of RunConfig fields."""
    try:
        with open(path) as f:
            data = json.load(f)
    except (IOError, OSError, ValueError) as err:
        raise ConfigError("Can't read config file {}: {}".format(path, err))
    if not isinstance(data, dict):
        raise ConfigError("Config file {} is not a JSON object".format(path))
    return data
