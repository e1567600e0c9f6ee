"""
Helper objects used by multiple CLI commands.
"""

from contextlib import contextmanager
import json

import click

from qsphere.config import RunConfig, load_config_file
from qsphere.errors import (
    ConfigError, ConfigFileError, PolySyntaxError, QSphereError)


def get_config(ctx, **overrides):
    """Resolve the run configuration of a command.

    The --config file of the qs group is overlaid by $QS_DEPTH and then
    by the command's own options; options left unset are ignored.
    """
    path = (ctx.obj or {}).get('config_path')
    try:
        data = load_config_file(path) if path else {}
    except ConfigError as err:
        raise ConfigFileError(path, str(err))
    try:
        return RunConfig.from_sources(data=data, **overrides)
    except ConfigError as err:
        raise click.UsageError(str(err))


def show_syntax_error(err):
    """Print the expression with a caret under the offending character."""
    click.echo("Expression Error:", err=True)
    click.echo('  %s' % err.text, err=True)
    click.echo('  ' + ' ' * err.offset + "^", err=True)


@contextmanager
def usage_errors(param_hint=None):
    """Report library errors as click usage errors (exit status 2)."""
    try:
        yield
    except PolySyntaxError as err:
        show_syntax_error(err)
        raise click.BadParameter(str(err), param_hint=param_hint)
    except QSphereError as err:
        if param_hint:
            raise click.BadParameter(str(err), param_hint=param_hint)
        raise click.UsageError(str(err))


def echo_result(config, obj, text, indent=None):
    """Print obj as JSON when configured to, else text."""
    if config.output == 'json':
        click.echo(json.dumps(obj, indent=indent))
    else:
        click.echo(text)


def output_override(as_json):
    return 'json' if as_json else None
