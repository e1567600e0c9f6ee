"""
Main command group for qsphere's CLI.

Subcommands developed as a part of the qsphere package have their own
modules under ``qsphere.qs`` (like ``qsphere/qs/descent.py``) and are
added to the group below.

Users may create their own ``qs`` subcommands by writing modules that
register entry points in qsphere's 'qsphere.qs_plugins' group:

    entry_points='''
        [qsphere.qs_plugins]
        mycommand=mypackage.cli:mycommand
    '''
"""


from importlib.metadata import entry_points
import logging
import sys

from click_plugins import with_plugins
import click
import cligj

import qsphere
from qsphere.qs import algebra, basis, descent, ideal, verify


def configure_logging(verbosity):
    log_level = max(10, 30 - 10 * verbosity)
    logging.basicConfig(stream=sys.stderr, level=log_level)


def plugin_entry_points(group='qsphere.qs_plugins'):
    eps = entry_points()
    if hasattr(eps, 'select'):
        return list(eps.select(group=group))
    return list(eps.get(group, []))


@with_plugins(plugin_entry_points())
@click.group()
@cligj.verbose_opt
@cligj.quiet_opt
@click.option(
    '--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
    help="JSON file of run configuration (n, q, depth, ...).")
@click.version_option(version=qsphere.__version__, message="%(version)s")
@click.pass_context
def main_group(ctx, verbose, quiet, config_path):
    """Quantum sphere algebra command line interface.
    """
    verbosity = verbose - quiet
    configure_logging(verbosity)
    ctx.obj = {}
    ctx.obj['verbosity'] = verbosity
    ctx.obj['config_path'] = config_path


main_group.add_command(algebra.normalize)
main_group.add_command(algebra.star)
main_group.add_command(algebra.confluence)
main_group.add_command(basis.basis)
main_group.add_command(basis.filtration)
main_group.add_command(ideal.ideal_cert)
main_group.add_command(ideal.circle)
main_group.add_command(ideal.unitary)
main_group.add_command(ideal.check_hom)
main_group.add_command(descent.descent)
main_group.add_command(descent.obstruct)
main_group.add_command(verify.verify_lemmas)
