"""
Registry of common qs CLI options.  See cligj for more options.

--algebra: sphere, suq2 or circle.  In qs-star
--case: A or B, the form of phi(z0).  In qs-descent
--config: JSON file of run configuration.  On the qs group
--depth: filtration depth M.  In qs-descent, qs-obstruct, qs-verify-lemmas
--gaussian: allow the imaginary unit i in coefficients.
    In qs-normalize, qs-circle, qs-unitary and others
--json: print JSON instead of text.  In every command
--n: sphere arity.  In qs-normalize, qs-star, qs-confluence, qs-ideal-cert,
    qs-circle, qs-verify-lemmas
--q: deformation parameter, 'q' for symbolic or a rational in [0, 1).
    In most commands
--qprime: target parameter.  In qs-descent
--samples: random samples per sampled property.  In qs-verify-lemmas
--schema-bound: longest gap rule word audited.
    In qs-confluence, qs-verify-lemmas
--seed: seed of the property suites.  In qs-verify-lemmas
--spec: JSON file describing a candidate homomorphism.
    In qs-check-hom, qs-obstruct
"""

from fractions import Fraction
import logging

import click

from qsphere.coeffq import QMode
from qsphere.errors import InvalidQ


logger = logging.getLogger(__name__)


def qmode_handler(ctx, param, value):
    """Return a QMode, or None when the option is absent."""
    if value is None:
        return None
    try:
        return QMode.parse(value)
    except InvalidQ as err:
        raise click.BadParameter(str(err), param=param, param_hint=param.name)


def fixed_q_handler(ctx, param, value):
    """Return a Fraction, or None when the option is absent."""
    if value is None:
        return None
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise click.BadParameter(
            "{!r} is not a rational number".format(value),
            param=param, param_hint=param.name)


# Polynomial expression, as text in the qs grammar.
expr_arg = click.argument('expression')

arity_opt = click.option(
    '--n', 'n', type=click.IntRange(min=0), default=None,
    help="Sphere arity: generators z0..zn (default 1).")

q_opt = click.option(
    '--q', 'q', default=None, callback=qmode_handler,
    help="Deformation parameter: 'q' for symbolic (default) or a "
         "rational such as 1/3.")

# Fixed source parameter for the descent and obstruction commands.
fixed_q_opt = click.option(
    '--q', 'q', required=True, callback=fixed_q_handler,
    help="Source parameter, a rational in [0, 1).")

qprime_opt = click.option(
    '--qprime', required=True, callback=fixed_q_handler,
    help="Target parameter q', a rational in (0, 1).")

case_opt = click.option(
    '--case', type=click.Choice(['A', 'B']), default='A',
    help="phi(z0) = lambda alpha + x (A) or lambda alpha* + x (B).")

depth_opt = click.option(
    '--depth', type=int, default=None,
    help="Filtration depth M (default 4, or $QS_DEPTH).")

gaussian_opt = click.option(
    '--gaussian', 'gaussian_mode', is_flag=True, default=False,
    help="Allow Gaussian rational coefficients written with i.")

json_opt = click.option(
    '--json', 'as_json', is_flag=True, default=False,
    help="Print JSON instead of text.")

schema_bound_opt = click.option(
    '--schema-bound', type=int, default=None,
    help="Longest gap rule word checked by the audit (default 3).")

spec_opt = click.option(
    '--spec', 'spec_path', required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="JSON file with the source, target, and images of z0..zn.")
