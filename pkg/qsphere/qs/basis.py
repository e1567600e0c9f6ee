"""$ qs basis, $ qs filtration"""

import click
import cligj

from qsphere.parser import format_poly, parse_basis
from qsphere.qs import helpers, options
from qsphere.suq2 import basis_to_word


def _basis_config(ctx, **overrides):
    config = helpers.get_config(ctx, **overrides)
    if config.q.is_zero:
        raise click.BadParameter(
            "q = 0 unsupported for basis", param_hint='--q')
    return config


@click.command(short_help="Expand an element of A(SU_q(2)) in the basis.")
@options.expr_arg
@options.q_opt
@click.option('--word', is_flag=True, default=False,
              help="Also print the canonical words alpha = z0, beta = z1.")
@options.gaussian_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def basis(ctx, expression, q, word, gaussian_mode, as_json, indent):
    """Write EXPRESSION as a combination of the e(j,k,l).

    EXPRESSION may use z0 (alpha), z1 (beta), their stars, and basis
    elements e(j,k,l) directly.

    \b
        $ qs basis "z0' z0"
        e(0,0,0) - q^2 e(0,1,1)
    """
    config = _basis_config(
        ctx, q=q, gaussian_mode=gaussian_mode or None,
        output=helpers.output_override(as_json))
    with helpers.usage_errors('EXPRESSION'):
        x = parse_basis(expression, config.q, config.gaussian_mode)
    obj = {'input': expression, 'basis': x.to_json(), 'text': str(x)}
    text = str(x)
    if word:
        words = format_poly(basis_to_word(x))
        obj['words'] = words
        text += "\n" + words
    helpers.echo_result(config, obj, text, indent)


@click.command(short_help="Print the filtration degree of an element.")
@options.expr_arg
@options.q_opt
@click.option('--truncate', 'truncate_at', type=click.IntRange(min=0),
              default=None, help="Also print the element modulo V_M.")
@click.option('--part', type=click.IntRange(min=0), default=None,
              help="Also print the terms with k + l = M.")
@options.gaussian_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def filtration(ctx, expression, q, truncate_at, part, gaussian_mode,
               as_json, indent):
    """Print the largest m with EXPRESSION in V_m.

    V_m is spanned by the e(j,k,l) with k + l >= m; the degree of zero
    is printed as inf.
    """
    config = _basis_config(
        ctx, q=q, gaussian_mode=gaussian_mode or None,
        output=helpers.output_override(as_json))
    with helpers.usage_errors('EXPRESSION'):
        x = parse_basis(expression, config.q, config.gaussian_mode)
    degree = x.degree()
    obj = {'input': expression,
           'degree': None if x.is_zero() else degree}
    lines = ["degree: {}".format('inf' if x.is_zero() else degree)]
    if truncate_at is not None:
        rest = x.truncate(truncate_at)
        obj['truncated'] = {'m': truncate_at, 'value': str(rest)}
        lines.append("mod V_{}: {}".format(truncate_at, rest))
    if part is not None:
        piece = x.degree_part(part)
        obj['part'] = {'m': part, 'value': str(piece)}
        lines.append("degree {} part: {}".format(part, piece))
    helpers.echo_result(config, obj, '\n'.join(lines), indent)
