"""$ qs normalize, $ qs star, $ qs confluence"""

import click
import cligj

from qsphere.parser import (
    ExprContext, parse_basis, parse_laurent, parse_poly)
from qsphere.qs import helpers, options
from qsphere.rewrite import build_rules, check_local_confluence, get_rules


@click.command(short_help="Print the normal form of a polynomial.")
@options.expr_arg
@options.arity_opt
@options.q_opt
@options.gaussian_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def normalize(ctx, expression, n, q, gaussian_mode, as_json, indent):
    """Reduce EXPRESSION to its canonical normal form in A(S^{2n+1}_q).

    Generators are written z0, z1, ...; a prime marks the star.

    \b
        $ qs normalize --n 1 --q 1/3 "z0' z0"
        1 - (1/9) z1 z1'
    """
    config = helpers.get_config(
        ctx, n=n, q=q, gaussian_mode=gaussian_mode or None,
        output=helpers.output_override(as_json))
    with helpers.usage_errors('EXPRESSION'):
        poly = parse_poly(expression, ExprContext(
            arity=config.n, gaussian_mode=config.gaussian_mode,
            qmode=config.q))
    with helpers.usage_errors():
        result = get_rules(config.n, config.q).normalize(poly)
    helpers.echo_result(
        config,
        {'input': expression, 'q': str(config.q),
         'normal_form': result.to_json(), 'text': str(result)},
        str(result), indent)


@click.command(short_help="Print the star of an element.")
@options.expr_arg
@click.option('--algebra', type=click.Choice(['sphere', 'suq2', 'circle']),
              default='sphere', help="Algebra of EXPRESSION.")
@options.arity_opt
@options.q_opt
@options.gaussian_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def star(ctx, expression, algebra, n, q, gaussian_mode, as_json, indent):
    """Apply the involution to EXPRESSION.

    Sphere elements are brought to normal form, A(SU_q(2)) elements are
    written in the basis e(j,k,l), and circle elements in u.
    """
    config = helpers.get_config(
        ctx, n=n, q=q, gaussian_mode=gaussian_mode or None,
        output=helpers.output_override(as_json))
    with helpers.usage_errors('EXPRESSION'):
        if algebra == 'sphere':
            value = parse_poly(expression, ExprContext(
                arity=config.n, gaussian_mode=config.gaussian_mode,
                qmode=config.q))
            result = get_rules(config.n, config.q).normalize(value.star())
        elif algebra == 'suq2':
            result = parse_basis(
                expression, config.q, config.gaussian_mode).star()
        else:
            result = parse_laurent(
                expression, config.q, config.gaussian_mode).star()
    helpers.echo_result(
        config, {'input': expression, 'algebra': algebra,
                 'star': result.to_json(), 'text': str(result)},
        str(result), indent)


@click.command(short_help="Audit the critical pairs of the rule set.")
@options.arity_opt
@options.q_opt
@options.schema_bound_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def confluence(ctx, n, q, schema_bound, as_json, indent):
    """Check that every critical pair of the rewrite rules joins.

    Exits with status 1 if any pair fails to join.
    """
    config = helpers.get_config(
        ctx, n=n, q=q, schema_bound=schema_bound,
        output=helpers.output_override(as_json))
    with helpers.usage_errors():
        rules = build_rules(config.n, config.q, config.schema_bound)
        reports = check_local_confluence(rules, config.schema_bound)
    unjoined = [r for r in reports if not r.joined]

    lines = ["{} critical pairs, {} unjoined".format(
        len(reports), len(unjoined))]
    for report in unjoined:
        lines.append("  {}: {} ({}) != {} ({})".format(
            report.to_json()['overlap'], report.left_nf, report.rules[0],
            report.right_nf, report.rules[1]))
    helpers.echo_result(
        config,
        {'n': config.n, 'q': str(config.q),
         'schema_bound': config.schema_bound, 'pairs': len(reports),
         'unjoined': [r.to_json() for r in unjoined]},
        '\n'.join(lines), indent)
    if unjoined:
        ctx.exit(1)
