"""$ qs descent, $ qs obstruct"""

import click
import cligj

from qsphere.coeffq import QMode
from qsphere.descent import (
    GeneratorForm, Stalled, is_power, run_descent,
    verify_nonvanishing_obstruction)
from qsphere.parser import parse_basis
from qsphere.qs import helpers, options
from qsphere.qs.ideal import load_hom


def _descent_text(result, power):
    lines = []
    if result.certified:
        lines.append("verdict: zero to depth {}".format(result.depth))
    elif result.term is None:
        lines.append("verdict: stalled at m = {}: {}".format(
            result.m, result.reason))
    else:
        lines.append("verdict: stalled at m = {} on e{}".format(
            result.m, tuple(result.term)))
    if power.found:
        lines.append("power: q = q'^{}".format(power.m))
    else:
        lines.append("power: none")
    for step in result.steps:
        for term, factor in step.conditions:
            lines.append("m = {}: e{} factor {}".format(
                step.m, tuple(term), factor))
    if result.certified:
        lines.append("remainder: {}".format(result.remainder))
    return '\n'.join(lines)


@click.command(short_help="Run the filtration descent on an image.")
@options.fixed_q_opt
@options.qprime_opt
@options.case_opt
@click.option('--y', 'y_text', required=True,
              help="Candidate image of z_i in A(SU_q'(2)), in V_1.")
@options.depth_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def descent(ctx, q, qprime, case, y_text, depth, as_json, indent):
    """Force the coefficients of Y to vanish level by level.

    Prints the zero certificate, or the level at which the descent
    stalls. Exits with status 1 if the descent stalls.

    \b
        $ qs descent --q 1/3 --qprime 1/2 --case A --y "e(0,1,0)" --depth 4
    """
    config = helpers.get_config(
        ctx, depth=depth, output=helpers.output_override(as_json))
    with helpers.usage_errors('--qprime'):
        power = is_power(q, qprime)
        qmode = QMode(qprime)
    with helpers.usage_errors('--y'):
        y = parse_basis(y_text, qmode)
        result = run_descent(y, q, case, config.depth)
    obj = dict(result.to_json(), q=str(q), qprime=str(qprime), case=case,
               y=str(y), power=power.m)
    helpers.echo_result(config, obj, _descent_text(result, power), indent)
    if isinstance(result, Stalled):
        ctx.exit(1)


def _describe(report):
    lines = []
    check = report.homomorphism
    if check.ok:
        lines.append("homomorphism: ok")
    else:
        lines.append("homomorphism: violates {}".format(
            ', '.join(label for label, _ in check.violations)))
    if report.failing_stage == 'applicability':
        lines.append("conclusion: {}".format(report.conclusion))
        return '\n'.join(lines)
    if report.power.found:
        lines.append("power: q = q'^{}".format(report.power.m))
    else:
        lines.append("power: none")
    form = report.decomposition
    if isinstance(form, GeneratorForm):
        lines.append("decomposition: case {}, lambda = {}".format(
            form.case, form.lam))
    else:
        lines.append("decomposition: circle part {} is not lambda u^(+-1)"
                     .format(form.witness))
    for i, result in report.descents:
        if getattr(result, 'certified', False):
            verdict = "zero to depth {}".format(result.depth)
        elif isinstance(result, Stalled):
            verdict = "stalled at m = {}".format(result.m)
        else:
            verdict = "error: {}".format(result)
        lines.append("descent z{}: {}".format(i, verdict))
    lines.append("conclusion: {}".format(report.conclusion))
    return '\n'.join(lines)


@click.command(short_help="Run the non-isomorphism obstruction.")
@options.spec_opt
@options.depth_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def obstruct(ctx, spec_path, depth, as_json, indent):
    """Test a candidate map A(S^{2n+1}_q) -> A(SU_q'(2)) stage by stage.

    The stages are the relation check, the power test q = q'^m, the form
    of phi(z0), and the descent on phi(z1)..phi(zn). Exits with status 0
    if the descent obstructs the map and 1 otherwise.
    """
    config = helpers.get_config(
        ctx, depth=depth, output=helpers.output_override(as_json))
    hom = load_hom(spec_path)
    with helpers.usage_errors('--spec'):
        report = verify_nonvanishing_obstruction(hom, config.depth)
    helpers.echo_result(config, report.to_json(), _describe(report), indent)
    if not report.obstructed:
        ctx.exit(1)
