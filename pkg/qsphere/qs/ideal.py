"""$ qs ideal-cert, $ qs circle, $ qs unitary, $ qs check-hom"""

import click
import cligj

from qsphere.errors import NotCertifiable, NotUnit, QSphereError
from qsphere.parser import (
    ExprContext, parse_laurent, parse_poly, parse_qrat)
from qsphere.qs import helpers, options
from qsphere.quotients import (
    HomSpec, character_eval, check_homomorphism,
    commutator_ideal_certificate, is_unitary_laurent, project_to_circle)
from qsphere.rewrite import get_rules


def _parse_sphere(config, expression):
    with helpers.usage_errors('EXPRESSION'):
        return parse_poly(expression, ExprContext(
            arity=config.n, gaussian_mode=config.gaussian_mode,
            qmode=config.q))


@click.command('ideal-cert',
               short_help="Certify membership in the commutator ideal.")
@options.expr_arg
@options.arity_opt
@options.q_opt
@options.gaussian_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def ideal_cert(ctx, expression, n, q, gaussian_mode, as_json, indent):
    """Write EXPRESSION as a sum of terms A [x, y] B.

    The certificate is re-evaluated and checked against EXPRESSION.
    Exits with status 1 if no certificate is found or it fails to
    verify. At q = 0 a residue that does not vanish leaves the check
    undecided.

    \b
        $ qs ideal-cert --n 1 "z1"
    """
    config = helpers.get_config(
        ctx, n=n, q=q, gaussian_mode=gaussian_mode or None,
        output=helpers.output_override(as_json))
    target = _parse_sphere(config, expression)
    with helpers.usage_errors():
        try:
            cert = commutator_ideal_certificate(config.n, target, config.q)
        except NotCertifiable as err:
            helpers.echo_result(
                config, {'input': expression, 'certified': False,
                         'reason': str(err)},
                "not certified: {}".format(err), indent)
            ctx.exit(1)
    verified = cert.verify(get_rules(config.n, config.q))
    obj = dict(cert.to_json(), input=expression, certified=True,
               verified=verified)
    lines = ["{} =".format(target)]
    lines += ["  {}".format(term) for term in cert.terms] or ["  0"]
    if verified is None:
        obj['reason'] = "no canonical normal forms at q = 0"
        lines.append("verified: undecided ({})".format(obj['reason']))
    else:
        lines.append("verified: {}".format('yes' if verified else 'no'))
    helpers.echo_result(config, obj, '\n'.join(lines), indent)
    if verified is False:
        ctx.exit(1)


@click.command(short_help="Project onto the circle algebra.")
@options.expr_arg
@options.arity_opt
@options.q_opt
@click.option('--at', 'lam', default=None,
              help="Evaluate the character chi_lambda at a unit scalar such "
                   "as -1 or 3/5+4/5*i.")
@options.gaussian_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def circle(ctx, expression, n, q, lam, gaussian_mode, as_json, indent):
    """Print the image of EXPRESSION in A(S^1) = C[u, u^-1].

    The generator z0 maps to the unitary u and z1..zn map to 0.
    """
    config = helpers.get_config(
        ctx, n=n, q=q, gaussian_mode=gaussian_mode or None,
        output=helpers.output_override(as_json))
    poly = _parse_sphere(config, expression)
    rules = get_rules(config.n, config.q)
    with helpers.usage_errors():
        image = project_to_circle(poly, rules)
    obj = {'input': expression, 'circle': image.to_json(), 'text': str(image)}
    lines = [str(image)]
    if lam is not None:
        with helpers.usage_errors('--at'):
            value = parse_qrat(lam, gaussian_mode=True)
            if not value.is_constant():
                raise NotUnit("{} is not a scalar".format(lam))
            result = character_eval(poly, value.constant(), rules)
        obj['character'] = {'lambda': lam, 'value': str(result)}
        lines.append("chi({}) = {}".format(lam, result))
    helpers.echo_result(config, obj, '\n'.join(lines), indent)


@click.command(short_help="Decide whether a circle element is unitary.")
@options.expr_arg
@options.gaussian_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def unitary(ctx, expression, gaussian_mode, as_json, indent):
    """Decide a a* = 1 for a Laurent polynomial EXPRESSION in u.

    Unitary elements are exactly lambda u^k with |lambda| = 1. Exits with
    status 1 if EXPRESSION is not unitary.

    \b
        $ qs unitary --gaussian "(3/5+4/5*i) u^2"
    """
    config = helpers.get_config(
        ctx, gaussian_mode=gaussian_mode or None,
        output=helpers.output_override(as_json))
    with helpers.usage_errors('EXPRESSION'):
        a = parse_laurent(expression, gaussian_mode=config.gaussian_mode)
    verdict = is_unitary_laurent(a)
    if verdict.unitary:
        text = "unitary: lambda = {}, exponent {}".format(
            verdict.coeff, verdict.exponent)
    else:
        text = "not unitary: a a* - 1 has coefficient {} at u^{}".format(
            verdict.coeff, verdict.exponent)
    helpers.echo_result(config, dict(verdict.to_json(), input=expression),
                        text, indent)
    if not verdict.unitary:
        ctx.exit(1)


def load_hom(path):
    """Read a homomorphism spec file, as a click usage error on failure."""
    with helpers.usage_errors('--spec'):
        try:
            return HomSpec.load(path)
        except QSphereError:
            raise
        except ValueError as err:
            raise click.BadParameter(
                "Invalid spec file: {}".format(err), param_hint='--spec')
        except (KeyError, TypeError) as err:
            raise click.BadParameter(
                "Invalid spec file: missing or malformed {}".format(err),
                param_hint='--spec')


@click.command('check-hom',
               short_help="Check a candidate map against the relations.")
@options.spec_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def check_hom(ctx, spec_path, as_json, indent):
    """Substitute the images of z0..zn into every defining relation.

    The spec file holds the source arity and parameter, the target
    ('sphere', 'suq2' or 'circle') and its parameter, and the images:

    \b
        {"source": {"n": 1, "q": "1/3"}, "target": "suq2",
         "target_q": "1/2", "images": {"z0": "z0", "z1": "z1"}}

    Exits with status 1 if any relation is violated.
    """
    config = helpers.get_config(ctx, output=helpers.output_override(as_json))
    hom = load_hom(spec_path)
    with helpers.usage_errors():
        check = check_homomorphism(hom)
    if check.ok:
        text = "homomorphism: all relations hold"
    else:
        text = '\n'.join(
            ["violated: {} relation(s)".format(len(check.violations))] +
            ["  {}: {}".format(label, residue)
             for label, residue in check.violations])
    helpers.echo_result(config, dict(check.to_json(), spec=hom.to_json()),
                        text, indent)
    if not check.ok:
        ctx.exit(1)
