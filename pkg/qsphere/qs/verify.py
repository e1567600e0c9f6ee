"""$ qs verify-lemmas"""

import click
import cligj

from qsphere.qs import helpers, options
from qsphere.suites import FAIL, SKIPPED, SUITES, run_suites


@click.command('verify-lemmas', short_help="Run the property suites.")
@click.option('--suite', 'names', multiple=True,
              type=click.Choice(list(SUITES)),
              help="Suite to run; repeat for several (default all).")
@options.arity_opt
@options.q_opt
@options.depth_opt
@options.schema_bound_opt
@click.option('--seed', type=int, default=None,
              help="Seed of the random samples (default 0).")
@click.option('--samples', type=int, default=None,
              help="Random samples per sampled property (default 100).")
@options.gaussian_opt
@options.json_opt
@cligj.indent_opt
@click.pass_context
def verify_lemmas(ctx, names, n, q, depth, schema_bound, seed, samples,
                  gaussian_mode, as_json, indent):
    """Check the identities of the sphere algebras on bounded inputs.

    Every suite reports PASS, FAIL or SKIPPED with the number of checks
    made. Exits with status 1 if any suite fails.

    \b
        $ qs verify-lemmas --n 3
        $ qs verify-lemmas --q 0 --suite basis
    """
    config = helpers.get_config(
        ctx, n=n, q=q, depth=depth, schema_bound=schema_bound, seed=seed,
        samples=samples, gaussian_mode=gaussian_mode or None,
        output=helpers.output_override(as_json))
    results = run_suites(list(names), config)

    lines = []
    for result in results:
        if result.status == SKIPPED:
            lines.append("{}: {} ({})".format(
                result.name, result.status, result.reason))
            continue
        lines.append("{}: {} ({} checks)".format(
            result.name, result.status, result.checked))
        lines += ["  {}".format(failure) for failure in result.failures]
    helpers.echo_result(
        config,
        {'config': config.to_json(),
         'suites': [result.to_json() for result in results]},
        '\n'.join(lines), indent)
    if any(result.status == FAIL for result in results):
        ctx.exit(1)
