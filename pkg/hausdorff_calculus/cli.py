"""Console script for hausdorff_calculus."""

import hausdorff_calculus.api as api
import hausdorff_calculus.config as config
import hausdorff_calculus.errors as errors
import hausdorff_calculus.report as report

import click
import logging
import os
import sys


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NUMERICAL_FAILURE = 1
EXIT_CONFIG_ERROR = 2


def _configure_logging(verbose):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')


def _quadrature_overrides(text):
    if text is None:
        return {}
    parts = str(text).lower().split('x')
    if len(parts) != 2:
        raise errors.ConfigException('quadrature must look like <points>x<panels>, got {}'.format(text),
                                     section='quadrature')
    return {('quadrature', 'points'): parts[0], ('quadrature', 'panels'): parts[1]}


def _build(ctx, command, overrides):
    """ Builds the RunConfig of `command`, exiting with status 2 on a malformed configuration """

    try:
        file_values = config.read_config_file(ctx.obj['config']) if ctx.obj.get('config') else {}
        quad = overrides.pop(('quadrature', 'spec'), None)
        overrides.update(_quadrature_overrides(quad))
        return config.build_config(command, file_values, overrides)
    except errors.ConfigException as e:
        click.echo('Configuration error: {}'.format(e), err=True)
        ctx.exit(EXIT_CONFIG_ERROR)


def _out_dir(run_config):
    return run_config.out or os.getcwd()


def _print_error(harness, entry, message, exception):
    logger.error('%s\n%s', message, exception)


def _common_options(func):
    options = [
        click.option('--mu', 'mu', default=None, help='Comma separated fractal dimensions in (0, 1].'),
        click.option('--convention', type=click.Choice(['paper', 'mapped', 'both']), default=None,
                     help='Operator convention.'),
        click.option('--quad', default=None, help='Quadrature as <points>x<panels>.'),
        click.option('--seed', type=int, default=None, help='Seed of the test-field corpus.'),
        click.option('--out', type=click.Path(file_okay=False), default=None, help='Output directory.'),
        click.option('--format', 'fmt', type=click.Choice(['csv', 'json']), default=None, help='Output format.'),
        click.option('--jobs', type=int, default=None, help='Number of worker threads.'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _run_overrides(mu, convention, quad, seed, out, fmt, jobs):
    return {
        ('run', 'mu'): mu,
        ('run', 'convention'): convention,
        ('quadrature', 'spec'): quad,
        ('run', 'seed'): seed,
        ('run', 'out'): out,
        ('run', 'format'): fmt,
        ('run', 'jobs'): jobs,
    }


@click.group()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='INI-style configuration file.')
@click.option('-v', '--verbose', count=True, help='Increase logging output (-v info, -vv debug).')
@click.pass_context
def main(ctx, config_path, verbose):
    """Verify Hausdorff calculus identities and solve fractal 1-D equations."""

    _configure_logging(verbose)
    ctx.ensure_object(dict)
    ctx.obj['config'] = config_path


@main.command()
@_common_options
@click.pass_context
def verify(ctx, mu, convention, quad, seed, out, fmt, jobs):
    """Run the verification suites and write theorem reports."""

    run_config = _build(ctx, 'verify', _run_overrides(mu, convention, quad, seed, out, fmt, jobs))
    harness = api.Harness(run_config)
    harness.on_error = _print_error
    reports = harness.verify()

    for path in report.write_reports(_out_dir(run_config), 'reports', harness.manifest(), reports):
        click.echo(path)
    failed = [r for r in reports if r.failed]
    asserted = sum(1 for r in reports if r.asserted)
    click.echo('{} rows, {} asserted, {} failed'.format(len(reports), asserted, len(failed)))
    if failed:
        click.echo(report.to_csv(report.REPORT_COLUMNS, report.report_rows(failed)), err=True, nl=False)
        ctx.exit(EXIT_NUMERICAL_FAILURE)


@main.command()
@_common_options
@click.option('--equation', type=click.Choice(['diffusion', 'burgers']), default=None)
@click.option('--problem', type=click.Choice(list(config.PROBLEMS)), default=None)
@click.option('--nodes', type=int, default=None, help='Nodes of the coarsest grid.')
@click.option('--dt', default=None, help='Fixed time step.')
@click.option('--auto-cfl', 'auto_cfl', is_flag=True, default=None, help='Choose the time step from the CFL bound.')
@click.option('--t-end', 't_end', default=None, help='Final time.')
@click.option('--theta', default=None, help='Diffusivity.')
@click.option('--domain', default=None, help='Interval as a,b.')
@click.option('--snapshots', default=None, help='Comma separated snapshot times.')
@click.option('--levels', type=int, default=None, help='Number of nested grids.')
@click.option('--boundary', type=click.Choice(list(config.BOUNDARIES)), default=None)
@click.pass_context
def solve(ctx, mu, convention, quad, seed, out, fmt, jobs, equation, problem, nodes, dt, auto_cfl, t_end, theta,
          domain, snapshots, levels, boundary):
    """Solve the fractal diffusion or Burgers equation and write snapshots."""

    overrides = _run_overrides(mu, convention, quad, seed, out, fmt, jobs)
    overrides.update({
        ('solver', 'equation'): equation,
        ('solver', 'problem'): problem,
        ('solver', 'nodes'): nodes,
        ('solver', 'dt'): dt,
        ('solver', 'auto_cfl'): auto_cfl or None,
        ('solver', 't_end'): t_end,
        ('solver', 'theta'): theta,
        ('solver', 'domain'): domain,
        ('solver', 'snapshots'): snapshots,
        ('solver', 'levels'): levels,
        ('solver', 'boundary'): boundary,
    })
    run_config = _build(ctx, 'solve', overrides)
    harness = api.Harness(run_config)
    harness.on_error = _print_error
    try:
        runs = harness.solve()
    except errors.HausdorffException as e:
        click.echo('Solver failed: {}'.format(e), err=True)
        ctx.exit(EXIT_NUMERICAL_FAILURE)

    directory = _out_dir(run_config)
    manifest = harness.manifest()
    manifest['runs'] = [run.manifest() for run in runs]
    for run in runs:
        name = 'solution_mu{:g}'.format(run.mu)
        click.echo(report.write_solution(directory, name, run.finest))
    click.echo(report.write_manifest(directory, manifest))
    for run in runs:
        click.echo('mu={:g}: errors {} order {}'.format(run.mu, ', '.join('{:.3e}'.format(e) for e in run.errors),
                                                        run.observed_order))


@main.command()
@_common_options
@click.pass_context
def table(ctx, mu, convention, quad, seed, out, fmt, jobs):
    """Check the closed-form derivative and integral tables."""

    run_config = _build(ctx, 'table', _run_overrides(mu, convention, quad, seed, out, fmt, jobs))
    harness = api.Harness(run_config)
    rows = harness.table()
    for path in report.write_records(_out_dir(run_config), 'table', harness.manifest(), rows, run_config.fmt):
        click.echo(path)
    failed = [row for row in rows if row['asserted'] and not row['passed']]
    for row in failed:
        click.echo('{identity} mu={mu}: residual {max_residual:.3e}'.format(**row), err=True)
    if failed:
        ctx.exit(EXIT_NUMERICAL_FAILURE)


@main.command()
@_common_options
@click.pass_context
def errata(ctx, mu, convention, quad, seed, out, fmt, jobs):
    """Write the errata ledger with numerical witnesses."""

    run_config = _build(ctx, 'errata', _run_overrides(mu, convention, quad, seed, out, fmt, jobs))
    harness = api.Harness(run_config)
    rows = harness.errata()
    for path in report.write_records(_out_dir(run_config), 'errata', harness.manifest(), rows, run_config.fmt):
        click.echo(path)
    for row in rows:
        click.echo('{key} mu={mu}: {witness:.6g}'.format(**row))


if __name__ == "__main__":
    sys.exit(main())  # pragma: no cover
