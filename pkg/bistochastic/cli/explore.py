"""Seeded sampling and numerical search."""
import click
from bistochastic.cli.base import (command, exit_with, field_option,
                                   input_option)
from bistochastic.common import settings
from bistochastic.common.console import pluralized
from bistochastic.common.utils import now
from bistochastic.core.serialization import (bistochastic_to_dict,
                                             vector_matrix_to_dict)
from bistochastic.sample import (sample_birkhoff, sample_isometry,
                                 sample_sinkhorn, sample_symmetric_feasible)
from bistochastic.search import (SAMPLE_KINDS, SearchConfig, scan_dmin,
                                 search_fixed_d)

seed_option = click.option('--seed', type=int, required=True,
                           help='The random seed, echoed in the output.')


@click.command('sample')
@click.option(
    '--kind', required=True,
    type=click.Choice(['sinkhorn', 'birkhoff', 'isometry', 'symmetric']),
)
@click.option('--n', 'n', type=int, required=True)
@click.option('--d', 'd', type=int, default=1, show_default=True,
              help='Internal dimension (isometry only).')
@click.option('--k', 'k', type=int, default=None,
              help='Number of permutations (birkhoff only, default n).')
@field_option
@click.option('--balanced', is_flag=True, default=False,
              help='Isometry whose nu is bistochastic for any d.')
@seed_option
@command
def sample_command(mixin, kind, n, d, k, field, balanced, seed):
    """Draw a random bistochastic matrix or isometry."""
    if kind == 'sinkhorn':
        payload = bistochastic_to_dict(sample_sinkhorn(n, seed))
    elif kind == 'birkhoff':
        payload = bistochastic_to_dict(
            sample_birkhoff(n, n if k is None else k, seed))
    elif kind == 'symmetric':
        payload = bistochastic_to_dict(sample_symmetric_feasible(n, seed))
    else:
        payload = vector_matrix_to_dict(
            sample_isometry(field, n, d, seed, balanced=balanced))
    payload.update({'kind': kind, 'seed': seed})
    mixin.output(payload)


@click.command('search')
@input_option
@field_option
@click.option('--d', 'd', type=int, required=True)
@click.option('--restarts', type=int,
              default=settings.BISTOCHASTIC_SEARCH_RESTARTS,
              show_default=True)
@click.option('--max-iters', type=int,
              default=settings.BISTOCHASTIC_SEARCH_MAX_ITERS,
              show_default=True)
@click.option('--step', type=float, default=settings.BISTOCHASTIC_SEARCH_STEP,
              show_default=True)
@click.option('--tol', type=float,
              default=settings.BISTOCHASTIC_SEARCH_TOLERANCE,
              show_default=True, help='Largest nu-residual of a success.')
@seed_option
@command
def search_command(mixin, input_file, field, d, restarts, max_iters, step,
                   tol, seed):
    """Search for an isometry V in Iso(F, n, d) with nu(V) = P.

    Exits with 0 only on success.
    """
    P = mixin.read_bistochastic(input_file)
    cfg = SearchConfig(field, P.n, d, seed, restarts=restarts,
                       max_iters=max_iters, step_init=step, success_tol=tol)
    result = search_fixed_d(P, cfg)
    mixin.output(result.to_dict())
    mixin.verbose('Used {} and {}'.format(
        pluralized('1 restart', '{cnt} restarts', result.restarts_used),
        pluralized('1 iteration', '{cnt} iterations', result.iters_used),
    ))
    exit_with(result.success)


@click.command('scan')
@click.option('--n', 'n', type=int, required=True)
@field_option
@click.option('--samples', type=int, required=True)
@click.option('--kind', type=click.Choice(SAMPLE_KINDS), default='sinkhorn',
              show_default=True, help='How the matrices are drawn.')
@click.option('--restarts', type=int,
              default=settings.BISTOCHASTIC_SCAN_RESTARTS, show_default=True)
@click.option('--max-iters', type=int,
              default=settings.BISTOCHASTIC_SCAN_MAX_ITERS,
              show_default=True)
@click.option('--workers', type=int,
              default=settings.BISTOCHASTIC_SCAN_WORKERS, show_default=True)
@click.option('--timestamp', is_flag=True, default=False,
              help='Add the UTC time of the run to the output.')
@seed_option
@command
def scan_command(mixin, n, field, samples, kind, restarts, max_iters,
                 workers, timestamp, seed):
    """Histogram of estimated minimal dimensions over random matrices.

    Exits with 1 if some sample could not be processed.
    """
    cfg = SearchConfig(field, n, 1, seed, restarts=restarts,
                       max_iters=max_iters)
    report = scan_dmin(n, field, samples, seed, cfg_base=cfg, kind=kind,
                       workers=workers)
    payload = report.to_dict()
    if timestamp:
        payload['timestamp'] = now().isoformat()
    mixin.output(payload)
    mixin.verbose('[ok]Scanned {}[end], histogram {}'.format(
        pluralized('1 sample', '{cnt} samples', samples), report.histogram))
    if report.failures:
        mixin.echo('[warn]{} failed[end]'.format(
            pluralized('1 sample', '{cnt} samples', report.failures)))
    exit_with(not report.failures)
