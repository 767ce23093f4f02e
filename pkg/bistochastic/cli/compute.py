"""One-off computations on matrices read from JSON files."""
import click
import numpy as np
from bistochastic.cli.base import (command, exit_with, field_option,
                                   input_option)
from bistochastic.construct import (INFEASIBLE, check_feasibility,
                                    construct_full, construct_nminus1,
                                    dmin_upper_bound)
from bistochastic.core.dimensions import dims
from bistochastic.core.matrices import DEFAULT_TOLERANCE, is_isometry, nu
from bistochastic.core.serialization import (bistochastic_to_dict,
                                             vector_matrix_to_dict)

tol_option = click.option(
    '--tol', type=float, default=DEFAULT_TOLERANCE, show_default=True,
    help='Tolerance of the isometry check.',
)

nu_tol_option = click.option(
    '--nu-tol', 'nu_tol', type=float, default=None,
    help=('Tolerance of the nu residual (default: the success tolerance '
          'echoed by a search document, else --tol).'),
)


def nu_tolerance(nu_tol, success_tol, tol):
    """Pick the nu-residual tolerance: explicit, then the document's,
    then the isometry tolerance."""
    if nu_tol is not None:
        return nu_tol
    if success_tol is not None:
        return float(success_tol)
    return tol


@click.command('nu')
@input_option
@tol_option
@nu_tol_option
@command
def nu_command(mixin, input_file, tol, nu_tol):
    """Squared norms of the entries of an isometry."""
    V, success_tol = mixin.read_certificate(input_file)
    bistochastic_tol = None
    if nu_tol is not None or success_tol is not None:
        # row sums drift by up to n times the entrywise residual
        bistochastic_tol = max(
            2 * tol, V.n * nu_tolerance(nu_tol, success_tol, tol))
    mixin.output(bistochastic_to_dict(nu(V, tol, bistochastic_tol)))


@click.command('verify')
@input_option
@click.option('--p', 'p_file', type=click.File('r'),
              help='Also check that nu(V) equals this matrix.')
@tol_option
@nu_tol_option
@command
def verify_command(mixin, input_file, p_file, tol, nu_tol):
    """Check that V is an isometry, and optionally that nu(V) = P.

    Exits with 0 only if every check passes.
    """
    V, success_tol = mixin.read_certificate(input_file)
    report = is_isometry(V, tol)
    payload = {
        'ok': report.ok,
        'tol': tol,
        'field': V.field,
        'n': V.n,
        'd': V.d,
        'max_residual_cols': report.max_residual_cols,
        'max_residual_rows': report.max_residual_rows,
        'worst_pair': list(report.worst_pair),
    }
    if p_file is not None:
        P = mixin.read_bistochastic(p_file)
        if P.n != V.n:
            payload['residual_nu'] = None
            payload['ok'] = False
        else:
            residual = float(np.max(np.abs(V.squared_norms() - P.entries)))
            payload['residual_nu'] = residual
            nu_tol = nu_tolerance(nu_tol, success_tol, tol)
            payload['nu_tol'] = nu_tol
            payload['ok'] = report.ok and residual <= nu_tol
    mixin.output(payload)
    mixin.verbose('[high]isometry[end]: {}'.format(
        '[ok]ok[end]' if payload['ok'] else '[error]failed[end]'))
    exit_with(payload['ok'])


@click.command('feasible')
@input_option
@command
def feasible_command(mixin, input_file):
    """Evaluate the alternating diagonal inequalities (odd n)."""
    report = check_feasibility(mixin.read_bistochastic(input_file))
    mixin.output(report.to_dict())
    exit_with(report.verdict != INFEASIBLE)


@click.command('construct')
@input_option
@click.option(
    '--mode', type=click.Choice(['paper', 'paper_literal', 'weighted']),
    default='weighted', show_default=True,
    help='How the coefficients of the diagonal entries are chosen.',
)
@command
def construct_command(mixin, input_file, mode):
    """Realize P with vectors of R^(n-1), n odd."""
    result = construct_nminus1(mixin.read_bistochastic(input_file), mode)
    mixin.output(result.to_dict())
    if not result.certified:
        mixin.echo(
            '[warn]Construction is not certified[end] (residual_nu={:.3g}, '
            'residual_isometry={:.3g})'.format(
                result.residual_nu, result.residual_isometry))
    exit_with(result.certified)


@click.command('construct-full')
@input_option
@field_option
@click.option('--d', 'd', type=int, default=None,
              help='The internal dimension, at least n (default n).')
@command
def construct_full_command(mixin, input_file, field, d):
    """Realize P with v_i^j = sqrt(p_i^j) e_i in F^d."""
    P = mixin.read_bistochastic(input_file)
    mixin.output(vector_matrix_to_dict(construct_full(P, field, d)))


@click.command('bound')
@input_option
@field_option
@command
def bound_command(mixin, input_file, field):
    """Constructive upper bound on the minimal internal dimension."""
    bound = dmin_upper_bound(mixin.read_bistochastic(input_file), field)
    mixin.output(bound.to_dict())


@click.command('dims')
@field_option
@click.option('--n', 'n', type=int, required=True)
@click.option('--d', 'd', type=int, default=1, show_default=True)
@command
def dims_command(mixin, field, n, d):
    """Dimensions of the isometries and of their nu-images."""
    mixin.output(dims(field, n, d).to_dict())
