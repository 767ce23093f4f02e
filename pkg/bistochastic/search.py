"""Numerical search for isometries V with nu(V) = P.

The objective

    f(V) = sum_{i,j} (||v_i^j||^2 - p_i^j)^2

is minimized over the isometries F^n -> F^{nd} by gradient steps along
the tangent space, projected as G - W sym(W^H G), each followed by a polar
retraction of the nd x n column matrix. Quaternionic matrices go through
their complex 2 x 2 block form. Failures are never certificates; only a
returned V that passes the isometry check with a small nu-residual is.
"""
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from bistochastic.common import settings
from bistochastic.common.utils import make_rng, spawn_int_seeds, spawn_seeds
from bistochastic.construct.builders import dmin_upper_bound
from bistochastic.construct.feasibility import check_feasibility
from bistochastic.core.errors import (BistochasticError, DimensionMismatch,
                                      InvalidArgument, NonConvergence)
from bistochastic.core.matrices import (VectorEntryMatrix, complex_form,
                                        from_complex_form, is_isometry,
                                        polar_orthonormalize)
from bistochastic.core.scalars import FieldTag
from bistochastic.core.serialization import vector_matrix_to_dict
from bistochastic.sample import (sample_birkhoff, sample_sinkhorn,
                                 sample_symmetric_feasible)

logger = logging.getLogger('bistochastic.search')

ISOMETRY_TOLERANCE = 1e-9
MIN_STEP = 1e-14
MAX_STEP_FACTOR = 1e3
ARMIJO_FACTOR = 1e-4
# A restart stops when STALL_WINDOW iterations shrink f by less than this
STALL_FRACTION = 1e-3
STALL_WINDOW = 100
# A restart stops once its residual is this fraction of success_tol
EARLY_STOP_FACTOR = 1e-3


class SearchConfig(object):
    """Immutable parameters of `search_fixed_d`."""

    FIELDS = ('field', 'n', 'd', 'restarts', 'max_iters', 'step_init',
              'success_tol', 'seed')

    def __init__(self, field, n, d, seed,
                 restarts=settings.BISTOCHASTIC_SEARCH_RESTARTS,
                 max_iters=settings.BISTOCHASTIC_SEARCH_MAX_ITERS,
                 step_init=settings.BISTOCHASTIC_SEARCH_STEP,
                 success_tol=settings.BISTOCHASTIC_SEARCH_TOLERANCE):
        """Constructor.

        :param str field: the scalar field
        :param int n: the size of the target matrix
        :param int d: the internal dimension to search in
        :param int seed: the root seed; restarts use streams spawned
            from it
        :param int restarts: the number of independent starts
        :param int max_iters: the iteration cap of one restart
        :param float step_init: the first trial step of a restart, also used
            when the curvature estimate of a step is not positive; steps
            never exceed MAX_STEP_FACTOR times it
        :param float success_tol: the largest nu-residual of a success
        :raise InvalidArgument: on a non-positive value
        """
        values = {
            'field': FieldTag.parse(field),
            'n': int(n),
            'd': int(d),
            'restarts': int(restarts),
            'max_iters': int(max_iters),
            'step_init': float(step_init),
            'success_tol': float(success_tol),
            'seed': int(seed),
        }
        for name in ('n', 'd', 'restarts', 'max_iters', 'step_init',
                     'success_tol'):
            if values[name] <= 0:
                raise InvalidArgument(
                    '`{}` must be positive, got {}'.format(
                        name, values[name]),
                    parameter=name,
                )
        for name, value in values.items():
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError('SearchConfig objects are immutable')

    def replace(self, **changes):
        """Return a copy with the given fields changed.

        Usage:
        >>> cfg = SearchConfig('R', 3, 1, seed=42)
        >>> cfg.replace(d=2).d
        2
        """
        values = self.to_dict()
        values.update(changes)
        return SearchConfig(**values)

    def to_dict(self):
        return {name: getattr(self, name) for name in self.FIELDS}

    def __eq__(self, other):
        return (isinstance(other, SearchConfig) and
                self.to_dict() == other.to_dict())

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<SearchConfig {}>'.format(self.to_dict())


class SearchResult(object):
    """The best isometry found, with its recomputed residual."""

    def __init__(self, best_V, best_residual, iters_used, restarts_used,
                 success, config):
        self.best_V = best_V
        self.best_residual = best_residual
        self.iters_used = iters_used
        self.restarts_used = restarts_used
        self.success = success
        self.config = config

    @classmethod
    def certify(cls, V, P, iters_used, restarts_used, config):
        """Build a result whose residual and verdict are recomputed from V.

        :param VectorEntryMatrix V: the candidate
        :param BistochasticMatrix P: the target
        :rtype: SearchResult
        """
        residual = float(np.max(np.abs(V.squared_norms() - P.entries)))
        isometric = is_isometry(V, ISOMETRY_TOLERANCE).ok
        return cls(V, residual, iters_used, restarts_used,
                   bool(isometric and residual <= config.success_tol),
                   config)

    def to_dict(self):
        return {
            'success': self.success,
            'best_residual': self.best_residual,
            'iters_used': self.iters_used,
            'restarts_used': self.restarts_used,
            'seed': self.config.seed,
            'config': self.config.to_dict(),
            'certificate': vector_matrix_to_dict(self.best_V),
        }

    def __repr__(self):
        return '<SearchResult d={} success={} residual={:.3g}>'.format(
            self.best_V.d, self.success, self.best_residual)


def _blocks(columns, n, d):
    """View an (nd, n, r) column matrix as [row j, component, column i]."""
    return columns.reshape(n, d, n, columns.shape[-1])


def _residual_matrix(columns, target, n, d):
    blocks = _blocks(columns, n, d)
    return np.sum(blocks * blocks, axis=(1, 3)) - target


def _objective(columns, target, n, d):
    diff = _residual_matrix(columns, target, n, d)
    return float(np.sum(diff * diff))


def _gradient(columns, target, n, d):
    """Ambient gradient: 4 (||v_i^j||^2 - p_i^j) v_i^j, blockwise."""
    diff = _residual_matrix(columns, target, n, d)
    blocks = _blocks(columns, n, d)
    return (4.0 * diff[:, None, :, None] * blocks).reshape(columns.shape)


def _project_tangent(columns, direction):
    """Project an ambient direction G onto the tangent space of the
    isometries at W: G - W sym(W^H G)."""
    W = complex_form(columns)
    G = complex_form(direction)
    gram = W.conj().T.dot(G)
    return from_complex_form(G - W.dot((gram + gram.conj().T) / 2.0),
                             columns.shape[-1])


def _riemannian_gradient(columns, target, n, d):
    return _project_tangent(columns, _gradient(columns, target, n, d))


def _retract(columns):
    try:
        result = polar_orthonormalize(columns)
    except np.linalg.LinAlgError:
        return None
    if not np.all(np.isfinite(result)):
        return None
    return result


def _next_step(moved, change, step_init):
    """Barzilai-Borwein step <s, y> / <y, y>, or `step_init` when the
    curvature estimate is not positive."""
    sy = float(np.sum(moved * change))
    yy = float(np.sum(change * change))
    if sy <= 0.0 or yy == 0.0:
        return step_init
    return min(max(sy / yy, MIN_STEP), MAX_STEP_FACTOR * step_init)


def _descend(columns, target, n, d, cfg):
    """Run one restart of backtracking projected gradient descent.

    Every iteration starts its backtracking from the Barzilai-Borwein step
    and accepts the first halving that passes the Armijo test. A restart
    ends at an early-stop residual, a zero gradient, a step underflow, or
    when a whole window of iterations gains less than STALL_FRACTION.

    :return: the final columns and the number of iterations used
    :rtype: tuple
    """
    early_stop = cfg.success_tol * EARLY_STOP_FACTOR
    step = cfg.step_init
    value = _objective(columns, target, n, d)
    gradient = _riemannian_gradient(columns, target, n, d)
    window_value = value
    iters = 0
    while iters < cfg.max_iters:
        if np.max(np.abs(_residual_matrix(columns, target, n, d))) <= \
                early_stop:
            break
        slope = float(np.sum(gradient * gradient))
        if slope == 0.0:
            logger.debug('Zero gradient after %d iterations', iters)
            break
        iters += 1
        candidate = None
        while step >= MIN_STEP:
            candidate = _retract(columns - step * gradient)
            if candidate is not None:
                candidate_value = _objective(candidate, target, n, d)
                if candidate_value <= value - ARMIJO_FACTOR * step * slope:
                    break
            candidate = None
            step /= 2.0
        if candidate is None:
            logger.debug('Step underflow after %d iterations', iters)
            break
        candidate_gradient = _riemannian_gradient(candidate, target, n, d)
        step = _next_step(candidate - columns, candidate_gradient - gradient,
                          cfg.step_init)
        columns, value, gradient = candidate, candidate_value, \
            candidate_gradient
        if iters % STALL_WINDOW == 0:
            if value > (1.0 - STALL_FRACTION) * window_value:
                logger.debug('Descent stalled after %d iterations', iters)
                break
            window_value = value
    return columns, iters


def search_fixed_d(P, cfg):
    """Search for V in Iso(F, n, d) with nu(V) close to P.

    Restarts run in order from independent random starts and stop at the
    first success. The best restart (lowest residual, then lowest index)
    is returned, re-certified from scratch.

    :param BistochasticMatrix P: the target
    :param SearchConfig cfg: the search parameters; cfg.n must be P.n
    :rtype: SearchResult
    :raise NonConvergence: if no restart could even be started
    """
    if cfg.n != P.n:
        raise DimensionMismatch(
            'Config is for n={} but the matrix has n={}'.format(cfg.n, P.n))
    n, d = cfg.n, cfg.d
    real_dim = FieldTag.real_dim(cfg.field)
    target = P.entries

    best_columns, best_residual = None, None
    total_iters = restarts_used = 0
    for index, seed in enumerate(spawn_seeds(cfg.seed, cfg.restarts)):
        rng = make_rng(seed)
        start = _retract(rng.standard_normal(size=(n * d, n, real_dim)))
        if start is None:
            continue
        columns, iters = _descend(start, target, n, d, cfg)
        total_iters += iters
        restarts_used = index + 1
        residual = float(np.max(np.abs(
            _residual_matrix(columns, target, n, d))))
        logger.debug('Restart %d: residual %.3e after %d iterations',
                     index, residual, iters)
        if best_residual is None or residual < best_residual:
            best_columns, best_residual = columns, residual
        if residual <= cfg.success_tol:
            break

    if best_columns is None:
        raise NonConvergence(
            'No restart produced a valid starting isometry',
            restarts=cfg.restarts,
        )
    V = VectorEntryMatrix.from_columns(cfg.field, best_columns, n, d)
    result = SearchResult.certify(V, P, total_iters, restarts_used, cfg)
    logger.info('Search over %s with d=%d: %r', cfg.field, d, result)
    return result


class DminEstimate(object):
    """An upper bound on d_min(P, F) together with the runs behind it.

    `method` is 'search' when the bound comes from a numerical success
    and otherwise names the construction that supplied the certificate.
    """

    def __init__(self, d_est, per_d, method):
        self.d_est = d_est
        self.per_d = per_d
        self.method = method

    @property
    def certificate(self):
        return self.per_d[-1].best_V

    @property
    def capped(self):
        """True if the bound comes from a construction, not a search."""
        return self.method != 'search'

    def to_dict(self):
        return {
            'd_est': self.d_est,
            'method': self.method,
            'per_d': [
                {
                    'd': result.best_V.d,
                    'success': result.success,
                    'best_residual': result.best_residual,
                    'iters_used': result.iters_used,
                    'restarts_used': result.restarts_used,
                }
                for result in self.per_d
            ],
            'certificate': vector_matrix_to_dict(self.certificate),
        }

    def __repr__(self):
        return '<DminEstimate d_est={} method={}>'.format(
            self.d_est, self.method)


def estimate_dmin(P, field, cfg_base):
    """Search d = 1, 2, ... until a success or a constructive certificate.

    The constructive bound of `dmin_upper_bound` is computed first; the
    search never goes beyond it, and the construction's certificate is
    reported for that d.

    :param BistochasticMatrix P: the target
    :param str field: the scalar field
    :param SearchConfig cfg_base: restarts, iterations, step, tolerance
        and seed; its field, n and d are replaced
    :rtype: DminEstimate
    """
    field = FieldTag.parse(field)
    bound = dmin_upper_bound(P, field)
    per_d = []
    for d in range(1, bound.d_upper):
        cfg = cfg_base.replace(field=field, n=P.n, d=d)
        result = search_fixed_d(P, cfg)
        per_d.append(result)
        if result.success:
            return DminEstimate(d, per_d, 'search')

    cfg = cfg_base.replace(field=field, n=P.n, d=bound.d_upper)
    per_d.append(SearchResult.certify(bound.certificate, P, 0, 0, cfg))
    return DminEstimate(bound.d_upper, per_d, bound.method)


SAMPLE_KINDS = ('sinkhorn', 'birkhoff', 'symmetric')


def _draw(kind, n, seed):
    if kind == 'sinkhorn':
        return sample_sinkhorn(n, seed)
    if kind == 'birkhoff':
        return sample_birkhoff(n, n, seed)
    if kind == 'symmetric':
        return sample_symmetric_feasible(n, seed)
    raise InvalidArgument(
        'Invalid sample kind `{}`'.format(kind), choices=list(SAMPLE_KINDS))


class ScanReport(object):
    """Per-sample records of `scan_dmin` and their histogram."""

    def __init__(self, n, field, kind, seed, records, config):
        self.n = n
        self.field = field
        self.kind = kind
        self.seed = seed
        self.records = records
        self.config = config

    @property
    def histogram(self):
        counts = {}
        for record in self.records:
            if 'd_est' in record:
                counts[record['d_est']] = counts.get(record['d_est'], 0) + 1
        return {str(d): counts[d] for d in sorted(counts)}

    @property
    def failures(self):
        return sum(1 for record in self.records if 'error' in record)

    @property
    def capped_fraction(self):
        done = [r for r in self.records if 'd_est' in r]
        if not done:
            return 0.0
        return sum(1 for r in done if r['capped']) / float(len(done))

    def to_dict(self):
        return {
            'n': self.n,
            'field': self.field,
            'kind': self.kind,
            'samples': len(self.records),
            'seed': self.seed,
            'histogram': self.histogram,
            'capped_fraction': self.capped_fraction,
            'failures': self.failures,
            'config': self.config.to_dict(),
            'records': self.records,
        }


def _scan_one(index, sample_seed, n, field, kind, cfg_base):
    record = {'index': index, 'seed': sample_seed}
    try:
        matrix_seed, search_seed = spawn_int_seeds(sample_seed, 2)
        P = _draw(kind, n, matrix_seed)
        if n % 2 == 1 and n >= 3:
            record['feasibility'] = check_feasibility(P).verdict
        estimate = estimate_dmin(P, field, cfg_base.replace(seed=search_seed))
    except (BistochasticError, np.linalg.LinAlgError) as e:
        logger.exception('Sample %d failed: %s', index, e)
        if not isinstance(e, BistochasticError):
            e = NonConvergence(
                'Linear algebra failure: {}'.format(e), kind=kind)
        record['error'] = e.to_dict()['error']
        return record
    record.update({
        'd_est': estimate.d_est,
        'method': estimate.method,
        'capped': estimate.capped,
    })
    return record


def scan_dmin(n, field, samples, seed, cfg_base=None, kind='sinkhorn',
              workers=settings.BISTOCHASTIC_SCAN_WORKERS):
    """Estimate d_min over `samples` random bistochastic matrices.

    Samples are independent and run on a thread pool; records are merged
    in sample order, so the report only depends on the arguments.

    :param int n: the matrix size
    :param str field: the scalar field
    :param int samples: the number of matrices to draw
    :param int seed: the root seed; sample k uses the k-th spawned stream
    :param SearchConfig cfg_base: search parameters (defaults taken from
        the scan settings)
    :param str kind: 'sinkhorn', 'birkhoff' or 'symmetric'
    :param int workers: the size of the thread pool
    :rtype: ScanReport
    """
    field = FieldTag.parse(field)
    if kind not in SAMPLE_KINDS:
        raise InvalidArgument(
            'Invalid sample kind `{}`'.format(kind),
            choices=list(SAMPLE_KINDS))
    if samples < 1 or workers < 1:
        raise InvalidArgument('`samples` and `workers` must be positive')
    if cfg_base is None:
        cfg_base = SearchConfig(
            field, n, 1, seed,
            restarts=settings.BISTOCHASTIC_SCAN_RESTARTS,
            max_iters=settings.BISTOCHASTIC_SCAN_MAX_ITERS,
        )
    sample_seeds = spawn_int_seeds(seed, samples)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        records = list(executor.map(
            lambda args: _scan_one(args[0], args[1], n, field, kind,
                                   cfg_base),
            enumerate(sample_seeds),
        ))
    report = ScanReport(n, field, kind, seed, records, cfg_base)
    logger.info('Scan of %d samples: histogram %s', samples,
                report.histogram)
    return report
