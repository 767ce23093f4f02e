from bistochastic.construct.builders import (CERTIFICATION_TOLERANCE,
                                             ConstructionResult, DminBound,
                                             construct_full,
                                             construct_nminus1,
                                             dmin_upper_bound,
                                             uniform_certificate)
from bistochastic.construct.cyclic import build_skew, solve_cyclic
from bistochastic.construct.feasibility import (BOUNDARY, INFEASIBLE,
                                                STRICT_INTERIOR,
                                                FeasibilityReport,
                                                check_feasibility)
from bistochastic.construct.policies import (CoefficientPolicy,
                                             PaperLiteralPolicy,
                                             WeightedPolicy,
                                             create_coefficient_policy,
                                             parse_coefficient_policy)

__all__ = [
    'BOUNDARY', 'CERTIFICATION_TOLERANCE', 'INFEASIBLE', 'STRICT_INTERIOR',
    'CoefficientPolicy', 'ConstructionResult', 'DminBound',
    'FeasibilityReport', 'PaperLiteralPolicy', 'WeightedPolicy',
    'build_skew', 'check_feasibility', 'construct_full', 'construct_nminus1',
    'create_coefficient_policy', 'dmin_upper_bound',
    'parse_coefficient_policy', 'solve_cyclic', 'uniform_certificate',
]
