"""Converging upper bounds for polynomial minimization on the unit hypercube.

The core bound minimizes the expected value of a polynomial over probability
densities proportional to x^eta (1-x)^beta (products of beta distributions),
which needs nothing beyond closed-form moment ratios and a scan over exponent
pairs.  The package also provides the SOS-density bound via a symmetric
definite eigenproblem, rational-grid search, feasible-point extraction
(mode, mean, seeded sampling), and convergence-rate diagnostics.
"""

from .feasible import (JensenCase, NonUnique, SampleStats, density_mode,
                       expectation_point, jensen_classify, sample_beta_point,
                       sample_statistics)
from .gridsearch import BudgetError, GridResult, grid_min
from .handelman import (BoundResult, RefineResult, bound_series,
                        candidate_value, enumerate_exponents, f_beta_refine,
                        f_handelman, f_handelman_powered, uniform_value)
from .moments import (ExponentPair, beta_raw_moment, gamma_box,
                      gamma_box_exact, moment_ratio, univariate_moment)
from .polynomial import (ParseError, Polynomial, TestFunction, builtin,
                         evaluate, parse_polynomial, relative_gap, to_text)
from .rates import (ShapeAssignment, dirichlet_approx, empirical_rate,
                    expected_value_at_shapes, grid_gap_bound, shape_parameters)
from .sos import (ConditioningError, MomentPencil, build_moment_pencil, f_sos,
                  smallest_generalized_eigenvalue)

__version__ = "0.1.0"

__all__ = [
    "BoundResult", "BudgetError", "ConditioningError", "ExponentPair",
    "GridResult", "JensenCase", "MomentPencil", "NonUnique", "ParseError",
    "Polynomial", "RefineResult", "SampleStats", "ShapeAssignment",
    "TestFunction", "beta_raw_moment", "bound_series", "builtin",
    "build_moment_pencil", "candidate_value", "density_mode",
    "dirichlet_approx", "empirical_rate", "enumerate_exponents", "evaluate",
    "expectation_point", "expected_value_at_shapes", "f_beta_refine",
    "f_handelman", "f_handelman_powered", "f_sos", "gamma_box",
    "gamma_box_exact", "grid_gap_bound", "grid_min", "jensen_classify",
    "moment_ratio", "parse_polynomial", "relative_gap", "sample_beta_point",
    "sample_statistics", "shape_parameters", "smallest_generalized_eigenvalue",
    "to_text", "univariate_moment", "uniform_value",
]
