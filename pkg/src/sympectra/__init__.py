"""Symplectic spectra, Williamson factorization, and diagonal majorization.

Core objects: the symplectic eigenvalues delta(A) of a positive definite
matrix, the symplectic congruence reducing A to Williamson normal form,
mean-indexed symplectic diagonals with their weak-supermajorization
bound, the constructive converse realizing prescribed diagonals and
spectra, and the Ky Fan minimum principle over symplectic frames.
"""

from .errors import DomainError, NumericalError, SympectraError
from .majorization import (MAJORIZATION_TOL, MajorizationReport, horn_realize,
                           intermediate_vector, majorize, weak_supermajorize)
from .means import (DominanceReport, MeanSpec, ValidationReport,
                    arithmetic_mean, custom_mean, dominates_geometric,
                    evaluate, evaluate_pairs, geometric_mean, harmonic_mean,
                    max_mean, min_mean, parse_mean, power_mean,
                    validate_mean_axioms)
from .schur_horn import (CrosscheckReport, KyFanResult, KyFanSearchReport,
                         SchurCheckReport, equivalence_crosscheck,
                         horn_symplectic_realize, kyfan_minimizer,
                         kyfan_objective, kyfan_search, schur_check,
                         sl2_for_ratio)
from .spectral import (WilliamsonFactorization, symplectic_diag,
                       symplectic_eigenvalues, williamson)
from .symplectic import (DEFAULT_TOL, BlockCriterionReport, SymplecticCheck,
                         block_criterion, complete_to_symplectic,
                         expanding_sum, frame_residual, is_symplectic,
                         random_pd, random_symplectic, s_pinching, standard_J)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "SympectraError", "DomainError", "NumericalError",
    "MeanSpec", "arithmetic_mean", "geometric_mean", "harmonic_mean",
    "min_mean", "max_mean", "power_mean", "custom_mean", "parse_mean",
    "evaluate", "evaluate_pairs", "validate_mean_axioms",
    "dominates_geometric", "ValidationReport", "DominanceReport",
    "DEFAULT_TOL", "standard_J", "is_symplectic", "block_criterion",
    "expanding_sum", "s_pinching", "frame_residual",
    "complete_to_symplectic", "random_symplectic", "random_pd",
    "SymplecticCheck", "BlockCriterionReport",
    "WilliamsonFactorization", "symplectic_eigenvalues", "williamson",
    "symplectic_diag",
    "MAJORIZATION_TOL", "MajorizationReport", "weak_supermajorize",
    "majorize", "intermediate_vector", "horn_realize",
    "SchurCheckReport", "KyFanResult", "KyFanSearchReport",
    "CrosscheckReport", "schur_check", "sl2_for_ratio",
    "horn_symplectic_realize", "kyfan_minimizer", "kyfan_objective",
    "kyfan_search", "equivalence_crosscheck",
]
