"""Exact symmetric and non-symmetric Jack polynomials.

Two independent engines compute the integral non-symmetric polynomials: a
memoized creation-operator recursion and an admissible-tableau sum.  The
symmetric polynomials are obtained by restriction or full symmetrization,
and a family of verification sweeps checks the defining operator,
orthogonality, coefficient and positivity identities by exact arithmetic.
"""

from .alphapoly import AlphaFrac, AlphaPoly, ExactnessError
from .compositions import (
    compare,
    compositions,
    eigenvalue,
    lambda_plus,
    lower_hook,
    lower_hook_product,
    Ordering,
    partitions,
    sorting_word,
    upper_hook,
    upper_hook_product,
)
from .mpoly import MPoly, divide_coefficients, divided_transposition, specialize_alpha
from .recursion import RecursionCache, e_poly, f_poly, phi_k
from .symmetric import (
    expand_monomial,
    expand_partial_sym,
    gram_schmidt_e,
    j_poly,
    j_via_restriction,
    j_via_symmetrization,
    p_poly,
    PositivityViolation,
    schur_poly,
)
from .tableaux import f_comb, hook_weight, is_admissible, is_zero_admissible, j_comb, Tableau, tableaux
from .cherednik import pairing_context, scalar_product, xi_apply

__version__ = "0.1.0"

__all__ = [
    "AlphaFrac", "AlphaPoly", "ExactnessError", "MPoly", "Ordering",
    "PositivityViolation", "RecursionCache", "Tableau", "compare",
    "compositions", "divide_coefficients", "divided_transposition", "e_poly",
    "eigenvalue", "expand_monomial", "expand_partial_sym", "f_comb", "f_poly",
    "gram_schmidt_e", "hook_weight", "is_admissible", "is_zero_admissible",
    "j_comb", "j_poly", "j_via_restriction", "j_via_symmetrization",
    "lambda_plus", "lower_hook", "lower_hook_product", "p_poly",
    "pairing_context", "partitions", "phi_k", "scalar_product", "schur_poly",
    "sorting_word", "specialize_alpha", "tableaux", "upper_hook",
    "upper_hook_product", "xi_apply",
]
