"""Exact q-analogs of descent and peak polynomials of permutations.

D_S(n, q) and P_S(n, q) refine the counts of permutations with prescribed
descent or peak set by the number of inversions.  This package computes
them through several independent formula routes, cross-validates every
route against brute-force enumeration, checks the structural properties
they are known to satisfy (palindromicity, strong q-log-concavity of the
b-basis coefficients, power-of-two divisibility at q = 1), and scans for
counterexamples to the open question of a-basis log-concavity.
"""

from .polynomial import ONE, Q, ZERO, IntPolynomial, poly_sum
from .qcore import (
    alternating_length_gf,
    neg_q_pochhammer,
    q_binomial,
    q_factorial,
    q_integer,
    q_multinomial,
)
from .permtools import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    Permutation,
    brute_descent_gf,
    brute_descent_gf_by_last,
    brute_peak_gf,
    brute_superset_peak_gf,
    descent_set,
    inversion_count,
    peak_set,
    validate_position_set,
)
from .descent import (
    DescentCoefficients,
    a_coefficients_direct,
    a_coefficients_from_b,
    b_coefficients,
    b_table,
    change_basis_b_to_a,
    descent_gf_a,
    descent_gf_b,
)
from .peak import (
    BlockDecomposition,
    admissible_supersets,
    block_decomposition,
    check_palindromic_peak,
    compatible_sets,
    compatible_term,
    epsilon,
    is_admissible,
    peak_gf_compatible,
    peak_gf_pie,
    peak_gf_recurrence,
    q_superset_gf,
)
from .properties import (
    LogConcavityReport,
    convolve,
    has_internal_zeroes,
    is_strongly_q_log_concave,
    scan_conjecture,
    scan_report_dict,
)

__version__ = "0.1.0"

__all__ = [
    "IntPolynomial",
    "ZERO",
    "ONE",
    "Q",
    "poly_sum",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "q_multinomial",
    "neg_q_pochhammer",
    "alternating_length_gf",
    "Permutation",
    "descent_set",
    "peak_set",
    "inversion_count",
    "validate_position_set",
    "brute_descent_gf",
    "brute_peak_gf",
    "brute_superset_peak_gf",
    "brute_descent_gf_by_last",
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapError",
    "DescentCoefficients",
    "b_table",
    "b_coefficients",
    "a_coefficients_direct",
    "a_coefficients_from_b",
    "change_basis_b_to_a",
    "descent_gf_a",
    "descent_gf_b",
    "is_admissible",
    "compatible_sets",
    "epsilon",
    "compatible_term",
    "peak_gf_compatible",
    "peak_gf_recurrence",
    "peak_gf_pie",
    "BlockDecomposition",
    "block_decomposition",
    "q_superset_gf",
    "admissible_supersets",
    "check_palindromic_peak",
    "LogConcavityReport",
    "has_internal_zeroes",
    "is_strongly_q_log_concave",
    "convolve",
    "scan_conjecture",
    "scan_report_dict",
    "__version__",
]
