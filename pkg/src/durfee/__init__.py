"""Exact arithmetic for partition counts by Durfee triangle and square size.

The package computes, cross-validates, and exports the rational generating
functions, linear recurrences, quasi-polynomials, leading asymptotics, and
congruence periods of the number R_k(n) of partitions of n whose Durfee
triangle has size k, together with the auxiliary staircase-composition
series A_d(q) and the classical Durfee-square counts D_k(n).  Everything
is integer or Fraction arithmetic; there is no floating point anywhere.

Layout:
  partitions -- brute-force enumeration and statistics (the ground truth)
  polyring   -- dense exact polynomial / rational-function arithmetic
  qseries    -- A_d(q) and its numerator alpha_d(q), three ways
  genfuncs   -- F_k(q), phi_k(q), and the Durfee-square analogues
  cfinite    -- recurrences, quasi-polynomial fits, asymptotics, periods
  verify     -- the cross-check battery behind `durfee verify`
  cli        -- command-line interface
"""

from .partitions import (
    MAX_ENUMERATION_N,
    Partition,
    TriangleDecomposition,
    conjugate,
    count_ad_bruteforce,
    count_dk_bruteforce,
    count_pd_bruteforce,
    count_rk_bruteforce,
    decompose_by_triangle,
    durfee_square_size,
    durfee_triangle_size,
    enumerate_partitions,
    triangular,
)
from .polyring import (
    IntPolynomial,
    NonDivisible,
    PowerSeries,
    RationalFunction,
    gaussian_binomial,
    monomial,
    poly_gcd,
    q_pochhammer,
)
from .qseries import (
    AlphaStructureReport,
    StructureViolation,
    ad_ratfn,
    ad_ratfn_recursive,
    ad_series_dp,
    alpha_poly,
    check_alpha_structure,
)
from .genfuncs import (
    DurfeeGF,
    curly_fk_ratfn,
    dk_ratfn,
    durfee_gf,
    fk_ratfn,
    fk_series_convolution,
    phi_poly,
)
from .cfinite import (
    CFiniteRecurrence,
    CongruenceShiftReport,
    FitMismatch,
    InsufficientSeed,
    QuasiPolynomial,
    WindowTooSmall,
    congruence_shift_check,
    eventual_period_mod,
    extend_sequence,
    extend_sequence_mod,
    leading_asymptotic_dk,
    leading_asymptotic_rk,
    quasipoly_fit,
    recurrence_from_ratfn,
    rk_eventual_period_mod,
    rk_values,
    rk_values_mod,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_ENUMERATION_N",
    "Partition",
    "TriangleDecomposition",
    "conjugate",
    "count_ad_bruteforce",
    "count_dk_bruteforce",
    "count_pd_bruteforce",
    "count_rk_bruteforce",
    "decompose_by_triangle",
    "durfee_square_size",
    "durfee_triangle_size",
    "enumerate_partitions",
    "triangular",
    "IntPolynomial",
    "NonDivisible",
    "PowerSeries",
    "RationalFunction",
    "gaussian_binomial",
    "monomial",
    "poly_gcd",
    "q_pochhammer",
    "AlphaStructureReport",
    "StructureViolation",
    "ad_ratfn",
    "ad_ratfn_recursive",
    "ad_series_dp",
    "alpha_poly",
    "check_alpha_structure",
    "DurfeeGF",
    "curly_fk_ratfn",
    "dk_ratfn",
    "durfee_gf",
    "fk_ratfn",
    "fk_series_convolution",
    "phi_poly",
    "CFiniteRecurrence",
    "CongruenceShiftReport",
    "FitMismatch",
    "InsufficientSeed",
    "QuasiPolynomial",
    "WindowTooSmall",
    "congruence_shift_check",
    "eventual_period_mod",
    "extend_sequence",
    "extend_sequence_mod",
    "leading_asymptotic_dk",
    "leading_asymptotic_rk",
    "quasipoly_fit",
    "recurrence_from_ratfn",
    "rk_eventual_period_mod",
    "rk_values",
    "rk_values_mod",
    "__version__",
]
