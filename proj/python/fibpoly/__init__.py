"""Exact Fibonacci-type / Lucas-type polynomial sequences via the Q(x) matrix.

Thin re-export of the native module; everything computes over exact
rationals, so comparisons are equalities rather than tolerances.
"""

from ._core import (
    CheckStatus,
    ConfigError,
    Counterexample,
    FamilyKind,
    FamilyPair,
    FamilySpec,
    IdentityId,
    IdentityReport,
    Mat2,
    ParseError,
    Poly,
    Rational,
    SeqWindow,
    SweepBounds,
    all_identities,
    builtin_families,
    check_identity,
    companion_fib,
    eval_term_fast,
    families_to_json_text,
    fib_via_qpow,
    find_builtin,
    identity_name,
    load_families,
    lucas_from_fib,
    make_family_pair,
    mat_det,
    mat_pow,
    parse_poly,
    parse_rational,
    q_inverse_power_scaled,
    q_matrix,
    reports_to_json_text,
    run_suite,
    term_iter,
    window,
)

__all__ = [
    "CheckStatus",
    "ConfigError",
    "Counterexample",
    "FamilyKind",
    "FamilyPair",
    "FamilySpec",
    "IdentityId",
    "IdentityReport",
    "Mat2",
    "ParseError",
    "Poly",
    "Rational",
    "SeqWindow",
    "SweepBounds",
    "all_identities",
    "builtin_families",
    "check_identity",
    "companion_fib",
    "eval_term_fast",
    "families_to_json_text",
    "fib_via_qpow",
    "find_builtin",
    "identity_name",
    "load_families",
    "lucas_from_fib",
    "make_family_pair",
    "mat_det",
    "mat_pow",
    "parse_poly",
    "parse_rational",
    "q_inverse_power_scaled",
    "q_matrix",
    "reports_to_json_text",
    "run_suite",
    "term_iter",
    "window",
]

__version__ = "0.1.0"
