"""Exact computations with Jordan-Polya numbers (products of factorials)."""

from jpcount._core import (
    audit_ennola,
    audit_exponent_ratio,
    audit_granville,
    audit_jp_prime_lower,
    audit_multiplicity_family,
    audit_proof_sums,
    audit_rosser,
    audit_simplex,
    audit_stirling,
    bound_eval,
    count,
    count_representations,
    ennola_count,
    factorial_exponents,
    floor_ratio_sum,
    hickerson_search,
    hickerson_verify,
    is_member,
    legendre_exponent,
    multiplicity_witness,
    optimize_lower_bound,
    prime_factorial_decomposition,
    primes,
    psi,
    representations,
    simplex_count,
    theta,
    thresholds,
    values,
)

__version__ = "0.1.0"

__all__ = [
    "audit_ennola",
    "audit_exponent_ratio",
    "audit_granville",
    "audit_jp_prime_lower",
    "audit_multiplicity_family",
    "audit_proof_sums",
    "audit_rosser",
    "audit_simplex",
    "audit_stirling",
    "bound_eval",
    "count",
    "count_representations",
    "ennola_count",
    "factorial_exponents",
    "floor_ratio_sum",
    "hickerson_search",
    "hickerson_verify",
    "is_member",
    "legendre_exponent",
    "multiplicity_witness",
    "optimize_lower_bound",
    "prime_factorial_decomposition",
    "primes",
    "psi",
    "representations",
    "simplex_count",
    "theta",
    "thresholds",
    "values",
]
