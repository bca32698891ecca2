"""Exact and modular arithmetic for Fubini, r-Fubini and r-horse numbers."""

from .errors import DomainError, InexactDivisionError, TheoremViolation
from .number_theory import (
    Factorization,
    carmichael,
    euler_totient,
    factorize,
    max_prime_exponent,
    verify_exponent_properties,
)
from .periodicity import (
    PeriodReport,
    analyze,
    detect_eventual_period,
    fubini_mod_sequence,
    fubini_r_mod_sequence,
)
from .sequences import (
    BigSequence,
    factorials,
    fubini,
    fubini_alternating,
    fubini_r,
    horse_r,
    transform_strong_to_weak,
    transform_weak_to_strong,
)
from .shift import ShiftPolynomial, apply, compose, falling_factorial_operator
from .stirling import (
    TriangularMatrix,
    falling_factorial_coefficients,
    matrix_product,
    stirling_first_signed,
    stirling_matrix,
    stirling_second,
)

__version__ = "0.1.0"
