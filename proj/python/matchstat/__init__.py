"""Descent statistics of matchings: exact moments, Sundaram's bijection and CLT checks."""

from fractions import Fraction

from . import _core
from ._core import (
    BudgetExceeded,
    DomainError,
    Matching,
    RangeError,
    ValidationError,
    clt_experiment,
    conjugate_matching,
    descent_stats,
    enumerate_matchings,
    exact_ks_distance,
    lemma41_lhs,
    mgf_Wn,
    sample_uniform,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "Matching",
    "RangeError",
    "ValidationError",
    "brute_force_moments",
    "classify_position",
    "closed_form_moments",
    "clt_experiment",
    "conjugate_matching",
    "conjugate_oscillating",
    "descent_stats",
    "double_factorial",
    "enumerate_matchings",
    "exact_ks_distance",
    "lemma41_lhs",
    "matching_to_oscillating",
    "mgf_Wn",
    "oscillating_to_matching",
    "polynomial_by_enumeration",
    "polynomial_by_gf",
    "sample_uniform",
]


def _fractions(report):
    return {k: (None if v is None else Fraction(v)) for k, v in report.items()}


def double_factorial(m):
    return int(_core._double_factorial(m))


def closed_form_moments(n):
    """Closed-form moments as Fractions; fields below their validity threshold are None."""
    return _fractions(_core._closed_form_moments(n))


def brute_force_moments(n):
    """Moments by exhaustive enumeration (small n only)."""
    return _fractions(_core._brute_force_moments(n))


def _shapes(shapes):
    return [list(s) for s in shapes]


def matching_to_oscillating(matching):
    """Shape sequence of the oscillating tableau, as a list of tuples."""
    return [tuple(s) for s in _core._matching_to_oscillating(matching)]


def oscillating_to_matching(shapes):
    return _core._oscillating_to_matching(_shapes(shapes))


def conjugate_oscillating(shapes):
    return [tuple(s) for s in _core._conjugate_oscillating(_shapes(shapes))]


def classify_position(shapes, i):
    """Case number 1..6 of position i in an oscillating tableau."""
    return _core._classify_position(_shapes(shapes), i)


def polynomial_by_gf(n):
    """Coefficients c_0..c_{2n-1} of the descent polynomial, as Python ints."""
    return [int(c) for c in _core._polynomial_by_gf(n)]


def polynomial_by_enumeration(n):
    return [int(c) for c in _core._polynomial_by_enumeration(n)]
