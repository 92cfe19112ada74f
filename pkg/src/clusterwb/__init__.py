"""Exact cluster-variable enumeration and denominator checks for acyclic quivers."""

from .exmatrix import ExchangeMatrix, classify_quiver, is_acyclic, mutate_matrix, parse_quiver
from .laurent import LaurentPoly, denominator_vector, exact_div, parse_laurent, positivity_check
from .seeds import Seed, enumerate_seeds, mutate_seed, reroot

__all__ = [
    "ExchangeMatrix",
    "LaurentPoly",
    "Seed",
    "classify_quiver",
    "denominator_vector",
    "enumerate_seeds",
    "exact_div",
    "is_acyclic",
    "mutate_matrix",
    "mutate_seed",
    "parse_laurent",
    "parse_quiver",
    "positivity_check",
    "reroot",
]
