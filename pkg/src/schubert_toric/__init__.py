"""Schubert varieties of SL_{n+1}, their distributive lattices and toric degenerations."""

from .weyl import Permutation, canonical_factorization, s_interval, theta, bruhat_leq
from .cosets import CosetTuple

__all__ = [
    "Permutation",
    "CosetTuple",
    "canonical_factorization",
    "s_interval",
    "theta",
    "bruhat_leq",
]
