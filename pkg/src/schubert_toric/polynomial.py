"""Multivariate polynomials with exact rational coefficients.

Variables are matrix entries ``x[r, c]`` (1-based); a monomial is the sorted
tuple of its variables, repeated according to multiplicity.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .cosets import CosetTuple

Var = tuple[int, int]
Monomial = tuple[Var, ...]


class ExactPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Monomial, Fraction] = {
            m: Fraction(c) for m, c in (terms or {}).items() if c
        }

    @classmethod
    def var(cls, r: int, c: int) -> ExactPolynomial:
        return cls({((r, c),): 1})

    @classmethod
    def constant(cls, c) -> ExactPolynomial:
        return cls({(): c})

    def __add__(self, other: ExactPolynomial) -> ExactPolynomial:
        out = defaultdict(Fraction, self.terms)
        for m, c in other.terms.items():
            out[m] += c
        return ExactPolynomial(out)

    def __neg__(self) -> ExactPolynomial:
        return ExactPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: ExactPolynomial) -> ExactPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ExactPolynomial):
            return ExactPolynomial({m: c * other for m, c in self.terms.items()})
        out: dict = defaultdict(Fraction)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[tuple(sorted(m1 + m2))] += c1 * c2
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Graded lexicographic order, for deterministic iteration."""
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mon = "*".join(f"x{r}{col}" for r, col in m) or "1"
            parts.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 or not m else ''}{mon}")
        return " ".join(parts)


def _sign(perm: tuple[int, ...]) -> int:
    inv = sum(1 for a, b in itertools.combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inv % 2 else 1


def determinant(rows: list[int], cols: list[int]) -> ExactPolynomial:
    """Minor of the generic matrix on the given (1-based) rows and columns."""
    terms = {}
    for perm in itertools.permutations(range(len(cols))):
        mon = tuple(sorted((rows[k], cols[perm[k]]) for k in range(len(rows))))
        terms[mon] = _sign(perm)
    return ExactPolynomial(terms)


@lru_cache(maxsize=None)
def flag_minor(tau: CosetTuple) -> ExactPolynomial:
    """p_tau: rows {r+1 : r in tau}, columns 1..level."""
    return determinant([r + 1 for r in tau.entries], list(range(1, tau.level + 1)))
