"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``key -> Fraction`` with no zero entries; keys only need to
be hashable and orderable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

from .errors import NoSolution, NonUniqueSolution

Vector = dict


def _axpy(y: dict, a: Fraction, x: Mapping) -> None:
    """y += a * x, in place, dropping zeros."""
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class EchelonBasis:
    """Incrementally built echelon form that remembers how each row was made.

    ``add`` returns True when the new vector is independent of the ones added
    before.  ``express`` writes a vector as a combination of the added vectors.
    """

    def __init__(self) -> None:
        self.rows: list[tuple[Hashable, dict, dict]] = []  # (pivot, vector, combination)
        self.count = 0

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping) -> tuple[dict, dict]:
        res = {k: Fraction(c) for k, c in v.items() if c}
        combo: dict = {}
        for pivot, vec, comb in self.rows:
            c = res.get(pivot)
            if c:
                _axpy(res, -c, vec)
                _axpy(combo, c, comb)
        return res, combo

    def add(self, v: Mapping, label: Hashable | None = None) -> bool:
        label = self.count if label is None else label
        self.count += 1
        res, combo = self.reduce(v)
        if not res:
            return False
        pivot = min(res)
        scale = 1 / res[pivot]
        vec = {k: c * scale for k, c in res.items()}
        comb = {k: -c * scale for k, c in combo.items()}
        comb[label] = comb.get(label, 0) + scale
        self.rows.append((pivot, vec, comb))
        return True

    def contains(self, v: Mapping) -> bool:
        res, _ = self.reduce(v)
        return not res

    def express(self, v: Mapping) -> dict:
        res, combo = self.reduce(v)
        if res:
            raise NoSolution("vector is not in the span")
        return {k: c for k, c in combo.items() if c}


def rank(vectors: Iterable[Mapping]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return len(basis)


def solve_unique(columns: dict[Hashable, Mapping], target: Mapping) -> dict:
    """Coefficients c with sum c[k] * columns[k] == target, requiring independent columns."""
    basis = EchelonBasis()
    for label in sorted(columns):
        if not basis.add(columns[label], label):
            raise NonUniqueSolution(f"column {label} is dependent on the others")
    return basis.express(target)
