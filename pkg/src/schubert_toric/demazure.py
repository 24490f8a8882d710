"""Demazure characters by isobaric divided differences.

Characters live on GL-style exponent vectors in Z^{n+1}; e^{omega_i} is
(1,...,1,0,...,0) with i ones, so s_i acts by swapping coordinates i, i+1.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .weyl import Permutation


class Character:
    """Finitely supported integer combination of monomials x^a."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        self.terms = {a: c for a, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exponent: Sequence[int]) -> Character:
        return cls({tuple(exponent): 1})

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Character) -> Character:
        out = defaultdict(int, self.terms)
        for a, c in other.terms.items():
            out[a] += c
        return Character(out)

    def __repr__(self) -> str:
        return f"Character({dict(sorted(self.terms.items()))})"

    def dump(self) -> str:
        return "".join(f"{','.join(map(str, a))}:{c}\n" for a, c in sorted(self.terms.items()))


def _pi_monomial(i: int, a: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    x, y = a[i - 1], a[i]
    out = {}

    def shifted(t: int) -> tuple[int, ...]:
        b = list(a)
        b[i - 1] -= t
        b[i] += t
        return tuple(b)

    if x >= y:
        for t in range(x - y + 1):
            out[shifted(t)] = 1
    else:
        # -(x^{a + e_i - e_{i+1}} + ... ), the interior of the telescope
        for t in range(1, y - x):
            out[shifted(-t)] = -1
    return out


def demazure_op(i: int, f: Character) -> Character:
    if f.terms:
        nvars = len(next(iter(f.terms)))
        if not 1 <= i < nvars:
            raise ValueError(f"pi_{i} out of range for {nvars} variables")
    out: dict = defaultdict(int)
    for a, c in f.terms.items():
        for b, d in _pi_monomial(i, a).items():
            out[b] += c * d
    return Character(out)


def highest_exponent(lam: Sequence[int]) -> tuple[int, ...]:
    """Exponent vector of e^lambda for lambda = sum k_i omega_i."""
    n = len(lam)
    return tuple(sum(lam[k] for k in range(p, n)) for p in range(n + 1))


def demazure_character(w: Permutation, lam: Sequence[int], word: Sequence[int] | None = None) -> Character:
    """pi_{i_1} ... pi_{i_l} e^lambda for a reduced word w = s_{i_1} ... s_{i_l}."""
    if len(lam) != w.n:
        raise ValueError(f"lambda needs {w.n} coordinates")
    word = tuple(w.reduced_word() if word is None else word)
    return _demazure(word, tuple(lam))


@lru_cache(maxsize=4096)
def _demazure(word: tuple[int, ...], lam: tuple[int, ...]) -> Character:
    f = Character.monomial(highest_exponent(lam))
    for i in reversed(word):
        f = demazure_op(i, f)
    return f


def dimension(f: Character) -> int:
    return sum(f.terms.values())


def weyl_dimension(lam: Sequence[int]) -> int:
    """dim V(lambda) by the Weyl dimension formula for SL_{n+1}."""
    part = highest_exponent(lam)
    num = Fraction(1)
    for p in range(len(part)):
        for q in range(p + 1, len(part)):
            num *= Fraction(part[p] - part[q] + q - p, q - p)
    assert num.denominator == 1
    return int(num)
