"""W_i = W / W_{omega_i} as strictly increasing i-tuples.

Tuple entries are 0-based (``0 <= r_1 < ... < r_i <= n``) while permutation
values are 1-based; the shift lives only in ``tuple_to_min_rep`` and
``project_to_level``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import LevelMismatch, RankMismatch
from .weyl import Permutation, s_interval


@dataclass(frozen=True, order=True)
class CosetTuple:
    level: int
    entries: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.level <= self.n:
            raise ValueError(f"level {self.level} out of range 1..{self.n}")
        if len(self.entries) != self.level:
            raise ValueError(f"{self.entries} does not have {self.level} entries")
        if any(not 0 <= r <= self.n for r in self.entries):
            raise ValueError(f"{self.entries} has entries outside 0..{self.n}")
        if any(a >= b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError(f"{self.entries} is not strictly increasing")

    @classmethod
    def minimal(cls, level: int, n: int) -> CosetTuple:
        return cls(level, tuple(range(level)), n)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + f")@W{self.level}"

    @property
    def length(self) -> int:
        """Length of the minimal coset representative."""
        return sum(r - k for k, r in enumerate(self.entries))


def coset_tuple(entries, n: int) -> CosetTuple:
    entries = tuple(entries)
    return CosetTuple(len(entries), entries, n)


def parse_tuple(text: str, n: int) -> CosetTuple:
    """Parse ``(r1,...,ri)@Wi`` or a bare ``(r1,...,ri)``."""
    body, _, lvl = text.strip().partition("@")
    body = body.strip().strip("()")
    entries = tuple(int(x) for x in body.split(",") if x.strip())
    t = coset_tuple(entries, n)
    if lvl and int(lvl.lstrip("W")) != t.level:
        raise ValueError(f"level tag {lvl!r} disagrees with {len(entries)} entries")
    return t


def _check_pair(a: CosetTuple, b: CosetTuple) -> None:
    if a.n != b.n:
        raise RankMismatch(f"rank mismatch: n={a.n} vs n={b.n}")
    if a.level != b.level:
        raise LevelMismatch(f"level mismatch: {a} vs {b}")


def tuple_to_min_rep(t: CosetTuple) -> Permutation:
    """s(r_1, 1) s(r_2, 2) ... s(r_i, i)."""
    w = Permutation.identity(t.n)
    for k, r in enumerate(t.entries, start=1):
        w = w * s_interval(r, k, t.n)
    return w


def project_to_level(w: Permutation, i: int) -> CosetTuple:
    if not 1 <= i <= w.n:
        raise ValueError(f"level {i} out of range 1..{w.n}")
    return CosetTuple(i, tuple(sorted(x - 1 for x in w.one_line[:i])), w.n)


def tuple_leq(a: CosetTuple, b: CosetTuple) -> bool:
    _check_pair(a, b)
    return all(x <= y for x, y in zip(a.entries, b.entries))


def tuple_join(a: CosetTuple, b: CosetTuple) -> CosetTuple:
    _check_pair(a, b)
    return CosetTuple(a.level, tuple(map(max, a.entries, b.entries)), a.n)


def tuple_meet(a: CosetTuple, b: CosetTuple) -> CosetTuple:
    _check_pair(a, b)
    return CosetTuple(a.level, tuple(map(min, a.entries, b.entries)), a.n)


@lru_cache(maxsize=None)
def level_tuples(i: int, n: int) -> tuple[CosetTuple, ...]:
    """All of W_i, in lexicographic order."""
    return tuple(CosetTuple(i, c, n) for c in itertools.combinations(range(n + 1), i))


def left_act(k: int, t: CosetTuple) -> CosetTuple:
    """The class of s_k * tau: swap values k-1 and k (0-based) in the entry set."""
    vals = set(t.entries)
    lo, hi = k - 1, k
    if (lo in vals) != (hi in vals):
        vals ^= {lo, hi}
    return CosetTuple(t.level, tuple(sorted(vals)), t.n)
