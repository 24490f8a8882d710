"""The symmetric group S_{n+1} as the Weyl group of SL_{n+1}.

Permutations are stored in one-line notation with values in ``1..n+1``.
Products read right to left as functions: ``(u * v)(x) == u(v(x))``, so
``s2 * s1`` sends 1 to 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .errors import RankMismatch


@dataclass(frozen=True)
class Permutation:
    one_line: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if len(self.one_line) != self.n + 1:
            raise ValueError(f"one-line notation {self.one_line} has wrong size for n={self.n}")
        if sorted(self.one_line) != list(range(1, self.n + 2)):
            raise ValueError(f"{self.one_line} is not a permutation of 1..{self.n + 1}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 2)), n)

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        if not 1 <= i <= n:
            raise ValueError(f"simple reflection s{i} out of range for n={n}")
        vals = list(range(1, n + 2))
        vals[i - 1], vals[i] = vals[i], vals[i - 1]
        return cls(tuple(vals), n)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> Permutation:
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n + 1, 0, -1)), n)

    def __call__(self, x: int) -> int:
        return self.one_line[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return format_one_line(self)

    def inverse(self) -> Permutation:
        inv = [0] * (self.n + 1)
        for pos, val in enumerate(self.one_line, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv), self.n)

    @cached_property
    def length(self) -> int:
        w = self.one_line
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def is_identity(self) -> bool:
        return self.one_line == tuple(range(1, self.n + 2))

    def left_descents(self) -> list[int]:
        """Indices i with l(s_i w) < l(w), i.e. i+1 appears before i."""
        pos = self.inverse().one_line
        return [i for i in range(1, self.n + 1) if pos[i] < pos[i - 1]]

    def reduced_word(self) -> tuple[int, ...]:
        return tuple(i for a, b in canonical_factorization(self) for i in range(a, b - 1, -1))

    def reduced_words(self) -> Iterator[tuple[int, ...]]:
        yield from _reduced_words(self.one_line, self.n)


def _check_rank(u: Permutation, v: Permutation) -> None:
    if u.n != v.n:
        raise RankMismatch(f"rank mismatch: n={u.n} vs n={v.n}")


def compose(u: Permutation, v: Permutation) -> Permutation:
    _check_rank(u, v)
    return Permutation(tuple(u.one_line[x - 1] for x in v.one_line), u.n)


@lru_cache(maxsize=None)
def _reduced_words(one_line: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    w = Permutation(one_line, n)
    if w.is_identity():
        return ((),)
    words = []
    for i in w.left_descents():
        rest = Permutation.simple(i, n) * w
        words.extend((i,) + tail for tail in _reduced_words(rest.one_line, n))
    return tuple(words)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Tableau criterion: sorted prefixes of u are entrywise below those of w."""
    _check_rank(u, w)
    for i in range(1, u.n + 1):
        a = sorted(u.one_line[:i])
        b = sorted(w.one_line[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def subword_ideal(w: Permutation) -> frozenset[tuple[int, ...]]:
    """All one-line notations of products of subwords of one reduced word of w.

    Independent characterisation of the Bruhat interval [e, w]; used to
    cross-check ``bruhat_leq``.
    """
    word = w.reduced_word()
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        out.add(Permutation.from_word([i for i, m in zip(word, mask) if m], w.n).one_line)
    return frozenset(out)


def s_interval(a: int, b: int, n: int) -> Permutation:
    """s(a, b) = s_a s_{a-1} ... s_b, the identity when a < b."""
    if a < b:
        return Permutation.identity(n)
    if not (1 <= b and a <= n):
        raise ValueError(f"s({a},{b}) out of range for n={n}")
    # b -> a+1 and x -> x-1 on b+1..a+1
    vals = list(range(1, n + 2))
    for x in range(b + 1, a + 2):
        vals[x - 1] = x - 1
    vals[b - 1] = a + 1
    return Permutation(tuple(vals), n)


@dataclass(frozen=True)
class CanonicalFactorization:
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def a_seq(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.factors)

    @property
    def b_seq(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.factors)

    def length(self) -> int:
        return sum(a - b + 1 for a, b in self.factors)

    def product(self, n: int) -> Permutation:
        w = Permutation.identity(n)
        for a, b in self.factors:
            w = w * s_interval(a, b, n)
        return w


def canonical_factorization(w: Permutation) -> CanonicalFactorization:
    """Unique factorisation w = s(a_1,b_1)...s(a_k,b_k) with a_1 < ... < a_k.

    Peels off the last factor: a_k + 1 is the largest value moved by w and
    b_k is its position.
    """
    factors = []
    cur = w
    while not cur.is_identity():
        top = max(x for x in range(1, cur.n + 2) if cur(x) != x)
        b = cur.inverse()(top)
        a = top - 1
        factors.append((a, b))
        cur = cur * s_interval(a, b, cur.n).inverse()
    return CanonicalFactorization(tuple(reversed(factors)))


def theta(w: Permutation) -> Permutation:
    """Dynkin diagram flip s_i -> s_{n+1-i}, i.e. conjugation by w0."""
    m = w.n + 2
    return Permutation(tuple(m - w(m - x) for x in range(1, w.n + 2)), w.n)


def all_permutations(n: int) -> list[Permutation]:
    """S_{n+1} ordered by length, then one-line notation."""
    perms = [Permutation(p, n) for p in itertools.permutations(range(1, n + 2))]
    perms.sort(key=lambda p: (p.length, p.one_line))
    return perms


def bruhat_ideal(w: Permutation) -> list[Permutation]:
    return [u for u in all_permutations(w.n) if bruhat_leq(u, w)]


def format_one_line(w: Permutation) -> str:
    return ",".join(str(x) for x in w.one_line)


def format_word(w: Permutation) -> str:
    word = w.reduced_word()
    return "*".join(f"s{i}" for i in word) if word else "e"


def parse_one_line(text: str) -> Permutation:
    vals = tuple(int(x) for x in text.replace(" ", "").split(","))
    return Permutation(vals, len(vals) - 1)


def parse_word(text: str, n: int) -> Permutation:
    text = text.replace(" ", "")
    if text in ("", "e", "1"):
        return Permutation.identity(n)
    letters = []
    for tok in text.split("*"):
        if not tok.startswith("s") or not tok[1:].isdigit():
            raise ValueError(f"bad generator {tok!r} in word {text!r}")
        letters.append(int(tok[1:]))
    return Permutation.from_word(letters, n)


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Accept either a word ``s2*s1`` (needs n) or one-line ``3,1,2``."""
    text = text.strip()
    if text[:1] in ("s", "e") or text == "":
        if n is None:
            raise ValueError("a word needs an explicit rank n")
        return parse_word(text, n)
    w = parse_one_line(text)
    if n is not None and w.n != n:
        raise RankMismatch(f"one-line {text!r} has n={w.n}, expected {n}")
    return w
