"""Which Weyl group elements admit the toric degeneration construction.

Three nested conditions are checked:

* plain: the canonical factorisation s(a_1,b_1)...s(a_k,b_k) has
  b_1 >= b_2 >= ... >= b_k;
* via_theta: the same holds for the diagram flip Theta(w);
* via_blocks: w splits into commuting factors supported on connected pieces
  of the Dynkin diagram and each factor, or its flip inside its own piece,
  is plainly admissible.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .weyl import (
    CanonicalFactorization,
    Permutation,
    all_permutations,
    canonical_factorization,
    format_one_line,
    format_word,
    theta,
)

DEFAULT_CLASSIFY_CAP = 6
PARALLEL_MIN_ELEMENTS = 720


@dataclass(frozen=True)
class Block:
    """A connected piece [lo, hi] of the support of w (generator indices).

    The factor acts on the values lo..hi+1; ``local`` is that factor
    relabelled as a permutation of 1..hi-lo+2.
    """

    lo: int
    hi: int
    factor: Permutation
    local: Permutation
    mode: str | None  # "plain", "flip" or None when the block is not covered

    @property
    def offset(self) -> int:
        return self.lo - 1

    @property
    def size(self) -> int:
        return self.hi - self.lo + 2

    @property
    def levels(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(frozen=True)
class AdmissibilityVerdict:
    w: Permutation
    plain: bool
    via_theta: bool
    via_blocks: bool
    blocks: tuple[Block, ...]
    witness: dict = field(default_factory=dict, compare=False)

    @property
    def covered(self) -> bool:
        return self.plain or self.via_theta or self.via_blocks


def is_admissible(w: Permutation) -> bool:
    b = canonical_factorization(w).b_seq
    return all(x >= y for x, y in zip(b, b[1:]))


def support(w: Permutation) -> set[int]:
    return {i for a, b in canonical_factorization(w) for i in range(b, a + 1)}


def support_blocks(w: Permutation) -> list[tuple[int, int]]:
    """Maximal runs of consecutive generator indices in the support."""
    runs: list[tuple[int, int]] = []
    for i in sorted(support(w)):
        if runs and runs[-1][1] == i - 1:
            runs[-1] = (runs[-1][0], i)
        else:
            runs.append((i, i))
    return runs


def _block(w: Permutation, lo: int, hi: int) -> Block:
    off = lo - 1
    m = hi - lo + 2
    local = Permutation(tuple(w(x + off) - off for x in range(1, m + 1)), m - 1)
    vals = list(range(1, w.n + 2))
    for x in range(lo, hi + 2):
        vals[x - 1] = w(x)
    factor = Permutation(tuple(vals), w.n)
    if is_admissible(local):
        mode = "plain"
    elif is_admissible(theta(local)):
        mode = "flip"
    else:
        mode = None
    return Block(lo, hi, factor, local, mode)


def blocks(w: Permutation) -> tuple[Block, ...]:
    return tuple(_block(w, lo, hi) for lo, hi in support_blocks(w))


def is_covered(w: Permutation) -> AdmissibilityVerdict:
    plain = is_admissible(w)
    th = theta(w)
    via_theta = is_admissible(th)
    bl = blocks(w)
    via_blocks = all(b.mode is not None for b in bl)
    witness = {
        "factorization": canonical_factorization(w).factors,
        "theta_factorization": canonical_factorization(th).factors,
        "block_factorizations": [canonical_factorization(b.local).factors for b in bl],
    }
    return AdmissibilityVerdict(w, plain, via_theta, via_blocks, bl, witness)


def _verdict_key(w: Permutation):
    return (w.length, w.one_line)


def _covered_flag(one_line: tuple[int, ...]) -> bool:
    return is_covered(Permutation(one_line, len(one_line) - 1)).covered


@dataclass
class Classification:
    n: int
    covered: list[Permutation]
    exceptions: list[Permutation]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "covered_count": len(self.covered),
            "exceptions": [[format_one_line(w), format_word(w)] for w in self.exceptions],
        }


def classify(n: int, cap: int = DEFAULT_CLASSIFY_CAP, jobs: int = 1) -> Classification:
    """Partition S_{n+1} into covered elements and exceptions."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"n={n} exceeds the exhaustive sweep cap {cap}")
    perms = all_permutations(n)
    if jobs > 1 and len(perms) >= PARALLEL_MIN_ELEMENTS:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(_covered_flag, [p.one_line for p in perms], chunksize=64))
    else:
        flags = [is_covered(p).covered for p in perms]
    covered = sorted((p for p, f in zip(perms, flags) if f), key=_verdict_key)
    exceptions = sorted((p for p, f in zip(perms, flags) if not f), key=_verdict_key)
    return Classification(n, covered, exceptions)


def canonical_word(f: CanonicalFactorization) -> tuple[int, ...]:
    return tuple(i for a, b in f for i in range(a, b - 1, -1))
