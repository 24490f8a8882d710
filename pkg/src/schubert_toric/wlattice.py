"""The graded poset W^w = disjoint union of the W_i^w and its lattice structure.

For an admissible w the order between a level-i element phi and a level-j
element tau (i <= j) is ``breve(phi, j) <= tau`` componentwise, with
join ``tau v breve(phi)`` at level j and meet ``tilde(tau) ^ phi`` at
level i.  Elements covered only through the diagram flip, or through a
splitting into commuting blocks, get the same structure computed in a
relabelled frame (see ``Frame``) and glued as an ordinal sum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .admissibility import AdmissibilityVerdict, is_covered
from .cosets import (
    CosetTuple,
    level_tuples,
    project_to_level,
    tuple_join,
    tuple_leq,
    tuple_meet,
)
from .errors import AxiomViolation, NotCovered
from .weyl import Permutation, bruhat_ideal, theta

LatticeElement = CosetTuple


# -- the breve/tilde order on plain tuples -----------------------------------


def breve(phi: CosetTuple, j: int) -> CosetTuple:
    i = phi.level
    if j < i:
        raise ValueError(f"breve needs j >= level {i}, got {j}")
    if j > phi.n:
        raise ValueError(f"level {j} out of range for n={phi.n}")
    head = tuple(range(j - i))
    tail = tuple(max(k - 1, phi.entries[k - j + i - 1]) for k in range(j - i + 1, j + 1))
    return CosetTuple(j, head + tail, phi.n)


def tilde(tau: CosetTuple, i: int) -> CosetTuple:
    if i > tau.level or i < 1:
        raise ValueError(f"tilde needs 1 <= i <= {tau.level}, got {i}")
    return CosetTuple(i, tau.entries[tau.level - i :], tau.n)


def leq_w(phi: CosetTuple, tau: CosetTuple) -> bool:
    """phi <=_w tau; a higher level is never below a lower one."""
    if phi.level > tau.level:
        return False
    if phi.level == tau.level:
        return tuple_leq(phi, tau)
    up = tuple_leq(breve(phi, tau.level), tau)
    down = tuple_leq(phi, tilde(tau, phi.level))
    assert up == down, f"breve/tilde formulations disagree on {phi}, {tau}"
    return up


def _ordered(a: CosetTuple, b: CosetTuple) -> tuple[CosetTuple, CosetTuple]:
    return (a, b) if a.level <= b.level else (b, a)


def join_w(phi: CosetTuple, tau: CosetTuple) -> CosetTuple:
    phi, tau = _ordered(phi, tau)
    return tuple_join(tau, breve(phi, tau.level))


def meet_w(phi: CosetTuple, tau: CosetTuple) -> CosetTuple:
    phi, tau = _ordered(phi, tau)
    return tuple_meet(tilde(tau, phi.level), phi)


# -- frames -------------------------------------------------------------------


@dataclass(frozen=True)
class Frame:
    """A piece of W^w on which the order is the breve/tilde order after relabelling.

    Big-group levels ``offset+1 .. offset+size-1`` correspond to local levels
    ``1 .. size-1`` of S_size.  A flipped frame additionally applies the
    diagram flip, which sends local level l to size-l and a value set to the
    reflected complement.  ``local_w`` is the (plainly admissible) element the
    local order is taken with respect to.
    """

    offset: int
    size: int
    flipped: bool
    local_w: Permutation | None  # None for a cut level
    levels: tuple[int, ...]  # big levels, in precedence order

    @property
    def is_cut(self) -> bool:
        return self.local_w is None

    def to_local(self, t: CosetTuple) -> CosetTuple:
        m = self.size
        ents = tuple(x - self.offset for x in t.entries[self.offset :])
        lvl = t.level - self.offset
        if self.flipped:
            rest = sorted(set(range(m)) - set(ents))
            ents = tuple(sorted(m - 1 - c for c in rest))
            lvl = m - lvl
        return CosetTuple(lvl, ents, m - 1)

    def from_local(self, t: CosetTuple, n: int) -> CosetTuple:
        m = self.size
        ents, lvl = t.entries, t.level
        if self.flipped:
            rest = sorted(set(range(m)) - set(ents))
            ents = tuple(sorted(m - 1 - c for c in rest))
            lvl = m - lvl
        big = tuple(range(self.offset)) + tuple(x + self.offset for x in ents)
        return CosetTuple(lvl + self.offset, big, n)


def _frames(w: Permutation, verdict: AdmissibilityVerdict) -> list[Frame]:
    n = w.n
    if verdict.plain:
        return [Frame(0, n + 1, False, w, tuple(range(1, n + 1)))]
    if verdict.via_theta:
        return [Frame(0, n + 1, True, theta(w), tuple(range(n, 0, -1)))]
    if not verdict.via_blocks:
        raise NotCovered(w)
    frames = []
    level = 1
    for b in verdict.blocks:
        for c in range(level, b.lo):
            frames.append(Frame(0, 0, False, None, (c,)))
        lv = tuple(b.levels)
        if b.mode == "plain":
            frames.append(Frame(b.offset, b.size, False, b.local, lv))
        else:
            frames.append(Frame(b.offset, b.size, True, theta(b.local), lv[::-1]))
        level = b.hi + 1
    for c in range(level, n + 1):
        frames.append(Frame(0, 0, False, None, (c,)))
    return frames


# -- the lattice --------------------------------------------------------------


def lattice_elements(w: Permutation) -> dict[int, list[CosetTuple]]:
    """W_i^w for each level i, in lexicographic order."""
    out = {}
    for i in range(1, w.n + 1):
        top = project_to_level(w, i)
        out[i] = [t for t in level_tuples(i, w.n) if tuple_leq(t, top)]
    return out


@dataclass
class WLattice:
    w: Permutation
    verdict: AdmissibilityVerdict
    frames: list[Frame]
    elements: list[CosetTuple]
    index: dict[CosetTuple, int]
    leq: np.ndarray
    join: np.ndarray
    meet: np.ndarray
    failures: list[dict] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.w.n

    def __len__(self) -> int:
        return len(self.elements)

    def level_rank(self, level: int) -> int:
        return self._level_rank[level]

    def by_level(self, level: int) -> list[CosetTuple]:
        return [e for e in self.elements if e.level == level]

    def leq_elements(self, a: CosetTuple, b: CosetTuple) -> bool:
        return bool(self.leq[self._idx(a), self._idx(b)])

    def join_elements(self, a: CosetTuple, b: CosetTuple) -> CosetTuple:
        return self.elements[self.join[self._idx(a), self._idx(b)]]

    def meet_elements(self, a: CosetTuple, b: CosetTuple) -> CosetTuple:
        return self.elements[self.meet[self._idx(a), self._idx(b)]]

    def comparable(self, a: CosetTuple, b: CosetTuple) -> bool:
        i, j = self._idx(a), self._idx(b)
        return bool(self.leq[i, j] or self.leq[j, i])

    def precedes(self, a: CosetTuple, b: CosetTuple) -> bool:
        """Level of a comes no later than level of b in this lattice's grading."""
        return self.level_rank(a.level) <= self.level_rank(b.level)

    def incomparable_pairs(self) -> list[tuple[CosetTuple, CosetTuple]]:
        """Unordered non-comparable pairs (a, b) with a preceding b."""
        out = []
        for x, y in itertools.combinations(range(len(self.elements)), 2):
            if not (self.leq[x, y] or self.leq[y, x]):
                a, b = self.elements[x], self.elements[y]
                if not self.precedes(a, b):
                    a, b = b, a
                out.append((a, b))
        return out

    def frame_of(self, level: int) -> Frame:
        return self._frame_of_level[level]

    def _idx(self, a: CosetTuple) -> int:
        try:
            return self.index[a]
        except KeyError:
            raise ValueError(f"{a} is not an element of the lattice of w = {self.w}") from None

    def __post_init__(self) -> None:
        self._frame_of_level = {lvl: f for f in self.frames for lvl in f.levels}
        order = [lvl for f in self.frames for lvl in f.levels]
        self._level_rank = {lvl: r for r, lvl in enumerate(order)}

    def rank_function(self) -> list[int]:
        """Height of every element above the bottom (longest chain length)."""
        N = len(self.elements)
        strict = self.leq & ~np.eye(N, dtype=bool)
        height = [0] * N
        order = sorted(range(N), key=lambda x: int(self.leq[:, x].sum()))
        for x in order:
            below = np.nonzero(strict[:, x])[0]
            height[x] = 1 + max((height[y] for y in below), default=-1)
        return height

    def hasse_dot(self) -> str:
        N = len(self.elements)
        strict = self.leq & ~np.eye(N, dtype=bool)
        lines = [f'digraph "W^{self.w}" {{', "  rankdir=BT;"]
        for x, e in enumerate(self.elements):
            lines.append(f'  n{x} [label="{e}"];')
        for x in range(N):
            for y in range(N):
                if strict[x, y] and not any(strict[x, z] and strict[z, y] for z in range(N)):
                    lines.append(f"  n{x} -> n{y};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _frame_leq(f: Frame, a: CosetTuple, b: CosetTuple) -> bool:
    if f.is_cut:
        return a == b
    return leq_w(f.to_local(a), f.to_local(b))


def _frame_join_meet(f: Frame, a: CosetTuple, b: CosetTuple, n: int):
    if f.is_cut:
        return a, a
    la, lb = f.to_local(a), f.to_local(b)
    return f.from_local(join_w(la, lb), n), f.from_local(meet_w(la, lb), n)


def build_lattice(w: Permutation, check: bool = True) -> WLattice:
    """Build W^w with order and operation tables; optionally verify all axioms.

    Raises NotCovered when no admissibility condition applies and
    AxiomViolation when a check fails.
    """
    return _build_lattice(w, check)


@lru_cache(maxsize=512)
def _build_lattice(w: Permutation, check: bool) -> WLattice:
    verdict = is_covered(w)
    if not verdict.covered:
        raise NotCovered(w)
    frames = _frames(w, verdict)
    frame_pos = {lvl: k for k, f in enumerate(frames) for lvl in f.levels}
    level_rank = {lvl: r for r, lvl in enumerate(lvl for f in frames for lvl in f.levels)}
    per_level = lattice_elements(w)
    elements = sorted(
        (t for ts in per_level.values() for t in ts),
        key=lambda t: (level_rank[t.level], t.entries),
    )
    index = {t: k for k, t in enumerate(elements)}
    N = len(elements)
    leq = np.zeros((N, N), dtype=bool)
    join = np.zeros((N, N), dtype=np.int64)
    meet = np.zeros((N, N), dtype=np.int64)
    failures: list[dict] = []
    for x, a in enumerate(elements):
        for y, b in enumerate(elements):
            fa, fb = frame_pos[a.level], frame_pos[b.level]
            if fa != fb:
                leq[x, y] = fa < fb
                join[x, y], meet[x, y] = (y, x) if fa < fb else (x, y)
                continue
            f = frames[fa]
            leq[x, y] = _frame_leq(f, a, b)
            j, m = _frame_join_meet(f, a, b, w.n)
            if j not in index or m not in index:
                failures.append({"axiom": "closure", "elements": [str(a), str(b)],
                                 "join": str(j), "meet": str(m)})
                join[x, y], meet[x, y] = x, x
                continue
            join[x, y], meet[x, y] = index[j], index[m]
    L = WLattice(w, verdict, frames, elements, index, leq, join, meet, failures)
    if check:
        L.failures.extend(verify_axioms(L))
        if L.failures:
            f0 = L.failures[0]
            raise AxiomViolation(f0["axiom"], f0["elements"])
    return L


def verify_axioms(L: WLattice, max_witnesses: int = 5) -> list[dict]:
    """Partial order, lattice and distributivity axioms over all triples."""
    N = len(L.elements)
    P, J, M = L.leq, L.join, L.meet
    idx = np.arange(N)
    failures: list[dict] = []

    def record(name: str, mask: np.ndarray) -> None:
        bad = np.argwhere(mask)
        if len(bad):
            failures.append({
                "axiom": name,
                "count": int(len(bad)),
                "elements": [[str(L.elements[k]) for k in row] for row in bad[:max_witnesses]],
            })

    eye = np.eye(N, dtype=bool)
    record("reflexivity", ~P[idx, idx])
    record("antisymmetry", P & P.T & ~eye)
    trans = (P.astype(np.int64) @ P.astype(np.int64)) > 0
    record("transitivity", trans & ~P)

    # join is the least upper bound, meet the greatest lower bound
    record("join_upper", ~(P[idx[:, None], J] & P[idx[None, :], J]))
    ub = P[:, None, :] & P[None, :, :]
    record("join_least", ub & ~P[J])
    lb = P.T[:, None, :] & P.T[None, :, :]
    record("meet_lower", ~(P[M, idx[:, None]] & P[M, idx[None, :]]))
    record("meet_greatest", lb & ~P.T[M])

    record("join_commutative", J != J.T)
    record("meet_commutative", M != M.T)
    record("join_idempotent", J[idx, idx] != idx)
    record("meet_idempotent", M[idx, idx] != idx)
    record("join_associative", J[J, :] != J[:, J])
    record("meet_associative", M[M, :] != M[:, M])
    record("absorption_join_meet", J[idx[:, None], M] != idx[:, None])
    record("absorption_meet_join", M[idx[:, None], J] != idx[:, None])
    # a ^ (b v c) == (a ^ b) v (a ^ c) and the dual
    record("distributive_meet_over_join", M[:, J] != J[M[:, :, None], M[:, None, :]])
    record("distributive_join_over_meet", J[:, M] != M[J[:, :, None], J[:, None, :]])
    return failures


# -- the lifting oracle -------------------------------------------------------


@dataclass(frozen=True)
class LiftingTable:
    """All pairs of classes (proj_i x, proj_j y) with x <= y <= w in W.

    Brute force over the Bruhat interval [e, w]; knows nothing about
    breve/tilde.
    """

    w: Permutation
    ideal: tuple[Permutation, ...]
    below: tuple[tuple[int, ...], ...]  # below[k] = indices x with ideal[x] <= ideal[k]
    pairs: frozenset

    def lifts(self, a: CosetTuple, b: CosetTuple) -> bool:
        return (a, b) in self.pairs

    def chain_lifts(self, chain: Sequence[CosetTuple]) -> bool:
        """Simultaneous liftings x_1 <= x_2 <= ... <= x_m <= w."""
        projs = [[project_to_level(x, t.level) == t for x in self.ideal] for t in chain]
        alive = {k for k in range(len(self.ideal)) if projs[-1][k]}
        for step in range(len(chain) - 2, -1, -1):
            alive = {x for y in alive for x in self.below[y] if projs[step][x]}
            if not alive:
                return False
        return bool(alive)


def _prefix_sets(w: Permutation) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(w.one_line[:i])) for i in range(1, w.n + 1))


@lru_cache(maxsize=256)
def lifting_table(w: Permutation) -> LiftingTable:
    ideal = tuple(bruhat_ideal(w))
    pref = [_prefix_sets(x) for x in ideal]

    def leq(px, py):
        return all(a <= b for sx, sy in zip(px, py) for a, b in zip(sx, sy))

    below = tuple(tuple(x for x in range(len(ideal)) if leq(pref[x], pref[y])) for y in range(len(ideal)))
    n = w.n
    classes = [[CosetTuple(i, tuple(v - 1 for v in pref[k][i - 1]), n) for i in range(1, n + 1)]
               for k in range(len(ideal))]
    pairs = set()
    for y in range(len(ideal)):
        for x in below[y]:
            for a in classes[x]:
                for b in classes[y]:
                    pairs.add((a, b))
    return LiftingTable(w, ideal, below, frozenset(pairs))


def standardness_oracle(phi: CosetTuple, tau: CosetTuple, w: Permutation) -> bool:
    """Is there phi' in the class of phi and tau' in that of tau with phi' <= tau' <= w?"""
    return lifting_table(w).lifts(phi, tau)


def order_mismatches(L: WLattice) -> list[dict]:
    """Pairs where the lattice order and the lifting oracle disagree.

    Pairs are taken with the first element's level preceding the second's in
    the lattice grading; same-level pairs are checked both ways.
    """
    table = lifting_table(L.w)
    out = []
    for a in L.elements:
        for b in L.elements:
            if not L.precedes(a, b):
                continue
            got, want = L.leq_elements(a, b), table.lifts(a, b)
            if got != want:
                out.append({"pair": [str(a), str(b)], "lattice": got, "oracle": want})
    return out


def chain_mismatches(L: WLattice, length: int = 3) -> tuple[int, list[dict]]:
    """Compare pairwise-chain membership with simultaneous liftability.

    Runs over all sequences of the given length whose levels follow the
    lattice grading; returns the number of sequences examined and the
    disagreements.
    """
    table = lifting_table(L.w)
    seqs = [c for c in itertools.product(L.elements, repeat=length)
            if all(L.precedes(c[k], c[k + 1]) for k in range(length - 1))]
    out = []
    for c in seqs:
        pairwise = all(L.leq_elements(c[k], c[k + 1]) for k in range(length - 1))
        lifted = table.chain_lifts(c)
        if pairwise != lifted:
            out.append({"chain": [str(x) for x in c], "pairwise": pairwise, "lifted": lifted})
    return len(seqs), out


def transitivity_witnesses(w: Permutation, ascending: bool = True, limit: int | None = None):
    """Triples a, b, c of W^w (levels monotone) where the lifting relation is not transitive."""
    table = lifting_table(w)
    per_level = lattice_elements(w)
    elems = [t for i in range(1, w.n + 1) for t in per_level[i]]
    sign = 1 if ascending else -1
    out = []
    for a in elems:
        for b in elems:
            if sign * (b.level - a.level) < 0 or a == b or not table.lifts(a, b):
                continue
            for c in elems:
                if sign * (c.level - b.level) < 0 or c == b:
                    continue
                if table.lifts(b, c) and not table.lifts(a, c):
                    out.append((a, b, c))
                    if limit is not None and len(out) >= limit:
                        return out
    return out


# -- standard monomial counting -----------------------------------------------


def count_standard_monomials(w_or_lattice, degrees: Sequence[int]) -> int:
    """Number of multichains with k_i elements of level i.

    Dynamic programme over the order: g(x, k) counts weakly increasing
    sequences that start at x and use the multidegree k.
    """
    L = w_or_lattice if isinstance(w_or_lattice, WLattice) else build_lattice(w_or_lattice)
    degrees = tuple(degrees)
    if len(degrees) != L.n:
        raise ValueError(f"need {L.n} degrees, got {len(degrees)}")
    if any(k < 0 for k in degrees):
        raise ValueError("degrees must be non-negative")
    N = len(L.elements)
    levels = [e.level for e in L.elements]
    ups = [np.nonzero(L.leq[x])[0].tolist() for x in range(N)]

    @lru_cache(maxsize=None)
    def g(x: int, k: tuple[int, ...]) -> int:
        lvl = levels[x] - 1
        if k[lvl] == 0:
            return 0
        rest = k[:lvl] + (k[lvl] - 1,) + k[lvl + 1 :]
        if not any(rest):
            return 1
        return sum(g(y, rest) for y in ups[x])

    if not any(degrees):
        return 1
    return sum(g(x, degrees) for x in range(N))


def is_multichain(L: WLattice, elems: Iterable[CosetTuple]) -> bool:
    elems = list(elems)
    return all(L.comparable(a, b) for a, b in itertools.combinations(elems, 2))
