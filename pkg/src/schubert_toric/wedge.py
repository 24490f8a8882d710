"""V(omega_i) as the i-th exterior power of the standard representation.

Basis vectors e_S are indexed by i-subsets S of {1, ..., n+1}.  The lowering
operator X_{-alpha_k} replaces k by k+1 (sign +1, the order of S is kept)
and the raising operator X_{alpha_k} replaces k+1 by k.  Tensor products
carry the diagonal action X(a (x) b) = Xa (x) b + a (x) Xb.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cosets import CosetTuple, project_to_level, tuple_leq
from .demazure import demazure_character, dimension
from .errors import NotComparable, ZeroVector
from .linalg import EchelonBasis, rank
from .weights import Report, apply_moves, reduced_paths
from .weyl import Permutation
from .wlattice import WLattice, breve, build_lattice, lattice_elements, leq_w, lifting_table

Subset = tuple[int, ...]


def _clean(terms) -> dict:
    return {k: Fraction(c) for k, c in terms.items() if c}


@dataclass(frozen=True)
class WedgeVector:
    level: int
    terms: dict = field(hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _clean(self.terms))
        if any(len(s) != self.level for s in self.terms):
            raise ValueError("subset size does not match level")

    @classmethod
    def basis(cls, subset: Iterable[int]) -> WedgeVector:
        s = tuple(sorted(subset))
        return cls(len(s), {s: 1})

    @classmethod
    def highest(cls, level: int) -> WedgeVector:
        return cls.basis(range(1, level + 1))

    def is_zero(self) -> bool:
        return not self.terms

    def to_text(self) -> str:
        return "".join(f"{c} * e{{{','.join(map(str, s))}}}\n" for s, c in sorted(self.terms.items()))


@dataclass(frozen=True)
class PairVector:
    """Element of V(omega_j) (x) V(omega_i); keys are (j-subset, i-subset)."""

    levels: tuple[int, int]
    terms: dict = field(hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _clean(self.terms))
        j, i = self.levels
        if any(len(s) != j or len(t) != i for s, t in self.terms):
            raise ValueError("inconsistent (j, i) shape")

    @classmethod
    def tensor(cls, a: WedgeVector, b: WedgeVector) -> PairVector:
        terms = {(s, t): c * d for s, c in a.terms.items() for t, d in b.terms.items()}
        return cls((a.level, b.level), terms)

    def to_text(self) -> str:
        return "".join(
            f"{c} * e{{{','.join(map(str, s))}}} (x) e{{{','.join(map(str, t))}}}\n"
            for (s, t), c in sorted(self.terms.items())
        )


def _move(k: int, s: Subset, src: int, dst: int) -> Subset | None:
    if src in s and dst not in s:
        return tuple(sorted(dst if x == src else x for x in s))
    return None


def lower_subset(k: int, s: Subset) -> Subset | None:
    return _move(k, s, k, k + 1)


def raise_subset(k: int, s: Subset) -> Subset | None:
    return _move(k, s, k + 1, k)


def _apply(op, k: int, v: WedgeVector) -> WedgeVector:
    out: dict = defaultdict(Fraction)
    for s, c in v.terms.items():
        t = op(k, s)
        if t is not None:
            out[t] += c
    return WedgeVector(v.level, out)


def lowering(k: int, v: WedgeVector) -> WedgeVector:
    return _apply(lower_subset, k, v)


def raising(k: int, v: WedgeVector) -> WedgeVector:
    return _apply(raise_subset, k, v)


def _apply_pair(op, k: int, v: PairVector) -> PairVector:
    out: dict = defaultdict(Fraction)
    for (s, t), c in v.terms.items():
        s2 = op(k, s)
        if s2 is not None:
            out[s2, t] += c
        t2 = op(k, t)
        if t2 is not None:
            out[s, t2] += c
    return PairVector(v.levels, out)


def lowering_pair(k: int, v: PairVector) -> PairVector:
    return _apply_pair(lower_subset, k, v)


def raising_pair(k: int, v: PairVector) -> PairVector:
    return _apply_pair(raise_subset, k, v)


def coweight(k: int, s: Subset) -> int:
    return (k in s) - (k + 1 in s)


def chevalley_failures(n: int) -> list[str]:
    """Check [X_k, X_-k] = h_k and commutation for distant or distinct indices on every e_S."""
    from itertools import combinations

    ops = {"+": raising, "-": lowering}
    bad = []
    for i in range(1, n + 1):
        for s in combinations(range(1, n + 2), i):
            v = WedgeVector.basis(s)
            for k in range(1, n + 1):
                br = _sub(raising(k, lowering(k, v)), lowering(k, raising(k, v)))
                if br.terms != WedgeVector(i, {s: coweight(k, s)}).terms:
                    bad.append(f"[X{k},X-{k}] on e{s}")
                for l in range(1, n + 1):
                    for a, b in (("+", "-"), ("-", "+"), ("+", "+"), ("-", "-")):
                        if l == k or (abs(k - l) < 2 and a == b):
                            continue
                        lhs = ops[a](k, ops[b](l, v))
                        rhs = ops[b](l, ops[a](k, v))
                        if lhs.terms != rhs.terms:
                            bad.append(f"X{a}{k} X{b}{l} on e{s}")
    return bad


def _sub(a: WedgeVector, b: WedgeVector) -> WedgeVector:
    out = defaultdict(Fraction, a.terms)
    for s, c in b.terms.items():
        out[s] -= c
    return WedgeVector(a.level, out)


def q_vector(tau: CosetTuple) -> WedgeVector:
    """X_{-a_{i_r}} ... X_{-a_{i_1}} v_{omega_i} for a reduced word tau = s_{i_r} ... s_{i_1}.

    The word is obtained by climbing from the minimal tuple to tau one simple
    reflection at a time.
    """
    lo = CosetTuple.minimal(tau.level, tau.n)
    path = next(reduced_paths(lo, tau, limit=1))
    v = WedgeVector.highest(tau.level)
    for k in path:
        v = lowering(k, v)
    if v.is_zero():
        raise ZeroVector(f"lowering word {path} annihilates v_omega_{tau.level}")
    expected = {tuple(r + 1 for r in tau.entries): Fraction(1)}
    assert v.terms == expected, f"Q_{tau} = {v.terms}, expected {expected}"
    return v


def _closure(seeds: Sequence[dict], ops) -> EchelonBasis:
    basis = EchelonBasis()
    queue = []
    for s in seeds:
        if basis.add(s):
            queue.append(s)
    while queue:
        v = queue.pop()
        for op in ops:
            u = op(v)
            if u and basis.add(u):
                queue.append(u)
    return basis


def demazure_span(w: Permutation, i: int) -> list[WedgeVector]:
    """Raising closure of Q_{w-bar}; checked against span{Q_tau : tau in W_i^w}."""
    seed = q_vector(project_to_level(w, i))
    ops = [lambda d, k=k: raising(k, WedgeVector(i, d)).terms for k in range(1, w.n + 1)]
    basis = _closure([seed.terms], ops)
    qs = [q_vector(t) for t in lattice_elements(w)[i]]
    ok = len(basis) == len(qs) == rank(q.terms for q in qs) and all(basis.contains(q.terms) for q in qs)
    assert ok, f"Demazure span of w={w} at level {i} disagrees with the Q basis"
    return qs


def pair_vector(sigma: CosetTuple, kappa: CosetTuple, path: Sequence[int] | None = None) -> PairVector:
    """E_{sigma,kappa}: lower Q_{breve kappa} (x) Q_kappa along a reduced path to sigma."""
    if not leq_w(kappa, sigma):
        raise NotComparable(f"{kappa} is not below {sigma}")
    start = breve(kappa, sigma.level)
    if path is None:
        path = next(reduced_paths(start, sigma, limit=1))
    end, additive = apply_moves(start, path)
    if end != sigma or not additive:
        raise ValueError(f"{path} is not a reduced path from {start} to {sigma}")
    v = PairVector.tensor(q_vector(start), q_vector(kappa))
    for k in path:
        v = lowering_pair(k, v)
    return v


def _leading_ok(v: PairVector, sigma: CosetTuple, kappa: CosetTuple) -> bool:
    lead = (tuple(r + 1 for r in sigma.entries), tuple(r + 1 for r in kappa.entries))
    if v.terms.get(lead) != 1:
        return False
    for (s, t), _ in v.terms.items():
        if (s, t) == lead:
            continue
        u = CosetTuple(sigma.level, tuple(x - 1 for x in s), sigma.n)
        z = CosetTuple(kappa.level, tuple(x - 1 for x in t), kappa.n)
        if not (tuple_leq(u, sigma) and u != sigma and tuple_leq(kappa, z) and z != kappa):
            return False
    return True


def _native_pair_basis(w: Permutation, i: int, j: int, rep: Report, path_limit: int) -> None:
    elems = lattice_elements(w)
    table = lifting_table(w)
    sigma_set = [(tau, s) for tau in elems[j] for s in elems[i] if table.lifts(s, tau)]
    order_set = [(tau, s) for tau in elems[j] for s in elems[i] if leq_w(s, tau)]
    if sigma_set != order_set:
        rep.failures.append({"part": "Sigma", "lifting": len(sigma_set), "order": len(order_set)})
    vectors = []
    for sigma, kappa in order_set:
        start = breve(kappa, j)
        paths = list(reduced_paths(start, sigma, limit=path_limit))
        vs = [pair_vector(sigma, kappa, p) for p in paths]
        rep.checked += 1
        if any(v.terms != vs[0].terms for v in vs[1:]):
            rep.failures.append({"part": "a", "pair": [str(sigma), str(kappa)], "paths": len(paths)})
        if not _leading_ok(vs[0], sigma, kappa):
            rep.failures.append({"part": "triangular", "pair": [str(sigma), str(kappa)]})
        vectors.append(vs[0])
    r = rank(v.terms for v in vectors)
    if r != len(vectors):
        rep.failures.append({"part": "b", "rank": r, "size": len(vectors)})
    lam = [0] * w.n
    lam[i - 1] += 1
    lam[j - 1] += 1
    dim = dimension(demazure_character(w, lam))
    if len(sigma_set) != dim:
        rep.failures.append({"part": "c", "sigma": len(sigma_set), "demazure": dim})
    _membership(w, i, j, vectors, rep)


def _membership(w: Permutation, i: int, j: int, vectors: list[PairVector], rep: Report) -> None:
    seed = PairVector.tensor(q_vector(project_to_level(w, j)), q_vector(project_to_level(w, i)))
    ops = [lambda d, k=k: raising_pair(k, PairVector((j, i), d)).terms for k in range(1, w.n + 1)]
    closure = _closure([seed.terms], ops)
    missing = [k for k, v in enumerate(vectors) if not closure.contains(v.terms)]
    if missing:
        rep.failures.append({"part": "d", "missing": len(missing)})
    if len(closure) != len(vectors):
        rep.failures.append({"part": "d-dim", "closure": len(closure), "basis": len(vectors)})


def verify_pair_basis(w_or_lattice, i: int, j: int, path_limit: int = 24) -> Report:
    """Reduced-word independence, independence, |Sigma(w)| and Demazure membership."""
    L = w_or_lattice if isinstance(w_or_lattice, WLattice) else build_lattice(w_or_lattice)
    if i > j:
        i, j = j, i
    rep = Report("pairbasis", str(L.w))
    rep.notes["levels"] = [i, j]
    fi, fj = L.frame_of(i), L.frame_of(j)
    if fi is fj and not fi.is_cut:
        li = fi.to_local(CosetTuple.minimal(i, L.n)).level
        lj = fj.to_local(CosetTuple.minimal(j, L.n)).level
        li, lj = min(li, lj), max(li, lj)
        rep.notes["frame"] = {"w": str(fi.local_w), "levels": [li, lj], "flipped": fi.flipped}
        _native_pair_basis(fi.local_w, li, lj, rep, path_limit)
        return rep
    # levels in different pieces of an ordinal sum: every pair is standard and
    # the basis is the plain product basis
    rep.notes["frame"] = "product"
    elems = lattice_elements(L.w)
    table = lifting_table(L.w)
    lo, hi = (i, j) if L.level_rank(i) <= L.level_rank(j) else (j, i)
    vectors = []
    for tau in elems[j]:
        for s in elems[i]:
            a, b = (s, tau) if lo == i else (tau, s)
            rep.checked += 1
            if not table.lifts(a, b):
                rep.failures.append({"part": "Sigma", "pair": [str(tau), str(s)]})
            vectors.append(PairVector.tensor(q_vector(tau), q_vector(s)))
    if rank(v.terms for v in vectors) != len(vectors):
        rep.failures.append({"part": "b"})
    _membership(L.w, i, j, vectors, rep)
    return rep
