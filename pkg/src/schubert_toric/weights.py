"""Weights of extremal vectors and the identities they satisfy on W^w.

A class tau = (t_1, ..., t_j) in W_j sends omega_j to
omega_j - sum_k (alpha_k + ... + alpha_{t_k}); weights are stored in the
simple-root basis only.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterator

from .cosets import CosetTuple, left_act, tuple_leq
from .wlattice import WLattice, breve, build_lattice, join_w, lattice_elements, meet_w
from .weyl import Permutation


@dataclass(frozen=True)
class WeightVector:
    """omega_level - sum_k coeffs[k] alpha_{k+1}."""

    level: int
    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        roots = " - ".join(f"{c}a{k + 1}" if c != 1 else f"a{k + 1}"
                           for k, c in enumerate(self.coeffs) if c)
        return f"w{self.level}" + (f" - ({roots})" if roots else "")


def weight_of(tau: CosetTuple) -> WeightVector:
    c = [0] * tau.n
    for k, t in enumerate(tau.entries, start=1):
        for m in range(k, t + 1):
            c[m - 1] += 1
    return WeightVector(tau.level, tuple(c))


def weight_sum(*elems: CosetTuple) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(sorted fundamental-weight levels, summed root coefficients)."""
    n = elems[0].n
    roots = [0] * n
    for e in elems:
        for k, c in enumerate(weight_of(e).coeffs):
            roots[k] += c
    return tuple(sorted(e.level for e in elems)), tuple(roots)


def entry_multiset(*elems: CosetTuple) -> Counter:
    out: Counter = Counter()
    for e in elems:
        out.update(e.entries)
    return out


@dataclass
class Report:
    check: str
    w: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {"check": self.check, "w": self.w, "checked": self.checked,
               "passed": self.passed, "failures": self.failures}
        if self.notes:
            out["notes"] = self.notes
        return out


def _lattice(w_or_lattice) -> WLattice:
    return w_or_lattice if isinstance(w_or_lattice, WLattice) else build_lattice(w_or_lattice)


def verify_weight_additivity(w_or_lattice) -> Report:
    L = _lattice(w_or_lattice)
    rep = Report("weights", str(L.w))
    for a, b in L.incomparable_pairs():
        s, k = L.join_elements(a, b), L.meet_elements(a, b)
        rep.checked += 1
        if weight_sum(a, b) != weight_sum(s, k):
            rep.failures.append({"pair": [str(a), str(b)], "join": str(s), "meet": str(k)})
    return rep


def verify_multiset_lemma(w: Permutation) -> Report:
    """Equal weight sums force equal entry multisets, over all of W_i^w x W_j^w."""
    elems = lattice_elements(w)
    rep = Report("multiset", str(w))
    for i in range(1, w.n + 1):
        for j in range(i, w.n + 1):
            groups: dict = defaultdict(list)
            for tau in elems[j]:
                for phi in elems[i]:
                    groups[weight_sum(tau, phi)].append((tau, phi))
            for members in groups.values():
                ref = entry_multiset(*members[0])
                for tau, phi in members:
                    rep.checked += 1
                    if entry_multiset(tau, phi) != ref:
                        rep.failures.append({"reference": [str(x) for x in members[0]],
                                             "other": [str(tau), str(phi)]})
    return rep


def sample_multiset_quadruples(w: Permutation, samples: int, rng: random.Random) -> Report:
    """Random (tau, phi) pairs, each checked against a random (theta, psi) of equal weight."""
    elems = lattice_elements(w)
    rep = Report("multiset-sampled", str(w))
    index: dict = {}
    for _ in range(samples):
        i, j = sorted(rng.choices(range(1, w.n + 1), k=2))
        if (i, j) not in index:
            groups: dict = defaultdict(list)
            for t in elems[j]:
                for p in elems[i]:
                    groups[weight_sum(t, p)].append((t, p))
            index[i, j] = groups
        tau, phi = rng.choice(elems[j]), rng.choice(elems[i])
        theta_, psi = rng.choice(index[i, j][weight_sum(tau, phi)])
        rep.checked += 1
        if entry_multiset(tau, phi) != entry_multiset(theta_, psi):
            rep.failures.append([str(tau), str(phi), str(theta_), str(psi)])
    return rep


# -- reduced paths in the tuple model ----------------------------------------


def up_moves(t: CosetTuple) -> list[int]:
    """Simple reflections s_k with l(s_k t) = l(t) + 1."""
    vals = set(t.entries)
    return [k for k in range(1, t.n + 1) if k - 1 in vals and k not in vals]


def reduced_paths(lo: CosetTuple, hi: CosetTuple, limit: int = 64) -> Iterator[tuple[int, ...]]:
    """Move sequences (first applied first) climbing from lo to hi one length at a time."""
    if not tuple_leq(lo, hi):
        return
    count = 0
    stack = [(lo, ())]
    while stack:
        cur, path = stack.pop()
        if cur == hi:
            yield path
            count += 1
            if count >= limit:
                return
            continue
        for k in reversed(up_moves(cur)):
            nxt = left_act(k, cur)
            if tuple_leq(nxt, hi):
                stack.append((nxt, path + (k,)))


def apply_moves(t: CosetTuple, moves) -> tuple[CosetTuple, bool]:
    """Apply the moves in order; also report whether every step raised the length."""
    additive = True
    for k in moves:
        if k not in up_moves(t):
            additive = False
        t = left_act(k, t)
    return t, additive


def _check_redexp(phi: CosetTuple, tau: CosetTuple, limit: int) -> list[dict]:
    j = tau.level
    sigma, kappa = join_w(phi, tau), meet_w(phi, tau)
    kappa_b, phi_b = breve(kappa, j), breve(phi, j)
    bad = []
    paths1 = list(reduced_paths(tau, sigma, limit))
    paths2 = list(reduced_paths(phi_b, sigma, limit))
    if not paths1 or not paths2:
        bad.append({"part": 0, "reason": "no reduced path", "sigma": str(sigma)})
        return bad
    for p in paths1:
        img, add = apply_moves(kappa_b, p)
        low, _ = apply_moves(kappa, p)
        if img != phi_b or not add or low != phi:
            bad.append({"part": 1, "word": list(reversed(p)), "image": str(img), "additive": add})
    for q in paths2:
        img, add = apply_moves(kappa_b, q)
        if img != tau or not add:
            bad.append({"part": 2, "word": list(reversed(q)), "image": str(img), "additive": add})
    s1 = {k for p in paths1 for k in p}
    s2 = {k for q in paths2 for k in q}
    if s1 & s2 or any(abs(a - b) < 2 for a in s1 for b in s2):
        bad.append({"part": 3, "first": sorted(s1), "second": sorted(s2)})
    return bad


def verify_redexp_transfer(w_or_lattice, path_limit: int = 64) -> Report:
    """Reduced-expression transfer between (tau, sigma) and (kappa, phi), in each frame."""
    L = _lattice(w_or_lattice)
    rep = Report("redexp", str(L.w))
    for a, b in L.incomparable_pairs():
        f = L.frame_of(a.level)
        la, lb = f.to_local(a), f.to_local(b)
        phi, tau = (la, lb) if la.level <= lb.level else (lb, la)
        rep.checked += 1
        for item in _check_redexp(phi, tau, path_limit):
            item["pair"] = [str(a), str(b)]
            rep.failures.append(item)
    return rep
