"""The Hibi ideal of W^w and normal forms in the degenerate fibre.

The ideal is generated by x_a x_b - x_{a v b} x_{a ^ b} over non-comparable
pairs; rewriting with these binomials ends in multichains.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .cosets import CosetTuple
from .weights import Report, entry_multiset, weight_sum
from .wlattice import WLattice, is_multichain


@dataclass(frozen=True)
class LatticeBinomial:
    a: CosetTuple
    b: CosetTuple
    join: CosetTuple
    meet: CosetTuple


@dataclass(frozen=True)
class MultiMonomial:
    factors: tuple[CosetTuple, ...]  # sorted

    @classmethod
    def of(cls, elems) -> MultiMonomial:
        return cls(tuple(sorted(elems, key=lambda t: (t.level, t.entries))))

    def degrees(self, n: int) -> tuple[int, ...]:
        d = [0] * n
        for t in self.factors:
            d[t.level - 1] += 1
        return tuple(d)

    def __str__(self) -> str:
        return "*".join(var_name(t) for t in self.factors) or "1"


def var_name(t: CosetTuple) -> str:
    return "x_" + "_".join(map(str, (t.level,) + t.entries))


def _m2_name(t: CosetTuple) -> str:
    return "x_(" + ",".join(map(str, (t.level,) + t.entries)) + ")"


def generate_ideal(L: WLattice) -> list[LatticeBinomial]:
    return [LatticeBinomial(a, b, L.join_elements(a, b), L.meet_elements(a, b))
            for a, b in L.incomparable_pairs()]


def rewrite_to_normal_form(m: MultiMonomial, L: WLattice, rng: random.Random | None = None,
                           max_steps: int = 10_000) -> MultiMonomial:
    """Replace non-comparable pairs by their join and meet until none is left.

    With ``rng`` the pair to rewrite is chosen at random, otherwise the first
    one in factor order.  The sum of squared heights strictly increases.
    """
    height = _heights(L)
    cur = list(m.factors)
    potential = sum(height[L.index[t]] ** 2 for t in cur)
    for _ in range(max_steps):
        bad = [(x, y) for x, y in itertools.combinations(range(len(cur)), 2)
               if not L.comparable(cur[x], cur[y])]
        if not bad:
            return MultiMonomial.of(cur)
        x, y = rng.choice(bad) if rng else bad[0]
        a, b = cur[x], cur[y]
        cur[x], cur[y] = L.join_elements(a, b), L.meet_elements(a, b)
        new = sum(height[L.index[t]] ** 2 for t in cur)
        assert new > potential, "rewriting potential did not increase"
        potential = new
    raise RuntimeError("rewriting did not terminate")


def _heights(L: WLattice) -> list[int]:
    cached = L.__dict__.get("_heights")
    if cached is None:
        cached = L.__dict__["_heights"] = L.rank_function()
    return cached


def monomials_of_degree(L: WLattice, degrees: Sequence[int]):
    per_level = [itertools.combinations_with_replacement(L.by_level(i + 1), k)
                 for i, k in enumerate(degrees)]
    for parts in itertools.product(*per_level):
        yield MultiMonomial.of(e for part in parts for e in part)


def hilbert_component(L: WLattice, degrees: Sequence[int]) -> int:
    """Number of distinct normal forms among all monomials of the multidegree."""
    if len(degrees) != L.n:
        raise ValueError(f"need {L.n} degrees")
    forms = set()
    for m in monomials_of_degree(L, degrees):
        nf = rewrite_to_normal_form(m, L)
        assert is_multichain(L, nf.factors)
        forms.add(nf)
    return len(forms)


def random_monomial(L: WLattice, rng: random.Random, max_degree: int = 4) -> MultiMonomial:
    size = rng.randint(1, max_degree)
    return MultiMonomial.of(rng.choice(L.elements) for _ in range(size))


def verify_rewriting(L: WLattice, samples: int = 200, strategies: int = 5, seed: int = 0,
                     max_degree: int = 4) -> Report:
    """Confluence and conservation of degrees, entry multisets and weights."""
    rng = random.Random(seed)
    rep = Report("rewriting", str(L.w))
    for _ in range(samples):
        m = random_monomial(L, rng, max_degree)
        forms = {rewrite_to_normal_form(m, L)}
        forms |= {rewrite_to_normal_form(m, L, random.Random(rng.random())) for _ in range(strategies)}
        rep.checked += 1
        if len(forms) != 1:
            rep.failures.append({"monomial": str(m), "normal_forms": sorted(map(str, forms))})
            continue
        nf = forms.pop()
        if nf.degrees(L.n) != m.degrees(L.n):
            rep.failures.append({"monomial": str(m), "conserve": "degrees"})
        if entry_multiset(*nf.factors) != entry_multiset(*m.factors):
            rep.failures.append({"monomial": str(m), "conserve": "multiset"})
        if weight_sum(*nf.factors) != weight_sum(*m.factors):
            rep.failures.append({"monomial": str(m), "conserve": "weight"})
        if not is_multichain(L, nf.factors):
            rep.failures.append({"monomial": str(m), "normal_form": str(nf)})
    return rep


def export_ideal(L: WLattice, fmt: str) -> str:
    gens = generate_ideal(L)
    if fmt == "json":
        body = {
            "variables": [var_name(t) for t in L.elements],
            "binomials": [[[var_name(g.a), var_name(g.b)], [var_name(g.join), var_name(g.meet)]]
                          for g in gens],
        }
        return json.dumps(body, indent=2) + "\n"
    if fmt == "m2":
        names = [_m2_name(t) for t in L.elements]
        polys = [f"{_m2_name(g.a)}*{_m2_name(g.b)} - {_m2_name(g.join)}*{_m2_name(g.meet)}" for g in gens]
        lines = [f"R = QQ[{', '.join(names)}];"]
        lines.append("I = ideal(" + (",\n    ".join(polys) if polys else "0_R") + ");")
        return "\n".join(lines) + "\n"
    if fmt == "singular":
        names = [var_name(t) for t in L.elements]
        polys = [f"{var_name(g.a)}*{var_name(g.b)} - {var_name(g.join)}*{var_name(g.meet)}" for g in gens]
        lines = [f"ring r = 0, ({', '.join(names)}), dp;"]
        lines.append("ideal I = " + (",\n    ".join(polys) if polys else "0") + ";")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown ideal format {fmt!r}")


def degree_counter(m: MultiMonomial) -> Counter:
    return Counter(t.level for t in m.factors)
