"""Straightening relations among flag minors and the degeneration conditions.

A non-standard product p_tau p_phi (phi at level i, tau at level j, i <= j,
not phi <=_w tau) is written in the basis of standard products
p_theta p_psi (psi <=_w theta) of the full flag variety by exact linear
algebra over the monomial coefficients, then restricted to S(w) by dropping
products that vanish there.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cosets import CosetTuple, level_tuples, project_to_level, tuple_leq
from .errors import AlreadyStandard, NoSolution, NonUniqueSolution
from .linalg import EchelonBasis
from .polynomial import ExactPolynomial, flag_minor
from .weights import Report, entry_multiset
from .weyl import Permutation
from .wlattice import WLattice, build_lattice, join_w, leq_w, meet_w


@dataclass(frozen=True)
class StraighteningRelation:
    tau: CosetTuple
    phi: CosetTuple
    rhs: tuple[tuple[Fraction, CosetTuple, CosetTuple], ...]  # (c, theta, psi) on S(w)
    dropped: tuple[tuple[Fraction, CosetTuple, CosetTuple], ...] = ()

    @property
    def full_rhs(self):
        return tuple(sorted(self.rhs + self.dropped, key=_term_key))

    def coefficient(self, theta: CosetTuple, psi: CosetTuple) -> Fraction:
        return next((c for c, t, p in self.rhs if t == theta and p == psi), Fraction(0))

    def residual(self) -> ExactPolynomial:
        """lhs minus the unrestricted right-hand side, as a polynomial."""
        out = flag_minor(self.tau) * flag_minor(self.phi)
        for c, t, p in self.full_rhs:
            out = out - flag_minor(t) * flag_minor(p) * c
        return out

    def to_text(self) -> str:
        lhs = f"p{_br(self.phi)}*p{_br(self.tau)}"
        terms = " ".join(f"{_coef(c)} p{_br(t)}*p{_br(p)}" for c, t, p in self.rhs)
        return f"{lhs} = {terms or '0'}"

    def to_json(self) -> dict:
        return {
            "lhs": [list(self.phi.entries), list(self.tau.entries)],
            "rhs": [{"coefficient": str(c), "theta": list(t.entries), "psi": list(p.entries)}
                    for c, t, p in self.rhs],
            "dropped": [{"coefficient": str(c), "theta": list(t.entries), "psi": list(p.entries)}
                        for c, t, p in self.dropped],
        }


def _br(t: CosetTuple) -> str:
    return "[" + ",".join(map(str, t.entries)) + "]"


def _coef(c: Fraction) -> str:
    return ("+" if c > 0 else "-") + str(abs(c))


def _term_key(term):
    _, t, p = term
    return (t.entries, p.entries)


@lru_cache(maxsize=None)
def standard_products(i: int, j: int, n: int) -> tuple[tuple[CosetTuple, CosetTuple], ...]:
    """(theta, psi) with theta in W_j, psi in W_i and psi <=_w theta in the full flag variety."""
    out = []
    for theta in level_tuples(j, n):
        for psi in level_tuples(i, n):
            if i == j and psi.entries > theta.entries:
                continue
            if leq_w(psi, theta):
                out.append((theta, psi))
    return tuple(out)


@lru_cache(maxsize=None)
def _product_basis(i: int, j: int, n: int) -> EchelonBasis:
    basis = EchelonBasis()
    for theta, psi in standard_products(i, j, n):
        prod = flag_minor(theta) * flag_minor(psi)
        if not basis.add(prod.terms, (theta, psi)):
            raise NonUniqueSolution(f"standard product p{theta} p{psi} is dependent")
    return basis


def straighten(tau: CosetTuple, phi: CosetTuple, w: Permutation | None = None) -> StraighteningRelation:
    """Express p_tau p_phi in standard products; restrict to S(w) when w is given."""
    if tau.level < phi.level:
        tau, phi = phi, tau
    if tau.n != phi.n:
        raise ValueError("rank mismatch")
    if leq_w(phi, tau) or (tau.level == phi.level and leq_w(tau, phi)):
        raise AlreadyStandard(f"p{tau} p{phi} is already standard")
    i, j, n = phi.level, tau.level, tau.n
    basis = _product_basis(i, j, n)
    target = (flag_minor(tau) * flag_minor(phi)).terms
    try:
        combo = basis.express(target)
    except NoSolution:
        raise NoSolution(f"p{tau} p{phi} is not in the span of standard products") from None
    terms = sorted(((Fraction(c), t, p) for (t, p), c in combo.items() if c), key=_term_key)
    if w is None:
        return StraighteningRelation(tau, phi, tuple(terms))
    top_j, top_i = project_to_level(w, j), project_to_level(w, i)
    kept = tuple(x for x in terms if tuple_leq(x[1], top_j) and tuple_leq(x[2], top_i))
    dropped = tuple(x for x in terms if x not in kept)
    return StraighteningRelation(tau, phi, kept, dropped)


def _frame_relations(L: WLattice):
    """Yield (frame, local w, local phi, local tau, big phi, big tau) per incomparable pair."""
    for a, b in L.incomparable_pairs():
        f = L.frame_of(a.level)
        la, lb = f.to_local(a), f.to_local(b)
        if la.level > lb.level:
            la, lb, a, b = lb, la, b, a
        yield f, la, lb, a, b


def check_relation(rel: StraighteningRelation, w: Permutation) -> list[dict]:
    """Join/meet coefficient, interval and multiset conditions for one relation in a native frame."""
    tau, phi = rel.tau, rel.phi
    sigma, kappa = join_w(phi, tau), meet_w(phi, tau)
    bad = []
    if not rel.residual().is_zero():
        bad.append({"condition": "identity", "relation": rel.to_text()})
    c = rel.coefficient(sigma, kappa)
    if c != 1:
        bad.append({"condition": "C1", "coefficient": str(c), "relation": rel.to_text()})
    top_j = project_to_level(w, tau.level)
    for coef, theta, psi in rel.rhs:
        if coef == 0:
            bad.append({"condition": "nonzero", "relation": rel.to_text()})
        strictly_below = all(leq_w(psi, x) and psi != x for x in (tau, phi))
        strictly_above = all(leq_w(x, theta) and theta != x for x in (tau, phi))
        if not (strictly_below and strictly_above):
            bad.append({"condition": "C2", "term": [str(theta), str(psi)], "relation": rel.to_text()})
        if entry_multiset(theta, psi) != entry_multiset(tau, phi):
            bad.append({"condition": "C3", "term": [str(theta), str(psi)], "relation": rel.to_text()})
        if not leq_w(sigma, theta) or (theta == sigma and psi != kappa):
            bad.append({"condition": "interval", "term": [str(theta), str(psi)], "relation": rel.to_text()})
    for _, theta, _ in rel.dropped:
        if tuple_leq(theta, top_j):
            bad.append({"condition": "restriction", "term": str(theta), "relation": rel.to_text()})
    return bad


def relations_for(w_or_lattice) -> list[tuple[StraighteningRelation, Permutation]]:
    """All relations of W^w, each computed in the native frame of its pair."""
    L = w_or_lattice if isinstance(w_or_lattice, WLattice) else build_lattice(w_or_lattice)
    out = []
    for f, lphi, ltau, _, _ in _frame_relations(L):
        out.append((straighten(ltau, lphi, f.local_w), f.local_w))
    return out


@dataclass
class ConditionsReport(Report):
    relations: list = field(default_factory=list)


def verify_conditions(w_or_lattice) -> ConditionsReport:
    L = w_or_lattice if isinstance(w_or_lattice, WLattice) else build_lattice(w_or_lattice)
    rep = ConditionsReport("straighten", str(L.w))
    for rel, local_w in relations_for(L):
        rep.checked += 1
        rep.relations.append(rel.to_text())
        for item in check_relation(rel, local_w):
            item["frame_w"] = str(local_w)
            rep.failures.append(item)
    return rep


def export_relations(w_or_lattice, fmt: str = "text") -> str:
    L = w_or_lattice if isinstance(w_or_lattice, WLattice) else build_lattice(w_or_lattice)
    rels = relations_for(L)
    if fmt == "text":
        return "".join(rel.to_text() + "\n" for rel, _ in rels)
    if fmt == "json":
        body = {"w": str(L.w), "relations": [dict(rel.to_json(), frame_w=str(fw)) for rel, fw in rels]}
        return json.dumps(body, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown relation format {fmt!r}")
