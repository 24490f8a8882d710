"""Acceptance gate: ten criteria, one PASS/FAIL line each.

Run under pytest (``pytest tests/test_acceptance.py -s``) or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time

import pytest

from schubert_toric.admissibility import classify
from schubert_toric.cli import cmd_classify
from schubert_toric.cosets import CosetTuple
from schubert_toric.demazure import demazure_character, dimension, weyl_dimension
from schubert_toric.hibi import hilbert_component, verify_rewriting
from schubert_toric.straighten import straighten, verify_conditions
from schubert_toric.wedge import verify_pair_basis
from schubert_toric.weights import (
    sample_multiset_quadruples,
    verify_multiset_lemma,
    verify_weight_additivity,
)
from schubert_toric.weyl import Permutation, format_word
from schubert_toric.wlattice import (
    build_lattice,
    count_standard_monomials,
    order_mismatches,
    standardness_oracle,
    transitivity_witnesses,
    verify_axioms,
)

SEED = 20240613
SL4_EXCEPTIONS = {"s1*s3*s2", "s2*s1*s3", "s2*s1*s3*s2", "s1*s2*s3*s2*s1"}


def _covered(n):
    return classify(n).covered


def c1_sl4_classification():
    start = time.perf_counter()
    rep = cmd_classify(3, jobs=1)
    elapsed = time.perf_counter() - start
    found = {w for _, w in rep.results["exceptions"]}
    return found == SL4_EXCEPTIONS and elapsed < 1.0, f"exceptions {sorted(found)}, {elapsed:.3f}s"


def c2_sl3_classification():
    start = time.perf_counter()
    rep = cmd_classify(2, jobs=1)
    elapsed = time.perf_counter() - start
    found = rep.results["exceptions"]
    return found == [] and elapsed < 1.0, f"{len(found)} exceptions, {elapsed:.3f}s"


def c3_lattice_axioms():
    bad = lattices = 0
    start = time.perf_counter()
    for n in (2, 3, 4):
        for w in _covered(n):
            L = build_lattice(w, check=False)
            bad += len(L.failures) + len(verify_axioms(L))
            lattices += 1
    elapsed = time.perf_counter() - start
    return bad == 0 and elapsed < 600, f"{lattices} lattices, {bad} violations, {elapsed:.2f}s"


def c4_order_equivalence():
    rng = random.Random(SEED)
    ws = _covered(3) + rng.sample(_covered(4), 50)
    pairs = bad = 0
    for w in ws:
        L = build_lattice(w)
        pairs += sum(1 for a in L.elements for b in L.elements if L.precedes(a, b))
        bad += len(order_mismatches(L))
    return bad == 0, f"{len(ws)} elements w, {pairs} pairs, {bad} mismatches"


def c5_witnesses():
    lines, ok = [], True
    for w in classify(3).exceptions:
        found = transitivity_witnesses(w, ascending=True, limit=1) or transitivity_witnesses(w, ascending=False, limit=1)
        if not found:
            ok = False
            lines.append(f"{format_word(w)}: none")
            continue
        a, b, c = found[0]
        ok &= standardness_oracle(a, b, w) and standardness_oracle(b, c, w) and not standardness_oracle(a, c, w)
        lines.append(f"{format_word(w)}: {a} <= {b} <= {c}, {a} not <= {c}")
    return ok and len(lines) == 4, "; ".join(lines)


def c6_weight_multiset():
    bad = checked = 0
    for n in (1, 2, 3):
        for w in _covered(n):
            for rep in (verify_weight_additivity(w), verify_multiset_lemma(w)):
                bad += len(rep.failures)
                checked += rep.checked
    rng = random.Random(SEED)
    for w in _covered(4):
        for rep in (verify_weight_additivity(w), sample_multiset_quadruples(w, 10_000, rng)):
            bad += len(rep.failures)
            checked += rep.checked
    return bad == 0, f"{checked} checks, {bad} failures"


def c7_triple_dimension():
    bad = cases = 0
    for n in (2, 3):
        for w in _covered(n):
            L = build_lattice(w)
            for d in itertools.product(range(4), repeat=n):
                if sum(d) > 3:
                    continue
                cases += 1
                dim = dimension(demazure_character(w, d))
                if not dim == count_standard_monomials(L, d) == hilbert_component(L, d):
                    bad += 1
    w0 = Permutation.longest(2)
    pinned = dimension(demazure_character(w0, (1, 1))) == 8 == weyl_dimension((1, 1)) \
        == count_standard_monomials(w0, (1, 1)) == hilbert_component(build_lattice(w0), (1, 1))
    return bad == 0 and pinned, f"{cases} cases, {bad} disagreements, pinned w0 (1,1) = 8: {pinned}"


def c8_straightening():
    rng = random.Random(SEED)
    s4 = _covered(3)
    w0 = Permutation.longest(3)
    sample = [w0] + rng.sample([w for w in s4 if w != w0], 9)
    bad = rels = 0
    for w in _covered(2) + sample:
        rep = verify_conditions(w)
        bad += len(rep.failures)
        rels += rep.checked
    t = lambda *e: CosetTuple(len(e), e, 2)  # noqa: E731
    pinned = straighten(t(0, 1), t(2), Permutation.longest(2)).to_text() \
        == "p[2]*p[0,1] = +1 p[0,2]*p[1] -1 p[1,2]*p[0]"
    return bad == 0 and pinned, f"{rels} relations, {bad} failures, pinned relation: {pinned}"


def c9_pair_basis():
    bad = checks = 0
    for n in (2, 3):
        for w in _covered(n):
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    rep = verify_pair_basis(w, i, j)
                    bad += len(rep.failures)
                    checks += 1
    return bad == 0, f"{checks} (w, i, j) cases, {bad} failures"


def c10_rewriting():
    bad = monomials = 0
    for w in _covered(3):
        rep = verify_rewriting(build_lattice(w), samples=200, strategies=5, seed=SEED)
        bad += len(rep.failures)
        monomials += rep.checked
    return bad == 0, f"{monomials} monomials x 6 strategies, {bad} failures"


CRITERIA = [
    ("C1", "SL4 classification", c1_sl4_classification),
    ("C2", "SL3 classification", c2_sl3_classification),
    ("C3", "lattice axioms S3-S5", c3_lattice_axioms),
    ("C4", "order equivalence", c4_order_equivalence),
    ("C5", "non-transitivity witnesses", c5_witnesses),
    ("C6", "weight and multiset identities", c6_weight_multiset),
    ("C7", "triple dimension agreement", c7_triple_dimension),
    ("C8", "straightening conditions", c8_straightening),
    ("C9", "pair basis", c9_pair_basis),
    ("C10", "rewriting confluence", c10_rewriting),
]


def run_criterion(label, title, fn):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported like one
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"{label:<4} {'PASS' if ok else 'FAIL'}  {title} ({time.perf_counter() - start:.2f}s): {detail}"
    return ok, line


@pytest.mark.parametrize("label, title, fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, title, fn, capsys):
    ok, line = run_criterion(label, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
