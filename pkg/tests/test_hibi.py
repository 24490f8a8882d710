import itertools

import pytest

from conftest import T
from schubert_toric.demazure import demazure_character, dimension
from schubert_toric.hibi import (
    MultiMonomial,
    export_ideal,
    generate_ideal,
    hilbert_component,
    random_monomial,
    rewrite_to_normal_form,
    verify_rewriting,
)
from schubert_toric.weights import entry_multiset, weight_sum
from schubert_toric.weyl import Permutation
from schubert_toric.wlattice import build_lattice, count_standard_monomials, is_multichain

W0 = build_lattice(Permutation.longest(2))


def test_generate_ideal_examples():
    assert generate_ideal(build_lattice(Permutation.identity(3))) == []
    (g,) = generate_ideal(W0)
    assert (g.a, g.b, g.join, g.meet) == (T(2, n=2), T(0, 1, n=2), T(0, 2, n=2), T(1, n=2))
    L = build_lattice(Permutation.longest(3))
    assert len(generate_ideal(L)) == len(L.incomparable_pairs())


def test_rewrite_examples():
    chain = MultiMonomial.of([T(0, n=2), T(0, 1, n=2)])
    assert rewrite_to_normal_form(chain, W0) == chain
    m = MultiMonomial.of([T(2, n=2), T(0, 1, n=2)])
    assert rewrite_to_normal_form(m, W0) == MultiMonomial.of([T(1, n=2), T(0, 2, n=2)])


def test_rewrite_random_degree_three(rng):
    L = build_lattice(Permutation.longest(3))
    for _ in range(50):
        m = random_monomial(L, rng, 3)
        nf = rewrite_to_normal_form(m, L, rng)
        assert is_multichain(L, nf.factors)
        assert nf.degrees(3) == m.degrees(3)
        assert entry_multiset(*nf.factors) == entry_multiset(*m.factors)
        assert weight_sum(*nf.factors) == weight_sum(*m.factors)


def test_hilbert_examples():
    assert hilbert_component(W0, (0, 0)) == 1
    assert hilbert_component(W0, (1, 1)) == 8
    assert hilbert_component(W0, (2, 0)) == 6 == dimension(demazure_character(Permutation.longest(2), (2, 0)))
    with pytest.raises(ValueError):
        hilbert_component(W0, (1,))


@pytest.mark.parametrize("n", [2, 3])
def test_rewriting_confluence(n, covered):
    for w in covered[n]:
        rep = verify_rewriting(build_lattice(w), samples=200 if n == 3 else 50)
        assert rep.passed, rep.failures


def test_hilbert_agrees_with_counts(covered):
    for w in covered[3][::4]:
        L = build_lattice(w)
        for d in itertools.product(range(3), repeat=3):
            if sum(d) <= 2:
                assert hilbert_component(L, d) == count_standard_monomials(L, d)


def test_export_formats():
    m2 = export_ideal(W0, "m2")
    assert m2.count("x_(") == 6 + 4
    assert m2.endswith(");\n") and "\r" not in m2
    sing = export_ideal(W0, "singular")
    assert sing.startswith("ring r = 0, (x_1_0, x_1_1, x_1_2, x_2_0_1, x_2_0_2, x_2_1_2), dp;")
    assert sing.endswith("ideal I = x_1_2*x_2_0_1 - x_2_0_2*x_1_1;\n")
    chain = build_lattice(Permutation.identity(2))
    assert "ideal(0_R)" in export_ideal(chain, "m2")
    assert "ideal I = 0;" in export_ideal(chain, "singular")
    import json

    body = json.loads(export_ideal(W0, "json"))
    assert set(body) == {"variables", "binomials"}
    assert body["binomials"] == [[["x_1_2", "x_2_0_1"], ["x_2_0_2", "x_1_1"]]]
    assert export_ideal(W0, "json") == export_ideal(W0, "json")
    with pytest.raises(ValueError):
        export_ideal(W0, "maple")
