import pytest
from math import comb

from conftest import P, T
from schubert_toric.demazure import demazure_character, dimension
from schubert_toric.errors import NotComparable
from schubert_toric.weights import reduced_paths
from schubert_toric.wedge import (
    PairVector,
    WedgeVector,
    chevalley_failures,
    demazure_span,
    lowering,
    pair_vector,
    q_vector,
    raising,
    verify_pair_basis,
)
from schubert_toric.weyl import Permutation, all_permutations
from schubert_toric.wlattice import breve, lattice_elements

e = WedgeVector.basis


def test_lowering_examples():
    assert lowering(1, e([1])).terms == e([2]).terms
    assert lowering(1, e([1, 2])).is_zero()
    assert lowering(2, e([1, 2])).terms == e([1, 3]).terms


def test_raising_examples():
    assert raising(1, e([2])).terms == e([1]).terms
    assert raising(1, e([1])).is_zero()
    assert raising(2, e([1, 3])).terms == e([1, 2]).terms


def test_q_vector_examples():
    assert q_vector(T(0, 1, 2, n=3)).terms == e([1, 2, 3]).terms
    assert q_vector(T(2, n=2)).terms == e([3]).terms
    assert q_vector(T(0, 2, n=2)).terms == e([1, 3]).terms


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chevalley_relations(n):
    assert chevalley_failures(n) == []


def test_demazure_span_examples():
    assert len(demazure_span(Permutation.identity(2), 1)) == 1
    assert len(demazure_span(P("s2*s1", 2), 1)) == 3
    for n in (2, 3):
        for i in range(1, n + 1):
            assert len(demazure_span(Permutation.longest(n), i)) == comb(n + 1, i)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_demazure_span_dimension_all_w(n):
    for w in all_permutations(n):
        for i in range(1, n + 1):
            lam = [0] * n
            lam[i - 1] = 1
            span = demazure_span(w, i)
            assert len(span) == len(lattice_elements(w)[i]) == dimension(demazure_character(w, lam))


def test_pair_vector_examples():
    kappa = T(1, n=2)
    assert pair_vector(breve(kappa, 2), kappa).terms == PairVector.tensor(q_vector(T(0, 1, n=2)), q_vector(kappa)).terms
    v = pair_vector(T(0, 2, n=2), kappa)
    assert v.to_text() == "1 * e{1,2} (x) e{3}\n1 * e{1,3} (x) e{2}\n"
    with pytest.raises(NotComparable):
        pair_vector(T(0, 1, n=2), T(2, n=2))


def test_pair_vector_path_independence():
    sigma, kappa = T(1, 3, n=3), T(0, n=3)
    paths = list(reduced_paths(breve(kappa, 2), sigma))
    assert len(paths) > 1
    vs = {frozenset(pair_vector(sigma, kappa, p).terms.items()) for p in paths}
    assert len(vs) == 1


def test_pair_basis_examples():
    rep = verify_pair_basis(Permutation.longest(2), 1, 2)
    assert rep.passed and rep.checked == 8
    assert verify_pair_basis(Permutation.identity(2), 1, 2).passed


@pytest.mark.parametrize("n", [2, 3])
def test_pair_basis_all_covered(n, covered):
    for w in covered[n]:
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                rep = verify_pair_basis(w, i, j)
                assert rep.passed, rep.failures
