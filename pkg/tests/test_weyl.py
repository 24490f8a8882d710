import itertools

import pytest
from hypothesis import given

from conftest import P, permutations
from schubert_toric.errors import RankMismatch
from schubert_toric.weyl import (
    Permutation,
    all_permutations,
    bruhat_leq,
    canonical_factorization,
    compose,
    format_one_line,
    format_word,
    parse_permutation,
    s_interval,
    subword_ideal,
    theta,
)


def s(i, n):
    return Permutation.simple(i, n)


# compose ---------------------------------------------------------------------


def test_compose_right_factor_acts_first():
    assert compose(s(2, 2), s(1, 2)).one_line == (3, 1, 2)


def test_compose_identity_and_involution():
    w = P("3,1,2")
    assert compose(Permutation.identity(2), w) == w
    assert compose(s(1, 2), s(1, 2)).is_identity()


def test_compose_rank_mismatch():
    with pytest.raises(RankMismatch):
        compose(s(1, 2), s(1, 3))


@given(permutations(), permutations())
def test_length_is_inversion_count(u, v):
    inv = sum(1 for a, b in itertools.combinations(u.one_line, 2) if a > b)
    assert u.length == inv
    if u.n == v.n:
        assert (u * v).length <= u.length + v.length


# Bruhat order ----------------------------------------------------------------


def test_bruhat_examples():
    e = Permutation.identity(2)
    assert all(bruhat_leq(e, w) for w in all_permutations(2))
    assert not bruhat_leq(s(1, 2), s(2, 2))
    assert bruhat_leq(s(2, 2), P("s2*s1", 2))


def test_bruhat_matches_subwords_in_s4():
    perms = all_permutations(3)
    for w in perms:
        ideal = subword_ideal(w)
        for u in perms:
            assert bruhat_leq(u, w) == (u.one_line in ideal), (u, w)


def test_bruhat_rank_mismatch():
    with pytest.raises(RankMismatch):
        bruhat_leq(s(1, 2), s(1, 3))


# s(a, b) -----------------------------------------------------------------------


def test_s_interval_examples():
    assert s_interval(2, 1, 2).one_line == (3, 1, 2)
    assert s_interval(1, 2, 2).is_identity()
    assert s_interval(3, 3, 3) == s(3, 3)


def test_s_interval_out_of_range():
    with pytest.raises(ValueError):
        s_interval(4, 1, 3)
    with pytest.raises(ValueError):
        s_interval(2, 0, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_s_interval_is_cycle_and_product(n):
    for b in range(1, n + 1):
        for a in range(b, n + 1):
            w = s_interval(a, b, n)
            assert w == Permutation.from_word(range(a, b - 1, -1), n)
            assert w.length == a - b + 1
            assert w(b) == a + 1
            assert all(w(x) == x - 1 for x in range(b + 1, a + 2))


# canonical factorization -------------------------------------------------------


def test_canonical_factorization_examples():
    assert canonical_factorization(Permutation.longest(2)).factors == ((1, 1), (2, 1))
    assert canonical_factorization(Permutation.identity(3)).factors == ()
    assert canonical_factorization(P("s2*s1*s3*s2", 3)).factors == ((2, 1), (3, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_canonical_factorization_exhaustive(n):
    for w in all_permutations(n):
        f = canonical_factorization(w)
        assert f.product(n) == w
        assert f.length() == w.length
        assert all(1 <= b <= a <= n for a, b in f.factors)
        assert all(x < y for x, y in zip(f.a_seq, f.a_seq[1:]))


# Theta -----------------------------------------------------------------------


def test_theta_examples():
    assert theta(s(1, 3)) == s(3, 3)
    assert theta(Permutation.identity(3)).is_identity()
    w = P("s2*s1*s3*s2", 3)
    assert theta(w) == P("s2*s3*s1*s2", 3) == w


def test_theta_is_automorphism_of_s4():
    perms = all_permutations(3)
    for u in perms:
        assert theta(theta(u)) == u
        assert theta(u).length == u.length
        for v in perms:
            assert theta(u * v) == theta(u) * theta(v)


@given(permutations())
def test_theta_maps_letters(w):
    word = w.reduced_word()
    assert theta(w) == Permutation.from_word([w.n + 1 - i for i in word], w.n)


# reduced words and serialization -------------------------------------------------


@given(permutations())
def test_reduced_words_spell_w(w):
    for word in itertools.islice(w.reduced_words(), 20):
        assert len(word) == w.length
        assert Permutation.from_word(word, w.n) == w


@given(permutations())
def test_serialization_round_trip(w):
    assert parse_permutation(format_one_line(w)) == w
    assert parse_permutation(format_word(w), w.n) == w


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_permutation("1,1,2")
    with pytest.raises(ValueError):
        parse_permutation("s2*s1")
    with pytest.raises(RankMismatch):
        parse_permutation("2,1", 2)
