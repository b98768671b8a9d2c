import math
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from gwsym import chi_sym_closed, is_equal
from gwsym.errors import GuardExceeded, LengthMismatch, OddPower, WrongBidegree
from gwsym.hodge import (B, BV, CohClass, admissible_count, alpha, alpha_dual, check_invariant_basis,
                         chi_sym_oracle, compose, cup, gram_middle, index_pairs, invariant_basis,
                         local_mul, sn_act, trace_sym, word_mul, word_parity)

G = 3
local = st.sampled_from([BV, B] + [alpha(i) for i in range(1, G + 1)]
                        + [alpha_dual(i) for i in range(1, G + 1)])


def words(n):
    return st.lists(local, min_size=n, max_size=n).map(tuple)


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


def test_curve_multiplication_table():
    assert local_mul(alpha_dual(1), alpha(1)) == (1, B)
    assert local_mul(alpha(1), alpha_dual(1)) == (-1, B)
    assert local_mul(alpha(1), alpha_dual(2)) is None
    assert local_mul(alpha(1), alpha(1)) is None
    assert local_mul(B, B) is None
    assert local_mul(BV, alpha(2)) == (1, alpha(2))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(words(n), words(n))))
def test_graded_commutative(pair):
    w1, w2 = pair
    r, s = word_mul(w1, w2), word_mul(w2, w1)
    assert (r is None) == (s is None)
    if r:
        assert r[1] == s[1]
        assert r[0] == s[0] * (-1) ** (word_parity(w1) * word_parity(w2))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(words(n), words(n), words(n))))
def test_associative(triple):
    w1, w2, w3 = triple

    def m(x, y):
        if x is None or y is None:
            return None
        r = word_mul(x[1], y[1])
        return None if r is None else (x[0] * y[0] * r[0], r[1])
    a, b, c = (1, w1), (1, w2), (1, w3)
    assert m(m(a, b), c) == m(a, m(b, c))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(perms(n), perms(n), words(n))))
def test_group_action(data):
    s, t, w = data
    s1, v1 = sn_act(t, w)
    s2, v2 = sn_act(s, v1)
    s3, v3 = sn_act(compose(s, t), w)
    assert (s1 * s2, v2) == (s3, v3)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(perms(n), words(n), words(n))))
def test_action_is_multiplicative(data):
    s, w1, w2 = data
    r = word_mul(w1, w2)
    a, b = sn_act(s, w1), sn_act(s, w2)
    rs = word_mul(a[1], b[1])
    if r is None:
        assert rs is None
    else:
        sg, v = sn_act(s, r[1])
        assert rs == (a[0] * b[0] * r[0] * sg, v)


def test_swap_of_two_odd_factors_is_negative():
    assert sn_act((1, 0), (alpha(1), alpha(2))) == (-1, (alpha(2), alpha(1)))
    assert sn_act((1, 0), (B, alpha(2))) == (1, (alpha(2), B))


def test_class_checks():
    with pytest.raises(WrongBidegree):
        CohClass(1, {(B,): 1, (BV,): 1})
    with pytest.raises(LengthMismatch):
        CohClass(2, {(B,): 1})
    with pytest.raises(WrongBidegree):
        trace_sym(CohClass.of_word((BV, BV)))


def test_trace_normalization():
    top = CohClass.of_word((B, B))
    assert trace_sym(top) == 0.5
    full = CohClass.of_word((B,) * 3, math.factorial(3))
    assert trace_sym(full) == 1


def test_cup_fast_path_matches_general():
    # the top-bidegree shortcut must agree with the full product
    x = invariant_basis(2, 4)[3]
    y = invariant_basis(2, 4)[5]
    fast = cup(x, y)
    slow = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            r = word_mul(w1, w2)
            if r:
                slow[r[1]] = slow.get(r[1], 0) + r[0] * c1 * c2
    assert fast == CohClass(4, slow)


def test_guards():
    with pytest.raises(OddPower):
        chi_sym_oracle(2, 3)
    with pytest.raises(GuardExceeded):
        chi_sym_oracle(1, 12)


def test_guard_override(monkeypatch):
    monkeypatch.setenv("GWSYM_MAX_N", "2")
    with pytest.raises(GuardExceeded):
        chi_sym_oracle(0, 4)


@pytest.mark.parametrize("g,n", [(0, 2), (1, 2), (2, 2), (1, 4), (2, 4), (3, 2)])
def test_oracle_matches_closed_small(g, n):
    assert is_equal(chi_sym_oracle(g, n), chi_sym_closed(g, n))


def test_oracle_g1_n2_is_zero():
    assert chi_sym_oracle(1, 2).rank == 0
    assert is_equal(chi_sym_oracle(1, 2), chi_sym_closed(1, 2))


@pytest.mark.parametrize("g,n", [(1, 2), (2, 2), (2, 4), (3, 4)])
def test_gram_shape(g, n):
    m = n // 2
    labels = [b.label for b in invariant_basis(g, n)]
    assert labels == index_pairs(g, m)
    Gm = gram_middle(g, n)
    for i, (I, J) in enumerate(labels):
        for j, (K, L) in enumerate(labels):
            v = Gm.entries[i][j]
            if (K, L) == (J, I):
                assert v == (-1) ** len(I) * math.factorial(m - len(I)) ** 2
            else:
                assert v == 0


def test_admissible_count_brute():
    assert admissible_count((), (), 2) == 4
    assert admissible_count((1,), (2,), 2) == 1
    assert admissible_count((1, 2), (1, 3), 2) == 1


@pytest.mark.parametrize("g,n", [(0, 2), (1, 2), (2, 2), (2, 4), (3, 4)])
def test_dimension(g, n):
    m = n // 2
    assert check_invariant_basis(g, n) == sum(math.comb(g, v) ** 2 for v in range(m + 1))
