from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from semiring_ideals.core import from_tables, is_local
from semiring_ideals.enumeration import enumerate_semirings
from semiring_ideals.ideals import (DomainError, Ideal, all_ideals, characterize_minimal_prime, classify_semiring,
                                    ideal_closure, ideal_intersection, ideal_power, ideal_product, ideal_sum,
                                    ideal_violation, is_divided_prime, is_maximal, is_primary, is_prime,
                                    is_subtractive_ideal, is_two_absorbing, minimal_primes, minimal_two_absorbing,
                                    prime_ideals, radical, whole, zero_ideal)
from semiring_ideals.models import boolean_model, f2_model

BOOL = boolean_model().semiring
F2 = f2_model().semiring
U = 2  # index of u in the three-element example


def I(S, *names):
    return Ideal.from_members(S, [S.element_names.index(n) for n in names])


def test_closure(paper3):
    assert ideal_closure(paper3, [U]).names() == ["0", "u"]
    assert ideal_closure(paper3, []) == zero_ideal(paper3)
    assert ideal_closure(BOOL, [1]) == whole(BOOL)


def test_all_ideals_examples(paper3):
    assert [a.names() for a in all_ideals(paper3)] == [["0"], ["0", "u"], ["0", "1", "u"]]
    assert len(all_ideals(BOOL)) == 2 and len(all_ideals(F2)) == 2


def test_arithmetic_examples(paper3):
    m = I(paper3, "0", "u")
    assert ideal_product(m, m) == m
    for a in all_ideals(paper3):
        assert ideal_product(a, whole(paper3)) == a
        assert ideal_sum(zero_ideal(paper3), a) == a
    assert radical(zero_ideal(paper3)).names() == ["0"]
    assert radical(m) == m and radical(whole(paper3)) == whole(paper3)


def test_predicate_examples(paper3):
    m, z, S = I(paper3, "0", "u"), zero_ideal(paper3), whole(paper3)
    assert is_subtractive_ideal(m).witness == (U, 1)
    assert not is_subtractive_ideal(m)
    assert is_subtractive_ideal(zero_ideal(F2)) and is_subtractive_ideal(S)
    assert is_prime(m) and is_prime(z) and not is_prime(S)
    assert is_maximal(m) and not is_maximal(z) and is_maximal(zero_ideal(BOOL))
    c = is_primary(m)
    assert c and c.extra == m
    assert is_primary(zero_ideal(F2)).extra == zero_ideal(F2)
    assert is_primary(zero_ideal(BOOL)).extra == zero_ideal(BOOL)
    assert is_two_absorbing(m) and not is_two_absorbing(S)
    assert is_divided_prime(zero_ideal(BOOL)) and is_divided_prime(m) and is_divided_prime(zero_ideal(F2))


def test_divided_needs_prime():
    # in F2 x F2 the whole semiring is not prime
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 2, 0], [0, 3, 0, 3]]
    S = from_tables(add, mul)
    with pytest.raises(DomainError):
        is_divided_prime(zero_ideal(S))


def test_minimal_primes_examples(paper3):
    m, z = I(paper3, "0", "u"), zero_ideal(paper3)
    assert minimal_primes(z) == [z] and minimal_primes(m) == [m]
    assert minimal_primes(zero_ideal(BOOL)) == [zero_ideal(BOOL)]
    assert characterize_minimal_prime(zero_ideal(BOOL), zero_ideal(BOOL)) == (True, True, True)
    assert characterize_minimal_prime(z, m) == (False, False, False)
    assert characterize_minimal_prime(m, m) == (True, True, True)
    assert minimal_two_absorbing(ideal_product(m, m)) == [m]
    assert minimal_two_absorbing(zero_ideal(BOOL)) == [zero_ideal(BOOL)]
    assert minimal_two_absorbing(z) == [z]


def test_classification_examples(paper3):
    c = classify_semiring(paper3)
    # weak_gaussian is false here: the prime {0,u} is not subtractive
    assert c.flags() == {"subtractive": False, "semidomain": False, "valuation": False, "divided": True,
                         "local": True, "weak_gaussian": False, "two_ab": True}
    assert all(classify_semiring(BOOL).flags().values())
    assert all(classify_semiring(F2).flags().values())


def test_ideal_list_matches_oracle(corpus4):
    for S in corpus4:
        assert {a.members for a in all_ideals(S)} == set(oracles.ideals_of(S.add, S.mul))
        for a in all_ideals(S):
            n = S.order
            assert bool(is_prime(a)) == oracles.is_prime(a.members, S.mul, n)
            assert bool(is_two_absorbing(a)) == oracles.is_two_absorbing(a.members, S.mul, n)
            assert bool(is_subtractive_ideal(a)) == oracles.is_subtractive(a.members, S.add, n)


def _lattice_invariants(S):
    ideals = all_ideals(S)
    primes = prime_ideals(S)
    sub = classify_semiring(S).subtractive
    local, m = is_local(S)
    for a in ideals:
        r = radical(a)
        assert a <= r and radical(r) == r
        if is_two_absorbing(a):
            assert is_two_absorbing(r)
            assert all(S.mul[s][s] in a for s in r)
            mins = minimal_primes(a)
            if all(is_subtractive_ideal(p) for p in mins):
                assert len(mins) <= 2
        if a.is_proper:
            for p in minimal_primes(a):
                c = characterize_minimal_prime(a, p)
                assert c[0] == c[1] == c[2]
            for p in primes:
                if a <= p and p not in minimal_primes(a):
                    assert characterize_minimal_prime(a, p) == (False, False, False)
        if sub and is_primary(a):
            p = is_primary(a).extra
            assert bool(is_two_absorbing(a)) == (ideal_product(p, p) <= a)
        for b in ideals:
            assert ideal_product(a, b) <= ideal_intersection(a, b) <= a
    for p, q in product(primes, repeat=2):
        assert is_two_absorbing(ideal_intersection(p, q))
    for p in primes:
        assert is_two_absorbing(p)
        if local:
            pm = ideal_product(p, m)
            assert is_two_absorbing(pm)
            assert bool(is_prime(pm)) == (pm == p)
    if sub and local:
        assert is_two_absorbing(ideal_power(m, 2))


def test_lattice_invariants_through_order_4(corpus4):
    for S in corpus4:
        _lattice_invariants(S)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(list(enumerate_semirings(5))))
def test_lattice_invariants_order_5_sample(S):
    _lattice_invariants(S)


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_ideal_violation_witness_replays(data):
    S = data.draw(st.sampled_from(list(enumerate_semirings(4))))
    mask = data.draw(st.integers(0, S.full_mask))
    w = ideal_violation(S, mask)
    members = {x for x in S.elements if mask >> x & 1}
    if w is None:
        assert frozenset(members) in oracles.ideals_of(S.add, S.mul)
    elif w[0] == "empty":
        assert not members
    elif w[0] == "add":
        _, x, y = w
        assert x in members and y in members and S.add[x][y] not in members
    else:
        _, s, x = w
        assert x in members and S.mul[s][x] not in members
