import pytest
from hypothesis import given, settings, strategies as st

import oracles
from semiring_ideals.core import (AxiomError, MalformedTableError, find_violations, from_tables, is_local,
                                  is_ring, is_semidomain, units, validate_semiring)
from semiring_ideals.enumeration import enumerate_semirings
from semiring_ideals.ideals import all_ideals
from semiring_ideals.models import paper_three_element

BOOL_ADD = [[0, 1], [1, 1]]
BOOL_MUL = [[0, 0], [0, 1]]
U3_ADD = [[0, 1, 2], [1, 1, 2], [2, 2, 2]]
U3_MUL = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]


def test_boolean_is_valid():
    S = validate_semiring(BOOL_ADD, BOOL_MUL)
    assert S.order == 2 and (S.zero, S.one) == (0, 1)


def test_zero_equals_one_rejected():
    with pytest.raises(AxiomError) as e:
        validate_semiring(BOOL_ADD, BOOL_MUL, zero=0, one=0)
    assert any(v.axiom == "one-equals-zero" for v in e.value.violations)


def test_three_element_tables_valid():
    S = from_tables(U3_ADD, U3_MUL, ["0", "1", "u"])
    assert S.element_names == ("0", "1", "u")


def test_relabels_identities_to_front():
    # same Boolean semiring with zero stored at index 1
    S = validate_semiring([[0, 0], [0, 1]], [[0, 1], [1, 1]], zero=1, one=0, element_names=["one", "zero"])
    assert S.element_names == ("zero", "one")
    assert S.add == ((0, 1), (1, 1)) and S.mul == ((0, 0), (0, 1))


@pytest.mark.parametrize("add, mul, where", [
    ([[0, 1], [1]], BOOL_MUL, "add row 1"),
    (BOOL_ADD, [[0, 0]], "mul"),
    (BOOL_ADD, [[0, 0], [0, 5]], "mul[1][1]"),
    ([[0]], [[0]], "add"),
])
def test_malformed_tables_name_location(add, mul, where):
    with pytest.raises(MalformedTableError) as e:
        validate_semiring(add, mul)
    assert e.value.location == where


def test_non_distributive_witness():
    add = [[0, 1, 2], [1, 1, 1], [2, 1, 2]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    v = {x.axiom: x.witness for x in find_violations(add, mul, 0, 1)}
    assert "distributivity" in v
    x, y, z = v["distributivity"]
    assert mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]] or mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]


def test_units_examples(paper3):
    assert units(paper3) == {1}
    assert units(from_tables([[0, 1], [1, 0]], BOOL_MUL)) == {1}


def test_is_local_examples(paper3):
    ok, m = is_local(paper3)
    assert ok and m.names() == ["0", "u"]
    # F2 x F2 has two maximal ideals
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 2, 0], [0, 3, 0, 3]]
    assert is_local(from_tables(add, mul)) == (False, None)


def test_is_semidomain_examples(paper3):
    assert is_semidomain(paper3) == (False, (2, 1, 2))
    assert is_semidomain(from_tables(BOOL_ADD, BOOL_MUL)) == (True, None)


def test_is_ring():
    assert is_ring(from_tables([[0, 1], [1, 0]], BOOL_MUL))
    assert not is_ring(paper_three_element().semiring)


def test_invariants_over_corpus(corpus4):
    for S in corpus4:
        u = units(S)
        assert S.zero not in u
        assert all(S.mul[x][y] in u for x in u for y in u)
        ok, m = is_local(S)
        if ok:
            assert all(a <= m for a in all_ideals(S) if a.is_proper)


tables3 = st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=3, max_size=3)


@settings(max_examples=300, deadline=None)
@given(tables3, tables3, st.integers(0, 2), st.integers(0, 2))
def test_acceptance_matches_exhaustive_oracle(add, mul, zero, one):
    assert (find_violations(add, mul, zero, one) == []) == oracles.is_semiring(add, mul, zero, one)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_single_cell_mutations_are_judged_exactly(data):
    S = data.draw(st.sampled_from(list(enumerate_semirings(3))))
    add = [list(r) for r in S.add]
    mul = [list(r) for r in S.mul]
    t = data.draw(st.sampled_from([add, mul]))
    i, j, v = (data.draw(st.integers(0, 2)) for _ in range(3))
    t[i][j] = v
    assert (find_violations(add, mul, 0, 1) == []) == oracles.is_semiring(add, mul, 0, 1)
