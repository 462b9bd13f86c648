import random

import pytest

import oracles
from semiring_ideals.core import CapacityError, from_tables, relabel, validate_semiring
from semiring_ideals.enumeration import (are_isomorphic, build_corpus, canonical_form, canonical_key,
                                         enumerate_semirings, load_corpus, save_corpus)
from semiring_ideals.models import boolean_model, chain_model, f2_model, paper_three_element

Z3 = from_tables([[0, 1, 2], [1, 2, 0], [2, 0, 1]], [[0, 0, 0], [0, 1, 2], [0, 2, 1]])


def _as_tuple(S):
    return ([list(r) for r in S.add], [list(r) for r in S.mul], 0, 1)


def _matches_oracle(found, oracle_reps):
    assert len(found) == len(oracle_reps)
    for rep in oracle_reps:
        assert sum(oracles.isomorphic(_as_tuple(S), rep) for S in found) == 1


def test_order2_against_raw_oracle():
    found = list(enumerate_semirings(2))
    _matches_oracle(found, oracles.classes(oracles.order2_raw()))
    assert {S.add[1][1] for S in found} == {0, 1}


def test_order3_against_pinned_oracle():
    _matches_oracle(list(enumerate_semirings(3)), oracles.classes(oracles.pinned_order3()))


def test_order4_against_pinned_oracle():
    _matches_oracle(list(enumerate_semirings(4)), oracles.classes(oracles.pinned_order4()))


def test_labelled_counts_match_oracle():
    assert len(list(enumerate_semirings(2, up_to_iso=False))) == 2
    assert len(list(enumerate_semirings(3, up_to_iso=False))) == len(oracles.pinned_order3())
    assert len(list(enumerate_semirings(4, up_to_iso=False))) == len(oracles.pinned_order4())


def test_order3_contains_named_members():
    found = list(enumerate_semirings(3))
    for S in (paper_three_element().semiring, Z3, chain_model(3).semiring):
        assert sum(are_isomorphic(S, T) for T in found) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_grouping_labelled_stream_gives_same_classes(n):
    labelled = {canonical_key(S) for S in enumerate_semirings(n, up_to_iso=False)}
    assert labelled == {canonical_key(S) for S in enumerate_semirings(n)}


def test_stream_is_valid_sorted_and_deterministic():
    a = list(enumerate_semirings(4))
    b = list(enumerate_semirings(4))
    assert [S.add + S.mul for S in a] == [S.add + S.mul for S in b]
    keys = [canonical_key(S) for S in a]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for S in a:
        validate_semiring(S.add, S.mul)


def test_canonical_form_invariance_and_idempotence():
    rng = random.Random(7)
    for S in enumerate_semirings(4):
        rest = [2, 3]
        rng.shuffle(rest)
        add, mul = relabel(S.add, S.mul, [0, 1] + rest)
        T = from_tables(add, mul)
        assert canonical_key(T) == canonical_key(S) and are_isomorphic(S, T)
        c = canonical_form(S)
        assert canonical_form(c.semiring).canonical_key == c.canonical_key


def test_iso_examples():
    assert not are_isomorphic(boolean_model().semiring, f2_model().semiring)
    assert not are_isomorphic(paper_three_element().semiring, Z3)
    # the three-element example with the non-identity element listed first
    S = validate_semiring([[0, 0, 0], [0, 1, 2], [0, 2, 2]], [[0, 1, 0], [1, 1, 1], [0, 1, 2]],
                          zero=1, one=2, element_names=["u", "0", "1"])
    assert canonical_key(S) == canonical_key(paper_three_element().semiring)


def test_capacity_errors():
    with pytest.raises(CapacityError):
        list(enumerate_semirings(1))
    with pytest.raises(CapacityError):
        list(enumerate_semirings(6))
    with pytest.raises(CapacityError):
        list(enumerate_semirings(7, max_order=7))


def test_corpus_round_trip(tmp_path):
    corpus = build_corpus((2, 3))
    save_corpus(corpus, tmp_path)
    back = load_corpus(tmp_path)
    assert back.counts == {2: 2, 3: 6}
    assert [c.canonical_key for c in back.entries] == [c.canonical_key for c in corpus.entries]
    assert len(list(tmp_path.glob("*.json"))) == 9
