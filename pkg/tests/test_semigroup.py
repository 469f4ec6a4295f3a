"""Transition semigroups, sigma/mu, witness words, oracle agreement."""

from __future__ import annotations

import pytest

from conftest import dfa
from syncomp import (CapExceededError, Transformation, identity,
                     left_ideal_witness, minimize, right_ideal_witness,
                     sigma_of_language, small_witness, transition_semigroup,
                     two_sided_witness, witness_words, word_bfs_sigma,
                     word_length_histogram)


def test_right_witness_semigroup_is_everything_fixing_the_sink():
    sg = transition_semigroup(right_ideal_witness(4), track_words=False)
    assert sg.sigma == 64
    assert all(t(3) == 3 for t in sg.elements)
    assert sg.contains_identity_as_nonempty_word
    assert sg.mu == 64


def test_left_witness_semigroup_n3():
    sg = transition_semigroup(left_ideal_witness(3))
    assert sg.sigma == 11
    assert sg.mu == 11  # the identity arises from a nonempty word
    assert witness_words(sg, identity(3)) == "aa"
    assert witness_words(sg, Transformation((0, 0, 2))) == "ada"


def test_witness_words_on_restricted_alphabet():
    # dropping letter a shifts the shortest witnesses but not the size
    sg = transition_semigroup(left_ideal_witness(3, "bcde"))
    assert sg.sigma == 11
    assert witness_words(sg, identity(3)) == "bb"
    word = witness_words(sg, Transformation((0, 0, 2)))
    assert word == "bdb"
    assert len(word) <= 3


def test_two_sided_witness_sigma():
    assert sigma_of_language(two_sided_witness(4)) == 25


def test_unary_semigroup_and_mu_rule():
    # L = a+ has a one-element semigroup but no neutral nonempty word
    sg = transition_semigroup(dfa([[1, 1]], [1]))
    assert sg.sigma == 1
    assert not sg.contains_identity_as_nonempty_word
    assert sg.mu == 2


def test_sigma_of_language_minimizes_first():
    # states 1 and 2 are duplicates; sigma must not see them separately
    redundant = dfa([[1, 3, 3, 3], [2, 3, 3, 3]], [3])
    m = minimize(redundant)
    assert m.n == 3
    assert sigma_of_language(redundant) == 2
    assert word_bfs_sigma(m) == 2


def test_histogram_counts_by_shortest_witness_length():
    sg = transition_semigroup(left_ideal_witness(3))
    hist = word_length_histogram(sg)
    assert hist == {1: 4, 2: 5, 3: 2}
    assert sum(hist.values()) == sg.sigma
    distinct_letter_actions = len({sg.words[t] for t in sg.elements
                                   if len(sg.words[t]) == 1})
    assert hist[1] == distinct_letter_actions


def test_recorded_words_reproduce_their_elements():
    witness = left_ideal_witness(3)
    sg = transition_semigroup(witness)
    lengths = []
    for t, word in sg.words.items():
        assert word, "semigroup elements need nonempty witness words"
        assert witness.transformation_of(word) == t
        lengths.append(len(word))
    assert min(lengths) == 1  # the letters themselves come first


def test_track_words_disabled():
    sg = transition_semigroup(left_ideal_witness(3), track_words=False)
    assert sg.words is None
    with pytest.raises(ValueError):
        witness_words(sg, identity(3))
    with pytest.raises(ValueError):
        word_length_histogram(sg)


def test_witness_words_rejects_foreign_element():
    sg = transition_semigroup(dfa([[1, 1]], [1]))
    with pytest.raises(ValueError):
        witness_words(sg, Transformation((0, 1)))


def test_cap_aborts_closure():
    with pytest.raises(CapExceededError) as info:
        transition_semigroup(right_ideal_witness(4), cap=10)
    assert info.value.cap == 10
    assert info.value.partial_count == 10


def test_default_cap_is_never_hit():
    # n^n is an upper bound on any transition semigroup, so no abort
    assert transition_semigroup(right_ideal_witness(5),
                                track_words=False).sigma == 625


@pytest.mark.parametrize("build, expected", [
    (lambda: left_ideal_witness(3), 11),
    (lambda: small_witness("right", 4, 2), 31),
    (lambda: small_witness("two_sided", 3, 2), 5),
])
def test_word_bfs_oracle_agrees(build, expected):
    d = minimize(build())
    assert sigma_of_language(d) == expected
    assert word_bfs_sigma(d) == expected


def test_word_bfs_budget():
    with pytest.raises(RuntimeError):
        word_bfs_sigma(minimize(left_ideal_witness(4)), max_words=50)
