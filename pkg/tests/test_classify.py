"""Class membership, special quotients, bounds, behaviors, uniformity."""

from __future__ import annotations

import pytest

from conftest import dfa
from syncomp import (Semiautomaton, SizeMismatchError, Transformation,
                     all_behaviors_aperiodic, behavior_of, classify,
                     complement, cycle, identity, left_ideal_witness,
                     left_witness_core, pair_graph_uniformity,
                     right_ideal_witness, ruled_out_count_brute,
                     ruled_out_count_formula, transposition,
                     two_sided_witness, uniformly_minimal)


# ---------------------------------------------------------------------------
# class membership on the witness families


def test_right_witness_classification():
    r = classify(right_ideal_witness(4))
    assert r.kappa == 4 and r.sigma == 64
    assert r.is_right_ideal and not r.is_left_ideal
    assert not r.is_two_sided_ideal
    assert not (r.is_prefix_closed or r.is_suffix_closed or r.is_factor_closed)
    assert r.has_sigma_star_q and not r.has_empty_q
    assert not r.l_uniquely_reachable
    assert r.bound == 64  # n^(n-1) via the single pinned coordinate
    assert r.sigma <= r.bound


def test_left_witness_classification():
    r = classify(left_ideal_witness(4))
    assert r.kappa == 4 and r.sigma == 67
    assert r.is_left_ideal and not r.is_right_ideal


def test_two_sided_witness_classification():
    r = classify(two_sided_witness(4))
    assert r.is_right_ideal and r.is_left_ideal and r.is_two_sided_ideal
    assert r.sigma == 25
    assert r.sigma <= r.bound


def test_closed_classes_are_complement_duals():
    r = classify(complement(right_ideal_witness(4)))
    assert r.is_prefix_closed and not r.is_right_ideal


def test_sigma_plus_is_a_two_sided_ideal():
    r = classify(dfa([[1, 1]], [1]))  # L = a+
    assert r.is_right_ideal and r.is_left_ideal and r.is_two_sided_ideal
    assert r.has_sigma_star_q and r.has_sigma_plus_q
    assert r.sigma == 1 and r.kappa == 2


def test_epsilon_language_is_closed_not_ideal():
    r = classify(dfa([[1, 1]], [0]))  # L = {empty word}
    assert not (r.is_right_ideal or r.is_left_ideal)
    assert r.is_prefix_closed and r.is_suffix_closed and r.is_factor_closed
    assert r.has_empty_q and r.has_epsilon_q
    assert not r.has_sigma_star_q


def test_empty_language():
    r = classify(dfa([[0, 1], [1, 0]], []))
    assert r.kappa == 1 and r.sigma == 1
    assert not (r.is_right_ideal or r.is_left_ideal or r.is_two_sided_ideal)
    assert r.is_prefix_closed and r.is_suffix_closed and r.is_factor_closed
    assert r.bound == 1


def test_universal_language():
    r = classify(dfa([[0, 1], [1, 0]], [0, 1]))
    assert r.kappa == 1 and r.sigma == 1
    assert r.is_right_ideal and r.is_left_ideal and r.is_two_sided_ideal
    assert r.is_prefix_closed and r.is_suffix_closed and r.is_factor_closed


def test_report_as_dict_round_trips_fields():
    d = classify(dfa([[1, 1]], [1])).as_dict()
    assert d["kappa"] == 2 and d["is_two_sided_ideal"] is True
    assert set(d) >= {"sigma", "bound", "l_uniquely_reachable"}


# ---------------------------------------------------------------------------
# unique-reachability flags and the tightest sound bound


def test_unary_power_language_bound():
    # L = aaa a*: initial chain is uniquely reachable letter by letter
    r = classify(dfa([[1, 2, 3, 3]], [3]))
    assert r.sigma == 3
    assert r.has_sigma_star_q and r.has_sigma_plus_q and not r.has_empty_q
    assert r.l_uniquely_reachable and r.some_la_uniquely_reachable
    assert r.bound == 5  # 1 + (n-2)^(n-pins) with n=4, pins=2
    assert r.sigma <= r.bound


def test_singleton_word_language_bound_is_tight():
    r = classify(dfa([[1, 2, 2]], [1]))  # L = {a}
    assert r.sigma == 2
    assert r.has_empty_q and r.has_epsilon_q
    assert r.l_uniquely_reachable and r.some_la_uniquely_reachable
    assert r.bound == 2
    assert r.sigma == r.bound


def test_bound_is_sound_on_witnesses():
    for build in (lambda: right_ideal_witness(5),
                  lambda: left_ideal_witness(5),
                  lambda: two_sided_witness(5)):
        r = classify(build())
        assert r.sigma <= r.bound


# ---------------------------------------------------------------------------
# behaviors and the excluded-transformation counts


def test_behavior_of_chain():
    d = dfa([[1, 2, 3, 3]], [3])
    b = behavior_of(d, Transformation((1, 2, 3, 3)))
    assert b.orbit == (0, 1, 2, 3)
    assert b.loop_entry == 3
    assert b.period == 1


def test_behavior_of_cycle():
    d = dfa([[1, 2, 0]], [0])
    b = behavior_of(d, cycle(3, 0, 2))
    assert b.orbit == (0, 1, 2)
    assert b.loop_entry == 0
    assert b.period == 3


def test_behavior_size_mismatch():
    with pytest.raises(SizeMismatchError):
        behavior_of(dfa([[1, 0]], [1]), identity(3))


def test_left_witness_behaviors_are_aperiodic():
    assert all_behaviors_aperiodic(left_ideal_witness(4))
    assert all_behaviors_aperiodic(two_sided_witness(4))


def test_right_witness_behaviors_are_not():
    # the cycle letter moves the initial state on a period-3 orbit
    assert not all_behaviors_aperiodic(right_ideal_witness(4))


def test_aperiodicity_is_necessary_not_sufficient():
    # same semiautomaton, every behavior aperiodic; one final choice is a
    # left ideal, the other is not
    rows = [[1, 1, 1], [1, 2, 2]]
    assert all_behaviors_aperiodic(dfa(rows, [1]))
    assert not classify(dfa(rows, [1])).is_left_ideal
    assert classify(dfa(rows, [2])).is_left_ideal


def test_ruled_out_formula_matches_brute_force():
    values = [ruled_out_count_formula(n) for n in range(1, 7)]
    assert values == [0, 1, 10, 114, 1556, 25080]
    assert values == [ruled_out_count_brute(n) for n in range(1, 7)]


def test_ruled_out_input_validation():
    with pytest.raises(ValueError):
        ruled_out_count_formula(0)
    with pytest.raises(ValueError):
        ruled_out_count_brute(9)


# ---------------------------------------------------------------------------
# uniform minimality via the pair graph


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_left_core_is_uniformly_minimal(n):
    assert uniformly_minimal(left_witness_core(n), sink=0)


def test_identity_letters_are_not_uniform():
    s = Semiautomaton(3, ("a",), {"a": identity(3)})
    report = pair_graph_uniformity(s, sink=0)
    assert not report.uniform
    assert not report.strongly_connected
    assert not report.sink_reachable


def test_cycle_only_semiautomaton_never_reaches_the_sink():
    s = Semiautomaton(4, ("a",), {"a": cycle(4, 1, 3)})
    report = pair_graph_uniformity(s, sink=0)
    assert report.strongly_connected
    assert not report.sink_reachable
    assert not report.uniform


def test_transposition_leaves_an_unresolvable_pair():
    s = Semiautomaton(3, ("a",), {"a": transposition(3, 1, 2)})
    report = pair_graph_uniformity(s, sink=0)
    assert (1, 2) in report.bad_pairs
    assert not report.uniform


def test_pair_graph_preconditions():
    moving = Semiautomaton(3, ("a",), {"a": cycle(3, 0, 2)})
    with pytest.raises(ValueError):
        pair_graph_uniformity(moving, sink=0)  # sink not absorbing
    single = Semiautomaton(1, ("a",), {"a": identity(1)})
    with pytest.raises(ValueError):
        pair_graph_uniformity(single, sink=0)  # no non-sink states
    with pytest.raises(ValueError):
        pair_graph_uniformity(moving, sink=7)
