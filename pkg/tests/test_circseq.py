import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from gateswitch.circseq import (
    GateSet, SwitchClass, classify_switch, count_switches, gate_profile, parse_gates,
    theorem1_bounds, two_phase_construction, two_phase_sequence,
)
from gateswitch.errors import InvalidInput, NotAnAscent
from gateswitch.oracle import enumerate_sequences, min_switches
from gateswitch.perm_core import Permutation, validate_sequence

from conftest import random_sequence


def all_gate_sets(n):
    for g in range(1, n):
        for ys in combinations(range(1, n), g):
            yield GateSet(n, ys)


@st.composite
def gate_sets(draw, max_n=10):
    n = draw(st.integers(2, max_n))
    ys = draw(st.sets(st.integers(1, n - 1), min_size=1))
    return GateSet.of(n, ys)


def test_gate_profile_example():
    prof = gate_profile(GateSet.of(8, [1, 4, 6, 7]))
    assert prof.x == (1, 4, 2, 1)
    assert (prof.l, prof.r) == (1, 3)
    assert prof.p == (4, 2, 1, 1)
    assert prof.total_cost == 16


def test_gate_profile_middle_gate_counts_right():
    prof = gate_profile(GateSet.of(2, [1]))
    assert prof.x == (1,) and (prof.l, prof.r) == (0, 1)


def test_gate_profile_full():
    prof = gate_profile(GateSet.of(4, [1, 2, 3]))
    assert prof.x == (1, 2, 1) and (prof.l, prof.r) == (1, 2) and prof.total_cost == 8


@given(gate_sets())
def test_gate_profile_invariants(gs):
    prof = gate_profile(gs)
    n = gs.n
    assert prof.total_cost == 2 * sum(prof.x)
    c = prof.cost_per_number
    assert all(c[i] == c[n - 1 - i] for i in range(n))
    assert all(0 < v and 2 * v <= n for v in prof.p)
    assert list(prof.p) == sorted(prof.p, reverse=True)


@pytest.mark.parametrize("n", range(2, 11))
def test_mirror_symmetry(n):
    for gs in all_gate_sets(n):
        a, b = gate_profile(gs), gate_profile(gs.mirrored())
        assert sorted(a.x) == sorted(b.x)
        if n % 2 == 1 or n // 2 not in gs.y:
            assert (a.l, a.r) == (b.r, b.l)
        else:
            # the middle gate is on the right in both views
            assert (a.l, a.r) == (b.r - 1, b.l + 1)


@pytest.mark.parametrize("text", ["", "0,1", "1,9", "2,2", "a"])
def test_parse_gates_rejects(text):
    with pytest.raises(InvalidInput):
        parse_gates(8, text)


def test_classify_examples():
    assert classify_switch(Permutation.of([1, 2]), 1, GateSet.of(2, [1])) is SwitchClass.GOOD
    # last switch region of the worked example: position 3 is not a gate
    gs = GateSet.of(8, [1, 4, 6, 7])
    assert classify_switch(Permutation.of([8, 7, 5, 6, 4, 3, 2, 1]), 3, gs) is SwitchClass.NON_GATE
    # value 1 crossing gate 3 toward its target 4
    assert classify_switch(Permutation.of([2, 3, 1, 4]), 3, GateSet.of(4, [3])) is SwitchClass.GOOD
    # value 2 crossing gate 3 past its target 3
    assert classify_switch(Permutation.of([1, 3, 2, 4]), 3, GateSet.of(4, [3])) is SwitchClass.BAD


def test_classify_rejects_descent():
    with pytest.raises(NotAnAscent):
        classify_switch(Permutation.of([2, 1]), 1, GateSet.of(2, [1]))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_good_switch_identity_exhaustive(n):
    """Every gate switch is good or bad; good switches total sum(x)."""
    seqs = list(enumerate_sequences(n))
    for gs in all_gate_sets(n):
        lower = sum(gate_profile(gs).x)
        for seq in seqs:
            t = count_switches(seq, gs)
            assert t.good == lower
            assert t.total == lower + t.bad and t.bad >= 0


def test_count_switches_full_gate_set_n4():
    gs = GateSet.of(4, [1, 2, 3])
    for seq in enumerate_sequences(4):
        t = count_switches(seq, gs)
        assert (t.total, t.good, t.bad) == (6, 4, 2)


def test_count_switches_n2():
    t = count_switches(two_phase_sequence(GateSet.of(2, [1])), GateSet.of(2, [1]))
    assert (t.total, t.good, t.bad) == (1, 1, 0)


@settings(max_examples=200, deadline=None)
@given(gate_sets(max_n=9), st.randoms(use_true_random=False))
def test_good_switch_identity_random_sequences(gs, rng):
    seq = random_sequence(gs.n, rng)
    t = count_switches(seq, gs)
    assert t.good == sum(gate_profile(gs).x)
    assert t.total == t.good + t.bad


@pytest.mark.parametrize("n, ys, expected", [
    (8, [1, 4, 6, 7], (8, 11)),
    (5, [2], (2, 2)),
    (4, [1, 2, 3], (4, 6)),
])
def test_theorem1_bounds(n, ys, expected):
    assert theorem1_bounds(GateSet.of(n, ys)) == expected


def test_two_phase_example():
    gs = GateSet.of(8, [1, 4, 6, 7])
    built = two_phase_construction(gs)
    seq = built.sequence
    assert str(built.phase1_endpoint) == "3 4 5 2 6 1 8 7"
    assert len(seq) == 29
    words = [str(p) for p in seq.permutations]
    # milestones shown in the worked example
    assert "8 4 5 3 6 2 1 7" in words and "8 7 5 4 6 3 2 1" in words
    t = count_switches(seq, gs)
    assert (t.total, t.good, t.bad) == (11, 8, 3)
    first, second = built.phase_tallies()
    assert first.total == 4 and second.total == 7 and second.bad == 0

    # gate switches between the milestones: 4, 3, 3, 1
    marks = [0, built.phase1_steps, words.index("8 4 5 3 6 2 1 7"),
             words.index("8 7 5 4 6 3 2 1"), len(words) - 1]
    gate_steps = [sum(1 for ev in seq.events[a:b] if ev.position in gs.y)
                  for a, b in zip(marks, marks[1:])]
    assert gate_steps == [4, 3, 3, 1]


def test_two_phase_n2():
    seq = two_phase_sequence(GateSet.of(2, [1]))
    assert [p.word for p in seq.permutations] == [(1, 2), (2, 1)]


def test_two_phase_single_left_gate_is_optimal():
    gs = GateSet.of(5, [2])
    t = count_switches(two_phase_sequence(gs), gs)
    assert t.total == 2 == min_switches(gs)


@pytest.mark.parametrize("n", range(2, 11))
def test_two_phase_all_gate_sets(n):
    for gs in all_gate_sets(n):
        built = two_phase_construction(gs)
        assert validate_sequence(built.sequence).valid
        assert built.flushed_steps == 0
        lower, upper = theorem1_bounds(gs)
        total = count_switches(built.sequence, gs).total
        assert lower <= total <= upper
        first, second = built.phase_tallies()
        prof = gate_profile(gs)
        assert second.bad == 0
        assert first.bad <= prof.l * prof.r


def test_two_phase_deterministic():
    gs = GateSet.of(9, [2, 3, 7])
    assert two_phase_sequence(gs) == two_phase_sequence(gs)


def test_count_switches_size_mismatch():
    with pytest.raises(InvalidInput):
        count_switches(two_phase_sequence(GateSet.of(3, [1])), GateSet.of(4, [1]))
