import random

import pytest

from carpetauto.automaton import (
    EXIT,
    ID,
    INFINITE,
    SigmaAutomaton,
    build_topology_automaton,
    check_feasibility,
    from_json,
    is_infinite,
    mirror_check,
    neg,
    random_word,
    state_from_name,
    state_name,
    surviving_time,
    to_dot,
    to_json,
)
from carpetauto.words import PeriodicWord, parse_word

from conftest import SQUARE_TOP_5, SQUARE_VSEP_5, TOP_ISOLATED_11, VSEP_11


def test_state_names_round_trip():
    for s in (ID, EXIT, (1, 0), (-1, 1), (0, -1), (1, 1)):
        assert state_from_name(state_name(s)) == s
    with pytest.raises(ValueError):
        state_from_name("e3")


def test_neg_is_an_involution():
    for s in (ID, EXIT, (1, 0), (-1, 1)):
        assert neg(neg(s)) == s


def test_infinite_is_a_singleton_tag():
    assert is_infinite(INFINITE)
    assert not is_infinite(7)
    assert INFINITE == INFINITE
    assert INFINITE != 3


def test_identity_diagonal_is_enforced():
    with pytest.raises(AssertionError):
        SigmaAutomaton(2, frozenset({ID, EXIT}), {(ID, 1, 1): ID, (ID, 1, 2): ID})


def test_topology_automaton_of_square_fixture():
    M = build_topology_automaton(SQUARE_TOP_5)
    assert M.alphabet_size == 5
    assert (1, 0) in M.states and (-1, 0) in M.states
    assert (1, 1) not in M.states
    # adjacent bottom-row cylinders enter e1 and the shared-column loop holds
    assert M.step(ID, 1, 2) == (1, 0)
    assert M.step(ID, 2, 1) == (-1, 0)


def test_unreachable_states_are_pruned():
    M = build_topology_automaton(SQUARE_VSEP_5)
    for s in M.states:
        if s in (ID, EXIT):
            continue
        assert any(t == s for t in M.delta.values())


def test_surviving_time_values():
    M = build_topology_automaton(SQUARE_TOP_5)
    # identical words never exit
    w = parse_word("1.3(2)")
    assert is_infinite(surviving_time(M, w, w))
    # words with no common structure exit immediately
    t = surviving_time(M, PeriodicWord.constant(1), PeriodicWord.constant(5))
    assert t == 0


def test_surviving_time_matches_brute_force():
    M = build_topology_automaton(SQUARE_TOP_5)
    rng = random.Random(11)
    for _ in range(200):
        x = random_word(rng, 5)
        y = random_word(rng, 5)
        t = surviving_time(M, x, y)
        # brute force: run far beyond the repetition bound
        state = ID
        brute = None
        for k in range(1, 200):
            state = M.step(state, x.letter(k), y.letter(k))
            if state == EXIT:
                brute = k - 1
                break
        if brute is None:
            assert is_infinite(t)
        else:
            assert t == brute


def test_mirror_symmetry_of_carpet_automata():
    for spec in (SQUARE_TOP_5, SQUARE_VSEP_5, TOP_ISOLATED_11, VSEP_11):
        assert mirror_check(build_topology_automaton(spec))


def test_surviving_time_is_symmetric():
    M = build_topology_automaton(TOP_ISOLATED_11)
    rng = random.Random(5)
    for _ in range(100):
        x = random_word(rng, 11)
        y = random_word(rng, 11)
        assert surviving_time(M, x, y) == surviving_time(M, y, x)


def test_feasibility_holds_on_carpet_automata():
    rng = random.Random(3)
    for spec in (SQUARE_TOP_5, SQUARE_VSEP_5):
        M = build_topology_automaton(spec)
        triples = [
            (random_word(rng, 5), random_word(rng, 5), random_word(rng, 5))
            for _ in range(150)
        ]
        assert check_feasibility(M, 1, triples) == []


def test_json_round_trip():
    M = build_topology_automaton(SQUARE_TOP_5)
    again = from_json(to_json(M))
    assert again.alphabet_size == M.alphabet_size
    assert again.states == M.states
    assert again.delta == M.delta


def test_dot_output_is_deterministic():
    M = build_topology_automaton(SQUARE_TOP_5)
    a, b = to_dot(M), to_dot(M)
    assert a == b
    assert a.startswith("digraph")
    assert "Exit" not in a
    assert "Exit" in to_dot(M, include_exit=True)
