from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from ajl3.braid import ALPHABET, BraidWord, IDENTITY, all_words, word
from ajl3.errors import WordTooLong
from ajl3.kauffman import (
    E1_DIAGRAM,
    E2_DIAGRAM,
    IDENTITY_DIAGRAM,
    MAX_WORD_LEN,
    Smoothing,
    TLDiagram,
    bracket_scaled,
    closure_loop_count,
    evaluate_tally,
    reachable_matchings,
    smoothing_state,
    state_tally,
)
from ajl3.pathmodel import make_params, markov_trace

words = st.lists(st.sampled_from(ALPHABET), max_size=9).map(lambda xs: BraidWord(tuple(xs)))


def test_diagram_relations():
    e1, e2 = E1_DIAGRAM, E2_DIAGRAM
    assert e1 @ e1 == TLDiagram(e1.matching, 1)
    assert e2 @ e2 == TLDiagram(e2.matching, 1)
    assert e1 @ e2 @ e1 == e1
    assert e2 @ e1 @ e2 == e2
    assert IDENTITY_DIAGRAM @ e1 == e1 == e1 @ IDENTITY_DIAGRAM


def test_closure_loop_counts():
    assert closure_loop_count(IDENTITY_DIAGRAM) == 3
    assert closure_loop_count(E1_DIAGRAM) == 2
    assert closure_loop_count(E2_DIAGRAM) == 2
    assert closure_loop_count(E1_DIAGRAM @ E2_DIAGRAM) == 1
    assert closure_loop_count(E1_DIAGRAM @ E1_DIAGRAM) == 3


def test_five_planar_diagrams():
    # Catalan(3) = 5
    assert len(reachable_matchings()) == 5


def test_invalid_matching():
    with pytest.raises(ValueError):
        TLDiagram((0, 1, 2, 3, 4, 5))
    with pytest.raises(ValueError):
        TLDiagram((1, 0, 3, 2))


def test_smoothing_state_order():
    w = word(1, 2, 1)
    assert smoothing_state(w, 0) == (Smoothing.IDENTITY,) * 3
    assert smoothing_state(w, 4) == (Smoothing.CAPCUP, Smoothing.IDENTITY, Smoothing.IDENTITY)


def test_tally_single_crossing():
    # cap-cup weighs A with two closure loops; identity weighs A^-1 with three
    assert state_tally(word(1)) == Counter({(1, 2): 1, (-1, 3): 1})
    assert state_tally(word(-1)) == Counter({(-1, 2): 1, (1, 3): 1})
    assert state_tally(IDENTITY) == Counter({(0, 3): 1})


@pytest.mark.parametrize("k", range(5, 9))
def test_bracket_single_crossing_closed_form(k):
    p = make_params(k)
    A, d = p.A, p.d
    expected = A * d + d**2 / A
    assert abs(bracket_scaled(word(1), p) - expected) < 1e-12
    assert abs(expected - (-d * A**-3)) < 1e-12


def test_tally_partitions_add_up():
    w = word(1, -2, 2, 1, -1, 2, 2)
    n = 2 ** len(w)
    parts = state_tally(w, 0, 37) + state_tally(w, 37, 100) + state_tally(w, 100, n)
    assert parts == state_tally(w)
    assert sum(parts.values()) == n


def test_bracket_matches_path_model_exhaustive_short():
    for k in (5, 9):
        p = make_params(k)
        for w in all_words(4):
            assert abs(bracket_scaled(w, p) - p.d**2 * markov_trace(w, p)) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(words, st.integers(5, 12))
def test_bracket_matches_path_model_random(w, k):
    p = make_params(k)
    assert abs(bracket_scaled(w, p) - p.d**2 * markov_trace(w, p)) <= 1e-9


def test_evaluate_tally_uses_loops_minus_one():
    p = make_params(6)
    assert evaluate_tally(Counter({(0, 1): 1}), p) == pytest.approx(1)
    assert evaluate_tally(Counter({(2, 3): 2}), p) == pytest.approx(2 * p.A**2 * p.d**2)


def test_word_length_cap():
    with pytest.raises(WordTooLong):
        state_tally(word(*([1] * (MAX_WORD_LEN + 1))))
