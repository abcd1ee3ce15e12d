import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from anyonwalk import AnyonModel
from anyonwalk.fusion import MARKOV, PLAT, inverse_word
from anyonwalk.links import MAX_CROSSINGS, bracket_trace, evaluate_link, fusion_trace, kauffman_bracket, verify_trace_identity

A = cmath.exp(0.37j)
t = A**-4


def test_unknot_and_unlinks():
    assert kauffman_bracket([], 1, A) == pytest.approx(1)
    d = -(A**2) - A**-2
    assert kauffman_bracket([], 3, A) == pytest.approx(d**2)


def test_hopf_link():
    assert kauffman_bracket([1, 1], 2, A) == pytest.approx(-(A**4) - A**-4)


def test_trefoils_are_mirror_images():
    right = evaluate_link([1, 1, 1], 2, A).jones
    left = evaluate_link([-1, -1, -1], 2, A).jones
    assert right == pytest.approx(t + t**3 - t**4)
    assert left == pytest.approx(t**-1 + t**-3 - t**-4)


def test_figure_eight_is_amphichiral():
    v = evaluate_link([1, -2, 1, -2], 3, A).jones
    assert v == pytest.approx(t**2 - t + 1 - t**-1 + t**-2)


def test_crossing_cap():
    with pytest.raises(ValueError):
        kauffman_bracket([1] * (MAX_CROSSINGS + 1), 2, A)


words = st.lists(st.integers(1, 3).flatmap(lambda g: st.sampled_from([g, -g])), max_size=6)
short = st.lists(st.integers(1, 3).flatmap(lambda g: st.sampled_from([g, -g])), max_size=3)


@settings(max_examples=60, deadline=None)
@given(word=words, g=st.integers(1, 3), closure=st.sampled_from([MARKOV, PLAT]))
def test_reidemeister_two(word, g, closure):
    a = kauffman_bracket(word, 4, A, closure)
    b = kauffman_bracket(word[:2] + [g, -g] + word[2:], 4, A, closure)
    assert abs(a - b) < 1e-9 * max(1, abs(a))


@settings(max_examples=60, deadline=None)
@given(word=words, conj=short)
def test_markov_conjugation_invariance(word, conj):
    a = kauffman_bracket(word, 4, A)
    b = kauffman_bracket(conj + word + inverse_word(conj), 4, A)
    assert abs(a - b) < 1e-9 * max(1, abs(a))


@settings(max_examples=40, deadline=None)
@given(word=words, sign=st.sampled_from([1, -1]))
def test_markov_stabilization(word, sign):
    # adding a kink changes the bracket by (-A^{+-3})
    a = kauffman_bracket(word, 4, A)
    b = kauffman_bracket(word + [4 * sign], 5, A)
    assert abs(b - (-(A ** (3 * sign))) * a) < 1e-9 * max(1, abs(a))


@settings(max_examples=40, deadline=None)
@given(
    model=st.sampled_from(["ising", "su2k:2", "su2k:3", "su2k:4"]),
    closure=st.sampled_from([MARKOV, PLAT]),
    word=st.lists(st.integers(1, 5).flatmap(lambda g: st.sampled_from([g, -g])), max_size=8),
)
def test_fusion_trace_equals_bracket(model, closure, word):
    m = AnyonModel.parse(model)
    assert abs(fusion_trace(word, m, 6, closure) - bracket_trace(word, m, 6, closure)) < 1e-9


def test_verify_trace_identity_report():
    rep = verify_trace_identity([1, -2, 3], AnyonModel.su2k(3))
    assert rep["pass"] and rep["strands"] == 4
    with pytest.raises(ValueError):
        verify_trace_identity([9], AnyonModel.ising())
