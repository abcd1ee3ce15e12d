import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from anyonwalk.fusion import MARKOV, PLAT
from anyonwalk.pathsum import braid_word_for_path, path_sum_distribution, path_sum_probability, z_count
from anyonwalk.walk import WalkConfig, evolve


@pytest.mark.parametrize("a,z", [((1, 1, 0, 1), 1), ((0, 0, 0), 0), ((1,) * 6, 5), ((1,), 0)])
def test_z_count(a, z):
    assert z_count(a) == z


def test_braid_word_for_path():
    # right from strand 3 crosses b_3, then left from 4 crosses b_3 again
    assert braid_word_for_path((1, 0, 0), 3) == [3, 3, 2]
    with pytest.raises(IndexError):
        braid_word_for_path((0, 0), 2)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=12))
def test_word_length_and_endpoint(a):
    s0 = len(a) + 1
    w = braid_word_for_path(a, s0)
    assert len(w) == len(a)
    assert all(1 <= g <= 2 * len(a) for g in w)


def test_hadamard_two_steps():
    assert path_sum_distribution(2, "hadamard") == pytest.approx({-2: 0.25, 0: 0.5, 2: 0.25})


@pytest.mark.parametrize("model", ["ising", "su2k:3", "abelian:pi/3"])
@pytest.mark.parametrize("closure", [PLAT, MARKOV])
def test_path_sum_matches_engine(model, closure):
    t = 4
    eng = evolve(WalkConfig(model, t_max=t, closure=closure)).at(t).as_dict()
    ps = path_sum_distribution(t, model, closure)
    for s, p in eng.items():
        assert abs(ps.get(s, 0.0) - p) < 1e-12


@pytest.mark.parametrize("model", ["ising", "su2k:4"])
def test_bracket_trace_matches_fusion_trace(model):
    for closure in (PLAT, MARKOV):
        a = path_sum_distribution(3, model, closure, trace="fusion")
        b = path_sum_distribution(3, model, closure, trace="bracket")
        assert max(abs(a[s] - b[s]) for s in a) < 1e-12


def test_path_sum_probability_off_lattice_is_zero():
    assert path_sum_probability(1, 2, "ising") == 0.0
    assert path_sum_probability(5, 2, "ising") == 0.0
    assert path_sum_probability(2, 2, "hadamard") == pytest.approx(0.25)


def test_cap_and_bad_trace():
    with pytest.raises(ValueError):
        path_sum_distribution(9, "ising")
    with pytest.raises(ValueError):
        path_sum_distribution(2, "ising", trace="magic")
