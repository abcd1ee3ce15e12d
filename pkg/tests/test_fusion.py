import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from anyonwalk import AnyonModel
from anyonwalk.fusion import (
    MARKOV,
    PLAT,
    anyon_count,
    fusion_dimension,
    fusion_paths,
    inverse_word,
    make_fusion_space,
    relabel_cycle_word,
    time_order,
    writhe,
)

from conftest import NONABELIAN, unitary_error

MODELS = NONABELIAN + ["abelian:pi/3"]


def test_word_helpers():
    assert inverse_word([1, -2, 3]) == [-3, 2, -1]
    assert writhe([1, -2, 3, 3]) == 2
    assert relabel_cycle_word(4) == [1, 2, 3]
    assert time_order([1, 2, 3]) == [3, 2, 1]


@pytest.mark.parametrize("closure,expected", [(PLAT, 10), (MARKOV, 20)])
def test_anyon_count(closure, expected):
    assert anyon_count(10, closure) == expected


def test_dimensions_are_fibonacci_for_k3():
    # SU(2)_3 spin-1/2 chains: Fibonacci numbers
    dims = [fusion_dimension(AnyonModel.su2k(3), n, MARKOV) for n in (2, 3, 4, 5)]
    assert dims == [2, 5, 13, 34]
    assert fusion_dimension(AnyonModel.ising(), 9, MARKOV) == 2**8


def test_path_enumeration_matches_dimension():
    for k in (2, 3, 4):
        paths = fusion_paths(8, k)
        assert len(paths) == fusion_dimension(AnyonModel.su2k(k), 4, MARKOV)
        assert np.all(np.abs(np.diff(paths, axis=1)) == 1)
        assert np.all((paths >= 0) & (paths <= k))


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("closure", [PLAT, MARKOV])
def test_generators_unitary_and_vacuum_normalized(model, closure):
    fs = make_fusion_space(AnyonModel.parse(model), 6, closure)
    assert abs(np.linalg.norm(fs.vacuum()) - 1) < 1e-12
    for g in range(1, 6):
        M = fs.generator_matrix(g)
        assert unitary_error(M) < 1e-12
        assert np.allclose(fs.generator_matrix(-g), M.conj().T, atol=1e-12)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("closure", [PLAT, MARKOV])
def test_braid_relations_up_to_ten_anyons(model, closure):
    n = 10 if closure == PLAT else 5  # 10 anyons either way
    fs = make_fusion_space(AnyonModel.parse(model), n, closure)
    rng = np.random.default_rng(1)
    v = rng.normal(size=(3, fs.dim)) + 1j * rng.normal(size=(3, fs.dim))
    for i in range(1, n - 1):
        lhs = fs.apply_word(v, [i, i + 1, i])
        rhs = fs.apply_word(v, [i + 1, i, i + 1])
        assert np.abs(lhs - rhs).max() < 1e-10
        for j in range(i + 2, n):
            assert np.abs(fs.apply_word(v, [i, j]) - fs.apply_word(v, [j, i])).max() < 1e-10


def test_out_of_range_generator():
    fs = make_fusion_space(AnyonModel.ising(), 4)
    with pytest.raises(IndexError):
        fs.apply(fs.vacuum(), 4)
    with pytest.raises(IndexError):
        fs.apply(fs.vacuum(), 0)


words = st.lists(st.integers(1, 5).flatmap(lambda g: st.sampled_from([g, -g])), max_size=10)


@settings(max_examples=40, deadline=None)
@given(model=st.sampled_from(MODELS), closure=st.sampled_from([PLAT, MARKOV]), word=words)
def test_word_times_inverse_is_identity_and_norm_preserved(model, closure, word):
    fs = make_fusion_space(AnyonModel.parse(model), 6, closure)
    v = fs.vacuum()
    w = fs.apply_word(v, word)
    assert abs(np.linalg.norm(w) - 1) < 1e-12
    assert np.abs(fs.apply_word(w, inverse_word(word)) - v).max() < 1e-12
