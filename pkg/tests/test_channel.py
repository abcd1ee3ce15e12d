import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from anyonwalk.channel import (
    W2Channel,
    aligned_binomial,
    apply_channel,
    binomial_reference,
    build_w2_kraus,
    circulant_distribution,
    w2_kernel,
)
from anyonwalk.fusion import MARKOV
from anyonwalk.walk import WalkConfig, evolve

MODELS = ["ising", "su2k:3", "su2k:4", "abelian:pi/3"]


def _random_density(n, seed):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = X @ X.conj().T
    return rho / np.trace(rho)


@pytest.mark.parametrize("model", MODELS)
def test_kraus_completeness(model):
    for compress in (False, True):
        assert build_w2_kraus(model, 5, compress=compress).completeness_error() < 1e-10


def test_compression_keeps_the_channel():
    full, small = build_w2_kraus("su2k:3", 5), build_w2_kraus("su2k:3", 5, compress=True)
    assert len(small.ops) <= len(full.ops)
    rho = _random_density(5, 0)
    assert np.abs(apply_channel(rho, full) - apply_channel(rho, small)).max() < 1e-12


@settings(max_examples=15, deadline=None)
@given(model=st.sampled_from(MODELS), seed=st.integers(0, 10**6))
def test_cptp_and_structured_form_agree(model, seed):
    rho = _random_density(5, seed)
    out = apply_channel(rho, build_w2_kraus(model, 5))
    assert abs(np.trace(out) - 1) < 1e-10
    assert np.abs(out - out.conj().T).max() < 1e-12
    assert np.linalg.eigvalsh(out).min() > -1e-12
    assert np.abs(W2Channel(model).apply(rho) - out).max() < 1e-12


@pytest.mark.parametrize("model", ["ising", "su2k:3", "su2k:4"])
def test_one_application_is_two_markov_walk_steps(model):
    rho = list(W2Channel(model).iterate(1))[-1]
    walk = evolve(WalkConfig(model, t_max=2, closure=MARKOV)).at(2).as_dict()
    p = np.real(np.diag(rho))
    for x, val in zip(range(-2, 3), p):
        assert abs(val - walk[x]) < 1e-12


def test_kernel_far_weights_factorize():
    k = w2_kernel("su2k:3")
    for i in range(3):
        for j in range(3):
            assert abs(k.weight(i, j, 7) - k.weight(i, j, 40)) == 0


def test_ising_variance_is_exactly_linear():
    v = W2Channel("ising").variance_series(30)
    assert np.allclose(v, 2 * np.arange(31), atol=1e-9)


def test_circulant_matches_structured_channel():
    n = 12
    s, p = circulant_distribution("su2k:3", n)
    rho = list(W2Channel("su2k:3").iterate(n))[-1]
    pe = np.real(np.diag(rho))
    xe = np.arange(len(pe)) - (len(pe) - 1) // 2
    full = np.zeros_like(p)
    full[np.searchsorted(s, xe)] = pe
    assert np.abs(p - full).sum() < 1e-9


def test_binomial_reference():
    assert binomial_reference(0, 2) == pytest.approx(0.5)
    assert binomial_reference(4, 2) == pytest.approx(0.25)
    assert binomial_reference(2, 2) == 0.0
    assert aligned_binomial(2, np.array([-2, -1, 0, 1, 2])).sum() == pytest.approx(1.0)


def test_kraus_window_validation():
    with pytest.raises(ValueError):
        build_w2_kraus("ising", 4)
    with pytest.raises(ValueError):
        apply_channel(np.eye(3), build_w2_kraus("ising", 5))
