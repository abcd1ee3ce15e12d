import numpy as np
import pytest

from anyonwalk.entanglement import (
    ASYMPTOTE,
    double_braid,
    entropy_sweep,
    initial_two_tree_state,
    linear_entropy,
    vacuum_weight,
)


@pytest.mark.parametrize("k", [1, 2, 3, 7, 40])
def test_initial_state_is_normalized_product(k):
    s = initial_two_tree_state(k)
    assert abs(s.norm - 1) < 1e-12
    assert s.leakage == 0
    assert np.linalg.matrix_rank(s.qubits, tol=1e-12) == 1


@pytest.mark.parametrize("k", [1, 2, 3, 5, 50])
def test_double_braid_preserves_norm(k):
    for conv in ("spin-half-f", "exact"):
        assert abs(double_braid(initial_two_tree_state(k), conv).norm - 1) < 1e-12


def test_no_leakage_at_low_level():
    for k in (1, 2):
        out = double_braid(initial_two_tree_state(k))
        assert out.leakage == 0
        assert vacuum_weight(k) == 1.0


def test_entropy_is_symmetric_between_trees():
    out = double_braid(initial_two_tree_state(4))
    assert linear_entropy(out, "i").Q == pytest.approx(linear_entropy(out, "j").Q)


def test_entropy_bounds_and_abelian_limit():
    reps = entropy_sweep([1, 2, 3, 4, 6, 10, 30])
    assert reps[0].Q <= 1e-12
    assert all(0 <= r.Q <= 2 for r in reps)
    assert all(r.leakage_weight >= 0 for r in reps)


def test_large_k_trend():
    reps = entropy_sweep([50, 100, 200, 400])
    errs = [r.asymptote_rel_error for r in reps]
    assert errs == sorted(errs, reverse=True)
    assert reps[-1].k2Q == pytest.approx(ASYMPTOTE, rel=0.02)


def test_conventions_differ_only_above_k2():
    a = entropy_sweep([2, 3], "spin-half-f")
    b = entropy_sweep([2, 3], "exact")
    assert a[0].Q == pytest.approx(b[0].Q)
    assert a[1].Q != pytest.approx(b[1].Q)


def test_bad_arguments():
    with pytest.raises(ValueError):
        vacuum_weight(3, "nonsense")
    with pytest.raises(ValueError):
        linear_entropy(initial_two_tree_state(3), "k")
