import cmath
import math

import numpy as np
import pytest

from anyonwalk.models import AnyonModel, ising_matrices, quantum_integer, quantum_scalars, su2_2_matrices, su2_k_data


@pytest.mark.parametrize("k", [1, 2, 3, 4, 7, 50])
def test_scalars_consistent(k):
    s = quantum_scalars(k)
    assert s.d == pytest.approx(2 * math.cos(math.pi / (k + 2)))
    assert abs(-(s.A**2) - s.A**-2 - s.d) < 1e-12
    assert abs(s.q - cmath.exp(2j * math.pi / (k + 2))) < 1e-12


def test_quantum_integers():
    assert quantum_integer(1, 3) == pytest.approx(1.0)
    assert quantum_integer(2, 2) == pytest.approx(math.sqrt(2))
    # [k+1] = 1 and [k+2] = 0 at level k
    for k in (2, 3, 5):
        assert quantum_integer(k + 1, k) == pytest.approx(1.0)
        assert abs(quantum_integer(k + 2, k)) < 1e-12


def test_ising_matrices_unitary():
    m = ising_matrices()
    for M in (m.R, m.B, m.F, m.P):
        assert np.allclose(M.conj().T @ M, np.eye(len(M)))
    assert np.allclose(m.F @ m.F, np.eye(2))
    # B = F R F
    assert np.allclose(m.B, m.F @ m.R @ m.F)


def test_su2_2_is_conjugate_of_ising_up_to_phase():
    a, b = ising_matrices(), su2_2_matrices()
    assert np.allclose(a.R, 1j * b.R.conj())
    assert np.allclose(a.B, 1j * b.B.conj())


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_su2k_local_data(k):
    mats, sc = su2_k_data(k)
    assert np.allclose(mats.F @ mats.F, np.eye(len(mats.F)))
    assert np.allclose(mats.R.conj().T @ mats.R, np.eye(len(mats.R)))


@pytest.mark.parametrize(
    "text,kind,level",
    [("ising", "ising", 2), ("SU2K:3", "su2k", 3), ("hadamard", "abelian", None), ("abelian:pi/3", "abelian", None)],
)
def test_parse(text, kind, level):
    m = AnyonModel.parse(text)
    assert m.kind == kind
    if level is not None:
        assert m.level == level
    assert AnyonModel.parse(str(m)) == m


def test_parse_angle_value():
    assert AnyonModel.parse("abelian:2pi/3").phase == pytest.approx(2 * math.pi / 3)


@pytest.mark.parametrize("bad", ["foo", "su2k", "su2k:0", "su2k:x", "abelian:"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        AnyonModel.parse(bad)


def test_abelian_flags():
    assert AnyonModel.abelian(0.3).is_abelian
    assert AnyonModel.su2k(1).is_abelian
    assert not AnyonModel.ising().is_abelian
    with pytest.raises(AttributeError):
        AnyonModel.ising().exchange_phase
