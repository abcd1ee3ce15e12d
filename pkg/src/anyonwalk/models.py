"""Anyon species and their local braiding data.

Three kinds of statistics are supported:

* ``ising``      -- sigma anyons of the Ising model, braided with the explicit
                    R, B, P matrices acting on a register of fusion qubits.
* ``su2k:<k>``   -- spin-1/2 anyons of SU(2)_k for any level k >= 1, braided in
                    the sequential fusion-path basis.
* ``abelian:<phi>`` -- Abelian anyons; every counterclockwise exchange
                    multiplies the state by exp(i*phi/2).

Phase conventions
-----------------
The bracket variable is ``A = i*exp(-i*pi/(2(k+2)))``.  With this branch of
``q**(-1/4)`` the loop value ``-A**2 - A**-2`` equals the (positive) quantum
dimension ``d = 2cos(pi/(k+2))`` and the Kauffman generator
``A*1 + A**-1*E`` reproduces the Ising matrices exactly at k = 2.  The SU(2)_k
generators are ``i*conj(A*1 + A**-1*E)``, which is the Ising -> SU(2)_2
substitution ``M -> i*conj(M)`` extended to every level.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "AnyonModel",
    "LocalBraidMatrices",
    "ModelScalars",
    "ising_matrices",
    "su2_2_matrices",
    "su2_k_data",
    "quantum_scalars",
    "quantum_integer",
]

ISING = "ising"
SU2K = "su2k"
ABELIAN = "abelian"


@dataclass(frozen=True)
class ModelScalars:
    """Quantum dimension ``d``, deformation parameter ``q`` and bracket variable ``A``."""

    k: int
    d: float
    q: complex
    A: complex


@dataclass(frozen=True)
class LocalBraidMatrices:
    """Local exchange/recoupling data for a pair or triple of spin-1/2 anyons.

    ``R`` is diagonal over the fusion channel of the exchanged pair
    (vacuum, spin 1).  ``P`` is only defined when the fusion space is a
    qubit register (k = 2); it is ``None`` otherwise.
    """

    R: np.ndarray
    B: np.ndarray
    F: np.ndarray
    P: np.ndarray | None = None


def quantum_integer(n: int | np.ndarray, k: int):
    """``[n]_q = sin(n*pi/(k+2)) / sin(pi/(k+2))``."""
    theta = math.pi / (k + 2)
    return np.sin(np.asarray(n) * theta) / math.sin(theta)


def quantum_scalars(k: int) -> ModelScalars:
    if k < 1:
        raise ValueError(f"SU(2)_k level must be >= 1, got {k}")
    theta = math.pi / (k + 2)
    d = 2.0 * math.cos(theta)
    q = cmath.exp(2j * theta)
    A = 1j * cmath.exp(-0.5j * theta)
    return ModelScalars(k=k, d=d, q=q, A=A)


def _recoupling(d: float) -> np.ndarray:
    # F^{1/2,1/2,1/2}_{1/2}; at k=1 the spin-1 channel is absent and only the
    # (0,0) entry is physical.
    s = math.sqrt(max(d * d - 1.0, 0.0)) / d
    return np.array([[1.0 / d, s], [s, -1.0 / d]])


def ising_matrices() -> LocalBraidMatrices:
    w = cmath.exp(-1j * math.pi / 8)
    R = w * np.diag([1.0, 1j])
    e = cmath.exp(1j * math.pi / 4)
    B = (w / math.sqrt(2)) * np.array([[e, e.conjugate()], [e.conjugate(), e]])
    P = w * np.diag([1.0, 1j, 1j, 1.0])
    F = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2)
    return LocalBraidMatrices(R=R, B=B, F=F, P=P)


def su2_2_matrices() -> LocalBraidMatrices:
    m = ising_matrices()
    return LocalBraidMatrices(
        R=1j * m.R.conj(), B=1j * m.B.conj(), F=m.F.copy(), P=1j * m.P.conj()
    )


def su2_k_data(k: int) -> tuple[LocalBraidMatrices, ModelScalars]:
    """Recoupling and exchange data of spin-1/2 SU(2)_k anyons.

    ``R`` holds the exchange eigenvalues on the (vacuum, spin-1) channels of
    a spin-1/2 pair and ``B = F R F`` the exchange of the second and third
    anyon of a triple with total spin 1/2.  For k = 2 the result coincides
    with :func:`su2_2_matrices`.
    """
    sc = quantum_scalars(k)
    A = sc.A
    kauffman = np.diag([-(A ** -3), A])
    R = 1j * kauffman.conj()
    F = _recoupling(sc.d)
    B = F @ R @ F
    P = np.diag([R[0, 0], R[1, 1], R[1, 1], R[0, 0]]) if k == 2 else None
    return LocalBraidMatrices(R=R, B=B, F=F, P=P), sc


@dataclass(frozen=True)
class AnyonModel:
    """Which statistics govern the braiding.

    Construct directly or from a config string with :meth:`parse`.
    """

    kind: str
    level: int | None = None
    phase: float | None = None

    def __post_init__(self):
        if self.kind == ISING:
            object.__setattr__(self, "level", 2)
        elif self.kind == SU2K:
            if self.level is None or int(self.level) != self.level or self.level < 1:
                raise ValueError(f"su2k model needs an integer level >= 1, got {self.level!r}")
            object.__setattr__(self, "level", int(self.level))
        elif self.kind == ABELIAN:
            if self.phase is None:
                raise ValueError("abelian model needs a phase")
            object.__setattr__(self, "phase", float(self.phase))
        else:
            raise ValueError(f"unknown anyon model kind {self.kind!r}")

    @classmethod
    def ising(cls) -> "AnyonModel":
        return cls(ISING)

    @classmethod
    def su2k(cls, k: int) -> "AnyonModel":
        return cls(SU2K, level=k)

    @classmethod
    def abelian(cls, phi: float) -> "AnyonModel":
        return cls(ABELIAN, phase=phi)

    @classmethod
    def trivial(cls) -> "AnyonModel":
        """Braiding that does nothing: the plain Hadamard walk."""
        return cls(ABELIAN, phase=0.0)

    @classmethod
    def parse(cls, text: str) -> "AnyonModel":
        """Parse ``"ising"``, ``"su2k:<k>"``, ``"abelian:<phi>"`` or ``"hadamard"``."""
        s = text.strip().lower()
        if s == ISING:
            return cls.ising()
        if s in ("hadamard", "trivial"):
            return cls.trivial()
        name, sep, arg = s.partition(":")
        if not sep or not arg:
            raise ValueError(f"cannot parse anyon model {text!r}")
        if name == SU2K:
            return cls.su2k(int(arg))
        if name == ABELIAN:
            return cls.abelian(_parse_angle(arg))
        raise ValueError(f"cannot parse anyon model {text!r}")

    def __str__(self) -> str:
        if self.kind == ISING:
            return "ising"
        if self.kind == SU2K:
            return f"su2k:{self.level}"
        return f"abelian:{self.phase!r}"

    @property
    def is_abelian(self) -> bool:
        return self.kind == ABELIAN or (self.kind == SU2K and self.level == 1)

    @property
    def scalars(self) -> ModelScalars:
        if self.kind == ABELIAN:
            return quantum_scalars(1)
        return quantum_scalars(self.level)

    @property
    def exchange_phase(self) -> complex:
        """Scalar picked up per counterclockwise braid (Abelian models only)."""
        if self.kind != ABELIAN:
            raise AttributeError("exchange_phase is defined for abelian models only")
        return cmath.exp(0.5j * self.phase)

    @cached_property
    def local_matrices(self) -> LocalBraidMatrices:
        if self.kind == ISING:
            return ising_matrices()
        if self.kind == SU2K:
            return su2_k_data(self.level)[0]
        raise AttributeError("abelian models carry no braid matrices")

    @property
    def framing(self) -> tuple[complex, complex]:
        """``(lam, a)`` with every generator equal to ``lam*(a*1 + a**-1*E)``.

        ``E`` is the Temperley-Lieb generator with loop value ``d``.  Used to
        relate fusion-space traces to Kauffman brackets.
        """
        if self.kind == ISING:
            return 1.0 + 0j, self.scalars.A
        if self.kind == SU2K:
            return 1j, 1.0 / self.scalars.A
        raise AttributeError("abelian models have no Temperley-Lieb form")


def _parse_angle(arg: str) -> float:
    # accepts plain floats and simple multiples like "pi/3", "2pi/3", "0.5*pi"
    s = arg.replace(" ", "").replace("*", "")
    if "pi" not in s:
        return float(s)
    num, _, den = s.partition("/")
    coef = num.replace("pi", "")
    c = float(coef) if coef not in ("", "+", "-") else float(coef + "1")
    return c * math.pi / (float(den) if den else 1.0)
