"""Entanglement generated by a double braid between two three-anyon fusion trees.

Two trees ``i = (1,2,3)`` and ``j = (4,5,6)`` of spin-1/2 anyons each carry
total charge 1/2.  The inner pair of each tree fuses to ``e in {0, 1}``,
which makes the pair of trees a two-qubit system.  Both trees start in the
product state ``(alpha|0> + beta|1>)^{x2}`` with ``(alpha, beta)`` the first
row of the recoupling matrix ``F``.  Anyons 3 and 4 are then exchanged twice.

The double exchange is diagonal in the fusion channel ``c`` of anyons 3 and 4
and multiplies it by ``R_c**2``.  With ``e_i != e_j`` the pair is forced into
the spin-1 channel.  With ``e_i = e_j = 0`` it is forced into the vacuum.  With
``e_i = e_j = 1`` it is in vacuum with weight ``p`` and in spin 1 with weight
``1 - p``.  The part of the spin-1 component that does not return to the
two-qubit sector has each tree carrying charge 3/2 (leakage), giving

    e_i = e_j = 1 :  p R_0^2 + (1-p) R_1^2   (stays)
                     sqrt(p(1-p)) (R_0^2 - R_1^2)   (leaks)

Two conventions for ``p`` are provided:

``"spin-half-f"`` (default)
    ``p = 1/d**2``, the square of the spin-1/2 recoupling entry, used for the
    spin-1 pair as well.  Reproduces ``Q(3) = 0.938`` and the
    ``225 pi^2 / (64 k^2)`` tail.
``"exact"``
    ``p = 1/[3]_q``, the exact quantum 6j weight of the vacuum channel.  Gives
    ``Q(3) = 0.679`` and ``k^2 Q -> 4 pi^2``.

Levels ``k <= 2`` have no charge-3/2 sector, so ``p = 1`` there and nothing
leaks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .models import quantum_integer, su2_k_data

__all__ = [
    "TwoTreeState",
    "EntropyReport",
    "vacuum_weight",
    "initial_two_tree_state",
    "double_braid",
    "linear_entropy",
    "entropy_sweep",
    "ASYMPTOTE",
]

ASYMPTOTE = 225 * np.pi**2 / 64
CONVENTIONS = ("spin-half-f", "exact")


@dataclass(frozen=True)
class TwoTreeState:
    """``qubits[e_i, e_j]`` plus the amplitude of the charge-3/2 leakage state."""

    k: int
    qubits: np.ndarray
    leakage: complex = 0j

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.qubits) ** 2) + abs(self.leakage) ** 2))


@dataclass(frozen=True)
class EntropyReport:
    k: int
    Q: float
    leakage_weight: float
    k2Q: float
    asymptote_rel_error: float

    def row(self) -> list:
        return [self.k, self.Q, self.leakage_weight]


def vacuum_weight(k: int, convention: str = "spin-half-f") -> float:
    """Weight ``p`` of the vacuum channel of anyons 3 and 4 when ``e_i = e_j = 1``."""
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    if k <= 2:
        return 1.0
    if convention == "exact":
        return float(1.0 / quantum_integer(3, k))
    d = 2 * np.cos(np.pi / (k + 2))
    return float(1.0 / d**2)


def initial_two_tree_state(k: int) -> TwoTreeState:
    mats, _ = su2_k_data(k)
    a, b = mats.F[0, 0], mats.F[0, 1]
    amp = np.array([a, b], dtype=complex)
    return TwoTreeState(k, np.outer(amp, amp), 0j)


def double_braid(state: TwoTreeState, convention: str = "spin-half-f") -> TwoTreeState:
    """Exchange anyons 3 and 4 twice."""
    mats, _ = su2_k_data(state.k)
    r0, r1 = mats.R[0, 0] ** 2, mats.R[1, 1] ** 2
    p = vacuum_weight(state.k, convention)
    q = state.qubits
    out = np.array(
        [[q[0, 0] * r0, q[0, 1] * r1], [q[1, 0] * r1, q[1, 1] * (p * r0 + (1 - p) * r1)]]
    )
    leak = state.leakage + q[1, 1] * np.sqrt(p * (1 - p)) * (r0 - r1)
    return TwoTreeState(state.k, out, complex(leak))


def linear_entropy(state: TwoTreeState, trace_out: str = "j") -> EntropyReport:
    """``Q = 2(1 - Tr rho^2 / (Tr rho)^2)`` of one tree after projecting out leakage.

    ``rho`` is the reduced density matrix of tree ``i`` (``trace_out="j"``)
    or tree ``j`` (``trace_out="i"``) built from the two-qubit block only,
    so ``Tr rho`` is the weight that did not leak.
    """
    M = state.qubits
    if trace_out == "j":
        rho = M @ M.conj().T
    elif trace_out == "i":
        rho = M.T @ M.conj()
    else:
        raise ValueError("trace_out must be 'i' or 'j'")
    tr = np.trace(rho).real
    if tr <= 0:
        raise ZeroDivisionError("projected state has zero norm")
    purity = np.trace(rho @ rho).real / tr**2
    Q = max(0.0, float(2.0 * (1.0 - purity)))
    k2q = state.k**2 * Q
    return EntropyReport(
        state.k, Q, float(abs(state.leakage) ** 2), k2q, float(abs(k2q - ASYMPTOTE) / ASYMPTOTE)
    )


def entropy_sweep(k_list: Iterable[int], convention: str = "spin-half-f") -> list[EntropyReport]:
    out = []
    for k in k_list:
        if k < 1:
            raise ValueError(f"level must be >= 1, got {k}")
        out.append(linear_entropy(double_braid(initial_two_tree_state(int(k)), convention)))
    return out
