"""Observables computed from position distributions and trajectories.

Distances follow the un-halved L1 convention, ``||D1 - D2|| = sum |D1 - D2|``,
so two disjoint point masses are at distance 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .walk import ABSORBING, INFINITE, PERIODIC, REFLECTIVE, Trajectory, WalkConfig, evolve

__all__ = [
    "ScalingFit",
    "MixingReport",
    "variance",
    "classify_scaling",
    "time_average",
    "total_variation",
    "mixing_time",
    "distance_to_final",
    "mixing_report",
    "exit_probability",
    "classical_rw_reference",
    "hadamard_reference",
    "BALLISTIC",
    "DIFFUSIVE",
    "LOCALIZED",
    "INDETERMINATE",
]

BALLISTIC = "ballistic"
DIFFUSIVE = "diffusive"
LOCALIZED = "localized"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ScalingFit:
    K2: float
    K1: float
    K0: float
    exponent: float
    classification: str


@dataclass(frozen=True)
class MixingReport:
    epsilon: float
    mixing_time: int | None
    reference: np.ndarray
    distances: np.ndarray


def variance(p: np.ndarray, sites: np.ndarray, s0: float, tol: float = 1e-9) -> float:
    """``sum p s^2 - 2 s0 sum p s + s0^2`` for a normalized distribution."""
    p = np.asarray(p, dtype=float)
    s = np.asarray(sites, dtype=float)
    if abs(p.sum() - 1.0) > tol:
        raise ValueError(f"distribution sums to {p.sum()}, not 1")
    return float(p @ s**2 - 2 * s0 * (p @ s) + s0**2)


def classify_scaling(t: Sequence[float], sigma2: Sequence[float]) -> ScalingFit:
    """Log-log exponent and quadratic coefficients of a variance series.

    Thresholds: exponent >= 1.7 is ballistic, 0.7..1.3 diffusive, and
    <= 0.2 with bounded values localized; anything else is indeterminate.
    """
    t = np.asarray(t, dtype=float)
    v = np.asarray(sigma2, dtype=float)
    if len(t) < 5 or len(t) != len(v):
        raise ValueError("need at least 5 (t, sigma^2) points")
    if np.any(t <= 0) or np.any(v <= 0) or np.ptp(t) == 0:
        raise ValueError("degenerate series: times and variances must be positive")
    exponent = float(np.polyfit(np.log(t), np.log(v), 1)[0])
    K2, K1, K0 = (float(c) for c in np.polyfit(t, v, 2))
    if exponent >= 1.7:
        label = BALLISTIC
    elif 0.7 <= exponent <= 1.3:
        label = DIFFUSIVE
    elif exponent <= 0.2 and v.max() <= 2 * max(v.min(), 1e-300) + 10:
        label = LOCALIZED
    else:
        label = INDETERMINATE
    return ScalingFit(K2, K1, K0, exponent, label)


def time_average(P: np.ndarray, t: int | None = None) -> np.ndarray:
    """Cesaro mean ``(1/(t+1)) sum_{tau <= t} p(., tau)``; with ``t=None`` every prefix."""
    P = np.asarray(P, dtype=float)
    csum = np.cumsum(P, axis=0) / np.arange(1, len(P) + 1)[:, None]
    return csum if t is None else csum[t]


def total_variation(D1: np.ndarray, D2: np.ndarray) -> float | np.ndarray:
    """Un-halved L1 distance; broadcasts over leading axes."""
    D1, D2 = np.asarray(D1, dtype=float), np.asarray(D2, dtype=float)
    if D1.shape[-1] != D2.shape[-1]:
        raise ValueError("distributions live on different site sets")
    out = np.abs(D1 - D2).sum(axis=-1)
    return float(out) if np.ndim(out) == 0 else out


def mixing_time(P: np.ndarray, pi: np.ndarray, epsilon: float) -> int | None:
    """Smallest ``T`` with ``||P[t] - pi|| <= epsilon`` for every recorded ``t >= T``.

    Returns ``None`` when the last recorded distribution is still too far.
    """
    d = total_variation(np.asarray(P), np.asarray(pi)[None, :])
    bad = np.flatnonzero(d > epsilon)
    if len(bad) == 0:
        return 0
    T = int(bad[-1]) + 1
    return T if T < len(d) else None


def distance_to_final(P: np.ndarray, T: int | None = None, averaged: bool = True) -> np.ndarray:
    """``D(t, T) = ||pbar(t) - pbar(T)||`` for ``t = 0..T``.

    With ``averaged=False`` the instantaneous distributions are compared
    instead, which is how the classical reference curve is usually drawn.
    """
    P = np.asarray(P, dtype=float)
    T = len(P) - 1 if T is None else T
    X = time_average(P[: T + 1]) if averaged else P[: T + 1]
    return total_variation(X, X[T][None, :])


def mixing_report(P: np.ndarray, epsilon: float, reference: np.ndarray | None = None) -> MixingReport:
    """Mixing time against ``reference``; defaults to the final time average."""
    P = np.asarray(P, dtype=float)
    ref = time_average(P, len(P) - 1) if reference is None else np.asarray(reference)
    return MixingReport(epsilon, mixing_time(P, ref, epsilon), ref, total_variation(P, ref[None, :]))


def exit_probability(traj: Trajectory) -> np.ndarray:
    """Accumulated mass absorbed at sites 0 and N+1, for ``t = 0..t_max``."""
    if traj.config.boundary != ABSORBING:
        raise ValueError("exit probability needs an absorbing-boundary trajectory")
    return traj.absorbed.sum(axis=1)


def classical_rw_reference(cfg: WalkConfig) -> Trajectory:
    """Exact distribution iteration of the symmetric random walk.

    Same geometry and boundary handling as the quantum walk: mass reaching an
    absorbing ancilla is removed, a reflecting ancilla sends it back.
    """
    S = cfg.window
    i0 = cfg.start_index()
    P = np.zeros((cfg.t_max + 1, S))
    absorbed = np.zeros((cfg.t_max + 1, 2))
    p = np.zeros(S)
    p[i0] = 1.0
    P[0] = p
    acc = np.zeros(2)
    for t in range(1, cfg.t_max + 1):
        q = np.zeros(S)
        q[:-1] += 0.5 * p[1:]
        q[1:] += 0.5 * p[:-1]
        if cfg.boundary == PERIODIC:
            q[-1] += 0.5 * p[0]
            q[0] += 0.5 * p[-1]
        elif cfg.boundary == REFLECTIVE:
            q[0] += 0.5 * p[0]
            q[-1] += 0.5 * p[-1]
        elif cfg.boundary == ABSORBING:
            acc += (q[0], q[-1])
            q[0] = q[-1] = 0.0
        elif cfg.boundary != INFINITE:
            raise ValueError(f"unknown boundary {cfg.boundary!r}")
        p = q
        P[t] = p
        absorbed[t] = acc
    return Trajectory(cfg.site_labels(), P, absorbed, cfg)


def hadamard_reference(cfg: WalkConfig) -> Trajectory:
    """The walk engine with trivial braiding, otherwise identical to ``cfg``."""
    return evolve(
        WalkConfig(
            model="hadamard",
            t_max=cfg.t_max,
            boundary=cfg.boundary,
            sites=cfg.sites,
            s0=cfg.s0,
            c0=cfg.c0,
            closure=cfg.closure,
            memory_budget=cfg.memory_budget,
        )
    )
