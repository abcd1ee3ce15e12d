"""State-vector evolution of the anyonic walk ``W = T U``.

The state lives on ``position x fusion x coin`` and is stored coin-major as an
array ``psi[c, i, f]`` over window index ``i`` and fusion index ``f``.  ``U``
is a Hadamard on the coin; ``T`` moves coin-0 amplitude one site left and
coin-1 amplitude one site right while braiding the walker past the island it
crosses.

Geometry
--------
``infinite``
    Window of ``2*t_max + 1`` sites centred on ``s0``; exact by locality.
``periodic``
    Ring of ``N`` sites.  Crossing the seam applies a cyclic relabelling
    braid instead of a single generator.
``absorbing`` / ``reflective``
    Bulk sites ``1..N`` plus ancilla sites ``0`` and ``N+1``; moves into or
    out of an ancilla do not braid.

Memory
------
The state needs ``2 * S * D`` complex amplitudes (16 bytes each) for ``S``
window sites and fusion dimension ``D``.  For Ising on the infinite window
``S = 2t+1`` and ``D = 2**t``.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .fusion import (
    MARKOV,
    PLAT,
    FusionSpace,
    fusion_dimension,
    inverse_word,
    make_fusion_space,
    relabel_cycle_word,
    time_order,
)
from .models import AnyonModel

__all__ = [
    "BOUNDARIES",
    "MemoryBudgetError",
    "WalkConfig",
    "WalkState",
    "PositionDistribution",
    "Trajectory",
    "initial_state",
    "coin_flip",
    "conditional_braid_shift",
    "step",
    "evolve",
    "position_distribution",
    "required_bytes",
]

INFINITE = "infinite"
PERIODIC = "periodic"
ABSORBING = "absorbing"
REFLECTIVE = "reflective"
BOUNDARIES = (INFINITE, PERIODIC, ABSORBING, REFLECTIVE)

DEFAULT_BUDGET = 1 << 30
_SQRT_HALF = 1.0 / math.sqrt(2.0)


class MemoryBudgetError(MemoryError):
    def __init__(self, required: int, budget: int, formula: str):
        self.required = required
        self.budget = budget
        super().__init__(
            f"state needs {required} bytes ({formula}) but the budget is {budget} bytes"
        )


@dataclass
class WalkConfig:
    """Everything that defines one walk.

    ``sites`` is ignored for the infinite window.  ``s0`` defaults to 0 on
    the infinite line, 1 on a ring and ``N // 2`` on a finite chain.
    ``c0`` is 0, 1 or a length-2 coin vector.
    """

    model: AnyonModel | str = "ising"
    t_max: int = 16
    boundary: str = INFINITE
    sites: int | None = None
    s0: int | None = None
    c0: int | Sequence[complex] = 0
    closure: str = PLAT
    memory_budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if isinstance(self.model, str):
            self.model = AnyonModel.parse(self.model)

    @property
    def start_site(self) -> int:
        if self.s0 is not None:
            return int(self.s0)
        if self.boundary == INFINITE:
            return 0
        if self.boundary == PERIODIC:
            return 1
        return max(1, (self.sites or 2) // 2)

    def coin_vector(self) -> np.ndarray:
        if np.isscalar(self.c0):
            v = np.zeros(2, dtype=complex)
            v[int(self.c0)] = 1.0
            return v
        v = np.asarray(self.c0, dtype=complex)
        return v / np.linalg.norm(v)

    # geometry -----------------------------------------------------------
    @property
    def window(self) -> int:
        """Number of stored sites (ancillas included)."""
        if self.boundary == INFINITE:
            return 2 * self.t_max + 1
        if self.boundary == PERIODIC:
            return int(self.sites)
        return int(self.sites) + 2

    @property
    def n_strands(self) -> int:
        if self.boundary in (INFINITE, PERIODIC):
            return self.window
        return int(self.sites)

    def site_labels(self) -> np.ndarray:
        if self.boundary == INFINITE:
            return np.arange(self.window) - self.t_max + self.start_site
        if self.boundary == PERIODIC:
            return np.arange(1, self.window + 1)
        return np.arange(self.window)

    def start_index(self) -> int:
        return int(np.flatnonzero(self.site_labels() == self.start_site)[0])

    def validate(self) -> list[str]:
        """All problems with this configuration (empty when valid)."""
        errs = []
        if self.boundary not in BOUNDARIES:
            errs.append(f"boundary must be one of {BOUNDARIES}, got {self.boundary!r}")
        if self.closure not in (PLAT, MARKOV):
            errs.append(f"closure must be 'plat' or 'markov', got {self.closure!r}")
        if not isinstance(self.t_max, (int, np.integer)) or self.t_max < 0:
            errs.append(f"t_max must be a non-negative integer, got {self.t_max!r}")
        if self.boundary in (PERIODIC, ABSORBING, REFLECTIVE) and self.boundary in BOUNDARIES:
            if self.sites is None or int(self.sites) < (2 if self.boundary == PERIODIC else 1):
                errs.append(f"boundary {self.boundary!r} needs a positive site count")
            elif self.s0 is not None:
                lo, hi = 1, int(self.sites)
                if not lo <= int(self.s0) <= hi:
                    errs.append(f"s0={self.s0} outside the site range {lo}..{hi}")
        if not np.isscalar(self.c0):
            v = np.asarray(self.c0)
            if v.shape != (2,) or not np.linalg.norm(v) > 0:
                errs.append("c0 must be 0, 1 or a nonzero length-2 vector")
        elif int(self.c0) not in (0, 1):
            errs.append(f"c0 must be 0 or 1, got {self.c0!r}")
        if not errs:
            need = required_bytes(self)
            if need > self.memory_budget:
                errs.append(str(MemoryBudgetError(need, self.memory_budget, _formula(self))))
        return errs


def _formula(cfg: WalkConfig) -> str:
    S = cfg.window
    D = fusion_dimension(cfg.model, cfg.n_strands, cfg.closure)
    return f"2 coins x {S} sites x {D} fusion states x 16 bytes"


def required_bytes(cfg: WalkConfig) -> int:
    return 2 * cfg.window * fusion_dimension(cfg.model, cfg.n_strands, cfg.closure) * 16


@dataclass
class PositionDistribution:
    sites: np.ndarray
    p: np.ndarray
    t: int

    def as_dict(self) -> dict[int, float]:
        return {int(s): float(x) for s, x in zip(self.sites, self.p)}


@dataclass
class WalkState:
    """Amplitudes ``psi[c, i, f]`` plus bookkeeping for the boundaries."""

    config: WalkConfig
    space: FusionSpace
    psi: np.ndarray
    t: int = 0
    absorbed: np.ndarray = field(default_factory=lambda: np.zeros(2))
    _ops: dict = field(default_factory=dict, repr=False)

    @property
    def live_norm(self) -> float:
        return float(np.vdot(self.psi, self.psi).real)


def initial_state(cfg: WalkConfig) -> WalkState:
    errs = cfg.validate()
    if errs:
        # validate() only sizes the state once everything else is fine
        if len(errs) == 1 and errs[0].startswith("state needs"):
            raise MemoryBudgetError(required_bytes(cfg), cfg.memory_budget, _formula(cfg))
        raise ValueError("; ".join(errs))
    space = make_fusion_space(cfg.model, cfg.n_strands, cfg.closure)
    psi = np.zeros((2, cfg.window, space.dim), dtype=complex)
    i0 = cfg.start_index()
    vac = space.vacuum()
    coin = cfg.coin_vector()
    psi[0, i0] = coin[0] * vac
    psi[1, i0] = coin[1] * vac
    state = WalkState(cfg, space, psi)
    state._ops = _move_table(cfg)
    return state


def _move_table(cfg: WalkConfig) -> dict:
    """Braid word for every regular move, keyed by (coin, source index)."""
    S = cfg.window
    finite = cfg.boundary in (ABSORBING, REFLECTIVE)
    strand = (lambda i: i) if finite else (lambda i: i + 1)
    bulk = (lambda i: 1 <= i <= cfg.sites) if finite else (lambda i: True)
    ops = {}
    for i in range(1, S):
        # coin 0: i -> i-1 ; coin 1: i-1 -> i ; both cross between strands i-1, i
        word = [strand(i) - 1] if bulk(i) and bulk(i - 1) else []
        ops[0, i] = word
        ops[1, i - 1] = word
    if cfg.boundary == PERIODIC:
        n = cfg.n_strands
        # N -> 1 relabels with b_1 b_2 ... b_{N-1}; 1 -> N with its inverse
        ops["wrap_right"] = time_order(relabel_cycle_word(n))
        ops["wrap_left"] = inverse_word(ops["wrap_right"])
    return ops


def coin_flip(state: WalkState) -> WalkState:
    """Hadamard on the coin at every (site, fusion) pair, in place."""
    a, b = state.psi[0], state.psi[1]
    b *= -1.0
    b += a
    a *= 2.0
    a -= b
    state.psi *= _SQRT_HALF
    return state


def _abelian_phase(state: WalkState, word: list[int]) -> complex:
    ph = state.config.model.exchange_phase
    return ph ** len(word)


def conditional_braid_shift(state: WalkState) -> WalkState:
    """Move coin-0 amplitude left and coin-1 amplitude right, braiding as it goes."""
    cfg, space, ops = state.config, state.space, state._ops
    psi0, psi1 = state.psi[0], state.psi[1]
    S = cfg.window
    spec0 = psi0[0].copy()
    spec1 = psi1[S - 1].copy()
    if space.dim == 1:
        ph0 = np.array([_abelian_phase(state, ops[0, i]) for i in range(1, S)])
        ph1 = np.array([_abelian_phase(state, ops[1, i]) for i in range(S - 1)])
        psi0[:-1] = psi0[1:] * ph0[:, None]
        psi1[1:] = psi1[:-1] * ph1[:, None]
    else:
        for i in range(1, S):
            psi0[i - 1] = space.apply_word(psi0[i], ops[0, i])
        for i in range(S - 2, -1, -1):
            psi1[i + 1] = space.apply_word(psi1[i], ops[1, i])
    psi0[S - 1] = 0.0
    psi1[0] = 0.0
    if cfg.boundary == PERIODIC:
        psi0[S - 1] += space.apply_word(spec0, ops["wrap_left"])
        psi1[0] += space.apply_word(spec1, ops["wrap_right"])
    elif cfg.boundary == REFLECTIVE:
        psi1[0] += spec0
        psi0[S - 1] += spec1
    return state


def step(state: WalkState) -> WalkState:
    """One application of ``W = T U``; absorbing boundaries then remove ancilla mass."""
    coin_flip(state)
    conditional_braid_shift(state)
    if state.config.boundary == ABSORBING:
        for side, i in ((0, 0), (1, state.config.window - 1)):
            blk = state.psi[:, i]
            state.absorbed[side] += float(np.vdot(blk, blk).real)
            blk[...] = 0.0
    state.t += 1
    return state


def position_distribution(state: WalkState) -> PositionDistribution:
    """``p(s) = sum over fusion and coin of |psi|^2``."""
    p = np.einsum("cif,cif->i", state.psi, state.psi.conj()).real
    return PositionDistribution(state.config.site_labels(), p, state.t)


@dataclass
class Trajectory:
    """``p[t, i]`` for ``t = 0..t_max`` plus cumulative absorbed mass."""

    sites: np.ndarray
    p: np.ndarray
    absorbed: np.ndarray
    config: WalkConfig

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.p.shape[0])

    def at(self, t: int) -> PositionDistribution:
        return PositionDistribution(self.sites, self.p[t], t)

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["t", "s", "p"])
            for t, row in enumerate(self.p):
                for s, x in zip(self.sites, row):
                    w.writerow([t, int(s), repr(float(x))])

    def to_json(self, path) -> None:
        cfg = asdict(self.config)
        cfg["model"] = str(self.config.model)
        if not np.isscalar(self.config.c0):
            cfg["c0"] = [[complex(z).real, complex(z).imag] for z in self.config.c0]
        payload = {
            "config": cfg,
            "sites": [int(s) for s in self.sites],
            "p": self.p.tolist(),
            "absorbed": self.absorbed.tolist(),
        }
        with open(path, "w") as fh:
            json.dump(payload, fh)


def evolve(config: WalkConfig, state: WalkState | None = None) -> Trajectory:
    """Run ``config.t_max`` steps and record every position distribution."""
    st = initial_state(config) if state is None else state
    T = config.t_max
    P = np.zeros((T + 1, config.window))
    absorbed = np.zeros((T + 1, 2))
    P[0] = position_distribution(st).p
    for t in range(1, T + 1):
        step(st)
        P[t] = position_distribution(st).p
        absorbed[t] = st.absorbed
    return Trajectory(config.site_labels(), P, absorbed, config)
