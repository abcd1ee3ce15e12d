"""Named experiments, their configuration, validation and run manifests.

Every run writes its outputs plus ``manifest.json`` into the output
directory.  Output schemas:

=============  ==================================================  =====
experiment     file                                                 columns
=============  ==================================================  =====
walk           ``trajectory.csv``                                   t, s, p
walk           ``variance.csv``                                     t, variance
mixing         ``mixing.csv``                                       t, D_RW, D_RWavg, D_QWavg, D_Isingavg
exit           ``exit.csv``                                         t, P_RW, P_QW, P_Ising
channel        ``channel.csv``                                      model, t, variance
entropy        ``entropy.csv``                                      k, Q, leakage
oracle-check   ``oracle.json``                                      report
=============  ==================================================  =====

Each experiment also writes a JSON summary next to its CSV.
"""
from __future__ import annotations

import csv
import dataclasses
import hashlib
import json
import os
import platform
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__
from .channel import W2Channel, aligned_binomial, circulant_distribution
from .entanglement import entropy_sweep
from .fusion import MARKOV, PLAT
from .links import verify_trace_identity
from .models import AnyonModel
from .observables import (
    classical_rw_reference,
    classify_scaling,
    distance_to_final,
    exit_probability,
    hadamard_reference,
    mixing_time,
    time_average,
    total_variation,
)
from .pathsum import path_sum_distribution
from .walk import BOUNDARIES, INFINITE, WalkConfig, evolve

__all__ = [
    "EXPERIMENTS",
    "ExperimentConfig",
    "Diagnostic",
    "RunManifest",
    "load_config",
    "validate",
    "run",
]

EXPERIMENTS = ("walk", "mixing", "exit", "channel", "entropy", "oracle-check")

_DEFAULTS: dict[str, dict[str, Any]] = {
    "walk": dict(model="ising", t_max=16, boundary=INFINITE),
    "mixing": dict(model="ising", sites=5, t_max=1000, boundary="periodic", closure=PLAT),
    "exit": dict(model="ising", sites=12, s0=6, t_max=300, boundary="absorbing"),
    "channel": dict(models=["su2k:2", "su2k:3", "su2k:4", "su2k:5"], t_max=200),
    "entropy": dict(k_list=[1, 2, 3, 4, 5, 10, 20, 50, 100, 200]),
    "oracle-check": dict(models=["ising", "su2k:2", "su2k:3"], t_max=5, cases=200, seed=0),
}


@dataclass
class ExperimentConfig:
    """Configuration of one run; unset fields take per-experiment defaults."""

    experiment: str = "walk"
    model: str | None = None
    models: list[str] | None = None
    sites: int | None = None
    s0: int | None = None
    t_max: int | None = None
    boundary: str | None = None
    closure: str | None = None
    epsilon: float = 0.01
    out: str = "anyonwalk-out"
    memory_budget: int = 1 << 30
    seed: int = 0
    k_list: list[int] | None = None
    cases: int | None = None
    convention: str = "spin-half-f"

    def resolved(self) -> "ExperimentConfig":
        """Copy with the experiment's defaults filled in."""
        vals = dataclasses.asdict(self)
        for key, val in _DEFAULTS.get(self.experiment, {}).items():
            if vals.get(key) is None:
                vals[key] = val
        if vals["closure"] is None:
            vals["closure"] = PLAT
        if vals["boundary"] is None:
            vals["boundary"] = INFINITE
        return ExperimentConfig(**vals)

    def walk_config(self, model: str | None = None) -> WalkConfig:
        return WalkConfig(
            model=model or self.model,
            t_max=int(self.t_max),
            boundary=self.boundary,
            sites=self.sites,
            s0=self.s0,
            closure=self.closure,
            memory_budget=int(self.memory_budget),
        )


@dataclass(frozen=True)
class Diagnostic:
    level: str  # "error" or "warning"
    message: str

    def __str__(self) -> str:
        return f"{self.level}: {self.message}"


@dataclass
class RunManifest:
    config: dict
    version: str
    wall_time: float
    outputs: dict[str, str] = field(default_factory=dict)
    assumptions: list[str] = field(default_factory=list)
    summary: dict = field(default_factory=dict)


def load_config(path: str | os.PathLike) -> dict:
    """Read a JSON or YAML config file into a plain dict."""
    text = Path(path).read_text()
    if str(path).endswith((".yaml", ".yml")):
        import yaml

        data = yaml.safe_load(text) or {}
    else:
        data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a mapping")
    return data


def validate(cfg: ExperimentConfig) -> list[Diagnostic]:
    """Every problem with ``cfg`` at once; errors block a run, warnings do not."""
    diags: list[Diagnostic] = []
    err = lambda m: diags.append(Diagnostic("error", m))
    if cfg.experiment not in EXPERIMENTS:
        err(f"unknown experiment {cfg.experiment!r}; choose from {', '.join(EXPERIMENTS)}")
        return diags
    c = cfg.resolved()
    for m in ([c.model] if c.model else []) + list(c.models or []):
        try:
            AnyonModel.parse(str(m))
        except ValueError as exc:
            err(str(exc))
    if c.t_max is not None and (int(c.t_max) != c.t_max or c.t_max < 0):
        err(f"t_max must be a non-negative integer, got {c.t_max!r}")
    if not c.epsilon > 0:
        err(f"epsilon must be positive, got {c.epsilon!r}")
    if c.boundary not in BOUNDARIES:
        err(f"boundary must be one of {BOUNDARIES}, got {c.boundary!r}")
    if c.closure not in (PLAT, MARKOV):
        err(f"closure must be 'plat' or 'markov', got {c.closure!r}")
    if c.experiment in ("walk", "mixing", "exit") and not any(d.level == "error" for d in diags):
        try:
            wc = c.walk_config()
        except ValueError as exc:
            err(str(exc))
        else:
            for msg in wc.validate():
                err(msg)
    if c.experiment == "mixing" and c.sites and int(c.sites) % 2 == 0:
        diags.append(
            Diagnostic("warning", f"N={c.sites} is even: the classical walk on an even ring oscillates")
        )
    if c.experiment == "entropy":
        bad = [k for k in c.k_list or [] if int(k) < 1]
        if bad:
            err(f"levels must be >= 1, got {bad}")
    if c.experiment == "oracle-check" and c.t_max is not None and c.t_max > 8:
        err(f"oracle-check path sums are capped at t=8, got {c.t_max}")
    return diags


# --------------------------------------------------------------------- runs


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([repr(float(x)) if isinstance(x, (float, np.floating)) else x for x in r])


def _write_json(path: Path, obj) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, default=_jsonable)
        fh.write("\n")


def _jsonable(x):
    if isinstance(x, np.generic):
        return x.item()
    if isinstance(x, np.ndarray):
        return x.tolist()
    raise TypeError(f"cannot serialize {type(x)}")


def _variance_series(traj, s0) -> np.ndarray:
    s = traj.sites.astype(float)
    return traj.p @ s**2 - 2 * s0 * (traj.p @ s) + s0**2


def _run_walk(c: ExperimentConfig, out: Path) -> dict:
    wc = c.walk_config()
    traj = evolve(wc)
    traj.to_csv(out / "trajectory.csv")
    summary: dict[str, Any] = {"model": str(wc.model), "final_norm": float(traj.p[-1].sum())}
    if wc.boundary == INFINITE:
        var = _variance_series(traj, wc.start_site)
        _write_csv(out / "variance.csv", ["t", "variance"], zip(range(len(var)), var))
        ts = np.arange(len(var))
        lo = max(1, len(var) // 2)
        if len(var) - lo >= 5:
            fit = classify_scaling(ts[lo:], var[lo:])
            summary["fit"] = dataclasses.asdict(fit) | {"window": [int(lo), int(ts[-1])]}
    _write_json(out / "walk.json", summary)
    return summary


def _run_mixing(c: ExperimentConfig, out: Path) -> dict:
    wc = c.walk_config()
    rw = classical_rw_reference(wc).p
    qw = hadamard_reference(wc).p
    an = evolve(wc).p
    cols = {
        "D_RW": distance_to_final(rw, averaged=False),
        "D_RWavg": distance_to_final(rw),
        "D_QWavg": distance_to_final(qw),
        "D_Isingavg": distance_to_final(an),
    }
    T = wc.t_max
    _write_csv(out / "mixing.csv", ["t", *cols], zip(range(T + 1), *cols.values()))
    late = slice(T // 2, T + 1)
    means = {k: float(v[late].mean()) for k, v in cols.items()}
    summary = {
        "model": str(wc.model),
        "late_window": [T // 2, T],
        "late_means": means,
        "between": {
            name: means["D_RW"] <= means[name] <= means["D_RWavg"] for name in ("D_QWavg", "D_Isingavg")
        },
        "mixing_time_vs_final_average": {
            "RW": mixing_time(rw, time_average(rw, T), c.epsilon),
            "RWavg": mixing_time(time_average(rw), time_average(rw, T), c.epsilon),
            "QWavg": mixing_time(time_average(qw), time_average(qw, T), c.epsilon),
            "Isingavg": mixing_time(time_average(an), time_average(an, T), c.epsilon),
        },
        "epsilon": c.epsilon,
    }
    _write_json(out / "mixing.json", summary)
    return summary


def _run_exit(c: ExperimentConfig, out: Path) -> dict:
    wc = c.walk_config()
    cols = {
        "P_RW": exit_probability(classical_rw_reference(wc)),
        "P_QW": exit_probability(hadamard_reference(wc)),
        "P_Ising": exit_probability(evolve(wc)),
    }
    T = wc.t_max
    _write_csv(out / "exit.csv", ["t", *cols], zip(range(T + 1), *cols.values()))
    tail = min(50, T)
    summary = {
        "model": str(wc.model),
        "sites": wc.sites,
        "s0": wc.start_site,
        "final": {k: float(v[-1]) for k, v in cols.items()},
        "tail_slope": {k: float((v[-1] - v[-1 - tail]) / max(tail, 1)) for k, v in cols.items()},
    }
    _write_json(out / "exit.json", summary)
    return summary


def _run_channel(c: ExperimentConfig, out: Path) -> dict:
    n = int(c.t_max)
    rows, exps = [], {}
    for m in c.models:
        var = W2Channel(m).variance_series(n)
        rows += [[m, t, v] for t, v in enumerate(var)]
        lo = max(1, n // 4)
        if n - lo >= 4:
            fit = classify_scaling(np.arange(lo, n + 1), var[lo:])
            exps[m] = {"exponent": fit.exponent, "classification": fit.classification, "window": [lo, n]}
    _write_csv(out / "channel.csv", ["model", "t", "variance"], rows)
    tv = {}
    for t in (10, 20, 50, 100, 200):
        if t // 2 <= n:
            s, p = circulant_distribution("su2k:2", t // 2)
            tv[t] = total_variation(p, aligned_binomial(t, s))
    summary = {"fits": exps, "circulant_vs_binomial_tv": tv}
    _write_json(out / "channel.json", summary)
    return summary


def _run_entropy(c: ExperimentConfig, out: Path) -> dict:
    reps = entropy_sweep(c.k_list, c.convention)
    _write_csv(out / "entropy.csv", ["k", "Q", "leakage"], [r.row() for r in reps])
    summary = {"convention": c.convention, "reports": [dataclasses.asdict(r) for r in reps]}
    _write_json(out / "entropy.json", summary)
    return summary


def _run_oracle(c: ExperimentConfig, out: Path) -> dict:
    rng = np.random.default_rng(c.seed)
    cases = []
    for _ in range(int(c.cases)):
        k = int(rng.integers(2, 5))
        n = int(rng.integers(2, 7))
        length = int(rng.integers(0, 9))
        word = [int(rng.integers(1, n)) * int(rng.choice([-1, 1])) for _ in range(length)]
        cases.append(verify_trace_identity(word, AnyonModel.su2k(k), n))
    walks = []
    for m in c.models:
        for t in range(1, int(c.t_max) + 1):
            tr = evolve(WalkConfig(m, t_max=t, closure=MARKOV))
            engine = dict(zip(tr.sites.tolist(), tr.p[t]))
            fus = path_sum_distribution(t, m, MARKOV, "fusion")
            brk = path_sum_distribution(t, m, MARKOV, "bracket")
            diff = max(
                max(abs(engine[s] - fus.get(s, 0.0)), abs(engine[s] - brk.get(s, 0.0)), abs(fus.get(s, 0.0) - brk.get(s, 0.0)))
                for s in engine
            )
            walks.append({"model": m, "t": t, "max_difference": diff, "pass": diff <= 1e-9})
    report = {
        "trace_identity": cases,
        "trace_identity_pass": all(r["pass"] for r in cases),
        "triple_oracle": walks,
        "triple_oracle_pass": all(r["pass"] for r in walks),
    }
    _write_json(out / "oracle.json", report)
    return {"trace_identity_pass": report["trace_identity_pass"], "triple_oracle_pass": report["triple_oracle_pass"]}


_RUNNERS = {
    "walk": _run_walk,
    "mixing": _run_mixing,
    "exit": _run_exit,
    "channel": _run_channel,
    "entropy": _run_entropy,
    "oracle-check": _run_oracle,
}


_OUTPUTS = {
    "walk": ("trajectory.csv", "variance.csv", "walk.json"),
    "mixing": ("mixing.csv", "mixing.json"),
    "exit": ("exit.csv", "exit.json"),
    "channel": ("channel.csv", "channel.json"),
    "entropy": ("entropy.csv", "entropy.json"),
    "oracle-check": ("oracle.json",),
}


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def run(cfg: ExperimentConfig) -> RunManifest:
    """Validate, run, and write outputs plus ``manifest.json`` into ``cfg.out``."""
    errors = [d for d in validate(cfg) if d.level == "error"]
    if errors:
        raise ValueError("; ".join(d.message for d in errors))
    c = cfg.resolved()
    out = Path(c.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in _OUTPUTS[c.experiment]:
        (out / name).unlink(missing_ok=True)
    t0 = time.perf_counter()
    summary = _RUNNERS[c.experiment](c, out)
    wall = time.perf_counter() - t0
    produced = [out / n for n in _OUTPUTS[c.experiment] if (out / n).exists()]
    assumptions = []
    if c.experiment == "mixing":
        assumptions.append("classical reference walks start from the same site as the quantum walks")
    if c.experiment == "exit":
        assumptions.append(f"walker injected at s0={c.s0} of N={c.sites} (override with --s0)")
    manifest = RunManifest(
        config=dataclasses.asdict(c),
        version=__version__,
        wall_time=wall,
        outputs={p.name: _digest(p) for p in produced},
        assumptions=assumptions,
        summary=summary,
    )
    m = dataclasses.asdict(manifest)
    m["python"] = platform.python_version()
    m["numpy"] = np.__version__
    _write_json(out / "manifest.json", m)
    return manifest
