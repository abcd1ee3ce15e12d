"""Command line entry point: ``anyonwalk <experiment> --config <file> [overrides]``.

``anyonwalk validate --config <file>`` only reports diagnostics.  The thread
count can be set with the ``ANYONWALK_THREADS`` environment variable.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .experiments import EXPERIMENTS, ExperimentConfig, load_config, run, validate


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="anyonwalk", description="Anyonic quantum walk experiments.")
    p.add_argument("experiment", choices=[*EXPERIMENTS, "validate"])
    p.add_argument("--config", help="JSON or YAML file with ExperimentConfig keys")
    p.add_argument("--model")
    p.add_argument("--models", nargs="+")
    p.add_argument("--sites", type=int)
    p.add_argument("--s0", type=int)
    p.add_argument("--t-max", dest="t_max", type=int)
    p.add_argument("--boundary")
    p.add_argument("--closure")
    p.add_argument("--epsilon", type=float)
    p.add_argument("--out")
    p.add_argument("--memory-budget", dest="memory_budget", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--k-list", dest="k_list", type=int, nargs="+")
    p.add_argument("--cases", type=int)
    p.add_argument("--convention")
    return p


def build_config(argv=None) -> tuple[str, ExperimentConfig]:
    args = _parser().parse_args(argv)
    data = load_config(args.config) if args.config else {}
    for f in dataclasses.fields(ExperimentConfig):
        if f.name == "experiment":
            continue
        val = getattr(args, f.name, None)
        if val is not None:
            data[f.name] = val
    if args.experiment != "validate":
        data["experiment"] = args.experiment
    unknown = set(data) - {f.name for f in dataclasses.fields(ExperimentConfig)}
    if unknown:
        raise SystemExit(f"error: unknown config keys: {', '.join(sorted(unknown))}")
    return args.experiment, ExperimentConfig(**data)


def main(argv=None) -> int:
    verb, cfg = build_config(argv)
    diags = validate(cfg)
    for d in diags:
        print(d, file=sys.stderr)
    if any(d.level == "error" for d in diags):
        return 2
    if verb == "validate":
        print("config ok")
        return 0
    manifest = run(cfg)
    print(json.dumps({"outputs": manifest.outputs, "wall_time": round(manifest.wall_time, 3)}, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
