import csv
import json

import pytest
import yaml

from anyonwalk.cli import build_config, main
from anyonwalk.experiments import ExperimentConfig, load_config, run, validate

SMALL = {
    "walk": ["--t-max", "6"],
    "mixing": ["--sites", "5", "--t-max", "40"],
    "exit": ["--sites", "6", "--s0", "3", "--t-max", "30"],
    "channel": ["--models", "ising", "su2k:3", "--t-max", "20"],
    "entropy": ["--k-list", "1", "3", "10"],
    "oracle-check": ["--models", "ising", "--t-max", "2", "--cases", "5"],
}
HEADERS = {
    "trajectory.csv": ["t", "s", "p"],
    "variance.csv": ["t", "variance"],
    "mixing.csv": ["t", "D_RW", "D_RWavg", "D_QWavg", "D_Isingavg"],
    "exit.csv": ["t", "P_RW", "P_QW", "P_Ising"],
    "channel.csv": ["model", "t", "variance"],
    "entropy.csv": ["k", "Q", "leakage"],
}


@pytest.mark.parametrize("experiment", list(SMALL))
def test_every_experiment_runs_and_is_deterministic(experiment, tmp_path, capsys):
    digests = []
    for rep in range(2):
        out = tmp_path / f"run{rep}"
        assert main([experiment, *SMALL[experiment], "--out", str(out)]) == 0
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["config"]["experiment"] == experiment
        assert manifest["version"]
        for name in manifest["outputs"]:
            if name in HEADERS:
                with open(out / name) as fh:
                    assert next(csv.reader(fh)) == HEADERS[name]
        digests.append(manifest["outputs"])
    assert digests[0] == digests[1] and digests[0]


def test_config_file_json_and_yaml(tmp_path):
    cfg = {"experiment": "entropy", "k_list": [1, 3], "out": str(tmp_path / "o")}
    (tmp_path / "c.json").write_text(json.dumps(cfg))
    (tmp_path / "c.yaml").write_text(yaml.safe_dump(cfg))
    assert load_config(tmp_path / "c.json") == load_config(tmp_path / "c.yaml")
    verb, c = build_config(["entropy", "--config", str(tmp_path / "c.yaml"), "--k-list", "5"])
    assert verb == "entropy" and c.k_list == [5]


def test_validate_reports_all_problems(capsys):
    rc = main(["validate", "--model", "foo", "--epsilon", "-1"])
    err = capsys.readouterr().err
    assert rc == 2
    assert "foo" in err and "epsilon" in err


def test_validate_geometry(capsys):
    assert main(["validate", "--s0", "99", "--sites", "4", "--boundary", "absorbing"]) == 2
    assert "s0=99" in capsys.readouterr().err


def test_validate_ok_and_even_ring_warning(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"experiment": "mixing", "sites": 6, "t_max": 10}))
    assert main(["validate", "--config", str(cfg)]) == 0
    io = capsys.readouterr()
    assert "config ok" in io.out and "even" in io.err


def test_memory_budget_is_reported(capsys):
    assert main(["walk", "--t-max", "30"]) == 2
    assert "budget" in capsys.readouterr().err


def test_unknown_config_key(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"experiment": "walk", "colour": "red"}))
    with pytest.raises(SystemExit):
        build_config(["walk", "--config", str(cfg)])


def test_run_refuses_invalid_config(tmp_path):
    with pytest.raises(ValueError):
        run(ExperimentConfig(experiment="exit", sites=4, s0=10, out=str(tmp_path)))
    assert validate(ExperimentConfig(experiment="teleport"))[0].level == "error"
