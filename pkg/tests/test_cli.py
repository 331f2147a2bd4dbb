import json

import pytest

from qrelay.cli import EXIT_CONFIG, EXIT_OK, EXIT_RUNTIME, main


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "experiment.json"
    path.write_text(json.dumps({"seed": 123, "trials": 30, "hop_db": 0.0, "degradation_sweep": [0.0, 0.2, 0.4]}))
    return str(path)


def test_sweep_writes_csv(config_file, tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--config", config_file, "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert len(lines) == 4
    assert lines[1].startswith("0.000000,1.000000,0.000000,1.000000,30,")


def test_sweep_is_byte_identical_across_workers(config_file, tmp_path):
    one, many = tmp_path / "one.csv", tmp_path / "many.csv"
    assert main(["sweep", "--config", config_file, "--out", str(one), "--workers", "1"]) == EXIT_OK
    assert main(["sweep", "--config", config_file, "--out", str(many), "--workers", "2"]) == EXIT_OK
    assert one.read_bytes() == many.read_bytes()


def test_flags_override_config(config_file, tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--config", config_file, "--out", str(out), "--trials", "5"]) == EXIT_OK
    assert ",5," in out.read_text().splitlines()[1]


def test_csv_goes_to_stdout_and_logs_elsewhere(config_file, capsys):
    assert main(["sweep", "--config", config_file]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.startswith("x,mean_fidelity")
    assert "sweep_point" not in captured.out


def test_adversary(config_file, tmp_path):
    out = tmp_path / "adv.csv"
    assert main(["adversary", "--config", config_file, "--strategy", "fresh_pairs", "--out", str(out)]) == EXIT_OK
    row = out.read_text().splitlines()[1]
    assert row.endswith(",0.500000")


def test_missing_seed_is_config_error(tmp_path):
    path = tmp_path / "noseed.json"
    path.write_text('{"trials": 3}')
    assert main(["sweep", "--config", str(path)]) == EXIT_CONFIG


def test_missing_config_file(tmp_path):
    assert main(["sweep", "--config", str(tmp_path / "absent.json")]) == EXIT_CONFIG


def test_runtime_failure(tmp_path):
    path = tmp_path / "dark.json"
    path.write_text('{"seed": 1, "trials": 2, "herald_loss": 1.0}')
    assert main(["sweep", "--config", str(path)]) == EXIT_RUNTIME


def test_latency(capsys):
    assert main(["latency"]) == EXIT_OK
    assert "reduction=0.365079" in capsys.readouterr().out


def test_calibrate(capsys):
    assert main(["calibrate", "--anchor-x", "0.25", "--anchor-f", "0.972"]) == EXIT_OK
    assert float(capsys.readouterr().out) == pytest.approx(0.1698, abs=1e-3)


def test_calibrate_rejects_floor():
    assert main(["calibrate", "--anchor-f", "0.3333333"]) == EXIT_CONFIG


def test_chsh(capsys):
    assert main(["chsh", "--x", "0.0"]) == EXIT_OK
    assert "chsh=2.828427" in capsys.readouterr().out


def test_chsh_rejects_degradation_outside_unit_interval():
    assert main(["chsh", "--x", "1.5"]) == EXIT_CONFIG
