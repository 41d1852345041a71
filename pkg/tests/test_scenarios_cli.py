import math

import numpy as np
import pytest

import susy_entangle.scenarios as scenarios
from susy_entangle.cli import main, read_config
from susy_entangle.errors import ConsistencyError, ParameterError
from susy_entangle.scenarios import (
    ScenarioConfig,
    figure_configs,
    report_peaks,
    run_scenario,
)
from susy_entangle.trajectory import (
    TrajectoryIOError,
    TrajectoryRecord,
    emit_csv,
    format_csv,
    parse_csv,
    read_csv,
)

S12 = math.sqrt(12)


def tiny_record():
    return TrajectoryRecord(
        total_photons=3, photons_in_B=0, g=1.0, omega=0.0,
        t=np.array([0.0, 0.1, 0.2]), gt=np.array([0.0, 0.1, 0.2]),
        entropy=np.array([0.0, 0.1 / 3, 2 / 3]),
        probabilities=np.array([[1.0, 0.0], [0.7, 0.3], [1 / 3, 2 / 3]]),
    )


def test_config_validation():
    for kw in ({"total_photons": 0, "photons_in_B": 0}, {"total_photons": 3, "photons_in_B": 4},
               {"total_photons": 3, "photons_in_B": 0, "steps": 1},
               {"total_photons": 3, "photons_in_B": 0, "t_max": 0.0},
               {"total_photons": 3, "photons_in_B": 0, "survival_epsilon": 0.0}):
        with pytest.raises(ParameterError):
            ScenarioConfig(**kw)


def test_gt_grid_scaling():
    cfg = ScenarioConfig.from_gt_max(5, 0, gt_max=2.0, g=4.0, steps=11)
    rec = run_scenario(cfg)
    assert rec.t[-1] == 0.5
    np.testing.assert_array_equal(rec.gt, 4.0 * rec.t)
    assert len(rec) == 11


def test_run_scenario_n5_figure1a():
    rec = run_scenario(ScenarioConfig(5, 0))
    assert rec.entropy[0] < 1e-14
    assert math.log(3) - rec.entropy.max() < 1e-3


def test_run_scenario_n1_zero():
    assert np.all(run_scenario(ScenarioConfig(1, 0)).entropy == 0)


def test_n9_peak_depends_on_initial_state():
    top = report_peaks(run_scenario(ScenarioConfig(9, 0)))
    mid = report_peaks(run_scenario(ScenarioConfig(9, 4)))
    assert top.peak_value > mid.peak_value
    assert top.survival_time > mid.survival_time


def test_report_peaks_n3():
    gt = np.linspace(0, math.pi / S12, 4001)
    cfg = ScenarioConfig(3, 0, t_max=gt[-1], steps=len(gt))
    peaks = report_peaks(run_scenario(cfg))
    assert peaks.peak_value == pytest.approx(math.log(2), abs=1e-12)
    assert peaks.peak_gt * S12 == pytest.approx(math.pi / 4, abs=S12 * (gt[1] - gt[0]))


def test_report_peaks_flat_record():
    rec = tiny_record()
    flat = TrajectoryRecord(3, 0, 1.0, 0.0, rec.t, rec.gt, np.zeros(3), rec.probabilities)
    peaks = report_peaks(flat, 0.05)
    assert peaks.peak_value == 0.0
    assert peaks.survival_time == pytest.approx(0.2)


def test_report_peaks_contiguous_window():
    t = np.arange(7, dtype=float)
    e = np.array([0.0, 1.0, 0.98, 0.5, 0.99, 0.97, 0.0])
    rec = TrajectoryRecord(3, 0, 1.0, 0.0, t, t, e, np.zeros((7, 2)))
    peaks = report_peaks(rec, 0.05)
    assert (peaks.peak_time, peaks.survival_time) == (1.0, 1.0)


def test_csv_layout():
    text = format_csv(tiny_record())
    lines = text.split("\n")
    assert lines[0] == "# susy-entangle v0.1.0 N=3 L=0 g=1.0 omega=0.0"
    assert lines[1] == "t,gt,entropy,p0,p1"
    assert len(lines) == 6 and lines[-1] == ""
    assert lines[3].startswith("0.1,0.1,0.03333333333333333,0.7,0.3")


def test_csv_round_trip(tmp_path):
    rec = run_scenario(ScenarioConfig(9, 3, steps=257))
    path = emit_csv(rec, tmp_path / "r.csv")
    assert read_csv(path).same_as(rec)
    assert parse_csv(format_csv(tiny_record())).same_as(tiny_record())


def test_csv_io_errors(tmp_path):
    with pytest.raises(TrajectoryIOError, match="missing"):
        read_csv(tmp_path / "missing.csv")
    with pytest.raises(TrajectoryIOError):
        emit_csv(tiny_record(), tmp_path / "no" / "dir" / "x.csv")


def test_figure_presets():
    cfgs = figure_configs()
    fig2 = [c for k, c in cfgs.items() if k.startswith("fig2")]
    assert [(c.total_photons - c.photons_in_B, c.photons_in_B) for c in fig2] == [(9, 0), (8, 1), (6, 3), (5, 4)]
    long = cfgs["fig1_long_N5_L0"]
    assert long.t_max == 22.015 and long.grid()[1] == pytest.approx(1e-3)


def test_oracle_flag_failure(monkeypatch):
    monkeypatch.setattr(scenarios, "oracle_deviation", lambda rec: 1e-6)
    with pytest.raises(ConsistencyError):
        run_scenario(ScenarioConfig(3, 0, steps=5, oracle=True))


def test_oracle_flag_pass():
    run_scenario(ScenarioConfig(9, 1, steps=201, oracle=True))


def test_cli_run(tmp_path, capsys):
    out = tmp_path / "a.csv"
    assert main(["run", "--photons", "5", "--in-b", "0", "--steps", "11", "--out", str(out)]) == 0
    rec = read_csv(out)
    assert len(rec) == 11 and rec.gt[-1] == 2.0
    assert "peak entropy" in capsys.readouterr().out


def test_cli_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    out = tmp_path / "b.csv"
    cfg.write_text(f"# N=9 sweep\nphotons=9\nin-b = 3\ng=2.0\nsteps=21\ngt-max=1.5\nout={out}\n")
    assert read_config(str(cfg))["in_b"] == 3
    assert main(["run", "--config", str(cfg), "--steps", "31"]) == 0
    rec = read_csv(out)
    assert (rec.total_photons, rec.photons_in_B, rec.g, len(rec)) == (9, 3, 2.0, 31)
    assert rec.gt[-1] == pytest.approx(1.5)


def test_cli_bad_config_line(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour=blue\n")
    assert main(["run", "--config", str(cfg), "--out", str(tmp_path / "x.csv")]) == 2


def test_cli_usage_errors(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--photons", "5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    assert main(["run", "--photons", "5", "--in-b", "6", "--out", str(tmp_path / "x.csv")]) == 2
    assert main(["spectrum", "--photons", "4"]) == 2


def test_cli_io_error(tmp_path):
    assert main(["run", "--photons", "3", "--in-b", "0", "--steps", "3",
                 "--out", str(tmp_path / "nope" / "x.csv")]) == 4


def test_cli_oracle_exit_code(tmp_path, monkeypatch):
    monkeypatch.setattr(scenarios, "oracle_deviation", lambda rec: 1.0)
    assert main(["run", "--photons", "3", "--in-b", "0", "--steps", "3", "--oracle",
                 "--out", str(tmp_path / "x.csv")]) == 3


def test_cli_spectrum(capsys):
    assert main(["spectrum", "--photons", "3", "--omega", "1", "--g", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "k,lambda,E,multiplicity"
    energies = [float(ln.split(",")[2]) for ln in lines[1:]]
    np.testing.assert_allclose(energies, [3 - S12, 3 + S12], rtol=1e-12)
    assert all(ln.endswith(",2") for ln in lines[1:])
