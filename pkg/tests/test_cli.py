import numpy as np
import pytest

import ottosim as o
from ottosim.cli import main


def _lines(path):
    return path.read_text().splitlines()


def test_no_command_prints_help_and_fails(capsys):
    assert main([]) == 1
    assert "usage" in capsys.readouterr().out.lower()


def test_unknown_flag_exits_one(capsys):
    # argparse's usage failure is remapped from its default 2 to 1
    with pytest.raises(SystemExit) as exc:
        main(["qutrit-two-bath", "--bogus", "1"])
    assert exc.value.code == 1


def test_two_bath_sweep_writes_expected_csv(tmp_path, capsys):
    out = tmp_path / "tb.csv"
    code = main(["qutrit-two-bath", "--j-min", "0", "--j-max", "2",
                 "--j-steps", "5", "--out", str(out)])
    assert code == 0
    assert "wrote 5 rows" in capsys.readouterr().out
    lines = _lines(out)
    assert len(lines) == 6
    header = lines[0].split(",")
    assert header[:8] == ["J", "Qh", "Qc", "W", "eta_raw", "eta0",
                          "engine_mode", "crossing"]
    # full-precision cells round-trip: re-run the first row's cycle
    row = dict(zip(header, lines[1].split(",")))
    cfg = o.CycleConfig(spec=o.SubstanceSpec.qutrit(0.0), Bi=3.0, Bf=4.0,
                        cold=o.BathSpec(1.0),
                        protocol=o.TwoBath(hot=o.BathSpec(0.5)))
    rec = o.run_cycle(cfg)
    assert float(row["Qh"]) == rec.Qh
    assert float(row["W"]) == rec.W
    assert float(row["eta_raw"]) == rec.eta
    meta = dict(line.split("=", 1) for line in _lines(
        tmp_path / "tb.csv.meta"))
    assert meta["command"] == "qutrit-two-bath"
    assert float(meta["beta_h"]) == 0.5
    assert "seed" not in meta


def test_output_is_byte_identical_across_runs(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["qutrit-meas", "--j-steps", "7", "--j-max", "2.1"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "a.csv.meta").read_bytes() == \
        (tmp_path / "b.csv.meta").read_bytes()


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sweep setup\nbeta-h = 0.3\nj-steps = 4\nj-max = 3\n")
    out = tmp_path / "out.csv"
    code = main(["qutrit-two-bath", "--config", str(cfg), "--j-steps", "3",
                 "--out", str(out)])
    assert code == 0
    lines = _lines(out)
    assert len(lines) == 4  # flag beat the config's 4 steps
    meta = dict(line.split("=", 1) for line in _lines(tmp_path / "out.csv.meta"))
    assert float(meta["beta_h"]) == 0.3  # config beat the default
    assert int(meta["j_steps"]) == 3


def test_config_rejects_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("beta-x = 1\n")
    out = tmp_path / "o.csv"
    assert main(["qutrit-two-bath", "--config", str(cfg),
                 "--out", str(out)]) == 1
    assert "beta_x" in capsys.readouterr().err


def test_config_rejects_malformed_line(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("just words\n")
    assert main(["qutrit-two-bath", "--config", str(cfg),
                 "--out", str(tmp_path / "o.csv")]) == 1


def test_missing_config_file_is_io_error(tmp_path):
    assert main(["qutrit-two-bath", "--config", str(tmp_path / "nope.cfg"),
                 "--out", str(tmp_path / "o.csv")]) == 2


def test_validation_errors_exit_one(tmp_path, capsys):
    out = str(tmp_path / "x.csv")
    assert main(["qutrit-two-bath", "--bi", "-3", "--out", out]) == 1
    assert "Bi" in capsys.readouterr().err
    assert main(["qutrit-two-bath", "--bi", "abc", "--out", out]) == 1
    assert main(["qutrit-two-bath", "--j-steps", "0", "--out", out]) == 1
    assert main(["qutrit-two-bath"]) == 1  # --out missing
    assert main(["qutrit-contour", "--mode", "bogus", "--out", out]) == 1
    assert main(["xxz", "--protocol", "meas", "--n", "1,1", "--out",
                 out]) == 1
    assert main(["xxz", "--protocol", "meas", "--n", "1,1,0", "--out",
                 out]) == 1


def test_unwritable_output_exits_two(tmp_path, capsys):
    assert main(["qutrit-two-bath", "--j-steps", "2", "--j-max", "1",
                 "--out", str(tmp_path / "no" / "dir" / "x.csv")]) == 2
    assert "error" in capsys.readouterr().err.lower()


def test_contour_single_point_matches_library(tmp_path):
    out = tmp_path / "c.csv"
    t = 0.7 * np.pi
    code = main(["qutrit-contour", "--theta-min", str(t), "--theta-max",
                 str(t), "--theta-steps", "1", "--j-min", "1", "--j-max",
                 "1", "--j-steps", "1", "--out", str(out)])
    assert code == 0
    header, row = (line.split(",") for line in _lines(out))
    got = dict(zip(header, row))
    assert float(got["eta_raw"]) == pytest.approx(0.315670465570348,
                                                  abs=1e-12)
    assert float(got["theta"]) == t


def test_extreme_defaults_sweep(tmp_path):
    out = tmp_path / "ex.csv"
    assert main(["qutrit-extreme", "--out", str(out)]) == 0
    lines = _lines(out)
    assert len(lines) == 30
    header = lines[0].split(",")
    idx = header.index("eta_raw")
    etas = [float(line.split(",")[idx]) for line in lines[1:]]
    assert all(b > a for a, b in zip(etas, etas[1:]))


def test_xxz_meas_csv_and_seed_meta(tmp_path):
    out = tmp_path / "xxz.csv"
    code = main(["xxz", "--model", "ising", "--protocol", "meas",
                 "--n", "1,0,0", "--m", "0,0,1", "--j-min", "1", "--j-max",
                 "1", "--j-steps", "1", "--seed", "9", "--out", str(out)])
    assert code == 0
    header, row = (line.split(",") for line in _lines(out))
    got = dict(zip(header, row))
    assert header[0] == "Jz"
    assert float(got["q1_plus_q2"]) == pytest.approx(-0.9293267308310077,
                                                     abs=1e-12)
    meta = dict(line.split("=", 1) for line in _lines(tmp_path / "xxz.csv.meta"))
    assert meta["seed"] == "9"
    assert meta["protocol"] == "meas"
    assert meta["m"] == "0.0,0.0,1.0"


def test_theorem1_command(tmp_path, capsys):
    report = tmp_path / "t1.txt"
    code = main(["theorem1", "--samples", "60", "--seed", "2",
                 "--dims", "2,3", "--out", str(report)])
    assert code == 0
    shown = capsys.readouterr().out
    assert "unital" in shown
    assert report.read_text() == shown


def test_theorem1_rejects_bad_dims(capsys):
    assert main(["theorem1", "--dims", "2,9", "--samples", "5"]) == 1


def test_spot_check_sample_of_rows_against_cycles(tmp_path):
    out = tmp_path / "grid.csv"
    assert main(["qutrit-two-bath", "--out", str(out)]) == 0
    lines = _lines(out)
    assert len(lines) == 122  # default 121-point grid
    header = lines[0].split(",")
    for k in (1, 60, 121):  # ~1 percent of rows, ends included
        row = dict(zip(header, lines[k].split(",")))
        cfg = o.CycleConfig(spec=o.SubstanceSpec.qutrit(float(row["J"])),
                            Bi=3.0, Bf=4.0, cold=o.BathSpec(1.0),
                            protocol=o.TwoBath(hot=o.BathSpec(0.5)))
        rec = o.run_cycle(cfg)
        assert float(row["Qh"]) == rec.Qh
        assert float(row["Qc"]) == rec.Qc
        assert float(row["W"]) == rec.W
        assert float(row["q_h_-J"]) == rec.per_level_flux_hot["-J"]
        assert int(row["engine_mode"]) == int(rec.engine_mode)