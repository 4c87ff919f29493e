import json
import math

import numpy as np
import pytest
from scipy import integrate

from dpk.cli import RunConfig, Table, dispatch, load_run_config, normalize_argv, render
from dpk.cli import commands, verify
from dpk.errors import ArgumentError, PrecisionError
from dpk.mcsim import read_binary


def rows(text):
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    header = lines[0].split(",")
    return header, [line.split(",") for line in lines[1:]]


def header_field(text, key):
    for line in text.splitlines():
        if line.startswith(f"# {key}="):
            return line[len(key) + 3:]
    return None


# Argument handling

def test_normalize_argv_glues_negative_values():
    argv = ["density", "--grid", "-15:15:301", "--x", "-1,1", "--n", "3", "--log-level", "debug"]
    assert normalize_argv(argv) == ["density", "--grid=-15:15:301", "--x=-1,1", "--n", "3", "--log-level", "debug"]
    assert normalize_argv(["--xa", "-.5"]) == ["--xa=-.5"]
    assert normalize_argv(["--kind", "-h"]) == ["--kind", "-h"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["kernel", "--bogus", "1"],
        ["kernel", "--kind", "laguerre"],
        ["kernel", "--kind", "hermite", "--ta", "1", "--xa", "0", "--tb", "1", "--xb", "0"],
        ["kernel", "--kind", "sine", "--ta", "0", "--xa", "0"],
        ["kernel", "--kind", "bessel", "--nu", "-2", "--ta", "0", "--xa", "1", "--tb", "0", "--xb", "1"],
        ["density", "--n", "3", "--t", "1", "--grid", "1:0:5"],
        ["simulate", "--n", "2", "--times", "1,0.5"],
        ["corr", "--kind", "sine", "--block", "0:x"],
        ["kernel", "--kind", "sine", "--log-level", "loud"],
    ],
)
def test_bad_invocations_exit_with_usage_code(argv, capsys):
    assert dispatch(argv) == 1
    assert capsys.readouterr().err


def test_parse_helpers():
    np.testing.assert_allclose(commands.parse_grid("-1:1:5"), [-1.0, -0.5, 0.0, 0.5, 1.0])
    assert commands.parse_block("0.5:1,2") == (0.5, [1.0, 2.0])
    assert commands.parse_chi("0:-1:1:-0.5") == (0.0, -1.0, 1.0, -0.5)
    with pytest.raises(ArgumentError):
        commands.parse_grid("0:1")
    with pytest.raises(ArgumentError):
        commands.parse_probe("0:0:0")


# Commands

def test_kernel_sine_prints_one_over_pi(capsys):
    assert dispatch(["kernel", "--kind", "sine", "--ta", "0", "--xa", "0", "--tb", "0", "--xb", "0"]) == 0
    out = capsys.readouterr().out
    header, body = rows(out)
    assert header == ["ta", "xa", "tb", "xb", "value"]
    assert float(body[0][-1]) == pytest.approx(1.0 / math.pi, rel=1e-15)
    assert header_field(out, "command") == "kernel"
    assert json.loads(header_field(out, "parameters"))["kind"] == "sine"


def test_density_integrates_to_n(capsys):
    assert dispatch(["density", "--n", "20", "--t", "1", "--grid", "-15:15:301"]) == 0
    header, body = rows(capsys.readouterr().out)
    assert header == ["x", "rho", "semicircle"]
    assert len(body) == 301
    x = np.array([float(r[0]) for r in body])
    rho = np.array([float(r[1]) for r in body])
    assert integrate.trapezoid(rho, x) == pytest.approx(20.0, abs=1e-3)


def test_limit_density(capsys):
    assert dispatch(["density", "--kind", "sine", "--grid", "0:1:3"]) == 0
    _, body = rows(capsys.readouterr().out)
    assert [float(r[1]) for r in body] == pytest.approx([1.0 / math.pi] * 3)


def test_corr_and_gap_commands(capsys):
    assert dispatch(["corr", "--kind", "sine", "--block", "0:0.7"]) == 0
    _, body = rows(capsys.readouterr().out)
    assert float(body[0][1]) == pytest.approx(1.0 / math.pi)

    assert dispatch(["gap", "--kind", "sine", "--a", "0", "--b", "0.5"]) == 0
    _, gap = rows(capsys.readouterr().out)
    assert dispatch(["fredholm", "--kind", "sine", "--chi", "0:0:0.5:-1"]) == 0
    _, fred = rows(capsys.readouterr().out)
    assert float(gap[0][2]) == pytest.approx(float(fred[0][1]), rel=1e-12)


def test_survival_command(capsys):
    assert dispatch(["survival", "--t", "1", "--x", "-1,1"]) == 0
    _, body = rows(capsys.readouterr().out)
    assert body[0][1] == "quadrature"
    assert float(body[0][2]) == pytest.approx(0.8427007929, abs=1e-6)


def test_specfun_command(capsys):
    assert dispatch(["specfun", "--fn", "airy_ai", "--grid", "0:0:1"]) == 0
    _, body = rows(capsys.readouterr().out)
    assert float(body[0][1]) == pytest.approx(0.3550280538878172)
    assert dispatch(["specfun", "--fn", "gamma", "--grid", "0:1:2"]) == 1


def test_limits_without_probes_is_header_only(capsys):
    assert dispatch(["limits", "--which", "edge", "--n-list", "10,20"]) == 0
    header, body = rows(capsys.readouterr().out)
    assert header == ["probe", "N", "scaled", "limit", "error", "monotone"]
    assert body == []


def test_limits_table_rows(capsys):
    assert dispatch(["limits", "--which", "bulk", "--n-list", "50,100", "--probe", "0:0:0:0.5"]) == 0
    _, body = rows(capsys.readouterr().out)
    assert [int(r[1]) for r in body] == [50, 100]
    expected = math.sin(0.5) / (0.5 * math.pi)
    assert all(float(r[3]) == pytest.approx(expected) for r in body)


def test_simulate_csv_and_binary(tmp_path, capsys, small_blocks):
    assert dispatch(["simulate", "--n", "2", "--times", "0.5,1", "--paths", "3", "--seed", "4"]) == 0
    header, body = rows(capsys.readouterr().out)
    assert header == ["path", "time", "particle", "position"]
    assert len(body) == 3 * 2 * 2

    target = tmp_path / "run.dpke"
    argv = ["simulate", "--n", "2", "--times", "0.5,1", "--paths", "3", "--seed", "4", "--binary", str(target)]
    assert dispatch(argv) == 0
    out = capsys.readouterr().out
    assert f"# note=binary={target}" in out
    ensemble = read_binary(target)
    assert ensemble.positions.shape == (3, 2, 2)
    assert float(ensemble.positions[2, 1, 1]) == float(body[-1][3])


# Output formats and run configs

def test_json_output_round_trips_through_config(tmp_path, capsys):
    first = tmp_path / "kernel.json"
    argv = ["kernel", "--kind", "airy", "--ta", "0", "--xa", "0.5", "--tb", "0.3", "--xb", "-0.2"]
    assert dispatch(argv + ["--output", "json", "--output-path", str(first)]) == 0
    assert "✅ wrote 1 rows" in capsys.readouterr().err
    doc = json.loads(first.read_text())
    assert doc["columns"][-1] == "value"
    assert doc["config"]["parameters"]["kind"] == "airy"

    run = load_run_config(str(first))
    assert run.command == "kernel"
    assert dispatch(["kernel", "--config", str(first), "--output", "csv", "--output-path", str(tmp_path / "again.csv")]) == 0
    _, body = rows((tmp_path / "again.csv").read_text())
    assert float(body[0][-1]) == doc["rows"][0][-1]


def test_yaml_config_and_command_mismatch(tmp_path, capsys):
    cfg = tmp_path / "run.yaml"
    cfg.write_text("command: kernel\nparameters:\n  kind: sine\n  ta: 0.0\n  xa: 0.0\n  tb: 0.0\n  xb: 1.0\n")
    assert dispatch(["kernel", "--config", str(cfg)]) == 0
    _, body = rows(capsys.readouterr().out)
    assert float(body[0][-1]) == pytest.approx(math.sin(1.0) / math.pi)
    assert dispatch(["density", "--config", str(cfg)]) == 1
    assert dispatch(["kernel", "--config", str(tmp_path / "missing.yaml")]) == 1


def test_svg_output(tmp_path):
    target = tmp_path / "rho.svg"
    assert dispatch(["density", "--n", "4", "--t", "1", "--grid", "-4:4:41", "--output", "svg", "--output-path", str(target)]) == 0
    text = target.read_text()
    assert text.startswith("<svg")
    assert "<polyline" in text or "<path" in text


def test_render_csv_formats_cells():
    table = Table(["a", "b", "c"])
    table.add(1, 0.1, True)
    text = render(table, RunConfig(command="kernel", seed=3))
    assert header_field(text, "seed") == "3"
    assert text.rstrip().splitlines()[-1] == "1,0.10000000000000001,1"


def test_tolerance_flag_updates_settings(settings, capsys):
    settings()
    assert dispatch(["kernel", "--kind", "sine", "--ta", "0", "--xa", "0", "--tb", "0", "--xb", "0", "--tolerance", "1e-6"]) == 0
    tolerances = json.loads(header_field(capsys.readouterr().out, "tolerances"))
    assert tolerances["quad_tol"] == 1e-6
    assert dispatch(["kernel", "--kind", "sine", "--tolerance", "0"]) == 1


def test_tolerance_survives_a_json_config_round_trip(settings, tmp_path, capsys):
    settings()
    first = tmp_path / "loose.json"
    argv = ["kernel", "--kind", "airy", "--ta", "0", "--xa", "0.5", "--tb", "0.3", "--xb", "-0.2", "--tolerance", "1e-3"]
    assert dispatch(argv + ["--output", "json", "--output-path", str(first)]) == 0
    doc = json.loads(first.read_text())
    assert doc["config"]["tolerance"] == 1e-3
    assert doc["tolerances"]["kernel_tol"] == 1e-3

    fresh = settings()
    assert fresh.KERNEL_TOL != 1e-3
    assert dispatch(["kernel", "--config", str(first), "--output", "csv"]) == 0
    out = capsys.readouterr().out
    assert json.loads(header_field(out, "tolerances"))["kernel_tol"] == 1e-3
    _, body = rows(out)
    assert float(body[0][-1]) == doc["rows"][0][-1]

    settings()
    assert dispatch(["kernel", "--config", str(first), "--tolerance", "1e-5", "--output", "csv"]) == 0
    assert json.loads(header_field(capsys.readouterr().out, "tolerances"))["quad_tol"] == 1e-5


# Exit codes

def test_numerical_failure_exits_with_two(monkeypatch, capsys):
    def broken(params):
        raise PrecisionError("tail did not converge", achieved=1e-3)

    monkeypatch.setitem(commands.COMMANDS, "kernel", broken)
    assert dispatch(["kernel", "--kind", "sine"]) == 2
    assert "numerical failure" in capsys.readouterr().err


def test_failed_verify_exits_with_two(monkeypatch, capsys):
    monkeypatch.setattr(verify, "FAST", [("ok", lambda: (True, "fine")), ("bad", lambda: (False, "off, by a lot"))])
    assert dispatch(["verify"]) == 2
    header, body = rows(capsys.readouterr().out)
    assert header == ["check", "passed", "seconds", "detail"]
    assert [r[1] for r in body] == ["1", "0"]
    assert body[1][3] == "off; by a lot"


def test_verify_records_raised_errors(monkeypatch):
    def raises():
        raise PrecisionError("no")

    monkeypatch.setattr(verify, "FAST", [("raises", raises)])
    table = verify.run_suite("fast")
    assert table.rows[0][1] is False
    assert verify.suite_failed(table)
    with pytest.raises(ArgumentError):
        verify.run_suite("huge")


@pytest.mark.slow
def test_fast_verify_suite_passes(capsys):
    assert dispatch(["verify", "--suite", "fast"]) == 0
    _, body = rows(capsys.readouterr().out)
    assert all(r[1] == "1" for r in body)
