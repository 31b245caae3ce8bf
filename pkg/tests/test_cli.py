"""Command-line contract: envelopes, exit codes, round-trips, formats."""

import csv
import io
import json
import math

import pytest
from click.testing import CliRunner

from spincollapse import __version__
from spincollapse.cli import main

H_QUARTER = 0.5623351446188083
H_QUARTER_BITS = 0.8112781244591328  # same value in base 2
PI_THIRD = "1.0471975511965976"


@pytest.fixture
def runner():
    return CliRunner()


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def _argv_from_echo(command, echo):
    argv = [command]
    for key, value in echo.items():
        flag = "--" + key.replace("_", "-")
        if value is None:
            continue
        if isinstance(value, bool):
            if value:
                argv.append(flag)
            continue
        argv.extend([flag, str(value)])
    return argv


class TestSolveCommand:
    def test_strict_example(self, runner):
        doc = _json(
            runner.invoke(
                main,
                ["solve", "--rho", "1", "--tau", "0", "--theta-i", PI_THIRD,
                 "--phi-i", "0", "--mode", "strict"],
            )
        )
        res = doc["results"]
        assert res["no_collapse"] is False
        assert res["objective"] == 0.0
        got = {(round(a["theta"], 9), round(a["phi"], 9)) for a in res["minimizers"]}
        assert got == {
            (round(math.pi / 3, 9), 0.0),
            (round(2 * math.pi / 3, 9), round(math.pi, 9)),
        }

    def test_eigenstate_no_collapse(self, runner):
        doc = _json(
            runner.invoke(main, ["solve", "--rho", "1", "--tau", "0", "--theta-i", "0"])
        )
        assert doc["results"]["no_collapse"] is True
        assert doc["results"]["minimizers"] == [{"theta": 0.0, "phi": 0.0}]

    def test_degenerate_reflective_on_great_circle(self, runner):
        doc = _json(
            runner.invoke(
                main,
                ["solve", "--rho", "0.5", "--tau", "0", "--theta-i", "0",
                 "--mode", "reflective"],
            )
        )
        # Bloch vector is +x; minimizers must be orthogonal to it
        for a in doc["results"]["minimizers"]:
            nx = math.sin(a["theta"]) * math.cos(a["phi"])
            assert abs(nx) <= 1e-9

    def test_degrees_matches_radians(self, runner):
        deg = _json(
            runner.invoke(
                main, ["solve", "--rho", "1", "--theta-i", "60", "--degrees"]
            )
        )
        rad = _json(
            runner.invoke(main, ["solve", "--rho", "1", "--theta-i", PI_THIRD])
        )
        assert deg["results"] == rad["results"]

    def test_amplitudes_match_probability_weight(self, runner):
        amp = _json(
            runner.invoke(
                main,
                ["solve", "--amp-up", "1", "--amp-down", "0", "--theta-i", PI_THIRD],
            )
        )
        rho = _json(
            runner.invoke(main, ["solve", "--rho", "1", "--theta-i", PI_THIRD])
        )
        assert amp["results"] == rho["results"]

    def test_base_two_rescales_objective(self, runner):
        doc = _json(
            runner.invoke(
                main,
                ["solve", "--rho", "1", "--theta-i", PI_THIRD,
                 "--mode", "reflective", "--entropy-base", "2"],
            )
        )
        assert doc["entropy_base"] == "2"
        assert doc["results"]["objective"] == pytest.approx(
            H_QUARTER_BITS, abs=1e-12
        )


class TestLandscapeCommand:
    def test_two_by_two_grid(self, runner):
        result = runner.invoke(
            main,
            ["landscape", "--rho", "1", "--tau", "0", "--theta-i", "0",
             "--grid", "2x2"],
        )
        assert result.exit_code == 0
        rows = list(csv.DictReader(io.StringIO(result.output)))
        assert len(rows) == 4
        assert list(rows[0].keys()) == [
            "theta_f", "phi_f", "p_up", "s_f", "constraint_residual", "s_up",
        ]
        north = [r for r in rows if float(r["theta_f"]) == 0.0]
        for r in north:
            assert float(r["p_up"]) == 1.0
            assert float(r["s_f"]) == 0.0

    def test_self_transfer_is_zero(self, runner):
        result = runner.invoke(
            main, ["landscape", "--rho", "0.3", "--theta-i", "0", "--grid", "3x4"]
        )
        rows = list(csv.DictReader(io.StringIO(result.output)))
        for r in rows:
            if float(r["theta_f"]) == 0.0:  # the measured axis itself
                assert abs(float(r["s_up"])) <= 1e-12

    def test_feasible_rows_cluster_on_level_colatitudes(self, runner):
        result = runner.invoke(
            main,
            ["landscape", "--rho", "1", "--tau", "0", "--theta-i", PI_THIRD,
             "--grid", "200x400"],
        )
        rows = list(csv.DictReader(io.StringIO(result.output)))
        assert len(rows) == 200 * 400
        near = [
            float(r["theta_f"])
            for r in rows
            if abs(float(r["constraint_residual"])) <= 5e-3
        ]
        assert near, "expected feasible rows on the scan"
        for theta in near:
            assert (
                min(abs(theta - math.pi / 3), abs(theta - 2 * math.pi / 3)) <= 0.03
            )

    def test_tsv_format(self, runner):
        result = runner.invoke(
            main,
            ["landscape", "--rho", "1", "--theta-i", "0", "--grid", "2x2",
             "--format", "tsv"],
        )
        header = result.output.splitlines()[0]
        assert header.split("\t") == [
            "theta_f", "phi_f", "p_up", "s_f", "constraint_residual", "s_up",
        ]

    def test_json_format_rejected(self, runner):
        result = runner.invoke(
            main,
            ["landscape", "--rho", "1", "--theta-i", "0", "--format", "json"],
        )
        assert result.exit_code == 2

    def test_grid_must_be_at_least_two(self, runner):
        result = runner.invoke(
            main, ["landscape", "--rho", "1", "--theta-i", "0", "--grid", "1x5"]
        )
        assert result.exit_code == 2


class TestOracleCommand:
    def test_defaults_small_discrepancy(self, runner):
        doc = _json(
            runner.invoke(
                main, ["oracle", "--rho", "1", "--tau", "0", "--theta-i", PI_THIRD]
            )
        )
        assert abs(doc["results"]["discrepancy"]) <= 0.01
        assert doc["results"]["oracle"]["no_collapse"] is False

    def test_eigenstate_both_no_collapse(self, runner):
        doc = _json(
            runner.invoke(main, ["oracle", "--rho", "1", "--theta-i", "0"])
        )
        assert doc["results"]["no_collapse"] is True
        assert doc["results"]["solver"]["no_collapse"] is True
        assert doc["results"]["oracle"]["no_collapse"] is True

    def test_exclude_trivial_finds_boundary_minimum(self, runner):
        doc = _json(
            runner.invoke(
                main,
                ["oracle", "--rho", "1", "--tau", "0", "--theta-i", PI_THIRD,
                 "--mode", "reflective", "--exclude-trivial", "0.2"],
            )
        )
        assert 0.05 <= doc["results"]["oracle"]["objective"] <= 0.07
        assert any("boundary" in w for w in doc["warnings"])

    def test_infeasible_grid_exits_three(self, runner):
        result = runner.invoke(
            main,
            ["oracle", "--rho", "0.9", "--tau", "0.3", "--theta-i", "1.0",
             "--phi-i", "0.5", "--grid", "8x8", "--constraint-tol", "1e-9"],
        )
        assert result.exit_code == 3
        doc = json.loads(result.output)
        assert doc["results"]["oracle"]["error"] == "infeasible-grid"
        assert doc["results"]["discrepancy"] is None


class TestSimulateCommand:
    def test_strict_absorbs(self, runner):
        doc = _json(
            runner.invoke(
                main,
                ["simulate", "--rho", "1", "--tau", "0", "--theta-i", PI_THIRD,
                 "--phi-i", "0", "--steps", "3", "--mode", "strict",
                 "--outcome", "risk:born-surprise"],
            )
        )
        steps = doc["results"]["trajectory"]
        assert [s["no_collapse"] for s in steps] == [False, True, True]
        assert any("stand-in" in w for w in doc["warnings"])
        assert doc["results"]["rng"] is None

    def test_reflective_alternates_azimuth(self, runner):
        doc = _json(
            runner.invoke(
                main,
                ["simulate", "--rho", "1", "--tau", "0", "--theta-i", PI_THIRD,
                 "--phi-i", "0", "--steps", "3", "--mode", "reflective",
                 "--outcome", "risk:born-surprise"],
            )
        )
        steps = doc["results"]["trajectory"]
        assert all(not s["no_collapse"] for s in steps)
        azimuths = [s["axis_measured"]["phi"] for s in steps]
        assert azimuths[0] == pytest.approx(0.0, abs=1e-9)
        assert azimuths[1] == pytest.approx(math.pi, abs=1e-9)
        assert azimuths[2] == pytest.approx(0.0, abs=1e-9)

    def test_eigenstate_single_record(self, runner):
        doc = _json(
            runner.invoke(
                main, ["simulate", "--rho", "1", "--theta-i", "0", "--steps", "1"]
            )
        )
        steps = doc["results"]["trajectory"]
        assert len(steps) == 1 and steps[0]["no_collapse"] is True

    def test_born_reports_rng(self, runner):
        doc = _json(
            runner.invoke(
                main,
                ["simulate", "--rho", "0.7", "--theta-i", "0.9", "--steps", "2",
                 "--outcome", "born", "--seed", "5"],
            )
        )
        assert doc["results"]["rng"] == "numpy.random.PCG64"

    def test_born_without_seed_is_usage_error(self, runner):
        result = runner.invoke(
            main,
            ["simulate", "--rho", "1", "--theta-i", "1", "--steps", "1",
             "--outcome", "born"],
        )
        assert result.exit_code == 2
        assert "seed" in result.output

    def test_unknown_risk_lists_builtins(self, runner):
        result = runner.invoke(
            main,
            ["simulate", "--rho", "1", "--theta-i", "1", "--steps", "1",
             "--outcome", "risk:leap-of-faith"],
        )
        assert result.exit_code == 2
        for name in ("constant", "born-surprise", "alignment"):
            assert name in result.output

    def test_identical_runs_bit_identical(self, runner):
        argv = ["simulate", "--rho", "0.7", "--tau", "0.4", "--theta-i", "0.9",
                "--phi-i", "1.1", "--steps", "5", "--mode", "reflective",
                "--outcome", "born", "--seed", "7"]
        first = runner.invoke(main, argv)
        second = runner.invoke(main, argv)
        assert first.exit_code == 0
        assert first.output == second.output


class TestEnvelope:
    def test_structure(self, runner):
        doc = _json(
            runner.invoke(main, ["solve", "--rho", "1", "--theta-i", "1"])
        )
        assert list(doc.keys()) == [
            "tool", "command", "input", "entropy_base", "mode", "results", "warnings",
        ]
        assert doc["tool"] == {"name": "spincollapse", "version": __version__}
        assert doc["command"] == "solve"

    @pytest.mark.parametrize(
        "argv",
        [
            ["solve", "--rho", "0.7", "--tau", "0.4", "--theta-i", "0.9",
             "--phi-i", "1.1", "--mode", "reflective", "--entropy-base", "2"],
            ["oracle", "--rho", "0.7", "--tau", "0.4", "--theta-i", "0.9",
             "--phi-i", "1.1", "--grid", "64x64", "--exclude-trivial", "0.25"],
            ["simulate", "--rho", "0.7", "--tau", "0.4", "--theta-i", "0.9",
             "--phi-i", "1.1", "--steps", "4", "--outcome", "born", "--seed", "11"],
        ],
    )
    def test_round_trip_from_input_echo(self, runner, argv):
        first = _json(runner.invoke(main, argv))
        replay = _argv_from_echo(first["command"], first["input"])
        second = _json(runner.invoke(main, replay))
        assert second == first

    def test_out_writes_file(self, runner, tmp_path):
        target = tmp_path / "doc.json"
        result = runner.invoke(
            main,
            ["solve", "--rho", "1", "--theta-i", "1", "--out", str(target)],
        )
        assert result.exit_code == 0
        assert result.output == ""
        doc = json.loads(target.read_text())
        assert doc["command"] == "solve"

    def test_unwritable_out_is_usage_error(self, runner, tmp_path):
        result = runner.invoke(
            main,
            ["solve", "--rho", "1", "--theta-i", "1",
             "--out", str(tmp_path / "missing" / "doc.json")],
        )
        assert result.exit_code == 2


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["solve", "--theta-i", "1"],  # no state
            ["solve", "--rho", "0.5", "--amp-up", "1", "--amp-down", "0",
             "--theta-i", "1"],  # state given both ways at once
            ["solve", "--amp-up", "1", "--theta-i", "1"],  # half an amplitude pair
            ["solve", "--rho", "2", "--theta-i", "1"],  # weight out of range
            ["solve", "--amp-up", "0", "--amp-down", "0", "--theta-i", "1"],
            ["solve", "--amp-up", "banana", "--amp-down", "1", "--theta-i", "1"],
            ["solve", "--rho", "1", "--theta-i", "1", "--format", "csv"],
            ["solve", "--rho", "1", "--theta-i", "1", "--tol", "-1"],
            ["oracle", "--rho", "1", "--theta-i", "1", "--grid", "400"],
            ["oracle", "--rho", "1", "--theta-i", "1", "--grid", "4x4"],
            ["oracle", "--rho", "1", "--theta-i", "1", "--constraint-tol", "0"],
            ["simulate", "--rho", "1", "--theta-i", "1", "--steps", "0"],
        ],
    )
    def test_exit_code_two(self, runner, argv):
        assert runner.invoke(main, argv).exit_code == 2

    def test_version(self, runner):
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output
