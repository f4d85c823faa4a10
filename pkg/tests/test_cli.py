"""Command-line interface: subcommand behavior, exit codes, output formats,
and determinism."""

import json
import subprocess
import sys

import pytest

from basechange.cli import main


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestChartable:
    def test_sl2_q3_csv_has_seven_character_rows(self, capsys):
        code, out, _ = run(["chartable", "sl2", "--q", "3", "--format", "csv"], capsys)
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].startswith("class,")
        assert lines[1].startswith("size,")
        chi_rows = [l for l in lines if l.startswith("chi_")]
        assert len(chi_rows) == 7

    def test_json_format(self, capsys):
        code, out, _ = run(["chartable", "sl2", "--q", "3", "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["order"] == 24
        assert len(data["irreducibles"]) == 7
        assert len(data["classes"]) == 7

    def test_bad_field_size_exits_2(self, capsys):
        code, _, err = run(["chartable", "sl2", "--q", "4"], capsys)
        assert code == 2
        assert "error:" in err

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "table.csv"
        code, out, _ = run(
            ["chartable", "sl2", "--q", "3", "--out", str(target)], capsys
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("class,")


class TestCuspidal:
    def test_sl2_default_parameter(self, capsys):
        code, out, _ = run(["cuspidal", "sl2", "--q", "3"], capsys)
        assert code == 0
        chi_rows = [l for l in out.strip().split("\n") if l.startswith("chi_0,")]
        assert len(chi_rows) == 1
        assert chi_rows[0].startswith('chi_0,"cyc(4)[2,0]"')

    def test_gl2_json_params(self, capsys):
        code, out, _ = run(
            ["cuspidal", "gl2", "--q", "3", "--theta", "1", "--format", "json"],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert data["family"] == "gl2"
        assert data["params"] == {"theta": 1}
        assert len(data["irreducibles"]) == 1

    def test_u2_pair_parameter(self, capsys):
        code, out, _ = run(
            ["cuspidal", "u2", "--q", "3", "--theta", "1,3", "--format", "json"],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert data["params"] == {"theta1": 1, "theta2": 3}

    def test_nonregular_sl2_exits_2(self, capsys):
        code, _, err = run(["cuspidal", "sl2", "--q", "3", "--theta", "2"], capsys)
        assert code == 2
        assert "reducible parameter" in err

    def test_nonregular_gl2_exits_2(self, capsys):
        code, _, err = run(["cuspidal", "gl2", "--q", "3", "--theta", "0"], capsys)
        assert code == 2
        assert "non-regular" in err

    def test_equal_u2_pair_exits_2(self, capsys):
        code, _, err = run(["cuspidal", "u2", "--q", "3", "--theta", "1,1"], capsys)
        assert code == 2
        assert "not regular" in err

    def test_malformed_u2_pair_exits_2(self, capsys):
        code, _, err = run(["cuspidal", "u2", "--q", "3", "--theta", "1"], capsys)
        assert code == 2
        assert "comma-separated" in err


class TestVerify:
    def test_level0_passes(self, capsys):
        code, out, _ = run(["verify", "level0", "--q", "3"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["suite"] == "level0_basechange"
        assert all(c["status"] == "pass" for c in data["checks"])

    def test_full_suite_name_accepted(self, capsys):
        code, out, _ = run(["verify", "level0_basechange", "--q", "3"], capsys)
        assert code == 0

    def test_skipped_suite_exits_0(self, capsys):
        code, out, _ = run(["verify", "normbij", "--q", "5"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["checks"][0]["status"] == "skipped"

    def test_unknown_suite_exits_2(self, capsys):
        code, _, _ = run(["verify", "nonsense"], capsys)
        assert code == 2

    def test_unknown_flag_exits_2(self, capsys):
        code, _, _ = run(["verify", "level0", "--badflag"], capsys)
        assert code == 2

    def test_report_written_to_out(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code, out, _ = run(
            ["verify", "level0", "--q", "3", "--out", str(target)], capsys
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["suite"] == "level0_basechange"

    def test_thread_invariance_bytes(self, capsys):
        _, out1, _ = run(["verify", "heis", "--threads", "1"], capsys)
        _, out2, _ = run(["verify", "heis", "--threads", "3"], capsys)
        assert out1 == out2

    def test_repeat_run_bytes(self, capsys):
        _, out1, _ = run(["verify", "endoscopic", "--q", "3"], capsys)
        _, out2, _ = run(["verify", "endoscopic", "--q", "3"], capsys)
        assert out1 == out2


class TestHeis:
    def test_reports_negative_epsilon(self, capsys):
        code, out, _ = run(
            ["heis", "--p", "3", "--a", "1", "--d", "4", "--realization", "nonsplit"],
            capsys,
        )
        assert code == 0
        assert "epsilon = -1" in out

    def test_positive_epsilon_branch(self, capsys):
        code, out, _ = run(
            ["heis", "--p", "5", "--a", "1", "--d", "4", "--realization", "split"],
            capsys,
        )
        assert code == 0
        assert "epsilon = 1" in out

    def test_impossible_realization_exits_2(self, capsys):
        code, _, err = run(
            ["heis", "--p", "3", "--a", "1", "--d", "5", "--realization", "split"],
            capsys,
        )
        assert code == 2
        assert "realization impossible" in err

    def test_missing_required_flag_exits_2(self, capsys):
        code, _, _ = run(["heis", "--p", "3", "--d", "4"], capsys)
        assert code == 2


class TestHelp:
    def test_top_level_help_exits_0(self, capsys):
        code, out, _ = run(["--help"], capsys)
        assert code == 0
        assert "chartable" in out and "verify" in out

    @pytest.mark.parametrize("sub", ["chartable", "cuspidal", "verify", "heis"])
    def test_subcommand_help(self, sub, capsys):
        code, out, _ = run([sub, "--help"], capsys)
        assert code == 0
        assert "--out" in out

    def test_no_subcommand_exits_2(self, capsys):
        code, _, _ = run([], capsys)
        assert code == 2


class TestModuleEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "basechange.cli", "chartable", "sl2", "--q", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("class,")

    def test_module_invocation_verify_twice_identical(self):
        cmd = [sys.executable, "-m", "basechange.cli", "verify", "level0", "--q", "3"]
        p1 = subprocess.run(cmd, capture_output=True)
        p2 = subprocess.run(cmd, capture_output=True)
        assert p1.returncode == 0 and p2.returncode == 0
        assert p1.stdout == p2.stdout
