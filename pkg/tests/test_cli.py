"""Command line surface: verbs, formats, exit codes, and error reporting."""

import io
import json
import subprocess
import sys

import pytest

from latmult import GUARD_ENV, syt_sum, syt_sum_squares
from latmult.cli import EXIT_GUARD, EXIT_OK, EXIT_USAGE, main


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_main_stdin(capsys, monkeypatch, text, *argv):
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    return run_main(capsys, *argv)


class TestCountTableaux:
    def test_scalar_tsv(self, capsys):
        code, out, _ = run_main(capsys, "count", "tableaux", "--ell", "6", "--max-height", "5")
        assert code == EXIT_OK
        assert out.strip() == "75"

    def test_scalar_json(self, capsys):
        code, out, _ = run_main(
            capsys, "count", "tableaux", "--ell", "5", "--max-height", "4", "--format", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload == {"ell": 5, "max_height": 4, "count": "25"}

    def test_per_shape_table(self, capsys):
        code, out, _ = run_main(
            capsys, "count", "tableaux", "--ell", "5", "--max-height", "4", "--per-shape"
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "lambda\tf"
        assert lines[1] == "[5]\t1"
        assert lines[-1] == "total\t25"
        body = [line.split("\t") for line in lines[1:-1]]
        assert [int(f) for _, f in body] == [1, 4, 5, 6, 5, 4]


class TestCountPaths:
    @pytest.mark.parametrize("method", ["formula", "brute"])
    def test_admissible_scalar(self, capsys, method):
        code, out, _ = run_main(
            capsys, "count", "paths", "--ell", "4", "--k", "3", "--method", method
        )
        assert code == EXIT_OK
        assert out.strip() == str(syt_sum_squares(4, 3))

    @pytest.mark.parametrize("method", ["formula", "brute"])
    def test_self_conjugate_scalar(self, capsys, method):
        code, out, _ = run_main(
            capsys, "count", "self-conjugate", "--ell", "4", "--k", "3", "--method", method
        )
        assert code == EXIT_OK
        assert out.strip() == str(syt_sum(4, 3))

    def test_per_shape_columns(self, capsys):
        code, out, _ = run_main(
            capsys, "count", "paths", "--ell", "4", "--k", "3", "--per-shape"
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "lambda\tf\tf_squared\tbrute_admissible\tbrute_self_conjugate"
        for line in lines[1:]:
            _, f, f2, adm, fixed = line.split("\t")
            assert int(f2) == int(f) ** 2
            assert int(adm) == int(f2)
            assert int(fixed) == int(f)

    def test_per_shape_json(self, capsys):
        code, out, _ = run_main(
            capsys, "count", "paths", "--ell", "3", "--k", "3", "--per-shape",
            "--format", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert [row["partition"] for row in payload["per_shape"]] == [[3], [2, 1], [1, 1, 1]]
        for row in payload["per_shape"]:
            assert row["brute_admissible"] == row["f_squared"]
            assert row["brute_self_conjugate"] == row["f"]

    def test_guard_exit_code(self, capsys, monkeypatch):
        monkeypatch.delenv(GUARD_ENV, raising=False)
        code, out, err = run_main(
            capsys, "count", "paths", "--ell", "9", "--k", "5", "--method", "brute"
        )
        assert code == EXIT_GUARD
        assert out == ""
        assert "resource guard" in err
        assert "--allow-large" in err


class TestCountAvoiders:
    @pytest.mark.parametrize("method", ["brute", "rsk", "formula"])
    def test_catalan_entry(self, capsys, method):
        code, out, _ = run_main(
            capsys, "count", "avoiders", "--ell", "7", "--k", "2", "--method", method
        )
        assert code == EXIT_OK
        assert out.strip() == "429"

    def test_json_metadata(self, capsys):
        code, out, _ = run_main(
            capsys, "count", "avoiders", "--ell", "5", "--k", "4", "--format", "json"
        )
        assert code == EXIT_OK
        assert json.loads(out) == {"ell": 5, "k": 4, "method": "formula", "count": "119"}


class TestMult:
    def test_json_golden(self, capsys):
        code, out, _ = run_main(capsys, "mult", "--n", "10", "--k", "4", "--ell", "5")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload == {
            "n": 10,
            "k": 4,
            "ell": 5,
            "gamma": [5, 4, 3, 2, 1, 0, 1, 2, 3, 4],
            "pairings": [2, 0, 0, 0, 0, 2, 0, 0, 0, 0],
            "multiplicity": "119",
        }

    def test_tsv_layout(self, capsys):
        code, out, _ = run_main(
            capsys, "mult", "--n", "7", "--k", "3", "--ell", "3", "--format", "tsv"
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "gamma\t[3,2,1,0,0,1,2]"
        assert lines[2].startswith("multiplicity\t")

    def test_out_of_range_ell(self, capsys):
        code, out, err = run_main(capsys, "mult", "--n", "6", "--k", "3", "--ell", "4")
        assert code == EXIT_USAGE
        assert "floor(n/2)" in err


class TestMap:
    def test_tau_then_sigma_pipe(self, capsys, monkeypatch):
        tableau = [[1, 3], [2, 6], [4], [5]]
        code, out, _ = run_main_stdin(
            capsys, monkeypatch, json.dumps(tableau), "map", "tau", "--k", "4"
        )
        assert code == EXIT_OK
        sequence = json.loads(out)
        assert sequence == {
            "ell": 6,
            "k": 4,
            "paths": ["RURRRURUUURU", "RURURURURURU", "RURUUURRRURU"],
        }
        code, out, _ = run_main_stdin(capsys, monkeypatch, json.dumps(sequence), "map", "sigma")
        assert code == EXIT_OK
        assert json.loads(out) == tableau

    def test_tau_default_k_is_height(self, capsys, monkeypatch):
        code, out, _ = run_main_stdin(capsys, monkeypatch, "[[1],[2],[3]]", "map", "tau")
        assert code == EXIT_OK
        assert json.loads(out)["k"] == 3

    def test_tau_tsv_lists_paths(self, capsys, monkeypatch):
        code, out, _ = run_main_stdin(
            capsys, monkeypatch, "[[1,2]]", "map", "tau", "--k", "3", "--format", "tsv"
        )
        assert code == EXIT_OK
        assert out.splitlines() == ["RRUU", "RRUU"]

    def test_sigma_tsv_lists_rows(self, capsys, monkeypatch):
        payload = {"ell": 2, "k": 3, "paths": ["RRUU", "RRUU"]}
        code, out, _ = run_main_stdin(
            capsys, monkeypatch, json.dumps(payload), "map", "sigma", "--format", "tsv"
        )
        assert code == EXIT_OK
        assert out.splitlines() == ["1\t2"]

    def test_malformed_json_reports_position(self, capsys, monkeypatch):
        code, out, err = run_main_stdin(capsys, monkeypatch, "[[1,3],", "map", "tau")
        assert code == EXIT_USAGE
        assert "malformed JSON at line 1" in err
        assert "char" in err

    def test_semantic_error_is_usage(self, capsys, monkeypatch):
        code, _, err = run_main_stdin(capsys, monkeypatch, "[[2,1]]", "map", "tau")
        assert code == EXIT_USAGE
        assert "error:" in err


class TestLds:
    def test_word_argument(self, capsys):
        code, out, _ = run_main(capsys, "lds", "26873415")
        assert code == EXIT_OK
        assert out.strip() == "4"

    def test_word_on_stdin(self, capsys, monkeypatch):
        code, out, _ = run_main_stdin(capsys, monkeypatch, "26873415\n", "lds")
        assert code == EXIT_OK
        assert out.strip() == "4"

    def test_json_format(self, capsys):
        code, out, _ = run_main(capsys, "lds", "312", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out) == {"word": [3, 1, 2], "lds": 2}

    def test_bad_word(self, capsys):
        code, _, err = run_main(capsys, "lds", "104")
        assert code == EXIT_USAGE
        assert "error:" in err


class TestVerify:
    def test_small_grid_passes(self, capsys):
        code, out, _ = run_main(capsys, "verify", "--ell-max", "3", "--k-max", "3")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert lines[-1].endswith("checks passed")

    def test_json_format(self, capsys):
        code, out, _ = run_main(
            capsys, "verify", "--ell-max", "2", "--k-max", "2", "--format", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["passed"] == payload["total"] > 0
        assert all(check["ok"] for check in payload["checks"])


class TestUsageErrors:
    def test_missing_required_option(self, capsys):
        code, _, err = run_main(capsys, "count", "paths", "--ell", "4")
        assert code == EXIT_USAGE

    def test_unknown_command(self, capsys):
        code, _, _ = run_main(capsys, "frobnicate")
        assert code == EXIT_USAGE

    def test_bad_method_choice(self, capsys):
        code, _, _ = run_main(
            capsys, "count", "avoiders", "--ell", "4", "--k", "2", "--method", "guess"
        )
        assert code == EXIT_USAGE


class TestInstalledEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "latmult", "count", "tableaux",
             "--ell", "5", "--max-height", "4"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_OK
        assert proc.stdout.strip() == "25"

    def test_console_script(self):
        proc = subprocess.run(
            ["latmult", "mult", "--n", "10", "--k", "4", "--ell", "5"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_OK
        assert json.loads(proc.stdout)["multiplicity"] == "119"

    def test_verify_deterministic_output(self):
        command = [sys.executable, "-m", "latmult", "verify", "--ell-max", "4", "--k-max", "4"]
        first = subprocess.run(command, capture_output=True)
        second = subprocess.run(command, capture_output=True)
        assert first.returncode == second.returncode == EXIT_OK
        assert first.stdout == second.stdout
        assert first.stdout.endswith(b"checks passed\n")
