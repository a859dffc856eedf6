from __future__ import annotations

import json
import math
import subprocess
import sys

import pytest

from conftest import fixture_path
from zerocert.cli import EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_OK, main


def run(capsys, *args):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


ZETA_103 = fixture_path("zeta_0_103.txt")
ZETA_1000 = fixture_path("zeta_990_1030.txt")


class TestCertifyCommand:
    def test_initial_segment_certified(self, capsys):
        code, out, _ = run(capsys, "certify", "--zeros", ZETA_103, "--R", 100, "--h", 2.5)
        assert code == EXIT_OK
        assert "ZetaR" in out and "CERTIFIED_COMPLETE" in out

    def test_truncated_list_is_inconclusive(self, capsys, tmp_path, zeta_1000):
        path = tmp_path / "cut.txt"
        zeta_1000.between(1000.0, 1020.0).save(path)
        code, out, _ = run(capsys, "certify", "--zeros", path, "--a", 1000, "--b", 1020, "--h", 2.5)
        assert code == EXIT_INCONCLUSIVE
        assert "guard deficit" in out and "C(a) = 2.4133" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "certify", "--zeros", ZETA_1000, "--a", 1000, "--b", 1020, "--h", 2.5,
                           "--theorem", "general", "--output", "json")
        assert code == EXIT_OK
        d = json.loads(out)
        assert d["theorem"] == "General" and d["verdict"] == "CERTIFIED_COMPLETE"

    def test_elliptic_by_builtin_name(self, capsys):
        code, out, _ = run(capsys, "certify", "--descriptor", "11a1", "--zeros", fixture_path("ec11a1_m25_25.txt"),
                           "--a", 0, "--b", 20)
        assert code == EXIT_OK and "Elliptic" in out

    def test_descriptor_file(self, capsys):
        code, out, _ = run(capsys, "certify", "--descriptor", fixture_path("gaussian.json"),
                           "--zeros", fixture_path("gaussian_m60_60.txt"), "--a", 20, "--b", 30)
        assert code == EXIT_OK and "General" in out

    def test_malformed_zero_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("# delta=1e-9\n14.1\nfourteen\n")
        code, _, err = run(capsys, "certify", "--zeros", bad, "--R", 100)
        assert code == EXIT_INPUT
        assert f"{bad}:3:" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "certify", "--zeros", "/nonexistent/zeros.txt", "--R", 100)
        assert code == EXIT_INPUT and "error" in err

    @pytest.mark.parametrize("args", [
        ["certify", "--zeros", ZETA_103, "--R", "100", "--a", "1", "--b", "2"],
        ["certify", "--zeros", ZETA_103, "--a", "1"],
        ["certify", "--zeros", ZETA_103, "--a", "5", "--b", "1", "--h", "2"],
        ["certify", "--zeros", ZETA_103, "--R", "100", "--theorem", "hecke"],
        ["certify", "--R", "100"],
        ["certify", "--zeros", ZETA_103, "--theorem", "nonsense"],
        ["frobnicate"],
    ])
    def test_usage_errors(self, capsys, args):
        code, _, _ = run(capsys, *args)
        assert code == EXIT_INPUT

    def test_hypothesis_violation_is_an_input_error(self, capsys):
        code, _, err = run(capsys, "certify", "--zeros", ZETA_103, "--R", 10)
        assert code == EXIT_INPUT and "R-range" in err


class TestWindowCommand:
    def test_zeta_cutoff_at_a_million(self, capsys):
        code, out, _ = run(capsys, "window", "--family", "zeta-ab", "--T", "1e6", "--h", 2.5)
        assert code == EXIT_OK
        assert "C(1e+06) = 2.964891" in out

    def test_zeta_initial_segment_range(self, capsys):
        code, out, _ = run(capsys, "window", "--family", "zeta-r", "--R", 100, "--h", 2.5, "--output", "json")
        d = json.loads(out)
        c = 2.5 / math.pi * (math.log(math.log(100)) + 0.4)
        assert d["range"] == [0.0, pytest.approx(100 + c)]
        assert d["max_delta"] == pytest.approx(0.01 * 2.5 / (2 * d["expected_zeros"]))

    def test_advisory_note_below_a_million(self, capsys):
        _, out, _ = run(capsys, "window", "--family", "zeta-r", "--R", 100)
        assert "advisory" in out

    def test_elliptic(self, capsys):
        code, out, _ = run(capsys, "window", "--family", "elliptic", "--a", 5, "--b", 20, "--output", "json")
        d = json.loads(out)
        assert d["cutoff_b"] == pytest.approx(math.log(math.log(4400)) + 3)

    def test_count_from_zero_file(self, capsys, zeta_1000):
        _, out, _ = run(capsys, "window", "--family", "zeta-ab", "--a", 1000, "--b", 1020, "--h", 2.5,
                        "--zeros", ZETA_1000, "--output", "json")
        d = json.loads(out)
        lo, hi = d["range"]
        assert d["expected_zeros"] == zeta_1000.count_between(lo, hi)

    def test_undefined_cutoff(self, capsys):
        code, _, err = run(capsys, "window", "--family", "elliptic", "--a", 0, "--b", 20)
        assert code == EXIT_INPUT and "log log" in err


class TestCheckCommand:
    def test_complete_list(self, capsys):
        code, out, _ = run(capsys, "check", "--zeros", fixture_path("zeta_m80_80.txt"), "--a", 0, "--b", 50, "--h", 3)
        assert code == EXIT_OK and "ok" in out

    def test_missing_zero(self, capsys, tmp_path, zeta_80):
        path = tmp_path / "z.txt"
        i = zeta_80.ordinates.index(next(g for g in zeta_80 if g > 20))
        zeta_80.without_index(i).save(path)
        code, out, _ = run(capsys, "check", "--zeros", path, "--a", 0, "--b", 50, "--h", 3)
        assert code == EXIT_INCONCLUSIVE and "exceeded" in out

    def test_needs_window(self, capsys):
        code, _, _ = run(capsys, "check", "--zeros", ZETA_103)
        assert code == EXIT_INPUT


class TestPrimesCommand:
    def test_zeta_table(self, capsys):
        code, out, _ = run(capsys, "primes", "--output", "json")
        d = json.loads(out)
        assert code == EXIT_OK
        assert d["M"] == 137 and d["tail_bound"] < 0.043
        assert len(d["rows"]) == 46
        assert d["rows"][2] == {"p": 2, "m": 2, "c": [0.5, 0.0], "term": pytest.approx(d["rows"][2]["term"])}

    def test_elliptic_table(self, capsys):
        code, out, _ = run(capsys, "primes", "--descriptor", "11a1", "--output", "json")
        d = json.loads(out)
        assert d["M"] == 29
        rows = {(r["p"], r["m"]): r["c"][0] for r in d["rows"]}
        assert rows[(11, 1)] == 1.0
        assert (19, 1) not in rows  # a_19 = 0
        assert max(p ** m for p, m in rows) <= 29

    def test_empty_generic_has_no_rows(self, capsys):
        code, out, _ = run(capsys, "primes", "--descriptor", fixture_path("generic_empty.json"), "--M", 1000)
        assert code == EXIT_OK
        assert "0 nonzero terms" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zerocert", "window", "--family", "zeta-ab", "--T", "1e6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "2.964891" in proc.stdout
