from __future__ import annotations

import json
from fractions import Fraction

import pytest

from conftest import two_curve_document
from translen.configuration.config_loader import PACKAGE_EXAMPLE
from translen.exceptions import RangeError
from translen.report.report_cli import main
from translen.report.sweep import SweepRow, check_range, rows_to_csv, run_sweep

SWEEP_HEADER = "parameter,lower_bound,upper_bound,j,dilatation,normalized_upper,normalized_lower"


def _sweep_settings(cap):
    return {
        "sweep": {"parameter_cap": cap, "workers": 2, "progress": False},
        "output": {"format": "text"},
        "csv": {"float_precision": 12},
    }


class TestLowerCommand:
    def test_torelli_text(self, capsys):
        assert main(["lower", "--group", "torelli", "-g", "2"]) == 0
        out = capsys.readouterr().out
        assert "bound: 1/96" in out
        assert "q = 1, r = 18, k = 84, w = 96" in out
        assert "derivation:" in out

    def test_purebraid_json(self, capsys):
        assert main(["lower", "--group", "purebraid", "-n", "10", "--format", "json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["bound"] == {"num": "1", "den": "1412"}
        assert document["derivation"]["q"] == 23

    def test_pmod_prints_both_constants(self, capsys):
        assert main(["lower", "--group", "pmod", "-g", "0", "-n", "10", "--no-trace"]) == 0
        out = capsys.readouterr().out
        assert "w = 1628" in out
        assert "published w: 5084" in out
        assert "discrepancy" in out
        assert "derivation:" not in out

    def test_pmod_proviso_exit_code(self, capsys):
        assert main(["lower", "--group", "pmod", "-g", "2", "-n", "38"]) == 5
        assert "n > 38g - 38" in capsys.readouterr().err

    def test_pmod_sphere_is_a_surface_error(self, capsys):
        assert main(["lower", "--group", "pmod", "-g", "0", "-n", "0"]) == 2
        assert "complexity" in capsys.readouterr().err

    def test_genus_one_torelli_rejected(self, capsys):
        assert main(["lower", "--group", "torelli", "-g", "1"]) == 5
        assert capsys.readouterr().err.startswith("Error:")


class TestCertifyCommand:
    def test_generated_family(self, tmp_path, capsys):
        path = tmp_path / "purebraid7.json"
        assert main(["family", "--kind", "purebraid", "--param", "7", "--out", str(path)]) == 0
        assert "Wrote purebraid family (7)" in capsys.readouterr().out

        assert main(["certify", str(path), "--trace"]) == 0
        out = capsys.readouterr().out
        assert "word: T_a1 T_a2^-1 T_a3 " in out
        assert "j: 4" in out
        assert "bound: 1/2" in out
        assert "witness hit at: 5" in out
        assert "  t=0: a2" in out

    def test_json_with_exact_mode(self, tmp_path, capsys):
        path = tmp_path / "torelli13.json"
        main(["family", "--kind", "torelli", "--param", "13", "--out", str(path)])
        capsys.readouterr()
        assert main(["certify", str(path), "--mode", "exact", "--format", "json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["j"] == 1
        assert document["mode"] == "exact"
        assert "trace" not in document

    def test_spot_check_flag(self, tmp_path, capsys):
        path = tmp_path / "purebraid9.json"
        main(["family", "--kind", "purebraid", "--param", "9", "--out", str(path)])
        assert main(["certify", str(path), "--spot-check"]) == 0
        assert "j: 6" in capsys.readouterr().out

    def test_empty_certificate_exit_code(self, capsys):
        assert main(["certify", str(PACKAGE_EXAMPLE)]) == 3
        assert "witness hit immediately" in capsys.readouterr().err

    def test_validation_failure_prints_report(self, write_document, capsys):
        path = write_document(two_curve_document(word=["a"]))
        assert main(["certify", str(path)]) == 2
        err = capsys.readouterr().err
        assert "penner_completeness: FAIL" in err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["certify", str(tmp_path / "absent.json")]) == 2
        assert "not found" in capsys.readouterr().err

    def test_small_torelli_family_rejected(self, tmp_path, capsys):
        assert main(["family", "--kind", "torelli", "--param", "12", "--out", str(tmp_path / "t.json")]) == 5


class TestDilatationCommand:
    def test_two_curve_example(self, capsys):
        assert main(["dilatation", str(PACKAGE_EXAMPLE), "--format", "json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["dilatation"] == pytest.approx(3 + 2 * 2 ** 0.5, abs=1e-9)
        assert document["pseudo_anosov"] is True
        assert "sanity analogues" in document["note"]

    def test_text_output(self, capsys):
        assert main(["dilatation", str(PACKAGE_EXAMPLE)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("dilatation: 5.828427")
        assert "primitivity exponent: 1" in out

    def test_non_primitive_exit_code(self, write_document, capsys):
        path = write_document(two_curve_document(word=["b"]))
        assert main(["dilatation", str(path)]) == 4

    def test_convergence_failure_exit_code(self, capsys):
        assert main(["dilatation", str(PACKAGE_EXAMPLE), "--max-iters", "1"]) == 4
        assert "residual" in capsys.readouterr().err


class TestSweep:
    def test_rows_in_parameter_order(self):
        rows = run_sweep("purebraid", 5, 9, workers=3, progress=False)
        assert [row.parameter for row in rows] == [5, 6, 7, 8, 9]
        assert [row.j for row in rows] == [2, 3, 4, 5, 6]
        assert all(row.lower_bound < row.upper_bound for row in rows)
        assert rows[0].normalized_upper == pytest.approx(5.0)

    def test_cli_output_is_deterministic(self, capsys):
        outputs = []
        for workers in ("1", "4"):
            args = ["sweep", "--family", "purebraid", "--from", "5", "--to", "8", "--no-progress", "--workers", workers]
            assert main(args) == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        lines = outputs[0].splitlines()
        assert lines[0] == SWEEP_HEADER
        assert lines[1].startswith("5,1/622,1/1,2,")
        assert len(lines) == 5

    def test_empty_range_writes_header_only(self, tmp_path):
        path = tmp_path / "empty.csv"
        args = ["sweep", "--family", "torelli", "--from", "20", "--to", "19", "--csv", str(path)]
        assert main(args) == 0
        assert path.read_text(encoding="utf-8") == SWEEP_HEADER + "\n"

    def test_csv_file(self, tmp_path):
        path = tmp_path / "torelli.csv"
        args = ["sweep", "--family", "torelli", "--from", "13", "--to", "14", "--csv", str(path), "--no-progress"]
        assert main(args) == 0
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[1].startswith("13,1/1152,2/1,1,")
        assert lines[2].startswith("14,1/1248,1/1,2,")

    def test_cap_refused_without_force(self, mocker, capsys):
        mocker.patch("translen.report.sweep.load_config", return_value=_sweep_settings(6))
        args = ["sweep", "--family", "purebraid", "--from", "5", "--to", "7", "--no-progress"]
        assert main(args) == 2
        assert "--force" in capsys.readouterr().err
        assert main(args + ["--force"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 4

    def test_range_checks(self):
        assert check_range("purebraid", 9, 4) == []
        with pytest.raises(RangeError):
            check_range("torelli", 12, 14)
        with pytest.raises(RangeError):
            check_range("braid", 4, 5)

    def test_float_precision(self):
        row = SweepRow(4, Fraction(1, 464), Fraction(2), 1, 1.0 / 3.0, 8.0, 4 / 464)
        text = rows_to_csv([row], precision=4)
        assert text.splitlines()[1] == "4,1/464,2/1,1,0.3333,8,0.008621"


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert "translen 0.1.0" in capsys.readouterr().out
