import json

import numpy as np
import pytest

from sic.cli import main
from sic.codes import BinaryCode
from sic.matrixfile import read_matrix, write_matrix


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBounds:
    def test_recurrent_table_reciprocals(self, capsys):
        code, out, _ = run(capsys, "bounds", "recurrent-upper", "--z-max", "17")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 17
        assert "reciprocal=3.1063" in lines[1]
        assert "reciprocal=54.2612" in lines[16]

    def test_upper_zu_value(self, capsys):
        code, out, _ = run(capsys, "bounds", "upper-zu", "--z", "3", "--u", "2")
        assert code == 0
        assert "value=0.074487" in out

    def test_threshold_lower_json_witness(self, capsys):
        code, out, _ = run(capsys, "bounds", "threshold-lower", "--u", "2", "--s", "5",
                           "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert rows[0]["optimizer"]["beta"] > 0
        from sic.bounds import threshold_objective
        assert rows[0]["value"] == pytest.approx(
            threshold_objective(rows[0]["optimizer"]["beta"], 2, 5), abs=1e-9)

    def test_csv_schema(self, capsys):
        code, out, _ = run(capsys, "bounds", "lower-zu", "--z", "3:4", "--u", "2",
                           "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "kind,z,u,s,l,value,witness,note"
        assert len(lines) == 3

    def test_byte_identical_runs(self, capsys):
        _, out1, _ = run(capsys, "bounds", "lower-z1", "--z", "2:4", "--format", "json")
        _, out2, _ = run(capsys, "bounds", "lower-z1", "--z", "2:4", "--format", "json")
        assert out1 == out2

    def test_missing_parameter(self, capsys):
        code, _, err = run(capsys, "bounds", "upper-zu", "--z", "3")
        assert code == 2
        assert "needs" in err

    def test_bad_kind_usage(self, capsys):
        code, _, _ = run(capsys, "bounds", "nope")
        assert code == 2

    def test_asymptotic(self, capsys):
        code, out, _ = run(capsys, "bounds", "asymptotic", "--form", "exact-size-upper",
                           "--s", "10")
        assert code == 0
        assert "value=0.132877" in out


class TestConstruct:
    @pytest.mark.parametrize("q,k,r,t,N,w", [
        (5, 5, 2, 125, 20, 4),
        (7, 6, 3, 343, 35, 5),
        (8, 5, 2, 512, 56, 7),
    ])
    def test_known_parameter_triples(self, capsys, tmp_path, q, k, r, t, N, w):
        out_path = tmp_path / "code.sic"
        code, out, _ = run(capsys, "construct", str(q), str(k), str(r), str(out_path))
        assert code == 0
        assert f"t={t} N={N} w={w}" in out
        stored = read_matrix(out_path)
        assert (stored.N, stored.t, stored.weight) == (N, t, w)

    def test_invalid_parameters(self, capsys, tmp_path):
        code, _, err = run(capsys, "construct", "6", "3", "1", str(tmp_path / "x"))
        assert code == 2
        assert "error" in err


class TestVerify:
    def test_cover_free_failure_prints_witness(self, capsys, tmp_path):
        path = tmp_path / "ones.sic"
        write_matrix(BinaryCode(bits=np.ones((2, 2), dtype=np.uint8)), path)
        code, out, _ = run(capsys, "verify", str(path), "cover-free", "1", "1")
        assert code == 1
        assert "not satisfied" in out
        assert "witness: U=0 Z=1" in out

    def test_identity_cover_free(self, capsys, tmp_path):
        path = tmp_path / "id.sic"
        write_matrix(BinaryCode(bits=np.eye(5, dtype=np.uint8), weight=1), path)
        code, out, _ = run(capsys, "verify", str(path), "cover-free", "2", "1")
        assert code == 0
        assert "satisfied" in out

    def test_d_cert(self, capsys, tmp_path, ex3):
        path = tmp_path / "ex3.sic"
        write_matrix(ex3, path)
        code, out, _ = run(capsys, "verify", str(path), "d-cert", "10", "3")
        assert code == 0 and "certified" in out
        code, out, _ = run(capsys, "verify", str(path), "d-cert", "11", "3")
        assert code == 1 and "not certified" in out

    def test_d_cert_non_constant_weight(self, capsys, tmp_path):
        bits = np.eye(4, dtype=np.uint8)
        bits[2, 0] = 1
        path = tmp_path / "ragged.sic"
        write_matrix(BinaryCode(bits=bits), path)
        code, _, err = run(capsys, "verify", str(path), "d-cert", "2", "1")
        assert code == 2
        assert "weight" in err

    def test_budget_exit_code(self, capsys, tmp_path, ex3):
        path = tmp_path / "ex3.sic"
        write_matrix(ex3, path)
        code, _, err = run(capsys, "verify", str(path), "d-code", "6", "2")
        assert code == 3
        assert "budget" in err

    def test_budget_env_override(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "id.sic"
        write_matrix(BinaryCode(bits=np.eye(6, dtype=np.uint8), weight=1), path)
        monkeypatch.setenv("SIC_BUDGET", "1")
        code, _, err = run(capsys, "verify", str(path), "cover-free", "2", "1")
        assert code == 3
        monkeypatch.setenv("SIC_BUDGET", "1000000")
        code, _, _ = run(capsys, "verify", str(path), "cover-free", "2", "1")
        assert code == 0

    def test_design_with_labels(self, capsys, tmp_path):
        path = tmp_path / "id.sic"
        write_matrix(BinaryCode(bits=np.eye(7, dtype=np.uint8), weight=1), path)
        code, out, _ = run(capsys, "verify", str(path), "design", "1", "2", "at-most",
                           "0", "1")
        assert code == 0 and "satisfied" in out

    def test_threshold_bar(self, capsys, tmp_path):
        path = tmp_path / "id.sic"
        write_matrix(BinaryCode(bits=np.eye(7, dtype=np.uint8), weight=1), path)
        code, out, _ = run(capsys, "verify", str(path), "threshold-bar", "1", "2")
        assert code == 0

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.sic"
        path.write_text("garbage\n")
        code, _, err = run(capsys, "verify", str(path), "cover-free", "1", "1")
        assert code == 2
        assert "line 1" in err


class TestSearch:
    def test_known_triple(self, capsys):
        code, out, _ = run(capsys, "search", "2", "12")
        assert code == 0
        assert out.startswith("q=8 lambda=3 N=56")

    def test_larger_strength(self, capsys):
        code, out, _ = run(capsys, "search", "8", "12")
        assert code == 0
        assert "q=16 lambda=2 N=272" in out

    def test_infeasible(self, capsys):
        code, out, _ = run(capsys, "search", "2", "1")
        assert code == 1
        assert "no feasible" in out


class TestExamples:
    def test_full_run(self, capsys):
        code, out, _ = run(capsys, "examples")
        assert code == 0
        assert "all checks passed" in out
        assert "t(20,3,2)>=125" in out
        assert "t(35,4,2)>=343" in out
        assert "t(56,6,2)>=512" in out
        assert "t(56,10,3)>=512" in out
        assert "exhaustive d-code s=3 l=2: PASS (38765500 tuples)" in out
        assert "certificate s=11 l=3: FAIL (expected)" in out

    def test_repeat_run_byte_identical(self, capsys):
        _, out1, _ = run(capsys, "examples", "--budget", "1000")
        _, out2, _ = run(capsys, "examples", "--budget", "1000")
        assert out1 == out2

    def test_small_budget_skips_exhaustive(self, capsys):
        code, out, _ = run(capsys, "examples", "--budget", "1000")
        assert code == 0
        assert "SKIPPED" in out
