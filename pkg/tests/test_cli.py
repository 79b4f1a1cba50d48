"""End-to-end command-line runs.

Each test invokes ``main(argv)`` in-process and checks three things: the
exit status policy (0 exactly when no validation failure), the mandatory
header (tool version, seed, one sha256 digest per input file), and the
payload itself against values pinned elsewhere in the suite.
"""
import json
from pathlib import Path

import pytest

from bicross import __version__, io
from bicross.cli import main

INPUTS = Path(__file__).resolve().parents[1] / "inputs"
S3 = str(INPUTS / "s3.group")
S5 = str(INPUTS / "s5.group")
C2 = str(INPUTS / "c2.group")
OMEGA2 = str(INPUTS / "c2_omega2.omega")
SIGMA0 = str(INPUTS / "s3_sigma_trivial.cocycle")
TAU0 = str(INPUTS / "s3_tau_trivial.cocycle")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _header_ok(text, n_inputs=1):
    lines = text.splitlines()
    assert lines[0] == f"# bicross {__version__}"
    assert lines[1].startswith("# seed ")
    for k in range(n_inputs):
        _, _, path, _, digest = lines[2 + k].split()
        assert lines[2 + k].startswith("# input ")
        assert len(digest) == 64 and int(digest, 16) >= 0
        with open(path, encoding="utf-8") as fh:
            assert io.sha256_hex(fh.read()) == digest


# -- factorize --------------------------------------------------------------------


def test_factorize_proper_s3(capsys):
    code, out, _ = run(capsys, "factorize", S3, "--proper")
    assert code == 0
    _header_ok(out)
    assert "6 exact factorizations" in out
    assert out.count("factorization ") == 6
    assert out.count("|F| = 2") == 3 and out.count("|F| = 3") == 3


def test_factorize_machine_format(capsys):
    code, out, _ = run(capsys, "factorize", S3, "--proper",
                       "--format", "machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == __version__ and doc["seed"] == 0
    assert len(doc["inputs"]) == 1 and len(doc["inputs"][0]["sha256"]) == 64
    assert len(doc["factorizations"]) == 6
    assert {f["f_order"] for f in doc["factorizations"]} == {2, 3}


# -- build ------------------------------------------------------------------------


def test_build_split_s3_passes_axioms(capsys, tmp_path):
    dump = tmp_path / "h6.hopf"
    code, out, _ = run(capsys, "build", S3, "--f", "(1 2)",
                       "--gamma", "(1 2 3)", "--out", str(dump))
    assert code == 0
    _header_ok(out)
    assert "[ok]" in out and "dimension 6" in out
    text = dump.read_text()
    assert text.startswith("hopf k^Gamma#kF[S3;3x2;N=1] dim 6 cyclotomic 1")
    assert io.write_hopf(io.parse_hopf(text)) == text  # byte-exact dump


def test_build_trivial_cocycle_files(capsys):
    code, out, _ = run(capsys, "build", S3, "--f", "(1 2)",
                       "--gamma", "(1 2 3)",
                       "--sigma", SIGMA0, "--tau", TAU0)
    assert code == 0
    _header_ok(out, n_inputs=3)
    assert "[ok]" in out


def test_build_tampered_cocycle_fails_named(capsys, tmp_path):
    bad = tmp_path / "bad.cocycle"
    bad.write_text("cocycle sigma\norder 2\n1 1 1 1\n")
    code, _, err = run(capsys, "build", S3, "--f", "(1 2)",
                       "--gamma", "(1 2 3)", "--sigma", str(bad))
    assert code == 1
    assert "cocycle validation failed" in err and "sigma" in err


def test_build_rejects_non_factorization(capsys):
    code, _, err = run(capsys, "build", S3, "--f", "(1 2)",
                       "--gamma", "(1 3)")
    assert code == 1
    assert "not an exact factorization" in err


def test_build_rejects_foreign_permutation(capsys):
    code, _, err = run(capsys, "build", S3, "--f", "(1 4)",
                       "--gamma", "(1 2 3)")
    assert code == 1
    assert "--f" in err


def test_build_machine_carries_exact_hopf(capsys):
    code, out, _ = run(capsys, "build", S3, "--f", "(1 2 3)",
                       "--gamma", "(1 2)", "--format", "machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["axioms"]["ok"] is True
    assert doc["hopf"]["dim"] == 6
    assert all(isinstance(k, int) and isinstance(q, str)
               for _, _, _, coeff in doc["hopf"]["mul"] for q, k in coeff)


# -- irreps / double --------------------------------------------------------------


def test_irreps_split_s3(capsys):
    code, out, _ = run(capsys, "irreps", S3, "--f", "(1 2)",
                       "--gamma", "(1 2 3)")
    assert code == 0
    assert "degrees [1, 1, 2]" in out
    assert "sum of squared degrees: 6" in out
    assert "every degree divides |F| = 2: yes" in out


def test_double_s3_spectrum(capsys):
    code, out, _ = run(capsys, "double", S3)
    assert code == 0
    assert "8 irreducibles" in out
    assert "degrees [1, 1, 2, 2, 2, 2, 3, 3]" in out
    assert "sum of squared degrees: 36 (|G|^2 = 36)" in out


def test_double_twisted_c2(capsys):
    code, out, _ = run(capsys, "double", C2, "--omega", OMEGA2)
    assert code == 0
    _header_ok(out, n_inputs=2)
    assert "4 irreducibles" in out and "degrees [1, 1, 1, 1]" in out


# -- fusion -----------------------------------------------------------------------


def test_fusion_s3_blocks_and_oracle(capsys):
    code, out, _ = run(capsys, "fusion", S3)
    assert code == 0
    assert "8 fusion subcategories" in out
    assert out.count("triple ") == 8
    assert out.count("  K1: order") == 8 and out.count("  B: order") == 8
    assert "8 fixed points, matching the classification" in out


def test_fusion_twisted_reports_limitation(capsys):
    code, out, _ = run(capsys, "fusion", C2, "--omega", OMEGA2)
    assert code == 0
    assert out.count("triple ") == 5
    assert "unavailable for a nontrivial 3-cocycle" in out


def test_fusion_machine_objects(capsys):
    code, out, _ = run(capsys, "fusion", S3, "--format", "machine")
    assert code == 0
    doc = json.loads(out)
    dims = sorted(t["dimension"] for t in doc["triples"])
    assert dims == [1, 2, 6, 6, 6, 6, 18, 36]
    assert doc["oracle"] == {"fixed_points": 8, "match": True}
    unit = next(t for t in doc["triples"] if t["dimension"] == 1)
    assert unit["objects"] == ["((), pi0)"]


# -- obstruct ---------------------------------------------------------------------


def test_obstruct_s5_f24_noqt(capsys):
    code, out, _ = run(capsys, "obstruct", S5, "--f", "(1 2),(1 2 3 4)",
                       "--gamma", "(1 2 3 4 5)")
    assert code == 0
    assert "verdict: NoQT" in out
    assert "step 6: [fired] contradiction" in out


def test_obstruct_s3_inconclusive(capsys):
    code, out, _ = run(capsys, "obstruct", S3, "--f", "(1 2)",
                       "--gamma", "(1 2 3)")
    assert code == 0
    assert "verdict: Inconclusive" in out
    assert "no existence claim" in out


def test_obstruct_machine_round_trip(capsys):
    code, out, _ = run(capsys, "obstruct", S5, "--f", "(1 2),(1 2 3 4)",
                       "--gamma", "(1 2 3 4 5)", "--format", "machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["verdict"] == "NoQT"
    names = [s["name"] for s in doc["report"]["steps"]]
    assert names[0] == "instance-validation" and names[-1] == "contradiction"
    assert all(s["outcome"] for s in doc["report"]["steps"])


def test_obstruct_invalid_factorization_exits_nonzero(capsys):
    code, _, err = run(capsys, "obstruct", S3, "--f", "(1 2)",
                       "--gamma", "(1 2)")
    assert code == 1
    assert "not an exact factorization" in err


# -- plumbing ---------------------------------------------------------------------


def test_seed_flag_is_recorded(capsys):
    code, out, _ = run(capsys, "double", S3, "--seed", "7")
    assert code == 0
    assert "# seed 7" in out


def test_missing_file_is_a_validation_failure(capsys):
    code, _, err = run(capsys, "double", str(INPUTS / "nonexistent.group"))
    assert code == 1
    assert "cannot read" in err


def test_out_writes_report_file(capsys, tmp_path):
    path = tmp_path / "report.txt"
    code, out, _ = run(capsys, "fusion", S3, "--out", str(path))
    assert code == 0 and out == ""
    assert "8 fusion subcategories" in path.read_text()


def test_runs_are_deterministic(capsys):
    _, first, _ = run(capsys, "fusion", S3, "--format", "machine")
    _, second, _ = run(capsys, "fusion", S3, "--format", "machine")
    assert first == second


def test_bad_omega_file_fails(capsys, tmp_path):
    bad = tmp_path / "bad.omega"
    bad.write_text("omega\norder 2\n0 0 1 1\n")
    code, _, err = run(capsys, "double", C2, "--omega", str(bad))
    assert code == 1
    assert "invalid 3-cocycle" in err
