import csv
import io
import json
import subprocess
import sys

import pytest

from uniformdet.cli import bench_grid, bench_spec, main
from uniformdet.exact import format_scalar
from uniformdet.sampling import random_spec, rng_for


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def inline(spec):
    # "--x=-1/2,..." form: a leading minus would otherwise read as a flag
    seqs = [f"--{n}=" + ",".join(format_scalar(v) for v in getattr(spec, n)) for n in "xyr"]
    return ["--k", str(spec.k), "--ell", str(spec.ell), *seqs]


def test_build_examples(capsys):
    code, out, _ = run(capsys, "build", "--constant-gap", "--N", "1", "--k", "3", "--ell", "2", "--format", "csv")
    assert code == 0
    assert out == "1,4,9\n16,25,36\n49,64,81\n"
    code, out, _ = run(capsys, "build", "--k", "1", "--ell", "0", "--x", "7", "--y", "1", "--r", "1")
    assert json.loads(out)["entries"] == [["1"]]
    code, out, _ = run(capsys, "build", "--k", "2", "--ell", "1", "--x", "1,3", "--y", "1,1", "--r", "0,1")
    assert json.loads(out)["entries"] == [["1", "2"], ["3", "4"]]


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "csv", "build", "--k", "2", "--ell", "1", "--x", "1,3", "--y", "1,1", "--r", "0,1")
    assert out == "1,2\n3,4\n"


def test_build_round_trip_bytes(tmp_path, capsys):
    spec = random_spec(rng_for(1, "cli"), 3, 2, "gaussian")
    _, first, _ = run(capsys, "build", *inline(spec))
    path = tmp_path / "m.json"
    path.write_text(first)
    _, second, _ = run(capsys, "build", "--input", str(path))
    assert second == first


def test_build_from_stdin(capsys, monkeypatch):
    doc = json.dumps({"k": 2, "ell": 1, "x": ["1", "3"], "y": [1, 1], "r": ["0", "1"]})
    code, out, _ = run(capsys, "build", "--input", "-", "--format", "csv", stdin=doc, monkeypatch=monkeypatch)
    assert code == 0 and out == "1,2\n3,4\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--k", "2", "--ell", "1", "--x", "1", "--y", "1,1", "--r", "0,1"],
        ["build", "--k", "2", "--ell", "1", "--x", "1,2", "--y", "1,1", "--r", "1,1"],
        ["build", "--k", "2", "--ell", "1", "--x", "1,0.5", "--y", "1,1", "--r", "0,1"],
        ["build", "--k", "2", "--ell", "1", "--x", "1,2", "--y", "1,1"],
        ["build", "--input", "nonexistent.json", "--k", "2"],
        ["build", "--constant-gap", "--k", "2", "--ell", "1"],
        ["det", "--k", "2", "--ell", "1", "--x", "1,2", "--y", "1,1", "--r", "0,1", "--method", "reduction"],
        ["schur", "--lambda", "1,2", "--points", "1,2"],
        ["schur", "--lambda", "1,0,0", "--points", "1,2"],
        ["vandermonde", "--points", "1,2", "--alpha", "0"],
        ["vandermonde", "--points", "1,2", "--alpha", "1,0"],
        ["gamma", "--lambda", "1,1,1", "--mu", "1,1"],
        ["schur", "--lambda", "1,1,1", "--expand", "--k", "2"],
        ["finite-diff", "--ell", "1", "--coeffs", "0,0,1"],
        ["bench", "--max-k", "0"],
    ],
)
def test_invalid_input_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error:") and err.count("\n") == 1


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["det", "--method", "nope"])
    assert exc.value.code == 2


def test_input_and_inline_are_exclusive(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"k": 1, "ell": 1, "x": ["1"], "y": ["1"], "r": ["1"]}))
    code, _, err = run(capsys, "det", "--input", str(path), "--k", "1")
    assert code == 2 and "cannot be combined" in err


def test_det_examples(capsys):
    code, out, _ = run(capsys, "det", "--constant-gap", "--N", "1", "--k", "3", "--ell", "2", "--method", "all")
    assert code == 0
    docs = json.loads(out)
    assert [d["method"] for d in docs] == ["oracle", "expansion", "reduction"]
    assert {d["det"] for d in docs} == {"-216"}

    spec = random_spec(rng_for(2, "cli"), 4, 2)
    code, out, _ = run(capsys, "det", *inline(spec), "--method", "all")
    assert code == 0 and {d["det"] for d in json.loads(out)} == {"0"}

    code, out, _ = run(capsys, "det", "--k", "1", "--ell", "3", "--x", "2", "--y", "1/2", "--r", "2")
    assert json.loads(out) == {"det": "27", "method": "oracle"}


def test_det_csv_and_table(capsys):
    base = ["det", "--constant-gap", "--N", "2", "--k", "2", "--ell", "1", "--method", "all"]
    _, out, _ = run(capsys, *base, "--format", "csv")
    assert list(csv.reader(io.StringIO(out))) == [["method", "det"], ["oracle", "-2"], ["expansion", "-2"], ["reduction", "-2"]]
    _, out, _ = run(capsys, *base, "--format", "table")
    assert out.splitlines()[0].split() == ["method", "det"]


def test_det_mismatch_exit_3(capsys, monkeypatch):
    import uniformdet.cli as cli_mod

    monkeypatch.setattr(cli_mod, "det_expansion", lambda spec, jobs=1: 12345)
    code, _, err = run(capsys, "det", "--constant-gap", "--N", "1", "--k", "2", "--ell", "1", "--method", "all")
    assert code == 3 and "cross-check failed" in err


def test_det_jobs_bit_identical(capsys):
    spec = random_spec(rng_for(3, "cli"), 3, 5)
    _, one, _ = run(capsys, "det", *inline(spec), "--method", "expansion", "--jobs", "1")
    _, four, _ = run(capsys, "det", *inline(spec), "--method", "expansion", "--jobs", "4")
    assert one == four


def test_check_examples(capsys):
    code, out, _ = run(capsys, "check", "--constant-gap", "--N", "2", "--k", "3", "--ell", "2", "--strict")
    assert code == 0 and json.loads(out)["status"] == "RegularByPositivity"
    spec = random_spec(rng_for(4, "cli"), 3, 1)
    code, out, _ = run(capsys, "check", *inline(spec), "--strict")
    assert code == 1 and json.loads(out) == {
        "status": "SingularBySize",
        "witness": None,
        "method": json.loads(out)["method"],
    }
    code, out, _ = run(capsys, "check", "--k", "2", "--ell", "3", "--x", "1,2", "--y", "2,4", "--r", "1,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "SingularByDeterminant" and doc["witness"] == "0"
    code, _, _ = run(capsys, "check", "--k", "2", "--ell", "3", "--x", "1,2", "--y", "2,4", "--r", "1,2", "--strict")
    assert code == 1


def test_schur_examples(capsys):
    _, out, _ = run(capsys, "schur", "--lambda", "1,0", "--points", "1,3")
    assert json.loads(out) == {"value": "4"}
    _, out, _ = run(capsys, "schur", "--lambda", "1", "--points", "1,3")
    assert json.loads(out) == {"value": "4"}
    _, out, _ = run(capsys, "schur", "--lambda", "0,0", "--expand", "--k", "2")
    assert json.loads(out) == {"arity": 2, "terms": [{"exp": [0, 0], "coeff": "1"}]}
    _, out, _ = run(capsys, "schur", "--lambda", "2,1", "--expand", "--k", "3")
    terms = json.loads(out)["terms"]
    # six u_i^2 u_j monomials plus 2*u1*u2*u3
    assert len(terms) == 7
    assert sum(int(t["coeff"]) for t in terms) == 8


def test_vandermonde_examples(capsys):
    assert json.loads(run(capsys, "vandermonde", "--points", "1,2,3")[1]) == {"value": "2"}
    assert json.loads(run(capsys, "vandermonde", "--points", "1,3", "--alpha", "0,2")[1]) == {"value": "8"}
    assert run(capsys, "vandermonde", "--points", "4,4", "--format", "table")[1] == "0\n"


def test_gamma_examples(capsys):
    assert json.loads(run(capsys, "gamma", "--lambda", "2,1,0", "--mu", "1,1,1", "--k", "3")[1]) == {"value": 2}
    assert json.loads(run(capsys, "gamma", "--lambda", "1,1", "--mu", "2,0", "--k", "2")[1]) == {"value": 0}
    assert json.loads(run(capsys, "gamma", "--lambda", "1,0", "--mu", "0,1", "--k", "2")[1]) == {"value": 1}
    assert json.loads(run(capsys, "gamma", "--lambda", "2,1", "--mu", "1,1,1", "--k", "3")[1]) == {"value": 2}


def test_finite_diff(capsys):
    code, out, _ = run(capsys, "finite-diff", "--ell", "3", "--coeffs", "0,1,0,5")
    assert code == 0 and json.loads(out) == {"sum": "-30", "leading": "-30"}


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--suite", "expansion", "--max-k", "4", "--max-ell", "3", "--seed", "5")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    terms = {(int(r["k"]), int(r["ell"])): int(r["terms"]) for r in rows}
    assert terms[(4, 3)] == 1
    assert terms[(2, 3)] == 6
    assert all(int(r["k"]) <= int(r["ell"]) + 1 for r in rows)
    code, out, _ = run(capsys, "bench", "--suite", "oracle", "--max-k", "3", "--max-ell", "1")
    assert len(out.splitlines()) == 1 + 3 * 2


def test_bench_inputs_deterministic():
    first = [bench_spec(7, k, ell) for k, ell in bench_grid("expansion", 4, 4)]
    second = [bench_spec(7, k, ell) for k, ell in bench_grid("expansion", 4, 4)]
    assert first == second
    assert bench_spec(7, 2, 3) != bench_spec(8, 2, 3)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "uniformdet", "vandermonde", "--points", "1,2,3", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "2\n"
    assert proc.stderr == ""
