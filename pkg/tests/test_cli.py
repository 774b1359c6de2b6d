import io
import json

import numpy as np
import pytest

from sympectra import NumericalError
from sympectra.cli import main
from sympectra.io import dumps, matrix_obj, parse_matrix
from sympectra.spectral import symplectic_eigenvalues
from sympectra.symplectic import is_symplectic, random_pd


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_matrix(tmp_path, name, A):
    p = tmp_path / name
    p.write_text(dumps(matrix_obj(A)) + "\n")
    return str(p)


def test_eig_diagonal(tmp_path, capsys):
    p = write_matrix(tmp_path, "a.json", np.diag([2.0, 8.0]))
    code, out, _ = run(capsys, "eig", "--in", p)
    assert code == 0
    assert json.loads(out)["delta"] == [pytest.approx(4.0)]


def test_eig_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("3 0\n0 3\n"))
    code, out, _ = run(capsys, "eig")
    assert code == 0
    assert json.loads(out)["delta"] == [pytest.approx(3.0)]


def test_eig_writes_file(tmp_path, capsys):
    p = write_matrix(tmp_path, "a.json", np.eye(4))
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, "eig", "--in", p, "--out", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["delta"] == [1.0, 1.0]


def test_williamson_output_is_valid(tmp_path, capsys):
    A = random_pd(2, seed=5)
    p = write_matrix(tmp_path, "a.json", A)
    code, out, _ = run(capsys, "williamson", "--in", p)
    assert code == 0
    obj = json.loads(out)
    assert obj["residual"] <= 1e-8
    W = np.array(obj["W"]["rows"])
    assert is_symplectic(W).ok
    np.testing.assert_allclose(obj["delta"], symplectic_eigenvalues(A),
                               rtol=1e-10)


def test_diag_m_mean_flag(tmp_path, capsys):
    p = write_matrix(tmp_path, "a.json",
                     np.array([[2.0, 1.0], [1.0, 1.0]]))
    code, out, _ = run(capsys, "diag-m", "--in", p, "--mean", "geometric")
    assert json.loads(out)["diag_m"] == [pytest.approx(np.sqrt(2.0))]
    code, out, _ = run(capsys, "diag-m", "--in", p, "--mean", "arithmetic")
    assert json.loads(out)["diag_m"] == [1.5]


def test_schur_check_exit_codes(tmp_path, capsys):
    p = write_matrix(tmp_path, "id.json", np.eye(4))
    code, out, _ = run(capsys, "schur-check", "--in", p)
    assert code == 0
    assert json.loads(out)["verdict"] is True

    # known failing instance for the min mean
    bad = None
    for seed in range(100):
        A = random_pd(2, seed=seed, spread=2.0)
        from sympectra.schur_horn import schur_check
        from sympectra.means import min_mean
        if not schur_check(A, min_mean()).verdict:
            bad = A
            break
    assert bad is not None
    p = write_matrix(tmp_path, "bad.json", bad)
    code, out, _ = run(capsys, "schur-check", "--in", p, "--mean", "min")
    assert code == 1
    assert json.loads(out)["verdict"] is False


def test_realize_round_trip(tmp_path, capsys):
    (tmp_path / "x.txt").write_text("2 2\n")
    (tmp_path / "y.txt").write_text("1 2\n")
    dest = tmp_path / "A.json"
    code, _, _ = run(capsys, "realize", "--x", str(tmp_path / "x.txt"),
                     "--y", str(tmp_path / "y.txt"), "--mean", "geometric",
                     "--out", str(dest))
    assert code == 0
    code, out, _ = run(capsys, "eig", "--in", str(dest))
    assert code == 0
    np.testing.assert_allclose(json.loads(out)["delta"], [1.0, 2.0],
                               atol=1e-8)
    code, out, _ = run(capsys, "diag-m", "--in", str(dest))
    np.testing.assert_allclose(json.loads(out)["diag_m"], [2.0, 2.0],
                               atol=1e-8)


def test_realize_rejects_inadmissible(tmp_path, capsys):
    (tmp_path / "x.txt").write_text("1 2\n")
    (tmp_path / "y.txt").write_text("0.5 3\n")
    code, _, err = run(capsys, "realize", "--x", str(tmp_path / "x.txt"),
                       "--y", str(tmp_path / "y.txt"))
    assert code == 2
    assert "error:" in err


def test_kyfan_min(tmp_path, capsys):
    p = write_matrix(tmp_path, "a.json", random_pd(2, seed=1))
    code, out, _ = run(capsys, "kyfan-min", "--in", p, "--k", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["k"] == 1
    assert obj["min_value"] == pytest.approx(obj["delta_partial"], abs=1e-9)
    assert len(obj["frame"]["rows"]) == 4
    assert obj["frame"]["k"] == 1


def test_kyfan_min_bad_k(tmp_path, capsys):
    p = write_matrix(tmp_path, "a.json", random_pd(2, seed=1))
    code, _, err = run(capsys, "kyfan-min", "--in", p, "--k", "5")
    assert code == 2 and "error:" in err


def test_kyfan_search_deterministic_bytes(tmp_path, capsys):
    p = write_matrix(tmp_path, "a.json", random_pd(2, seed=8))
    args = ("kyfan-search", "--in", p, "--k", "1", "--budget", "400",
            "--seed", "7")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    obj = json.loads(out1)
    assert obj["violations"] == 0 and obj["n_samples"] == 400


def test_pinch(tmp_path, capsys):
    A = random_pd(3, seed=2)
    p = write_matrix(tmp_path, "a.json", A)
    code, out, _ = run(capsys, "pinch", "--in", p, "--partition", "2,1")
    assert code == 0
    C = parse_matrix(out)
    assert C.shape == (6, 6)
    np.testing.assert_array_equal(C[:2, :2], A[:2, :2])
    assert C[0, 2] == 0.0

    code, _, err = run(capsys, "pinch", "--in", p, "--partition", "2,2")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "pinch", "--in", p, "--partition", "2,x")
    assert code == 2


def test_boxplus_multiple_inputs(tmp_path, capsys):
    p1 = write_matrix(tmp_path, "a.json", np.diag([1.0, 2.0]))
    p2 = write_matrix(tmp_path, "b.json", np.diag([3.0, 4.0]))
    code, out, _ = run(capsys, "boxplus", "--in", p1, "--in", p2)
    assert code == 0
    M = parse_matrix(out)
    np.testing.assert_array_equal(M, np.diag([1.0, 3.0, 2.0, 4.0]))


def test_complete_frame(tmp_path, capsys):
    X = np.eye(6)[:, [0, 3]]
    p = tmp_path / "x.json"
    rows = "\n".join(" ".join(str(v) for v in row) for row in X)
    p.write_text(rows + "\n")
    code, out, _ = run(capsys, "complete-frame", "--in", str(p))
    assert code == 0
    W = parse_matrix(out)
    assert is_symplectic(W).ok
    np.testing.assert_array_equal(W[:, 0], X[:, 0])
    np.testing.assert_array_equal(W[:, 3], X[:, 1])


def test_major_check_exit_codes(tmp_path, capsys):
    (tmp_path / "x.txt").write_text("2 3\n")
    (tmp_path / "y.txt").write_text("1 2\n")
    code, out, _ = run(capsys, "major-check", "--x", str(tmp_path / "x.txt"),
                       "--y", str(tmp_path / "y.txt"))
    assert code == 0
    assert json.loads(out)["verdict"] is True

    code, out, _ = run(capsys, "major-check", "--x", str(tmp_path / "y.txt"),
                       "--y", str(tmp_path / "x.txt"))
    assert code == 1
    assert json.loads(out)["verdict"] is False

    # full majorization: (2, 3) is averaged from (1, 4), totals equal
    (tmp_path / "z.txt").write_text("1 4\n")
    code, out, _ = run(capsys, "major-check", "--x", str(tmp_path / "x.txt"),
                       "--y", str(tmp_path / "z.txt"), "--kind", "majorize")
    assert code == 0


def test_random_pd_deterministic_and_usable(capsys):
    code1, out1, _ = run(capsys, "random-pd", "--n", "3", "--seed", "42")
    code2, out2, _ = run(capsys, "random-pd", "--n", "3", "--seed", "42")
    assert code1 == code2 == 0
    assert out1 == out2
    A = parse_matrix(out1)
    assert np.all(np.linalg.eigvalsh(A) > 0)


def test_random_symplectic_deterministic(capsys):
    code, out1, _ = run(capsys, "random-symplectic", "--n", "2", "--seed", "3",
                        "--spread", "0.5")
    _, out2, _ = run(capsys, "random-symplectic", "--n", "2", "--seed", "3",
                     "--spread", "0.5")
    assert code == 0 and out1 == out2
    assert is_symplectic(parse_matrix(out1)).ok


def test_format_text_parses_back(tmp_path, capsys):
    p = write_matrix(tmp_path, "a.json", np.diag([2.0, 8.0]))
    code, out, _ = run(capsys, "eig", "--in", p, "--format", "text")
    assert code == 0
    key, val = out.strip().split(": ")
    assert key == "delta"
    assert float(val) == pytest.approx(4.0)


def test_tol_env_override(tmp_path, capsys, monkeypatch):
    p = write_matrix(tmp_path, "a.json", np.eye(2))
    monkeypatch.setenv("SYMPECTRA_TOL", "1e-6")
    code, out, _ = run(capsys, "eig", "--in", p)
    assert code == 0 and json.loads(out)["delta"] == [1.0]

    monkeypatch.setenv("SYMPECTRA_TOL", "banana")
    code, _, err = run(capsys, "eig", "--in", p)
    assert code == 2 and "SYMPECTRA_TOL" in err

    # explicit flag wins over the env var
    monkeypatch.setenv("SYMPECTRA_TOL", "-4")
    code, _, _ = run(capsys, "eig", "--in", p, "--tol", "1e-8")
    assert code == 0


def test_invalid_input_exit_2(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text("not a matrix\n")
    code, _, err = run(capsys, "eig", "--in", str(p))
    assert code == 2 and "error:" in err

    code, _, err = run(capsys, "eig", "--in", str(tmp_path / "missing.json"))
    assert code == 2


def test_numerical_failure_exit_3(tmp_path, capsys, monkeypatch):
    def boom(A, tol):
        raise NumericalError("pairing failed")
    monkeypatch.setattr("sympectra.cli.symplectic_eigenvalues", boom)
    p = write_matrix(tmp_path, "a.json", np.eye(2))
    code, _, err = run(capsys, "eig", "--in", str(p))
    assert code == 3
    assert "numerical failure" in err


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run(
        [sys.executable, "-m", "sympectra", "eig"],
        input="2 0\n0 2\n", capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["delta"] == [pytest.approx(2.0)]
