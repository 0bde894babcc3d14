from pathlib import Path

import pytest

from maxplus_sylvester.cli import main
from maxplus_sylvester.instance_io import save_matrix
from maxplus_sylvester.matrix import TropicalMatrix

M = TropicalMatrix


def write(path: Path, text: str) -> str:
    path.write_text(text)
    return str(path)


@pytest.fixture
def scalar_two_term(tmp_path):
    # two-term 1x1 instance: greatest solution 3, solvable
    files = {
        "a1": write(tmp_path / "A1.txt", "1 1\n1\n"),
        "a2": write(tmp_path / "A2.txt", "1 1\n0\n"),
        "b1": write(tmp_path / "B1.txt", "1 1\n0\n"),
        "b2": write(tmp_path / "B2.txt", "1 1\n2\n"),
        "c": write(tmp_path / "C.txt", "1 1\n5\n"),
    }
    return files


def solve_args(files, *extra):
    return ["solve", "--a", files["a1"], "--a", files["a2"],
            "--b", files["b1"], "--b", files["b2"], "--c", files["c"], *extra]


def test_solve_solvable_instance(scalar_two_term, capsys):
    code = main(solve_args(scalar_two_term))
    out = capsys.readouterr().out
    assert code == 0
    assert "1 1\n3\n" in out
    assert "solvable: true" in out


def test_solve_unsolvable_instance(tmp_path, capsys):
    a = write(tmp_path / "A.txt", "2 2\n0 0\n0 0\n")
    b = write(tmp_path / "B.txt", "1 1\n0\n")
    c = write(tmp_path / "C.txt", "2 1\n0\n1\n")
    code = main(["solve", "--a", a, "--b", b, "--c", c, "--mismatches"])
    out = capsys.readouterr().out
    assert code == 1
    assert "2 1\n0\n0\n" in out  # greatest sub-solution still printed
    assert "solvable: false" in out
    assert "mismatch: 1 0" in out


def test_solve_missing_file(tmp_path, capsys):
    code = main(["solve", "--a", str(tmp_path / "nope.txt"), "--b", str(tmp_path / "nope2.txt"),
                 "--c", str(tmp_path / "nope3.txt")])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.err.strip()


def test_solve_malformed_file(tmp_path, capsys):
    a = write(tmp_path / "A.txt", "1 1\nfoo\n")
    b = write(tmp_path / "B.txt", "1 1\n0\n")
    c = write(tmp_path / "C.txt", "1 1\n0\n")
    code = main(["solve", "--a", a, "--b", b, "--c", c])
    captured = capsys.readouterr()
    assert code == 2
    assert "line 2" in captured.err


def test_solve_shape_mismatch(tmp_path, capsys):
    a = write(tmp_path / "A.txt", "2 2\n0 0\n0 0\n")
    b = write(tmp_path / "B.txt", "1 1\n0\n")
    c = write(tmp_path / "C.txt", "1 1\n0\n")
    code = main(["solve", "--a", a, "--b", b, "--c", c])
    assert code == 2
    assert capsys.readouterr().err.strip()


def test_solve_term_count_mismatch(scalar_two_term, capsys):
    files = scalar_two_term
    code = main(["solve", "--a", files["a1"], "--b", files["b1"], "--b", files["b2"], "--c", files["c"]])
    assert code == 2
    assert "same positive number" in capsys.readouterr().err


def test_solve_with_oracle_check(scalar_two_term, capsys):
    code = main(solve_args(scalar_two_term, "--oracle"))
    out = capsys.readouterr().out
    assert code == 0
    assert "oracle-agrees: true" in out


def test_solve_oracle_skipped_above_cap(scalar_two_term, capsys):
    code = main(solve_args(scalar_two_term, "--oracle", "--oracle-cap", "0"))
    captured = capsys.readouterr()
    assert code == 0
    assert "oracle-agrees" not in captured.out
    assert "skipped" in captured.err


def test_solve_linear_form(tmp_path, capsys):
    a = write(tmp_path / "A.txt", "2 2\n0 1\n2 0\n")
    b = write(tmp_path / "b.txt", "2 1\n3\n4\n")
    code = main(["solve", "--form", "linear", "--a", a, "--c", b])
    out = capsys.readouterr().out
    assert code == 0
    assert "2 1\n2\n2\n" in out
    assert "solvable: true" in out


def test_solve_linear_form_rejects_oracle_flag(tmp_path, capsys):
    a = write(tmp_path / "A.txt", "1 1\n0\n")
    c = write(tmp_path / "c.txt", "1 1\n0\n")
    code = main(["solve", "--form", "linear", "--a", a, "--c", c, "--oracle"])
    assert code == 2


def test_solve_two_sided_form(tmp_path, capsys):
    a = write(tmp_path / "A.txt", "1 1\n2\n")
    b = write(tmp_path / "B.txt", "1 1\n0\n")
    c = write(tmp_path / "C.txt", "1 1\n5\n")
    code = main(["solve", "--form", "two-sided", "--a", a, "--b", b, "--c", c, "--oracle"])
    out = capsys.readouterr().out
    assert code == 0
    assert "1 1\n3\n" in out
    assert "oracle-agrees: true" in out


def test_usage_error_exit_code():
    assert main(["solve"]) == 2  # missing required --c
    assert main(["frobnicate"]) == 2
    assert main([]) == 2


def test_generate_is_deterministic(tmp_path, capsys):
    args = ["generate", "--m", "3", "--n", "2", "--p", "2", "--seed", "42", "--mode", "solvable"]
    assert main(args + ["--out", str(tmp_path / "one")]) == 0
    assert main(args + ["--out", str(tmp_path / "two")]) == 0
    out = capsys.readouterr().out
    assert out.count("seed: 42") == 2
    names = ["A1.txt", "A2.txt", "B1.txt", "B2.txt", "C.txt", "X0.txt"]
    assert sorted(p.name for p in (tmp_path / "one").iterdir()) == names
    for name in names:
        assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()


def test_generated_solvable_instance_solves(tmp_path, capsys):
    out_dir = tmp_path / "inst"
    assert main(["generate", "--m", "4", "--n", "3", "--p", "3", "--seed", "7",
                 "--mode", "solvable", "--out", str(out_dir)]) == 0
    capsys.readouterr()
    code = main(["solve",
                 "--a", str(out_dir / "A1.txt"), "--a", str(out_dir / "A2.txt"), "--a", str(out_dir / "A3.txt"),
                 "--b", str(out_dir / "B1.txt"), "--b", str(out_dir / "B2.txt"), "--b", str(out_dir / "B3.txt"),
                 "--c", str(out_dir / "C.txt"), "--oracle"])
    out = capsys.readouterr().out
    assert code == 0
    assert "solvable: true" in out and "oracle-agrees: true" in out


def test_generate_high_density_still_astic(tmp_path, capsys):
    out_dir = tmp_path / "dense"
    assert main(["generate", "--m", "5", "--n", "4", "--p", "2", "--seed", "3",
                 "--mode", "raw", "--neginf-density", "0.9", "--out", str(out_dir)]) == 0
    capsys.readouterr()
    from maxplus_sylvester.instance_io import standard_file_set
    from maxplus_sylvester.solver import is_doubly_r_astic
    inst = standard_file_set(out_dir, p=2).load()
    assert all(is_doubly_r_astic(f) for f in (*inst.A, *inst.B))
    assert not (out_dir / "X0.txt").exists()


def test_generate_invalid_config(tmp_path, capsys):
    code = main(["generate", "--m", "0", "--n", "1", "--p", "1", "--seed", "1",
                 "--out", str(tmp_path / "bad")])
    assert code == 2
    assert capsys.readouterr().err.strip()


def test_generate_unwritable_destination(tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("file, not a directory\n")
    code = main(["generate", "--m", "1", "--n", "1", "--p", "1", "--seed", "1",
                 "--out", str(blocker / "sub")])
    assert code == 2
    assert capsys.readouterr().err.strip()


def test_bench_csv_and_skip_notes(capsys):
    code = main(["bench", "--m", "2,3", "--n", "2", "--p", "1", "--reps", "3", "--oracle-cap", "4"])
    captured = capsys.readouterr()
    assert code == 0
    lines = captured.out.splitlines()
    assert lines[0] == "m,n,p,method,rep,wall_seconds,op_count"
    # (2,2) runs both methods, (3,2) only fast: (2+1) points * 3 reps
    assert len(lines) == 1 + 9
    assert "skipping oracle at m=3 n=2 p=1" in captured.err


def test_bench_rejects_low_reps(capsys):
    assert main(["bench", "--m", "2", "--n", "2", "--p", "1", "--reps", "2"]) == 2
    assert "reps" in capsys.readouterr().err


def test_bench_rejects_bad_grid(capsys):
    assert main(["bench", "--m", "0", "--n", "2", "--p", "1"]) == 2
    assert main(["bench", "--m", "2", "--n", "2", "--p", "1", "--methods", "warp"]) == 2


def test_solve_tolerance_flag(tmp_path, capsys):
    a = write(tmp_path / "A.txt", "2 1\n0\n0\n")
    c = write(tmp_path / "c.txt", "2 1\n0\n0.5\n")
    assert main(["solve", "--form", "linear", "--a", a, "--c", c]) == 1
    capsys.readouterr()
    assert main(["solve", "--form", "linear", "--a", a, "--c", c, "--tolerance", "0.5"]) == 0


def test_matrix_files_written_by_save_round_trip(tmp_path):
    target = tmp_path / "m.txt"
    save_matrix(target, M([[1.5, float("-inf")], [0, 7]]))
    assert target.read_text() == "2 2\n1.5 -inf\n0 7\n"
