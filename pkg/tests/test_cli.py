import pytest

from recdiv.cli import (
    EXIT_BUDGET,
    EXIT_IO,
    EXIT_MEMORY,
    EXIT_OVERFLOW,
    EXIT_VERIFY,
    main,
)
from recdiv.golden import A_FIRST_96
from recdiv.sieve import INT64_SAFE_LIMIT


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_ten(capsys):
    code, out, _ = run(capsys, "eval", "10")
    assert code == 0
    assert "a=6 b=20" in out
    assert "A=3/5" in out


def test_eval_unit(capsys):
    code, out, _ = run(capsys, "eval", "1")
    assert code == 0
    assert "d=1 sigma=1" in out
    assert "a=1 b=1 g=1" in out


def test_eval_ninety_six(capsys):
    code, out, _ = run(capsys, "eval", "96")
    assert code == 0
    assert "a=224 b=768" in out


def test_eval_rejects_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "0"])
    assert exc.value.code == 2


def test_table_csv_matches_reference(capsys):
    code, out, _ = run(capsys, "table", "a", "96")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,a"
    assert len(lines) == 97
    for n, line in enumerate(lines[1:], start=1):
        assert line == f"{n},{A_FIRST_96[n - 1]}"


def test_table_single_line_bfile(capsys):
    code, out, _ = run(capsys, "table", "a", "1", "--format", "bfile")
    assert code == 0
    assert out == "1 1\n"


def test_records_command(capsys):
    code, out, _ = run(capsys, "records", "RHC", "100", "--format", "bfile")
    assert code == 0
    assert out.splitlines() == [
        f"{i} {n}" for i, n in enumerate([1, 2, 4, 6, 8, 12, 24, 36, 48, 72, 96], start=1)
    ]


def test_records_sa_kind(capsys):
    code, out, _ = run(capsys, "records", "sa", "10", "--format", "bfile")
    assert code == 0
    assert out.splitlines() == ["1 1", "2 2", "3 4", "4 6"]


def test_tree_command_writes_file(tmp_path, capsys):
    path = tmp_path / "tree.svg"
    code, out, _ = run(capsys, "tree", "10", "-o", str(path), "--check-overlap")
    assert code == 0
    assert "squares=6 sidesum=20" in out
    assert "overlaps=0" in out
    assert path.read_text().count("<rect") == 6


def test_tree_of_one_hundred(tmp_path, capsys):
    path = tmp_path / "tree.svg"
    code, out, _ = run(capsys, "tree", "100", "-o", str(path))
    assert code == 0
    assert "squares=52 sidesum=340" in out


def test_tree_budget_exit(capsys):
    code, _, err = run(capsys, "tree", "96", "--budget", "10")
    assert code == EXIT_BUDGET
    assert "224" in err


def test_tree_unwritable_path(capsys):
    code, _, err = run(capsys, "tree", "10", "-o", "/nonexistent-dir/x.svg")
    assert code == EXIT_IO
    assert err


def test_verify_tables(capsys):
    code, out, _ = run(capsys, "verify", "tables", "96")
    assert code == 0
    assert "PASS suite tables" in out


def test_verify_trees_small(capsys):
    code, out, _ = run(capsys, "verify", "trees", "60")
    assert code == 0
    assert out.count("PASS") >= 3


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "everything"])
    assert exc.value.code == 2


def test_memory_guard_exit_code(capsys):
    code, _, err = run(capsys, "table", "a", "1000000", "--max-memory", "100")
    assert code == EXIT_MEMORY
    assert "bytes" in err


def test_overflow_guard_exit_code(capsys):
    code, _, err = run(
        capsys, "table", "a", str(INT64_SAFE_LIMIT + 1), "--max-memory", str(10**20)
    )
    assert code == EXIT_OVERFLOW
    assert "int64" in err


def test_verify_failure_exit_code_is_distinct():
    assert len({2, EXIT_IO, EXIT_OVERFLOW, EXIT_MEMORY, EXIT_VERIFY, EXIT_BUDGET}) == 6
