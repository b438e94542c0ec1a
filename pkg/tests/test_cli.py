"""End-to-end tests of the command-line interface: outputs, formats,
exit codes, and byte-level determinism.
"""

import json
import shutil
import subprocess

import pytest

from mincw import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def tiny_matrix(tmp_path):
    path = tmp_path / "code.txt"
    path.write_text("101\n011\n")
    return str(path)


def test_analyze_text(capsys, tiny_matrix):
    code, out, err = run_cli(capsys, "analyze", tiny_matrix)
    assert code == 0
    assert "n = 3, k = 2, t = 1" in out
    assert "M (systematic enumeration) = 3" in out
    assert "M (formula)                 = 3" in out
    assert "cross-check: ok" in out


def test_analyze_json(capsys, tiny_matrix):
    code, out, _ = run_cli(capsys, "analyze", tiny_matrix, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 3 and obj["k"] == 2 and obj["t"] == 1
    assert obj["m_enumerator"] == 3
    assert obj["m_formula"] == 3
    assert obj["agreement"] is True
    assert obj["minimal_words"] == ["011", "101", "110"]
    assert obj["reduction"]["delta"] == 0


def test_analyze_errors(capsys, tmp_path, tiny_matrix):
    code, _, err = run_cli(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2
    assert err.startswith("mincw:")

    bad = tmp_path / "bad.txt"
    bad.write_text("10\n1x\n")
    code, _, err = run_cli(capsys, "analyze", str(bad))
    assert code == 2

    code, _, _ = run_cli(capsys, "analyze", tiny_matrix, "--format", "csv")
    assert code == 1


def test_analyze_cross_check_failure_exits_4(capsys, tiny_matrix, monkeypatch):
    monkeypatch.setattr(cli, "count_general", lambda a: 999)
    code, _, err = run_cli(capsys, "analyze", tiny_matrix)
    assert code == 4
    assert "cross-check failed" in err


def test_table_text_small(capsys):
    code, out, _ = run_cli(capsys, "table", "--nmax", "3")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[2:5]]
    assert rows[0] == ["1", "1"]
    assert rows[1] == ["2", "1", "2"]
    assert rows[2] == ["3", "1", "3", "3"]
    assert "reference grid check: 6 cells compared, 6 match" in out
    assert "no mismatches" in out


def test_table_csv_small(capsys):
    code, out, _ = run_cli(capsys, "table", "--nmax", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,k,value,method,exact,reference,status"
    cells = {}
    for line in lines[1:]:
        n, k, value, method, exact, ref, status = line.split(",")
        cells[(int(n), int(k))] = (int(value), status)
    assert cells[(4, 2)] == (3, "match")
    assert cells[(4, 3)] == (6, "match")
    assert all(status == "match" for _, status in cells.values())


def test_table_json_small(capsys):
    code, out, _ = run_cli(capsys, "table", "--nmax", "5", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["n_max"] == 5
    by_cell = {(c["n"], c["k"]): c for c in obj["cells"]}
    assert by_cell[(5, 4)]["value"] == 10
    assert by_cell[(5, 4)]["method"] == "closed-form-t1"
    assert obj["reference"]["mismatches"] == []
    assert obj["reference"]["checked"] == 15


def test_mgsets_text(capsys):
    code, out, _ = run_cli(capsys, "mgsets", "3")
    assert code == 0
    assert "size 2: 15 subsets" in out
    assert "size 3: 19 subsets" in out
    assert "size 4: 7 subsets" in out
    assert "total: 41" in out


def test_mgsets_json(capsys):
    code, out, _ = run_cli(capsys, "mgsets", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["counts"] == {"2": 2, "3": 1}
    # members are listed by ascending integer value; bit 0 prints leftmost
    assert obj["sets"]["3"] == [["10", "01", "11"]]


def test_mgsets_domain_error(capsys):
    code, _, err = run_cli(capsys, "mgsets", "7")
    assert code == 2
    assert err.startswith("mincw:")


def test_maxmin_text(capsys):
    code, out, _ = run_cli(capsys, "maxmin", "--n", "11", "--k", "9")
    assert code == 0
    assert "M = 63" in out
    assert "witness multiplicity vector: (0, 2, 3, 4)" in out


def test_maxmin_json(capsys):
    code, out, _ = run_cli(
        capsys, "maxmin", "--n", "11", "--k", "9", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["value"] == 63
    assert obj["witness"] == [0, 2, 3, 4]
    assert obj["exact"] is True


def test_maxmin_budget_truncation_exits_3(capsys):
    code, out, _ = run_cli(
        capsys, "maxmin", "--n", "7", "--k", "4", "--budget", "5"
    )
    assert code == 3
    assert "[NOT EXACT]" in out
    assert "only a lower bound" in out


def test_maxmin_domain_error(capsys):
    code, _, err = run_cli(capsys, "maxmin", "--n", "10", "--k", "4")
    assert code == 2


def test_bounds_pair(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--n", "10", "--k", "8")
    assert code == 0
    assert "exact maximum          48" in out
    assert "not asserted" in out

    code, out, _ = run_cli(
        capsys, "bounds", "--n", "10", "--k", "8", "--format", "json"
    )
    obj = json.loads(out)
    assert obj["upper"]["agrell"]["approx"] == 32.0
    assert obj["exact"] == 48


def test_bounds_grid_csv(capsys):
    code, out, _ = run_cli(
        capsys, "bounds", "--nmax", "4", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("n,k,t,trivial_ub")
    assert len(lines) == 1 + 10  # pairs with 1 <= k <= n <= 4


def test_bounds_usage_errors(capsys):
    code, _, err = run_cli(capsys, "bounds")
    assert code == 1
    assert "mincw:" in err
    code, _, _ = run_cli(capsys, "bounds", "--nmax", "3", "--n", "2", "--k", "1")
    assert code == 1


def test_census_text(capsys):
    code, out, _ = run_cli(capsys, "census", "--n", "6", "--k", "3")
    assert code == 0
    assert "max M over" in out
    assert "= 7" in out
    assert "folded maximum over lengths 3..6: 7" in out


def test_census_json(capsys):
    code, out, _ = run_cli(
        capsys, "census", "--n", "5", "--k", "3", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["max_m"] == 6
    assert obj["folded_max"] == 6
    assert len(obj["witness_columns"]) == 5


def test_census_budget_exits_3(capsys):
    code, _, err = run_cli(
        capsys, "census", "--n", "5", "--k", "4", "--budget", "10"
    )
    assert code == 3
    assert "budget exceeded" in err


def test_conjecture_t3_exhaustive(capsys):
    code, out, _ = run_cli(
        capsys, "conjecture", "t3", "--kmin", "4", "--kmax", "8"
    )
    assert code == 0
    assert "exhaustive search k=4..8: 5 of 5 equal" in out
    assert "overall: ok" in out


def test_conjecture_leading_t2(capsys):
    code, out, _ = run_cli(
        capsys, "conjecture", "leading-t2", "--kmin", "1", "--kmax", "12",
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["ok"] is True
    assert len(obj["cases"]) == 12


def test_usage_errors_exit_1(capsys):
    assert cli.main([]) == 1
    capsys.readouterr()
    assert cli.main(["no-such-command"]) == 1
    capsys.readouterr()
    assert cli.main(["table", "--format", "yaml"]) == 1
    capsys.readouterr()


def test_output_is_deterministic(capsys):
    first = run_cli(capsys, "table", "--nmax", "6", "--threads", "1")
    second = run_cli(capsys, "table", "--nmax", "6", "--threads", "4")
    assert first == second

    first = run_cli(capsys, "census", "--n", "7", "--k", "4", "--threads", "1")
    second = run_cli(capsys, "census", "--n", "7", "--k", "4", "--threads", "3")
    assert first == second


def test_local_search_is_seed_deterministic(capsys):
    args = ("conjecture", "t3", "--kmin", "41", "--kmax", "41", "--seed", "7")
    first = run_cli(capsys, *args)
    second = run_cli(capsys, *args)
    assert first == second
    assert first[0] == 0
    assert "supported" in first[1]


def test_console_script_installed():
    exe = shutil.which("mincw")
    assert exe is not None
    proc = subprocess.run(
        [exe, "mgsets", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "total: 3" in proc.stdout
