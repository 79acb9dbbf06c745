import json
import os
import subprocess
import sys

import pytest

from padovan_lab import verify
from padovan_lab.cli import main
from padovan_lab.closed_forms import FamilyParams, padovan_number
from padovan_lab.export import from_json, to_dot, to_edgelist, to_json
from padovan_lab.graph_core import build_graph, complete_graph
from padovan_lab.report import HEADER, format_table, report_rows


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- sequence -------------------------------------------------------------


@pytest.mark.parametrize("n, line", [(15, "15: 12"), (0, "0: 1"), (17, "17: 21")])
def test_sequence_examples(capsys, n, line):
    code, out, _ = run(capsys, "sequence", "--max", str(n))
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == line
    assert len(lines) == n + 1


def test_sequence_matches_library(capsys):
    _, out, _ = run(capsys, "sequence", "--max", "30")
    assert out.splitlines() == [f"{n}: {padovan_number(n)}" for n in range(31)]


def test_sequence_rejects_negative():
    with pytest.raises(SystemExit) as exc:
        main(["sequence", "--max", "-1"])
    assert exc.value.code == 2


# --- generate ---------------------------------------------------------------


def test_generate_partition_json(capsys):
    code, out, err = run(capsys, "generate", "--family", "partition", "-p", "2", "-q", "2", "--format", "json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert set(doc) == {"family", "params", "vertices", "edges"}
    assert doc["family"] == "partition"
    assert doc["params"] == {"n": 11, "k": 6, "p": 2, "q": 2}
    assert len(doc["vertices"]) == 6 and len(doc["edges"]) == 6
    assert doc["edges"] == sorted(doc["edges"])
    assert all(i < j for i, j in doc["edges"])


def test_generate_empty_family_warns(capsys):
    code, out, err = run(capsys, "generate", "--family", "padovan", "-n", "2", "-k", "1")
    assert code == 0
    assert "empty" in err
    doc = json.loads(out)
    assert doc["vertices"] == [] and doc["edges"] == []
    assert doc["params"] == {"n": 2, "k": 1, "p": None, "q": None}


def test_generate_edgelist(capsys):
    code, out, _ = run(capsys, "generate", "--family", "padovan", "-n", "6", "-k", "3", "--format", "edgelist")
    assert code == 0
    assert out == "010110\t011010\n"


def test_generate_dot(capsys):
    code, out, _ = run(capsys, "generate", "--family", "ab", "-p", "1", "-q", "1", "--format", "dot")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "// family=ab n=6 k=3 p=1 q=1"
    assert lines[1] == 'graph "ab" {'
    assert '  "ab" -- "ba";' in lines
    assert lines[-1] == "}"


def test_generate_accepts_both_coordinates_when_consistent(capsys):
    _, by_nk, _ = run(capsys, "generate", "--family", "ab", "-n", "18", "-k", "10")
    _, by_pq, _ = run(capsys, "generate", "--family", "ab", "-p", "4", "-q", "3")
    code, both, _ = run(capsys, "generate", "--family", "ab", "-n", "18", "-k", "10", "-p", "4", "-q", "3")
    assert code == 0 and by_nk == by_pq == both


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "--family", "ab", "-n", "18"],
        ["generate", "--family", "ab", "-n", "18", "-k", "10", "-p", "3", "-q", "3"],
        ["generate", "--family", "ab", "-p", "-1", "-q", "2"],
        ["generate", "--family", "ab", "-n", "0", "-k", "0"],
        ["generate", "--family", "ab"],
    ],
)
def test_generate_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and "error" in err


def test_argparse_usage_errors_exit_2():
    for argv in (["generate", "--family", "lucas", "-p", "1", "-q", "1"], ["frobnicate"], [],
                 ["verify", "--suite", "nope"], ["report", "--n", "0"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_generate_is_deterministic(capsys):
    outputs = set()
    for _ in range(3):
        _, out, _ = run(capsys, "generate", "--family", "padovan", "-n", "18", "-k", "10", "--format", "dot")
        outputs.add(out)
    assert len(outputs) == 1


# --- export -----------------------------------------------------------------


def test_json_round_trip():
    for family in ("padovan", "ab", "partition"):
        for n, k in [(11, 6), (18, 10), (2, 1), (1, 0)]:
            g = build_graph(family, FamilyParams.from_nk(n, k, strict=False))
            text = to_json(g)
            back = from_json(text)
            assert back == g
            assert to_json(back) == text


def test_adhoc_graph_export():
    g = complete_graph(3)
    assert json.loads(to_json(g))["params"] == {"n": None, "k": None, "p": None, "q": None}
    assert to_edgelist(g) == "0\t1\n0\t2\n1\t2\n"
    assert to_dot(g).startswith("// family=adhoc")


def test_edgelist_sorted_and_complete():
    g = build_graph("padovan", FamilyParams.from_nk(15, 8))
    lines = to_edgelist(g).splitlines()
    assert lines == sorted(lines) and len(lines) == 20
    assert {frozenset(line.split("\t")) for line in lines} == g.label_edges()


# --- verify -----------------------------------------------------------------


def test_verify_order(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "order", "--max-n", "22")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines)
    assert sum("P(n+2)" in line and "words" in line for line in lines) == 22
    assert lines[-1].startswith("PASS: suite order")


def test_verify_all_default_scale(capsys):
    code, out, err = run(capsys, "verify", "--suite", "all", "--max-n", "14", "--max-pq", "4")
    assert code == 0
    assert "FAIL" not in out
    assert out.splitlines()[-1].endswith("0 failed")
    assert err.startswith("elapsed")


def test_verify_aut_reports_orders(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "aut", "--max-pq", "3")
    assert code == 0
    orders = {int(line.split("actual=")[1]) for line in out.splitlines() if "|Aut(Pi)|" in line}
    assert orders == {1, 2, 4}


def test_verify_stdout_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "cubes", "--max-pq", "3")
    _, second, _ = run(capsys, "verify", "--suite", "cubes", "--max-pq", "3")
    assert first == second


def test_verify_failure_exits_1(capsys, monkeypatch):
    real = verify.cf.vertex_count
    monkeypatch.setattr(verify.cf, "vertex_count", lambda params: real(params) + (params.n == 11))
    code, out, _ = run(capsys, "verify", "--suite", "order", "--max-n", "12")
    assert code == 1
    assert "FAIL" in out and out.splitlines()[-1].startswith("FAIL")


def test_verify_max_vertices_bound_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.delenv("PADOVAN_LAB_MAX_VERTICES", raising=False)
    code, _, err = run(capsys, "verify", "--suite", "median", "--max-pq", "3", "--max-vertices", "5")
    assert code == 2
    assert "exceeds bound" in err
    # the flag applies to that run only
    assert "PADOVAN_LAB_MAX_VERTICES" not in os.environ


# --- report -----------------------------------------------------------------


def _rows_by_n(out):
    lines = [line.split("\t") for line in out.splitlines()]
    assert lines[0] == HEADER
    table = {}
    for cells in lines[1:]:
        table.setdefault(int(cells[0]), []).append(dict(zip(HEADER, cells)))
    return table


def test_report_examples(capsys):
    code, out, _ = run(capsys, "report", "--n", "11")
    assert code == 0
    table = _rows_by_n(out)
    assert [(r["k"], r["|V|"], r["|E|"], r["shape"]) for r in table[8]] == [("4", "3", "2", "P3")]
    assert [(r["|V|"], r["|E|"], r["shape"]) for r in table[3]] == [("1", "0", "K1")]
    assert [(r["k"], r["|V|"], r["|E|"]) for r in table[11]] == [("5", "1", "0"), ("6", "6", "6")]
    assert table[11][1]["cube_polynomial"] == "6 + 6x + x^2"
    assert table[2][0]["shape"] == "empty"


def test_report_rows_agree_with_closed_forms():
    from padovan_lab.closed_forms import cube_polynomial_closed, diameter_formula, edge_count, vertex_count

    for row in report_rows(16):
        if row.k is None:
            continue
        params = FamilyParams.from_nk(row.n, row.k)
        assert (row.order, row.size) == (vertex_count(params), edge_count(params))
        assert row.diameter == diameter_formula(params)
        assert row.cubes == cube_polynomial_closed(params)


def test_report_table_is_tab_delimited():
    text = format_table(report_rows(6))
    assert all(len(line.split("\t")) == len(HEADER) for line in text.splitlines())


def test_report_with_figures(capsys, tmp_path):
    code, out, err = run(capsys, "report", "--n", "12", "--figures", str(tmp_path / "figs"))
    assert code == 0
    assert out.startswith("n\tkmin")
    for name in ("orders.png", "cube_counts.png"):
        path = tmp_path / "figs" / name
        assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
        assert str(path) in err


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "padovan_lab", "sequence", "--max", "5"], capture_output=True, text=True, check=False
    )
    assert result.returncode == 0
    assert result.stdout.splitlines() == ["0: 1", "1: 0", "2: 0", "3: 1", "4: 0", "5: 1"]
    bad = subprocess.run([sys.executable, "-m", "padovan_lab", "sequence", "--max", "x"], capture_output=True,
                         check=False)
    assert bad.returncode == 2
