import csv
import io
import json
import logging
import sys

import pytest

from catalan_parity import cli, parity
from catalan_parity.utils import MAX_N_ENV, Parity

AF_TABLE = [0, 2, 4, 9, 28, 123, 662, 3955, 25032, 164335, 1106794]


@pytest.fixture(autouse=True)
def _default_caps(monkeypatch):
    monkeypatch.delenv(MAX_N_ENV, raising=False)


@pytest.fixture(autouse=True)
def _detach_cli_log_handlers():
    # Each main() call binds a handler to the then-current sys.stderr, which
    # pytest closes after the test; drop it so later modules don't log into it.
    yield
    root = logging.getLogger("catalan_parity")
    for handler in list(root.handlers):
        if getattr(handler, "_catalan_cli", False):
            root.removeHandler(handler)


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_seq_json_exact(capsys):
    code, out, _ = _run(capsys, "seq", "--kind", "c", "--from", "0", "--to", "0",
                        "--format", "json")
    assert code == 0
    assert out == '[{"kind":"c","n":0,"value":"0"}]\n'


def test_seq_csv_values(capsys):
    code, out, _ = _run(capsys, "seq", "--kind", "AF", "--to", "10", "--format", "csv")
    assert code == 0
    rows = _csv(out)
    assert rows[0] == ["kind", "n", "value"]
    assert [int(r[2]) for r in rows[1:]] == AF_TABLE
    assert {r[0] for r in rows[1:]} == {"af"}


def test_seq_table(capsys):
    code, out, _ = _run(capsys, "seq", "--kind", "a", "--from", "0", "--to", "3")
    assert code == 0
    assert out == "  n | 0 | 1 | 2 | 3\na_n | 0 | 1 | 3 | 5\n"


def test_seq_output_is_deterministic(capsys):
    first = _run(capsys, "seq", "--kind", "t", "--to", "40", "--format", "json")[1]
    second = _run(capsys, "seq", "--kind", "t", "--to", "40", "--format", "json")[1]
    assert first == second


def test_seq_markdown(capsys):
    _, out, _ = _run(capsys, "seq", "--kind", "g", "--to", "2", "--format",
                     "markdown")
    lines = out.splitlines()
    assert lines[0] == "| kind | n | value |"
    assert lines[-1] == "| g | 2 | 4 |"


def test_triangle_csv(capsys):
    code, out, _ = _run(capsys, "triangle", "--rows", "4", "--format", "csv")
    assert code == 0
    assert _csv(out) == [
        ["n", "sum", "i", "term"],
        ["2", "1", "1", "1"],
        ["3", "4", "1", "1"],
        ["3", "4", "2", "3"],
        ["4", "19", "1", "4"],
        ["4", "19", "2", "3"],
        ["4", "19", "3", "12"],
    ]


def test_triangle_json_and_table(capsys):
    _, out, _ = _run(capsys, "triangle", "--rows", "6", "--format", "json")
    rows = json.loads(out)
    assert rows[-1] == {
        "kind": "f",
        "n": 6,
        "value": "614",
        "terms": ["104", "57", "48", "61", "344"],
    }
    _, out, _ = _run(capsys, "triangle", "--rows", "6")
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[0].startswith("f_2:")
    assert "614 |" in lines[-1]


def test_triangle_rejects_short_range(capsys):
    code, _, err = _run(capsys, "triangle", "--rows", "1")
    assert code == 2
    assert "--rows" in err


def test_tree_dot(capsys):
    code, out, _ = _run(capsys, "tree", "4")
    assert code == 0
    assert out.startswith("digraph A_4 {\n")
    assert out.count(" -> ") == 8


def test_tree_text_with_fruit(capsys):
    code, out, _ = _run(capsys, "tree", "5", "--fruit", "f", "--format", "text")
    assert code == 0
    assert out.splitlines() == [
        "((1,3,3,7,5), (3,9), (7,5), (15,13,13,9,11))",
        "(5,2,2,5)",
        "(1,1,1,1)",
        "(1)",
    ]


def test_tree_cap(capsys):
    code, out, err = _run(capsys, "tree", "15")
    assert code == 2
    assert out == ""
    assert MAX_N_ENV in err


def test_census_csv(capsys):
    code, out, _ = _run(capsys, "census", "3")
    assert code == 0
    assert out == (
        "n,split_i,tree_index,false_rows,true_rows\n"
        "3,1,0,1,7\n"
        "3,2,1,3,5\n"
    )


def test_census_json_truth_table(capsys):
    code, out, _ = _run(capsys, "census", "5", "--mode", "truth_table", "--format",
                        "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["totals"] == {"f": "104", "t": "344", "g": "448"}


def test_census_truth_table_cap(capsys):
    code, _, err = _run(capsys, "census", "11", "--mode", "truth_table")
    assert code == 2
    assert "truth_table" in err


def test_verify_series(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "series", "--max-n", "12")
    assert code == 0
    assert out.splitlines()[-1] == "5 checks, 0 failed"


def test_verify_parity_json(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "parity", "--max-n", "64",
                        "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert all(c["suite"] == "parity" for c in payload["checks"])


def test_verify_failure_exit_code(capsys, mocker):
    mocker.patch.object(parity, "predicted_parity", return_value=Parity.EVEN)
    code, out, err = _run(capsys, "verify", "--suite", "parity", "--max-n", "8")
    assert code == 1
    assert "FAIL" in out
    assert "FAILED parity" in err


def test_verify_bad_range(capsys):
    code, _, _ = _run(capsys, "verify", "--suite", "asymptotics", "--max-n", "3")
    assert code == 2


def test_series_command(capsys):
    code, out, _ = _run(capsys, "series", "--terms", "10", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 11
    assert records[10] == {"kind": "a", "n": 10, "value": "4872", "match": True}


def test_parity_command(capsys):
    code, out, _ = _run(capsys, "parity", "--kind", "af", "--max-n", "8",
                        "--format", "csv")
    assert code == 0
    rows = _csv(out)
    assert rows[1] == ["2", "even", "even", "yes"]
    assert len(rows) == 8


def test_asymp_estimate(capsys):
    code, out, _ = _run(capsys, "asymp", "--kind", "f", "--from", "6", "--to", "6",
                        "--format", "json")
    assert code == 0
    (record,) = json.loads(out)
    assert float(record["estimate"]) == pytest.approx(531.65, rel=1e-3)


def test_asymp_diagnostics(capsys):
    code, out, _ = _run(capsys, "asymp", "--diagnostics", "--from", "6", "--to",
                        "7", "--format", "csv")
    assert code == 0
    rows = _csv(out)
    assert rows[0] == ["n", "growth_c", "growth_f", "growth_t", "t_over_f"]
    assert float(rows[1][4]) == pytest.approx(2074 / 614)


def test_asymp_kind_without_formula(capsys):
    code, _, err = _run(capsys, "asymp", "--kind", "g")
    assert code == 2
    assert "no asymptotic formula" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["seq"],
        ["seq", "--kind", "zz"],
        ["tree", "four"],
        ["census", "4", "--format", "dot"],
    ],
)
def test_usage_errors(capsys, argv):
    assert cli.main(argv) == 2
    out, err = capsys.readouterr()
    assert out == ""
    assert err


def test_inverted_range_is_usage_error(capsys):
    code, _, err = _run(capsys, "seq", "--kind", "c", "--from", "5", "--to", "2")
    assert code == 2
    assert "from must be <= to" in err


def test_help_exits_cleanly(capsys):
    assert cli.main(["--help"]) == 0
    assert "catalan-parity" in capsys.readouterr().out


def test_tree_text_shape_only(capsys):
    code, out, _ = _run(capsys, "tree", "4", "--format", "text")
    assert code == 0
    assert out == "(2,1,2)\n(1,1,1)\n(1)\n"


def test_tree_single_node(capsys):
    code, out, _ = _run(capsys, "tree", "1")
    assert code == 0
    assert out.count(" [") == 2
    assert " -> " not in out


def test_tree_rejects_zero(capsys):
    code, _, err = _run(capsys, "tree", "0")
    assert code == 2
    assert "n must be >= 1" in err


def test_triangle_reaches_f8(capsys):
    _, out, _ = _run(capsys, "triangle", "--rows", "8", "--format", "csv")
    sums = {row[0]: row[1] for row in _csv(out)[1:]}
    assert sums["8"] == "24595"


def test_main_survives_closed_stderr_between_calls(capsys, monkeypatch):
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    assert cli.main(["seq", "--kind", "c", "--to", "3"]) == 0
    first.close()

    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    code = cli.main(["-v", "verify", "--suite", "series", "--max-n", "4"])
    assert code == 0
    assert "running series suite" in second.getvalue()
    capsys.readouterr()


def test_renderings_agree(capsys):
    argv = ["seq", "--kind", "at", "--from", "0", "--to", "12"]
    _, as_json, _ = _run(capsys, *argv, "--format", "json")
    _, as_csv, _ = _run(capsys, *argv, "--format", "csv")
    _, as_table, _ = _run(capsys, *argv, "--format", "table")
    _, as_markdown, _ = _run(capsys, *argv, "--format", "markdown")

    from_json = [(r["n"], r["value"]) for r in json.loads(as_json)]
    from_csv = [(int(r[1]), r[2]) for r in _csv(as_csv)[1:]]
    index_row, value_row = as_table.splitlines()
    indices = [int(c.strip()) for c in index_row.split("|")[1:]]
    values = [c.strip() for c in value_row.split("|")[1:]]
    from_table = list(zip(indices, values))
    markdown_cells = [
        [c.strip() for c in line.split("|")] for line in as_markdown.splitlines()[2:]
    ]
    from_markdown = [(int(cells[2]), cells[3]) for cells in markdown_cells]
    assert from_json == from_csv == from_table == from_markdown
    assert len(from_json) == 13
    assert from_json[10] == (10, "3881638")


def test_census_renderings_agree(capsys):
    _, as_csv, _ = _run(capsys, "census", "5")
    _, as_json, _ = _run(capsys, "census", "5", "--format", "json")
    csv_rows = [(int(r[1]), r[3]) for r in _csv(as_csv)[1:]]
    json_rows = [
        (group["split_i"], tree["false_rows"])
        for group in json.loads(as_json)["groups"]
        for tree in group["trees"]
    ]
    assert csv_rows == json_rows
