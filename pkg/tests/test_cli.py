import io
import json
import subprocess
import sys

import pytest

from twincfvc.cli import run_cli

from oracles import is_strong_bf

STAR5 = "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\nX: 0\nk: 1\n"
K2_NO = "2 1\n0 1\nX: 0 1\nk: 1\n"
K4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
P4 = "4 3\n0 1\n1 2\n2 3\n"
SPLIT = "3 1\n0 1\n"


def run(tmp_path, text, *argv):
    path = tmp_path / "in.txt"
    path.write_text(text)
    out = io.StringIO()
    code = run_cli([argv[0], str(path), *argv[1:]], out)
    return code, json.loads(out.getvalue()), out.getvalue()


def test_decide_fixed_no_instance(tmp_path):
    code, doc, _ = run(tmp_path, K2_NO, "decide")
    assert code == 1 and doc == {"answer": False}


def test_decide_yes_with_witness(tmp_path):
    code, doc, _ = run(tmp_path, P4, "decide", "--k", "3")
    assert code == 0 and doc["answer"] is True
    # first canonical witness; 1,2,3,1 also works but comes later in the order
    assert doc["witness"] == [1, 2, 1, 3]
    assert is_strong_bf(4, [(0, 1), (1, 2), (2, 3)], doc["witness"])


def test_kernelize_star(tmp_path):
    code, doc, _ = run(tmp_path, STAR5, "kernelize")
    assert code == 0
    assert (doc["n_before"], doc["n_after"], doc["bound"]) == (6, 3, 5)
    assert doc["shortcut"] is False and len(doc["deletions"]) == 3


def test_kernelize_without_annotation(tmp_path):
    code, doc, _ = run(tmp_path, K4, "kernelize", "--k", "3", "--exact-tc")
    assert code == 0 and doc["shortcut"] is True and doc["x_out"] == [0, 1]


def test_chi(tmp_path):
    code, doc, _ = run(tmp_path, K4, "chi")
    assert code == 0 and doc == {"chi": 4}
    code, doc, _ = run(tmp_path, P4 + "X: 1 2\n", "chi")
    assert doc == {"chi": 2, "chi_via_twin_cover": 2}


def test_svcfc(tmp_path):
    code, doc, _ = run(tmp_path, P4, "svcfc")
    assert code == 0 and doc["svcfc"] == 3 and len(doc["witness"]) == 4


def test_twincover(tmp_path):
    code, doc, _ = run(tmp_path, P4, "twincover", "--exact-tc")
    assert doc == {"x": [0, 2], "t": 2, "method": "exact"}
    code, doc, _ = run(tmp_path, P4 + "X: 1\n", "twincover")
    assert doc["method"] == "approx" and doc["annotation_is_twin_cover"] is False


def test_color(tmp_path):
    code, doc, _ = run(tmp_path, P4 + "X: 1 2\n", "color")
    assert code == 0 and doc["coloring"] == [1, 3, 4, 2] and doc["num_colors"] == 4
    code, doc, _ = run(tmp_path, "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\nX: 1 3 4\n", "color", "--y", "1")
    assert code == 2 and doc["error"] == "structural"


def test_verify(tmp_path):
    code, doc, _ = run(tmp_path, P4, "verify", "--coloring", "1,2,1,2")
    assert code == 0
    assert doc == {"is_strong": False, "violating_pair": [0, 3], "paths_overflowed": False}
    code, doc, _ = run(tmp_path, P4, "verify", "--coloring", "[1, 2, 3, 1]")
    assert doc["is_strong"] is True


def test_verify_disconnected_is_a_validity_error(tmp_path):
    code, doc, _ = run(tmp_path, SPLIT, "verify", "--coloring", "1 2 1")
    assert code == 2 and doc["error"] == "validity"


def test_input_errors(tmp_path):
    code, doc, _ = run(tmp_path, "2 1\n0 9\n", "chi")
    assert code == 2 and doc["error"] == "input" and "line 2" in doc["message"]
    code, doc, _ = run(tmp_path, P4, "decide")
    assert code == 2 and "k" in doc["message"]
    code, doc, _ = run(tmp_path, P4, "verify")
    assert code == 2
    out = io.StringIO()
    assert run_cli(["chi", str(tmp_path / "missing.txt")], out) == 2


def test_budget_error(tmp_path):
    text = "12 11\n" + "".join(f"{i} {i + 1}\n" for i in range(11))
    code, doc, _ = run(tmp_path, text, "decide", "--k", "4", "--budget", "5")
    assert code == 3 and doc["error"] == "budget"


def test_graph6_format(tmp_path):
    code, doc, _ = run(tmp_path, "C~\n", "chi", "--format", "graph6")
    assert doc == {"chi": 4}


def test_gen(tmp_path):
    spec = {"t": 1, "types": [{"S": [0], "s": 1, "count": 3}], "seed": 5}
    code, doc, _ = run(tmp_path, json.dumps(spec), "gen")
    assert code == 0 and doc["n"] == 4 and doc["x"] == [0]
    assert doc["edges"] == [[0, 1], [0, 2], [0, 3]]
    assert doc["instance"] == "4 3\n0 1\n0 2\n0 3\nX: 0\n"
    code, doc, _ = run(tmp_path, "{not json", "gen")
    assert code == 2
    code, doc, _ = run(tmp_path, json.dumps({"types": []}), "gen")
    assert code == 2


def test_usage_errors_exit_2(tmp_path):
    with pytest.raises(SystemExit) as err:
        run_cli(["decide", "--bogus"], io.StringIO())
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        run_cli(["frobnicate"], io.StringIO())
    assert err.value.code == 2


def test_output_is_byte_identical_across_runs(tmp_path):
    spec = json.dumps({"t": 3, "types": [{"S": [0, 2], "s": 2, "count": 4},
                                         {"S": [1], "s": 1, "count": 5}], "p": 0.4})
    first = run(tmp_path, spec, "gen", "--seed", "123")[2]
    assert first == run(tmp_path, spec, "gen", "--seed", "123")[2]
    assert first != run(tmp_path, spec, "gen", "--seed", "124")[2]
    a = run(tmp_path, STAR5, "kernelize")[2]
    assert a == run(tmp_path, STAR5, "kernelize")[2]


def test_module_entry_point_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "twincfvc", "decide"],
        input=K2_NO, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout) == {"answer": False}
