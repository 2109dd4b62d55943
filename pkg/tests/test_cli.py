import io
import json
import subprocess
import sys

import pytest

from higher_specht.cli import main, parse_set, parse_tableau, parse_word, UsageError
from higher_specht.fixtures import evaluate_expression
from higher_specht.polyring import Polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_parsers():
    assert parse_word("35271486") == (3, 5, 2, 7, 1, 4, 8, 6)
    assert parse_word("10,1,2,3,4,5,6,7,8,9")[0] == 10
    assert parse_word("identity", 3) == (1, 2, 3)
    assert parse_set("1,3") == [1, 3] and parse_set("") == [] and parse_set("{2}") == [2]
    assert parse_tableau("1 2 4/3").rows == ((1, 2, 4), (3,))
    with pytest.raises(UsageError):
        parse_word("identity")
    with pytest.raises(UsageError):
        parse_word("12a")


def test_tableau_rsk(capsys):
    code, out = run(capsys, "tableau", "rsk", "--w", "35271486")
    assert code == 0
    assert out["P"] == [[1, 4, 6, 8], [2, 5, 7], [3]]
    assert out["Qtilde"] == [[1, 3, 4, 8], [2, 5, 6], [7]]
    assert out["cocharge"] == 13


def test_tableau_ct_single_row(capsys):
    _, out = run(capsys, "tableau", "ct", "--S", "1 2 3 4")
    assert out["ct"] == [[0, 0, 0, 0]]


def test_tableau_ct_with_set(capsys):
    _, out = run(capsys, "tableau", "ct", "--S", "1,2,4,7/3,6,8/5", "--set", "1,2,4,5,7")
    assert out["sum"] == 21 and out["is_cct"] is False


def test_tableau_corners(capsys):
    _, out = run(capsys, "tableau", "corners", "--shape", "4,3,1")
    assert [c["v"] for c in out["corners"]] == [[1, 5], [2, 4], [3, 2], [4, 1]]
    _, out = run(capsys, "tableau", "corners", "--S", "1 3 4 8/2 5 6/7")
    assert out["corners"][2]["S_plus"] == [[1, 4, 5, 9], [2, 6, 7], [3, 8]]
    assert [c["delta"] for c in out["corners"]] == [1, 1, 0, 0]


def test_tableau_dsic_and_iota(capsys):
    _, out = run(capsys, "tableau", "dsic", "--S", "1 3 4 8/2 5 6/7")
    assert out["Dsic"] == [2, 4, 7]
    _, out = run(capsys, "tableau", "iota", "--S", "1 3 4 8/2 5 6/7")
    assert out["iota_cc"] == [[0, 0, 1, 1, 3], [1, 2, 2], [3]]


def test_malformed_inputs_exit_2(capsys):
    assert main(["tableau", "rsk", "--w", "1135"]) == 2
    assert main(["tableau", "corners", "--shape", "1,3"]) == 2
    assert main(["tableau", "ev", "--S", "2 1"]) == 2
    capsys.readouterr()


def test_specht_fw(capsys):
    _, out = run(capsys, "specht", "fw", "--w", "24153")
    want = evaluate_expression(
        "x5**2*(x2*x3*x4**2 - x1*x3*x4**2 - x2*x3**2*x4 + x1*x3**2*x4 + x1*x2**2*x4 - x1**2*x2*x4"
        " - x1*x2**2*x3 + x1**2*x2*x3) - x5*(x1*x2**2*x4**2 - x1**2*x2*x4**2 - x1*x2**2*x3**2"
        " + x1**2*x2*x3**2 + x2**2*x3*x4**2 - x2**2*x3**2*x4 - x1**2*x3*x4**2 + x1**2*x3**2*x4)"
        " - 2*x1*x2**2*x3*x4**2 + 2*x1**2*x2*x3*x4**2 + 2*x1*x2**2*x3**2*x4 - 2*x1**2*x2*x3**2*x4"
    )
    assert Polynomial.parse(out["polynomial"]) == want
    assert out["degree"] == 6 and out["s_stab"] == 1


def test_specht_identity(capsys):
    _, out = run(capsys, "specht", "fw", "--w", "identity", "--n", "5")
    assert out["polynomial"] == "1"


def test_specht_variants(capsys):
    _, out = run(capsys, "specht", "fwI", "--w", "123", "--set", "2")
    assert out["hvec"] == [1]
    _, out = run(capsys, "specht", "hom", "--w", "1234", "--set", "1,3")
    assert out["hvec"] == [1, 0, 1] and out["degree"] == 4
    _, out = run(capsys, "specht", "quotient", "--w", "2134")
    assert out["polynomial"] == "1"


def test_specht_descent_error_exit_3(capsys):
    assert main(["specht", "fwI", "--w", "213", "--set", "2"]) == 3


def test_specht_stable(capsys):
    _, out = run(capsys, "specht", "stable", "--w", "24153", "--trunc", "6")
    assert out["certificate"]["substitution_compatible"]
    assert out["certificate"]["invariant"]
    assert Polynomial.parse(out["polynomial"]).substitute_zero([6]).degree() == 6


def test_decompose(capsys):
    _, out = run(capsys, "decompose", "--n", "4", "--set", "2")
    assert len(out["summands"]) == 3 and out["dimension"] == 6
    _, out = run(capsys, "decompose", "--n", "4", "--set", "1,2", "--ext")
    assert out["display"] == "V[1 2 3 4 5] + V[1 2 3 4 / 5] + V[1 2 3 5 / 4] + V[1 2 3 / 4 5] + V[1 2 3 / 4 / 5]"
    _, out = run(capsys, "decompose", "--n", "3", "--k", "2")
    assert out["dimension"] == 6
    _, out = run(capsys, "decompose", "--n", "3", "--set", "1", "--realize")
    assert sorted(out["summands"][1]["basis"]) == ["-1 * x1 + 1 * x2", "-1 * x1 + 1 * x3"]
    _, out = run(capsys, "decompose", "--n", "3", "--set", "1", "--ind", "1")
    assert out["I"] == [1, 3]
    _, out = run(capsys, "decompose", "--n", "4", "--set", "1", "--enlarge", "3")
    assert out["I"] == [1, 3]


def test_decompose_bounds_and_errors(capsys):
    assert main(["decompose", "--n", "12", "--set", "1"]) == 4
    assert main(["decompose", "--n", "7", "--set", "1", "--realize"]) == 4
    assert main(["decompose", "--n", "3", "--set", "1,3"]) == 2
    assert main(["decompose", "--n", "3"]) == 2
    capsys.readouterr()
    code, out = run(capsys, "decompose", "--n", "3", "--set", "1,3", "--mode", "intersect")
    assert code == 0 and out["I"] == [1]


def test_verify_small(capsys):
    code, out = run(capsys, "verify", "--suite", "fixtures")
    assert code == 0 and out["ok"] and out["failures"] == []
    code, out = run(capsys, "verify", "--suite", "all", "--max-n", "3", "--threads", "1")
    assert code == 0 and all(s["ok"] for s in out["suites"])


def test_output_is_deterministic(capsys):
    _, first = run(capsys, "decompose", "--n", "4", "--set", "1,3", "--hom")
    _, second = run(capsys, "decompose", "--n", "4", "--set", "1,3", "--hom")
    assert first == second


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("--w 2134\n"))
    code, out = run(capsys, "specht", "fw", "--stdin")
    assert code == 0 and out["polynomial"] == "-1 * x1 + 1 * x2"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "higher_specht", "tableau", "rsk", "--w", "21", "--pretty"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["P"] == [[1], [2]]
    assert "\n  " in proc.stdout
