import json

import pytest

from gdnsuper import parse_element
from gdnsuper.cli import main
from gdnsuper.terms import Alphabet


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--alphabet", "x:0,y:0", "(x*(y*x))")
    A = Alphabet.parse("x:0,y:0")
    assert code == 0
    assert parse_element(out.strip(), A) == parse_element("((x*y)*x) + (y*(x*x)) - ((y*x)*x)", A)
    assert run(capsys, "nf", "--alphabet", "xi:1", "(xi*(xi*xi))")[1] == "0\n"
    assert run(capsys, "nf", "--alphabet", "x:0", "x")[1] == "x\n"


def test_nf_both_and_flag_placement(capsys):
    code, out, _ = run(capsys, "--method", "both", "nf", "((x*xi)*(x*x))")
    assert code == 0 and out.splitlines()[-1] == "match"
    code, out, _ = run(capsys, "nf", "--method", "embed", "--json", "(x*(xi*x))")
    rows = json.loads(out)
    assert {r["term"] for r in rows} == {"(xi*(x*x))", "((x*xi)*x)", "((xi*x)*x)"}
    assert all(set(r) == {"coeff", "term"} for r in rows)


def test_phi(capsys):
    A = "x:0,y:0,xi:1"
    assert run(capsys, "phi", "--alphabet", A, "(y*(x*xi))")[1] == "x y D^2[xi] + y D^1[x] D^1[xi]\n"
    assert run(capsys, "phi", "x")[1] == "x\n"
    assert run(capsys, "phi", "(xi*xi)")[1] == "xi D^1[xi]\n"
    rows = json.loads(run(capsys, "phi", "--json", "(xi*xi)")[1])
    assert rows == [{"coeff": "1", "monomial": "xi D^1[xi]"}]


def test_count_and_basis(capsys):
    rows = json.loads(run(capsys, "count", "--alphabet", "x:0", "--max", "6", "--json")[1])
    assert [r["tableaux"] for r in rows] == [1, 1, 2, 3, 5, 7] == [r["weight0"] for r in rows]
    rows = json.loads(run(capsys, "count", "--alphabet", "xi:1", "--max", "4", "--json")[1])
    assert [(r["tableaux"], r["weight0"]) for r in rows] == [(1, 1), (1, 1), (0, 0), (0, 0)]
    code, out, _ = run(capsys, "count", "--alphabet", "x:0", "--max", "3")
    assert out.splitlines()[0].split() == ["length", "tableaux", "weight0"]
    assert run(capsys, "basis", "--alphabet", "x:0", "--length", "1")[1] == "x\n"
    assert run(capsys, "basis", "--alphabet", "x:0", "--length", "3")[1] == "(x*(x*x))\n((x*x)*x)\n"


def test_check_suites(capsys):
    assert run(capsys, "check", "identities", "--max-length", "4")[0] == 0
    assert run(capsys, "check", "nilpotency", "--alphabet", "xi:1,eta:1", "--length", "7")[0] == 0
    assert run(capsys, "check", "engel", "--t", "3")[0] == 0
    code, out, _ = run(capsys, "check", "pbw", "--alphabet", "x:0", "--max-length", "4")
    assert code == 0 and "degree gdn phi diff" in out
    code, out, _ = run(capsys, "check", "nilpotency", "--alphabet", "xi:1", "--length", "2", "--json")
    report = json.loads(out)[0]
    assert code == 1 and not report["passed"] and report["witness"]


def test_errors(capsys):
    code, _, err = run(capsys, "nf", "(x*w)")
    assert code == 2 and "unknown generator" in err
    assert run(capsys, "check", "nilpotency", "--alphabet", "x:0")[0] == 2
    with pytest.raises(SystemExit):
        main(["check", "nonsense"])
    with pytest.raises(SystemExit):
        main(["nf", "--alphabet", "x:3", "x"])
    with pytest.raises(SystemExit):
        main(["count", "--max", "0"])
