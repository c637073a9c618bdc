import json

import pytest

from linksig.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_invariants(capsys):
    code, out = run(capsys, "invariants", "--strands", "3", "--word", "1,2,1")
    assert code == 0
    data = json.loads(out)
    assert data["components"] == 2
    assert data["signature"] == -1
    assert data["det"] == "2i"
    assert data["conway_text"] == "+ t - t^-1"


def test_family_prints_word(capsys):
    code, out = run(capsys, "family", "b", "--n", "1", "--k", "1",
                    "--J", "1", "--alpha", "0")
    assert code == 0
    assert out.strip() == "-2,1,1,2,1"


def test_splice_eval(tmp_path, capsys):
    from linksig.splice import torus_delta_diagram
    path = tmp_path / "d.json"
    path.write_text(json.dumps(torus_delta_diagram(2, 1).to_json()))
    code, out = run(capsys, "splice", "eval", "--file", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["det"] == "4"
    code, out = run(capsys, "splice", "eval", "--file", str(path),
                    "--multivariable")
    data = json.loads(out)
    assert data["det"] == "4"
    assert data["factors"]


def test_skeinpoly_value(capsys):
    code, out = run(capsys, "skeinpoly", "a", "--J", "1", "--sign", "+",
                    "--x", "0")
    assert code == 0 and out.strip() == "2"
    code, out = run(capsys, "skeinpoly", "a", "--J", "2", "--sign", "+",
                    "--x", "1,1", "--symbolic")
    assert code == 0
    assert json.loads(out) == {"x1*x2": "-4"}


def test_closedform_verify(capsys):
    code, out = run(capsys, "closedform", "b", "--n", "1", "--k", "1",
                    "--J", "1", "--alpha", "1", "--verify")
    assert code == 0
    data = json.loads(out)
    assert (data["sign"], data["null"]) == (-1, 1)
    assert data["verified"] is True


def test_closedform_explore_unproven(capsys):
    code, out = run(capsys, "closedform", "b", "--n", "4", "--k", "2",
                    "--J", "2", "--alpha", "1,1", "--explore")
    assert code == 0
    data = json.loads(out)
    assert "not established" in data["closed_form"]
    assert "direct" in data


def test_skein_verify(capsys):
    code, out = run(capsys, "skein", "verify", "--relation", "b2",
                    "--trials", "3", "--seed", "1", "--strands", "3",
                    "--maxlen", "6")
    assert code == 0
    assert "3/3" in out
    code, out = run(capsys, "skein", "verify", "--relation", "conway",
                    "--trials", "5", "--seed", "2", "--strands", "4",
                    "--maxlen", "8")
    assert code == 0
    code, out = run(capsys, "skein", "verify", "--relation", "blocks",
                    "--trials", "3", "--seed", "3")
    assert code == 0


def test_prohibit_theorem11(capsys):
    code, out = run(capsys, "prohibit", "theorem11", "--n", "1", "--k", "3",
                    "--r", "0", "--lambda", "13", "--lambda-odd", "0",
                    "--lambda-even", "13", "--lambda-plus", "10",
                    "--lambda-minus", "3")
    assert code == 1
    assert json.loads(out)["verdict"] == "prohibited"


def test_prohibit_degree9(capsys):
    code, out = run(capsys, "prohibit", "degree9", "--alpha", "2",
                    "--beta", "1", "--gamma", "23", "--m-curve")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "admissible"
    assert len(data["schemes"]) == 1


def test_bad_command_rejected():
    with pytest.raises(SystemExit):
        main(["nonsense"])
