"""End-to-end runs of the command line interface."""

import json

import pytest

from wormcalc import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_worm_o(capsys):
    assert run(capsys, "worm", "o", "0.1") == (0, "w + 1\n", "")


def test_ord_subcommands(capsys):
    assert run(capsys, "ord", "cmp", "w", "phi(1,0)") == (0, "less\n", "")
    assert run(capsys, "ord", "cmp", "e[w](1)", "phi(1,0)") == (0, "equal\n", "")
    assert run(capsys, "ord", "add", "1", "w") == (0, "w\n", "")
    assert run(capsys, "ord", "sub", "w", "w+2") == (0, "2\n", "")
    assert run(capsys, "ord", "ell", "w^(w+1)+w^(2)") == (0, "2\n", "")
    assert run(capsys, "ord", "cnf", "w^(2)+3") == (0, "2, 0, 0, 0\n", "")
    assert run(capsys, "ord", "cnf", "0") == (0, "(empty)\n", "")
    assert run(capsys, "ord", "whnf", "phi(1,0)+2") == (0, "e[w](1) + 2\n", "")


def test_hyper_commands(capsys):
    assert run(capsys, "hyperexp", "w", "1") == (0, "phi(1,0)\n", "")
    assert run(capsys, "hyperlog", "w", "phi(1,1)") == (0, "2\n", "")


def test_worm_subcommands(capsys):
    assert run(capsys, "worm", "normalize", "1.0") == (0, "1\n", "")
    assert run(capsys, "worm", "head", "1", "2.1.0.1") == (0, "2.1\n", "")
    assert run(capsys, "worm", "rem", "1", "2.1.0.1") == (0, "0.1\n", "")
    assert run(capsys, "worm", "up", "1", "1.0") == (0, "2.1\n", "")
    assert run(capsys, "worm", "down", "1", "2.1") == (0, "1.0\n", "")
    assert run(capsys, "worm", "compare", "1", "1.0.1.1.1", "1.1.0.1.1") == (
        0,
        "incomparable\n",
        "",
    )
    assert run(capsys, "worm", "omega", "1", "1.0.1") == (0, "1\n", "")
    assert run(capsys, "worm", "omega-seq", "w") == (
        0,
        "0: phi(1,0); w: 1; w + 1: 0\n",
        "",
    )


def test_turing_subcommands(capsys):
    code, out, err = run(capsys, "turing", "conservativity", "1.0.1", "1")
    assert code == 0 and err == ""
    assert "T¹_1 + 0.1" in out
    code, out, err = run(capsys, "turing", "schedule", "1.0.1")
    assert code == 0
    assert "level 0" in out and "level 1" in out
    code, out, err = run(capsys, "turing", "schedule", "w")
    assert code == 2 and out == ""
    assert "below omega" in err


def test_enumerate(capsys):
    code, out, err = run(capsys, "enumerate", "--alphabet", "0,1", "--max-length", "2")
    lines = out.strip().splitlines()
    assert code == 0 and err == ""
    assert lines[0] == "T"
    assert lines[-1] == "7 worms"


def test_json_output(capsys):
    code, out, err = run(capsys, "--json", "worm", "o", "2")
    assert code == 0 and err == ""
    assert json.loads(out) == {
        "command": "worm o",
        "inputs": {"worm": "2"},
        "result": {"sum": "w^(w)", "whnf": "e[1](w)"},
    }


def test_json_omega_seq(capsys):
    code, out, _ = run(capsys, "--json", "worm", "omega-seq", "2")
    payload = json.loads(out)
    assert payload["command"] == "worm omega-seq"
    assert [e["start"]["sum"] for e in payload["result"]] == ["0", "1", "2", "3"]
    assert [e["value"]["sum"] for e in payload["result"]] == ["w^(w)", "w", "1", "0"]


def test_json_schedule(capsys):
    code, out, _ = run(capsys, "--json", "turing", "schedule", "1.0.1")
    payload = json.loads(out)
    assert payload["result"]["entries"][0]["extent"]["sum"] == "w + w"
    assert payload["result"]["entries"][1]["remainder"] == "0.1"


def test_parse_error_exits_2(capsys):
    code, out, err = run(capsys, "ord", "cmp", "w^(", "0")
    assert code == 2 and out == ""
    assert "position 4" in err


def test_precondition_error_exits_2(capsys):
    code, out, err = run(capsys, "worm", "down", "1", "0.1")
    assert code == 2 and out == ""
    assert err.startswith("error:")


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as err:
        cli.main(["bogus"])
    assert err.value.code == 2


def test_selftest(capsys):
    code, out, err = run(capsys, "selftest")
    assert code == 0 and err == ""
    assert out.count("all passing") == 2
