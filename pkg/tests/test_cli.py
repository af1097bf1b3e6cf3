import json

import pytest

from prymcalc.cli import main
from prymcalc.lattice import model_from_name
from prymcalc.replay import replay_certificate


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bn_rho(capsys):
    assert run(capsys, "bn", "rho", "--g", "9", "--r", "2", "--d", "8")[:2] == (0, "0\n")


def test_bn_commands(capsys):
    assert run(capsys, "bn", "pairs", "--g", "9")[1].strip() == "(4,1) (8,3)"
    assert run(capsys, "bn", "slope", "--g", "23")[1].strip() == "13/2"
    assert run(capsys, "bn", "expdim", "--g", "9", "--e", "8", "--f", "3")[1].strip() == "-1"
    assert run(capsys, "bn", "expdim", "--e", "4", "--f", "2", "--r", "7")[1].strip() == "-8"


def test_class_solve_json(capsys):
    code, out, _ = run(capsys, "class", "solve", "--i", "1", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["normalized_class"] == {"lambda": "4", "d0p": "-1/2", "d0pp": "undetermined", "d0ram": "-3/4"}


def test_class_text(capsys):
    assert run(capsys, "class", "srange", "--i", "3")[1].strip() == "48/5 54/5"
    out = run(capsys, "class", "pencils", "--g", "7")[1]
    assert "standard: (8, 44, 0, 8)" in out and "nonstandard: (7, 42, 0, 4)" in out


def test_prove_round_trip_through_replay(capsys, tmp_path):
    path = tmp_path / "cert.json"
    code, out, _ = run(capsys, "lattice", "prove", "--model", "standard-hyp", "--g", "7",
                       "--class", "L - 3*E - e", "--json", "--out", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc == json.loads(path.read_text())
    assert replay_certificate(model_from_name(doc["model"]), doc).proved == doc["proved"]
    code, out, _ = run(capsys, "lattice", "replay", "--cert", str(path))
    assert (code, out.strip()) == (0, "replay ok")


def test_prove_failure_exit_code(capsys):
    code, out, _ = run(capsys, "lattice", "prove", "--model", "standard-hyp", "--g", "9",
                       "--class", "4*E - e", "--depth", "1")
    assert code == 1 and "no proof found" in out


def test_lattice_queries(capsys):
    assert run(capsys, "lattice", "pair", "--model", "nonstandard-hyp", "--i", "2",
               "--class", "R", "--class", "E")[1].strip() == "2"
    assert run(capsys, "lattice", "member", "--model", "standard", "--g", "5", "--class", "N1/2")[1].strip() == "false"
    assert run(capsys, "lattice", "peel", "--model", "standard", "--g", "5", "--class", "e")[1].strip().startswith("-1/2*N1")
    assert run(capsys, "lattice", "decomp", "--model", "standard", "--g", "6")[0] == 0


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    ["bn", "rho", "--g", "9"],
    ["bn", "rho", "--g", "x", "--r", "1", "--d", "1"],
    ["lattice", "prove", "--model", "standard", "--class", "L"],
    ["lattice", "prove", "--model", "standard", "--g", "5", "--class", "Q"],
    ["lattice", "decomp", "--model", "standard", "--g", "6", "--class", "N1"],
    ["verify-all", "--max-i", "1", "--max-g", "6"],
    ["bn", "pairs", "--g", "2"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_all_text_and_json_agree(capsys):
    code_t, text, _ = run(capsys, "verify-all", "--max-i", "2", "--max-g", "6")
    code_j, out, _ = run(capsys, "verify-all", "--max-i", "2", "--max-g", "6", "--json")
    doc = json.loads(out)
    assert code_t == code_j == 0
    text_status = [line.split()[0] for line in text.strip().splitlines()[:-1]]
    assert text_status == [e["status"] for e in doc["entries"]]
    # certificates embedded in the report replay to the same verdicts
    for e in doc["entries"]:
        for c in e["artifact"].get("certificates", []):
            assert replay_certificate(model_from_name(c["model"]), c).proved == c["proved"]
