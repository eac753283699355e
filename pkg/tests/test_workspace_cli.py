"""Workspace loading and the psl command-line front end."""

import json
from pathlib import Path

import pytest

from psl.cli import main
from psl.exactla import QQ
from psl.paction import c4_triple
from psl.workspace import (
    ParseError,
    UnresolvedReference,
    WorkspaceAxiomError,
    load_workspace,
)

SAMPLE = Path(__file__).resolve().parent.parent / "workspaces" / "sample.json"


def fp_workspace(tmp_path, extra_actions=None):
    doc = {
        "version": "psl-workspace/1",
        "field": {"kind": "Fp", "p": 2},
        "groups": {"C2": {"cyclic": 2}},
        "hopf_algebras": {"F2C2": {"constructor": "group_algebra", "group": "C2"}},
        "algebras": {
            "F2": {"constructor": "product_of_fields", "k": 1},
            "F2C2alg": {"constructor": "group_algebra", "group": "C2"},
        },
        "actions": {
            "fixD": {"builder": "trivial", "hopf": "F2C2", "algebra": "F2"},
            "self": {"builder": "trivial", "hopf": "F2C2", "algebra": "F2C2alg"},
        },
    }
    if extra_actions:
        doc["actions"].update(extra_actions)
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(doc))
    return path


def test_load_sample_workspace():
    ws = load_workspace(str(SAMPLE))
    assert ws.field == QQ
    assert set(ws.actions) == {"triple", "corner", "trivial4", "sweedler-trivial"}
    assert ws.actions["triple"].act == c4_triple(QQ).act
    assert ws.ideals["e1-line"].dim == 1


def test_load_rejects_bad_version(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"version": "nope", "field": {"kind": "Q"}}))
    with pytest.raises(ParseError):
        load_workspace(str(path))


def test_load_rejects_unresolved_reference(tmp_path):
    doc = {
        "version": "psl-workspace/1",
        "field": {"kind": "Q"},
        "actions": {"a": {"builder": "trivial", "hopf": "missing", "algebra": "missing"}},
    }
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(UnresolvedReference):
        load_workspace(str(path))


def test_explicit_action_tensor_checked_on_load(tmp_path):
    pa = c4_triple(QQ)
    good_act = [
        [[str(x) for x in vec] for vec in row] for row in pa.act
    ]
    doc = {
        "version": "psl-workspace/1",
        "field": {"kind": "Q"},
        "groups": {"C4": {"cyclic": 4}},
        "hopf_algebras": {"H": {"constructor": "group_algebra", "group": "C4"}},
        "algebras": {"A": {"constructor": "product_of_fields", "k": 3}},
        "actions": {"explicit": {"hopf": "H", "algebra": "A", "act": good_act}},
    }
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(doc))
    ws = load_workspace(str(path))
    assert ws.actions["explicit"].act == pa.act

    doc["actions"]["explicit"]["act"][1][0] = ["1", "0", "0"]  # corrupt g . e1
    path.write_text(json.dumps(doc))
    with pytest.raises(WorkspaceAxiomError):
        load_workspace(str(path))


def test_cli_check_pass(capsys):
    assert main(["check", "--workspace", str(SAMPLE), "triple"]) == 0
    out = capsys.readouterr().out
    assert "pass" in out


def test_cli_check_corrupted_exits_one(tmp_path, capsys):
    pa = c4_triple(QQ)
    act = [[[str(x) for x in vec] for vec in row] for row in pa.act]
    act[1][0] = ["1", "0", "0"]
    doc = {
        "version": "psl-workspace/1",
        "field": {"kind": "Q"},
        "groups": {"C4": {"cyclic": 4}},
        "hopf_algebras": {"H": {"constructor": "group_algebra", "group": "C4"}},
        "algebras": {"A": {"constructor": "product_of_fields", "k": 3}},
        "actions": {"bad": {"hopf": "H", "algebra": "A", "act": act}},
    }
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(doc))
    assert main(["check", "--workspace", str(path), "bad"]) == 1
    out = capsys.readouterr().out
    assert "witness" in out and "PA" in out


def test_cli_check_unknown_name_exits_two(capsys):
    assert main(["check", "--workspace", str(SAMPLE), "nonsense"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_smash_dims(capsys):
    assert main(["smash", "--workspace", str(SAMPLE), "corner"]) == 0
    assert "full 2, partial 1" in capsys.readouterr().out
    assert main(["smash", "--workspace", str(SAMPLE), "triple"]) == 0
    assert "full 12, partial 9" in capsys.readouterr().out


def test_cli_smash_trivial_q1(tmp_path, capsys):
    doc = {
        "version": "psl-workspace/1",
        "field": {"kind": "Q"},
        "groups": {"C2": {"cyclic": 2}},
        "hopf_algebras": {"H": {"constructor": "group_algebra", "group": "C2"}},
        "algebras": {"A": {"constructor": "product_of_fields", "k": 1}},
        "actions": {"t": {"builder": "trivial", "hopf": "H", "algebra": "A"}},
    }
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(doc))
    assert main(["smash", "--workspace", str(path), "t"]) == 0
    assert "full 2, partial 2" in capsys.readouterr().out


def test_cli_radicals_fix_b_zeros(capsys):
    assert main(["radicals", "--workspace", str(SAMPLE), "triple"]) == 0
    out = capsys.readouterr().out
    for label in ("J(A)", "P(A)", "J_H(A)", "P_H(A)", "J(A#H)", "P(A#H)"):
        assert f"{label}: dim 0" in out


def test_cli_radicals_fix_d(tmp_path, capsys):
    path = fp_workspace(tmp_path)
    assert main(["radicals", "--workspace", str(path), "fixD"]) == 0
    out = capsys.readouterr().out
    assert "J(A): dim 0" in out
    assert "J(A#H): dim 1" in out


def test_cli_radicals_trivial_self_action(tmp_path, capsys):
    path = fp_workspace(tmp_path)
    assert main(["radicals", "--workspace", str(path), "self"]) == 0
    out = capsys.readouterr().out
    assert "J(A): dim 1" in out
    assert "J_H(A): dim 1" in out


def test_cli_enumerate_ideals(tmp_path, capsys):
    path = fp_workspace(tmp_path)
    assert main(["enumerate-ideals", "--workspace", str(path), "self"]) == 0
    out = capsys.readouterr().out
    assert "H-stable ideals" in out


def test_cli_verify_pass_and_unknown(capsys):
    assert main(["verify", "NEG-SS"]) == 0
    capsys.readouterr()
    assert main(["verify", "T9.99"]) == 2
    assert "unknown theorem" in capsys.readouterr().err


def test_cli_verify_deterministic_under_seed(capsys):
    assert main(["verify", "T4.26", "--trials", "6", "--seed", "5", "--output", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "T4.26", "--trials", "6", "--seed", "5", "--output", "json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["ok"] is True


def test_cli_verify_with_workspace(capsys):
    assert main(["verify", "T4.26", "--trials", "2", "--workspace", str(SAMPLE)]) == 0
    out = capsys.readouterr().out
    assert "workspace:triple" in out or "PASS" in out


def test_cli_verify_neg_ss_on_sweedler_workspace(capsys):
    assert main(["verify", "NEG-SS", "--workspace", str(SAMPLE)]) == 0
    capsys.readouterr()


def test_workspace_modules_section(tmp_path):
    # A itself as a right partial module over the trivial QC2-action on Q^2:
    # m <| h = eps(h) m, checked on load
    a_act = [
        [["1", "0"], ["0", "0"]],
        [["0", "0"], ["0", "1"]],
    ]
    h_act = [
        [["1", "0"], ["0", "1"]],
        [["1", "0"], ["0", "1"]],
    ]
    doc = {
        "version": "psl-workspace/1",
        "field": {"kind": "Q"},
        "groups": {"C2": {"cyclic": 2}},
        "hopf_algebras": {"H": {"constructor": "group_algebra", "group": "C2"}},
        "algebras": {"A": {"constructor": "product_of_fields", "k": 2}},
        "actions": {"t": {"builder": "trivial", "hopf": "H", "algebra": "A"}},
        "modules": {
            "reg": {"action": "t", "side": "right", "dim": 2, "a_act": a_act, "h_act": h_act}
        },
    }
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(doc))
    ws = load_workspace(str(path))
    assert ws.modules["reg"].dim == 2
    assert main(["check", "--workspace", str(path), "reg"]) == 0

    # corrupting the H-action must be caught on load by other commands
    doc["modules"]["reg"]["h_act"][1] = [["0", "1"], ["1", "0"]]
    path.write_text(json.dumps(doc))
    with pytest.raises(WorkspaceAxiomError):
        load_workspace(str(path))
    assert main(["check", "--workspace", str(path), "reg"]) == 1


def test_cli_check_other_kinds(capsys):
    assert main(["check", "--workspace", str(SAMPLE), "QC4"]) == 0
    assert main(["check", "--workspace", str(SAMPLE), "Q3"]) == 0
    assert main(["check", "--workspace", str(SAMPLE), "C4"]) == 0
    assert main(["check", "--workspace", str(SAMPLE), "e1-line"]) == 0
    capsys.readouterr()


def test_cli_json_output_shape(capsys):
    assert main(["radicals", "--workspace", str(SAMPLE), "triple", "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["radicals"]["J(A#H)"]["dim"] == 0
    assert payload["command"] == "radicals"
