from __future__ import annotations

import dataclasses
import json
import subprocess
import sys

import pytest

from nongrs import cli
from nongrs.analytics import weights


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


F9_STAR = ("--p", "3", "--m", "2", "--set", "fqstar", "--k", "4")


def test_construct(capsys, tmp_path):
    code, out, err = run(capsys, "construct", *F9_STAR, "--v", "ones")
    assert code == 0
    data = json.loads(out)
    assert (data["code"]["length"], data["code"]["dimension"]) == (9, 4)
    assert "[9, 4]" in err
    path = tmp_path / "c.json"
    path.write_text(out)
    # the construct output can be fed back as a spec
    code, out2, _ = run(capsys, "classify", "--spec", str(path))
    assert code == 0
    assert json.loads(out2)["result"]["classification"]["class"] == "NMDS"


def test_construct_variants(capsys):
    code, out, _ = run(capsys, "construct", *F9_STAR, "--variant", "ck_mu", "--mu", "2")
    assert code == 0 and json.loads(out)["construction"]["mu"] == 2
    code, _, err = run(capsys, "construct", *F9_STAR, "--variant", "ck_mu")
    assert code == 2 and "mu" in err


def test_validation_errors(capsys):
    code, _, err = run(capsys, "construct", "--p", "7", "--set", "1,2,2,3,4,5", "--k", "3")
    assert code == 2 and "repeated" in err
    code, _, err = run(capsys, "classify", "--p", "7", "--set", "fq", "--k", "6")
    assert code == 2 and "3 <= k <= n-2" in err
    code, _, _ = run(capsys, "construct", "--p", "6", "--set", "fq", "--k", "3")
    assert code == 2


def test_spec_file(capsys, tmp_path):
    spec = {"field": {"p": 2, "m": 4, "modulus": [1, 1, 0, 0, 1]},
            "set": ["w^1", "w^3", "w^5", "w^8", "w^9", "w^11", "w^13"],
            "v": "ones", "k": 5, "variant": "ck"}
    path = tmp_path / "s.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "classify", "--spec", str(path))
    assert code == 0
    res = json.loads(out)["result"]
    assert res["classification"]["class"] == "MDS"
    assert res["freeness_certificate"]["zero_sum_subsets"] == 0
    assert res["cross_check"]["d"] == 4


def test_wdist_both(capsys):
    code, out, err = run(capsys, "wdist", *F9_STAR)
    assert code == 0
    res = json.loads(out)["result"]
    want = "1+48z^5+480z^6+1152z^7+2616z^8+2264z^9"
    assert res["formula"]["code"]["enumerator"] == want
    assert res["exhaustive"]["code"]["enumerator"] == want
    assert res["formula"]["code"]["method"] == "formula"
    assert res["exhaustive"]["code"]["method"] == "exhaustive"
    assert res["agree"] is True
    assert want in err


def test_wdist_budget(capsys):
    args = ("wdist", "--p", "2", "--m", "6", "--set", "fqstar", "--k", "6")
    code, _, err = run(capsys, *args, "--method", "exhaustive")
    assert code == 3 and "max-enum" in err
    # default method falls back to the formula and records why
    code, out, _ = run(capsys, *args)
    assert code == 0
    data = json.loads(out)
    assert "exhaustive" not in data["result"]
    assert any("max-enum" in n for n in data["budget_notes"])


def test_wdist_mismatch_exit(capsys, monkeypatch):
    real = weights.ck_distribution

    def skewed(S, k, max_subsets):
        d = real(S, k, max_subsets)
        counts = list(d.code.counts)
        counts[-1] += 1
        return dataclasses.replace(d, code=type(d.code)(tuple(counts)))

    monkeypatch.setattr(weights, "ck_distribution", skewed)
    code, out, _ = run(capsys, "wdist", *F9_STAR)
    assert code == 1 and json.loads(out)["result"]["agree"] is False


def test_wdist_formula_only_for_ck(capsys):
    code, _, _ = run(capsys, "wdist", *F9_STAR, "--variant", "grs", "--method", "formula")
    assert code == 2


def test_schur_and_so(capsys):
    code, out, _ = run(capsys, "schur", "--p", "11", "--set", "1,2,3,4,5,6,7,8", "--k", "3")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["evidence"]["measured"] == 6 and res["evidence"]["non_grs"]
    assert res["structure"]["ok"]
    code, out, _ = run(capsys, "so", "--p", "7", "--set", "1,2,3,4,5,6", "--k", "3",
                       "--v", "1,2,3,4,5,6")
    assert code == 0
    assert json.loads(out)["result"] == {"certificate": None, "ggt_zero": False}


def test_asd_char2(capsys):
    code, out, _ = run(capsys, "asd", "--char2", "--p", "2", "--m", "3", "--k", "3",
                       "--set", "w^0,w^1,w^2,w^3,w^4,w^6")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["v_log"] == [3, 1, 0, 0, 3, 1]
    assert res["lambda_log"] == 2
    assert res["self_orthogonality"]["ggt_zero"]


def test_fixture_replay_passes(capsys):
    code, out, err = run(capsys, "paper-check")
    data = json.loads(out)
    assert code == 0, data["failed"]
    assert data["ok"] and not data["failed"]
    assert "PASS" in err


def test_fixture_replay_detects_corrupted_table(capsys, monkeypatch):
    table = weights.TABLES["I"]
    rows = dict(table.rows)
    rows[4] = rows[4].replace("9q-32", "9q-31")
    monkeypatch.setitem(weights.TABLES, "I", dataclasses.replace(table, rows=rows))
    code, out, err = run(capsys, "paper-check", "--only", "table-I ")
    assert code == 1
    failed = json.loads(out)["failed"]
    assert "table-I q=16" in failed
    assert "table-I q=16" in err


def test_byte_stable_output():
    argv = [sys.executable, "-m", "nongrs.cli", "classify", *F9_STAR]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


@pytest.mark.parametrize("argv", [["--version"], ["paper-check", "--help"]])
def test_help(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 0
