import json

import pytest

from pedlab.claims import (ClaimParseError, FamilyDirective, builtin_claim_set,
                           load_claim_file, parse_claim_lines)
from pedlab.cli import cmd_prove, cmd_table, cmd_verify, main
from pedlab.partitions import CongruenceClaim
from pedlab.report import RunEntry, VerificationReport


# -- claim parsing --------------------------------------------------------------

def test_builtin_sets():
    ahs = builtin_claim_set("ahs")
    assert [(c.step, c.offset, c.modulus) for c in ahs.claims] == \
        [(3, 2, 2), (9, 4, 4), (9, 7, 12)]
    assert len(ahs.families) == 3

    theorem = builtin_claim_set("theorem1")
    assert [(c.step, c.offset, c.modulus) for c in theorem.claims] == \
        [(225, 43, 24), (225, 88, 24), (225, 133, 24), (225, 223, 24)]
    assert [f.parameter for f in theorem.families] == [1, 2]

    conj = builtin_claim_set("conjecture192")
    assert all(c.status == "conjecture" and c.modulus == 192
               for c in conj.claims)

    full = builtin_claim_set("all")
    assert len(full.claims) == 11
    assert len(full.families) == 5


def test_builtin_unknown_name():
    with pytest.raises(ClaimParseError):
        builtin_claim_set("nope")


def test_parse_claim_lines():
    text = """
    # even-part congruences
    3 2 2 theorem smallest progression
    225 43 192 conjecture
    family theorem-family 1
    family ahs-family-2 1 50 capped scan
    """
    cs = parse_claim_lines(text.splitlines(), name="inline")
    assert cs.claims[0] == CongruenceClaim(3, 2, 2, "theorem",
                                           "smallest progression")
    assert cs.claims[1].status == "conjecture"
    assert cs.families[0] == FamilyDirective("theorem-family", 1)
    assert cs.families[1] == FamilyDirective("ahs-family-2", 1, 50,
                                             "capped scan")


def test_parse_rejects_junk():
    with pytest.raises(ClaimParseError, match=":1:"):
        parse_claim_lines(["3 2 two theorem"])
    with pytest.raises(ClaimParseError):
        parse_claim_lines(["3 2 2 maybe"])
    with pytest.raises(ClaimParseError):
        parse_claim_lines(["family unknown-kind 1"])
    with pytest.raises(ClaimParseError):
        parse_claim_lines(["3 2"])
    with pytest.raises(ClaimParseError):
        parse_claim_lines(["# nothing but comments"])


def test_load_claim_file(tmp_path):
    path = tmp_path / "claims.txt"
    path.write_text("9 7 12 theorem\nfamily ahs-family-1 1\n")
    cs = load_claim_file(path)
    assert len(cs.claims) == 1 and len(cs.families) == 1


# -- cmd_verify -----------------------------------------------------------------

def test_verify_theorem1():
    report, code = cmd_verify(builtin_claim_set("theorem1"), n_limit=60)
    assert code == 0
    assert len(report.runs) == 6
    assert all(e.status == "pass" for e in report.runs)
    labels = [e.label for e in report.runs]
    assert any("5625" in lab for lab in labels)


def test_verify_ahs():
    report, code = cmd_verify(builtin_claim_set("ahs"), n_limit=200)
    assert code == 0
    assert [e.status for e in report.runs] == ["pass"] * 6


def test_verify_conjecture_set():
    report, code = cmd_verify(builtin_claim_set("conjecture192"), n_limit=60)
    assert code == 0
    assert [e.status for e in report.runs] == ["empirical-pass"] * 4


def test_verify_false_theorem_sets_exit_code():
    cs = parse_claim_lines(["9 4 8 theorem known false"])
    report, code = cmd_verify(cs, n_limit=10)
    assert code == 1
    assert report.runs[0].status == "fail"
    assert report.runs[0].witness == (0, 4)


def test_verify_false_conjecture_keeps_exit_zero():
    cs = parse_claim_lines(["9 4 8 conjecture known false"])
    report, code = cmd_verify(cs, n_limit=10)
    assert code == 0
    assert report.runs[0].status == "fail"


def test_verify_table_ceiling():
    cs = parse_claim_lines(["225 43 24 theorem"])
    with pytest.raises(ValueError, match="ceiling"):
        cmd_verify(cs, n_limit=10 ** 7)


def test_verify_scan_modulus_must_cover_claims():
    with pytest.raises(ValueError, match="multiple"):
        cmd_verify(builtin_claim_set("ahs"), n_limit=10, scan_modulus=8)


def test_verify_is_deterministic():
    a, _ = cmd_verify(builtin_claim_set("ahs"), n_limit=30)
    b, _ = cmd_verify(builtin_claim_set("ahs"), n_limit=30)
    assert a.runs == b.runs


# -- cmd_prove ------------------------------------------------------------------

def test_prove_small_order():
    report, code = cmd_prove(order=40)
    assert code == 0
    assert all(e.status == "pass" for e in report.runs)
    kinds = {e.kind for e in report.runs}
    assert kinds == {"proof-step"}
    # 5 series steps + 4 residue steps + 2 family scans
    assert len(report.runs) == 11


def test_prove_order_zero_is_vacuous():
    report, code = cmd_prove(order=0)
    assert code == 0
    assert all(e.status == "pass" for e in report.runs)
    assert "vacuous" in report.meta["note"]


# -- report ----------------------------------------------------------------------

def test_report_json_round_trip():
    report, _ = cmd_verify(builtin_claim_set("conjecture192"), n_limit=20)
    again = VerificationReport.from_json(report.to_json())
    assert again == report


def test_run_entry_validation():
    with pytest.raises(ValueError):
        RunEntry("x", "claim", "fail", "n <= 3")        # fail without witness
    with pytest.raises(ValueError):
        RunEntry("x", "claim", "meh", "n <= 3")
    with pytest.raises(ValueError):
        RunEntry("x", "vibe", "pass", "n <= 3")


# -- cmd_table / CLI end to end ---------------------------------------------------

def test_table_text():
    content = cmd_table(5)
    assert content.splitlines() == \
        ["0\t1", "1\t1", "2\t2", "3\t3", "4\t4", "5\t6"]


def test_table_single_entry():
    assert cmd_table(0) == "0\t1\n"


def test_table_mod_24_at_43():
    content = cmd_table(43, modulus=24)
    assert content.splitlines()[43] == "43\t0"


def test_table_json():
    payload = json.loads(cmd_table(6, modulus=2, fmt="json"))
    assert payload["n_max"] == 6
    assert payload["modulus"] == 2
    assert payload["values"] == [1, 1, 0, 1, 0, 0, 1]


def test_cli_table(capsys):
    assert main(["table", "--n-max", "3"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == ["0\t1", "1\t1", "2\t2", "3\t3"]


def test_cli_table_to_file(tmp_path):
    out = tmp_path / "ped.tsv"
    assert main(["table", "--n-max", "4", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[-1] == "4\t4"


def test_cli_verify_with_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "--set", "conjecture192", "--n-limit", "20",
                 "--json", str(out)])
    assert code == 0
    assert "EMPIRICAL" in capsys.readouterr().out
    report = VerificationReport.from_json(out.read_text())
    assert len(report.runs) == 4


def test_cli_verify_claim_file(tmp_path, capsys):
    path = tmp_path / "claims.txt"
    path.write_text("9 4 8 theorem intentionally false\n")
    assert main(["verify", "--claims", str(path), "--n-limit", "5",
                 "--mod", "8"]) == 1
    assert "first mismatch at n = 0" in capsys.readouterr().out


def test_cli_rejects_bad_claim_file(tmp_path, capsys):
    path = tmp_path / "claims.txt"
    path.write_text("not a claim line\n")
    assert main(["verify", "--claims", str(path)]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_prove(capsys):
    assert main(["prove", "--order", "25"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out
