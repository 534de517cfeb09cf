"""End-to-end tests for the command-line interface."""

import json

import pytest

from qdissect.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------
# expand
# ----------------------------------------------------------------------


def test_expand_signed_series_frozen(capsys):
    code, out, _ = run_cli(capsys, "expand", "A_k(2)", "-N", "5")
    assert code == 0
    assert out == "0\t1\n1\t-1\n2\t-1\n3\t0\n4\t1\n5\t0\n"


def test_expand_eta_partition_numbers(capsys):
    code, out, _ = run_cli(capsys, "expand", "eta{1:-1}", "-N", "4")
    assert code == 0
    assert out == "0\t1\n1\t1\n2\t2\n3\t3\n4\t5\n"


def test_expand_phi_frozen(capsys):
    code, out, _ = run_cli(capsys, "expand", "phi(q)", "-N", "4")
    assert code == 0
    assert out == "0\t1\n1\t2\n2\t0\n3\t0\n4\t2\n"


def test_expand_default_precision_is_50(capsys):
    code, out, _ = run_cli(capsys, "expand", "f(1)")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 51
    assert lines[0] == "0\t1" and lines[1] == "1\t-1"


def test_expand_mod_adds_header(capsys):
    code, out, _ = run_cli(capsys, "expand", "A_k(2)", "-N", "6", "--mod", "3")
    assert code == 0
    assert out.startswith("# mod 3\n0\t1\n1\t2\n")


def test_expand_theta_and_spaces(capsys):
    code, out, _ = run_cli(capsys, "expand", "theta(q, q^3)", "-N", "6")
    assert code == 0
    assert out == "0\t1\n1\t1\n2\t0\n3\t1\n4\t0\n5\t0\n6\t1\n"


def test_expand_jsonl(capsys):
    code, out, _ = run_cli(capsys, "expand", "chi(-q)", "-N", "3", "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().split("\n")]
    assert rows == [
        {"n": 0, "coeff": 1, "mod": None},
        {"n": 1, "coeff": -1, "mod": None},
        {"n": 2, "coeff": 0, "mod": None},
        {"n": 3, "coeff": -1, "mod": None},
    ]


def test_expand_bad_expression_exits_2(capsys):
    code, _, err = run_cli(capsys, "expand", "zeta(q)")
    assert code == 2
    assert "cannot parse" in err


def test_expand_bad_eta_exits_2(capsys):
    code, _, err = run_cli(capsys, "expand", "eta{1:x}")
    assert code == 2


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def test_verify_single_entry_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "lemma2.1")
    assert code == 0
    assert out == "lemma2.1: PASS [exact] N=200\npassed 1/1\n"


def test_verify_no_match_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--filter", "bogus*")
    assert code == 2
    assert "no entries matched" in err


def test_verify_control_fails_with_exit_1(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "control-lemma2.1-sign")
    assert code == 1
    assert "FAIL" in out
    assert "first failure at index 1: expected 2, got -2" in out


def test_verify_jsonl_fields(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--filter", "thm1.4-A3n", "--format", "jsonl", "-N", "60"
    )
    assert code == 0
    row = json.loads(out.strip())
    assert list(row.keys()) == [
        "id",
        "status",
        "mode",
        "precision_or_range",
        "first_failure",
        "elapsed_ms",
    ]
    assert row["id"] == "thm1.4-A3n" and row["status"] == "pass"


def test_verify_text_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "verify", "--filter", "jtpi-*", "-N", "80")
    _, second, _ = run_cli(capsys, "verify", "--filter", "jtpi-*", "-N", "80")
    assert first == second
    assert "elapsed" not in first


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code, out, _ = run_cli(
        capsys, "verify", "--filter", "lemma2.1", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text() == "lemma2.1: PASS [exact] N=200\npassed 1/1\n"


# ----------------------------------------------------------------------
# scan
# ----------------------------------------------------------------------


def test_scan_k3_mod2_finds_both_residues(capsys):
    code, out, _ = run_cli(capsys, "scan", "3", "--mod", "2", "--period", "4", "--n-max", "500")
    assert code == 0
    assert out == (
        "scan A_3 mod 2, period 4, n<=500\n"
        "residue 2: vanishes for all n<=500 (empirical, not certified)\n"
        "residue 3: vanishes for all n<=500 (empirical, not certified)\n"
    )


def test_scan_k5_mod5(capsys):
    code, out, _ = run_cli(capsys, "scan", "5", "--mod", "5", "--period", "25", "--n-max", "400")
    assert code == 0
    for r in (14, 19, 24):
        assert f"residue {r}: vanishes" in out


def test_scan_k2_mod3(capsys):
    code, out, _ = run_cli(capsys, "scan", "2", "--mod", "3", "--period", "9", "--n-max", "400")
    assert code == 0
    assert "residue 5: vanishes" in out
    assert out.count("vanishes") == 1


def test_scan_nothing_found(capsys):
    code, out, _ = run_cli(capsys, "scan", "2", "--mod", "3", "--period", "2", "--n-max", "60")
    assert code == 0
    assert "no vanishing residues" in out


def test_scan_bad_parameters(capsys):
    code, _, err = run_cli(capsys, "scan", "0", "--mod", "2", "--period", "4")
    assert code == 2


# ----------------------------------------------------------------------
# oracle-diff
# ----------------------------------------------------------------------


def test_oracle_diff_identical(capsys):
    code, out, _ = run_cli(capsys, "oracle-diff", "7", "-N", "120")
    assert code == 0
    assert out == "identical through N=120\n"


def test_oracle_diff_default_precision(capsys):
    code, out, _ = run_cli(capsys, "oracle-diff", "2")
    assert code == 0
    assert out == "identical through N=200\n"


# ----------------------------------------------------------------------
# list and usage
# ----------------------------------------------------------------------


def test_list_contains_entries_and_kinds(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    lines = out.strip().split("\n")
    ids = [line.split("\t")[0] for line in lines]
    assert ids == sorted(ids)
    assert "genAn" in ids and "thm1.9-prime" in ids
    by_id = {line.split("\t")[0]: line.split("\t")[1] for line in lines}
    assert by_id["genAn"] == "identity"
    assert by_id["thm1.6-4n2"] == "family"
    assert by_id["control-fam-9n4"] == "family control"
    assert by_id["control-lemma2.1-sign"] == "identity control"


def test_list_filter(capsys):
    code, out, _ = run_cli(capsys, "list", "--filter", "thm1.6*")
    assert code == 0
    assert [line.split("\t")[0] for line in out.strip().split("\n")] == [
        "thm1.6-4n2",
        "thm1.6-4n3",
    ]


def test_no_arguments_exits_2(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_unknown_subcommand_exits_2(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()
