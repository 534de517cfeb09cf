"""Tests for the verification runner and its report contract."""

import json

import pytest

from qdissect import modtables
from qdissect.oracles import signed_table
from qdissect.registry import CongruenceFamily, IdentityCase, get_entry
from qdissect.series import make
from qdissect.verify import (
    DEFAULT_ARG_BUDGET,
    VerificationReport,
    check_family,
    exit_code,
    family_table_bound,
    reports_to_jsonl,
    run,
    select,
    verify_entry,
    verify_identity,
)

REPORT_FIELDS = ["id", "status", "mode", "precision_or_range", "first_failure", "elapsed_ms"]


def test_report_dict_field_contract():
    r = verify_identity(get_entry("lemma2.1"), 40)
    d = r.to_dict()
    assert list(d.keys()) == REPORT_FIELDS
    assert d["status"] == "pass"
    assert d["mode"] == "exact"
    assert d["precision_or_range"] == "N=40"
    assert d["first_failure"] is None
    assert isinstance(d["elapsed_ms"], float)
    assert r.passed


def test_identity_uses_entry_precision_by_default():
    r = verify_identity(get_entry("merca-gen-A9n5"))
    assert r.precision_or_range == "N=150"
    assert r.passed


def test_zero_precision_override():
    for entry_id in ("genAn", "thm1.4-A9n5", "psi-cube-mod3"):
        r = verify_identity(get_entry(entry_id), 0)
        assert r.passed and r.precision_or_range == "N=0"


def test_failing_identity_reports_lhs_as_expected():
    # A deliberately corrupted copy: scaled right side.
    base = get_entry("lemma2.1")
    broken = IdentityCase(
        id="broken-scale",
        description="corrupted for testing",
        lhs=base.lhs,
        rhs=lambda n: base.rhs(n).scale(3),
    )
    r = verify_identity(broken, 30)
    assert not r.passed
    assert r.first_failure == {"index": 0, "expected": 1, "got": 3}


def test_mode_strings():
    assert verify_identity(get_entry("psi-cube-mod3"), 20).mode == "mod 3"
    assert check_family(get_entry("thm1.6-4n2"), n_max=50).mode == "family mod 2"


def test_family_pass_and_range_string():
    r = check_family(get_entry("thm1.2-9n5"), n_max=100)
    assert r.passed
    assert r.precision_or_range == "1 tuple(s), n<=100, 101 checks"
    assert r.first_failure is None


def test_false_family_first_failure_matches_oracle():
    r = check_family(get_entry("control-fam-9n4"))
    assert not r.passed
    # smallest offender is n=0: index 4, and the true value of A(4) mod 3
    assert r.first_failure["index"] == 4
    assert r.first_failure["expected"] == 0
    assert r.first_failure["got"] == signed_table(2, 4)[4] % 3 == 1


def test_companion_family_checks_signed_match():
    r = check_family(get_entry("cong-3n2-27n17"), n_max=60)
    assert r.passed
    # spot-check the encoded relation directly against exact values
    exact = signed_table(2, 27 * 60 + 17)
    for n in (0, 1, 13, 60):
        assert (exact[3 * n + 2] + exact[27 * n + 17]) % 3 == 0


def test_adaptive_budget_caps_ranges():
    fam = get_entry("cong-A7-8n7")
    adaptive = CongruenceFamily(
        id="tmp-adaptive",
        description="budget test",
        k=fam.k,
        modulus=fam.modulus,
        argument=fam.argument,
        n_max=2000,
        adaptive=True,
    )
    assert family_table_bound(adaptive, budget=100) == 8 * 11 + 7
    r = check_family(adaptive, budget=100)
    assert r.passed
    assert "adaptive cap arg<=100" in r.precision_or_range
    assert "12 checks" in r.precision_or_range  # n = 0..11
    # n=0 is always covered even when its argument exceeds the budget
    assert family_table_bound(adaptive, budget=1) == 7
    r0 = check_family(adaptive, budget=1)
    assert "1 checks" in r0.precision_or_range


def test_select_excludes_controls_by_default():
    default = select()
    assert default and all(not e.expect_failure for e in default)
    ids = [e.id for e in default]
    assert ids == sorted(ids)
    controls = select("control-*")
    assert len(controls) == 5
    assert select("no-such-entry-*") == []


def test_run_reports_sorted_and_green():
    reports = run("lemma2.*", precision=60)
    assert [r.id for r in reports] == sorted(r.id for r in reports)
    assert len(reports) == 11  # 2.1, 2.2ab, 2.3ab, 2.4, five 2.5 splits
    assert all(r.passed for r in reports)
    assert exit_code(reports) == 0


def test_run_controls_fail_with_exit_one():
    reports = run("control-*")
    assert len(reports) == 5
    assert all(not r.passed for r in reports)
    assert all(r.first_failure is not None for r in reports)
    assert exit_code(reports) == 1


def test_jsonl_round_trip():
    reports = run("jtpi-*", precision=50)
    text = reports_to_jsonl(reports)
    lines = text.splitlines()
    assert len(lines) == len(reports) >= 5
    for line, r in zip(lines, reports):
        d = json.loads(line)
        assert list(d.keys()) == REPORT_FIELDS
        assert d["id"] == r.id


def test_verify_entry_dispatch():
    assert verify_entry(get_entry("lemma2.1"), precision=20).mode == "exact"
    assert verify_entry(get_entry("thm1.6-4n3"), n_max=40).mode == "family mod 2"


def test_corrupted_entries_fail_with_correct_first_failure():
    """Three hand-corrupted identities, each caught at the exact first index."""
    base = get_entry("lemma2.1")

    # (a) wrong inner exponent: phi(q^4) -> phi(q^2); diverges first at q^2
    from qdissect.theta import MonomialArg, phi, psi

    bad_exponent = IdentityCase(
        id="bad-exponent",
        description="",
        lhs=base.lhs,
        rhs=lambda n: phi(MonomialArg(1, 2), n)
        + psi(MonomialArg(1, 8), n - 1).times_monomial(2, 1, precision=n),
    )
    r = verify_identity(bad_exponent, 40)
    truth = phi(MonomialArg(1, 1), 40)
    assert not r.passed
    assert r.first_failure["index"] == 2
    assert r.first_failure["expected"] == truth.coefficient(2)

    # (b) dropped term: rhs missing the shifted half entirely
    bad_missing = IdentityCase(
        id="bad-missing",
        description="",
        lhs=base.lhs,
        rhs=lambda n: phi(MonomialArg(1, 4), n),
    )
    r = verify_identity(bad_missing, 40)
    assert not r.passed and r.first_failure["index"] == 1
    assert r.first_failure == {"index": 1, "expected": 2, "got": 0}

    # (c) off-by-one shift on the q-term
    bad_shift = IdentityCase(
        id="bad-shift",
        description="",
        lhs=base.lhs,
        rhs=lambda n: phi(MonomialArg(1, 4), n)
        + psi(MonomialArg(1, 8), n - 2).times_monomial(2, 2, precision=n),
    )
    r = verify_identity(bad_shift, 40)
    assert not r.passed and r.first_failure["index"] == 1


def test_default_budget_value():
    assert DEFAULT_ARG_BUDGET == 3_000_000
