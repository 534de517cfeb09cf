"""Structural tests for the identity/family registry."""

from fnmatch import fnmatch

import pytest

from qdissect.registry import (
    CongruenceFamily,
    EncodingError,
    IdentityCase,
    all_entries,
    congruence_families,
    exact_div,
    get_entry,
    identity_cases,
    _qualifying_primes,
)


def test_ids_unique_and_lookup():
    entries = all_entries()
    ids = [e.id for e in entries]
    assert len(ids) == len(set(ids))
    assert get_entry("genAn").id == "genAn"
    with pytest.raises(KeyError):
        get_entry("nope")


def test_controls_are_prefixed_and_flagged():
    for e in all_entries():
        assert e.expect_failure == e.id.startswith("control-"), e.id


def test_family_filter_shapes():
    ids = [e.id for e in all_entries()]
    # the two k=3 families are exactly what a thm1.6 filter picks up
    assert sorted(i for i in ids if fnmatch(i, "thm1.6*")) == ["thm1.6-4n2", "thm1.6-4n3"]
    assert len([i for i in ids if fnmatch(i, "lemma2.5-*")]) == 5
    assert len([i for i in ids if fnmatch(i, "jtpi-*")]) >= 5
    assert len([i for i in ids if fnmatch(i, "control-*")]) == 5
    assert len([i for i in ids if fnmatch(i, "oracle-series-k*")]) == 4


def test_exact_div():
    assert exact_div(40, 8) == 5
    with pytest.raises(EncodingError):
        exact_div(7, 2)


def test_qualifying_primes_frozen():
    assert _qualifying_primes(-7) == (5, 13, 17, 19, 31, 41, 47)
    assert _qualifying_primes(-23) == (5, 7, 11, 17, 19, 37, 43)


def test_every_identity_builds_at_tiny_precision():
    for case in identity_cases():
        lhs = case.lhs(8)
        rhs = case.rhs(8)
        assert lhs.precision == 8, case.id
        assert rhs.precision == 8, case.id
        assert lhs.modulus == case.modulus, case.id
        assert rhs.modulus == case.modulus, case.id


def test_family_arguments_are_strictly_increasing():
    for fam in congruence_families():
        for tup in fam.tuples:
            a0 = fam.argument(0, tup)
            a1 = fam.argument(1, tup)
            assert 0 <= a0 < a1, (fam.id, tup)
            if fam.companion is not None:
                c0 = fam.companion(0, tup)
                c1 = fam.companion(1, tup)
                assert 0 <= c0 < c1, (fam.id, tup)
                assert abs(fam.companion_sign) == 1


def test_prime_family_grids():
    by_id = {f.id: f for f in congruence_families()}
    g7 = by_id["thm1.8-prime"]
    assert {t["p"] for t in g7.tuples} == {5, 13, 17, 19, 31, 41, 47}
    assert {t["alpha"] for t in g7.tuples} == {0, 1}
    # each p contributes 2 * (p - 1) tuples
    assert len(g7.tuples) == 2 * sum(p - 1 for p in (5, 13, 17, 19, 31, 41, 47))
    g23 = by_id["thm1.9-prime"]
    assert {t["p"] for t in g23.tuples} == {5, 7, 11, 17, 19, 37, 43}
    assert len(g23.tuples) == 2 * sum(p - 1 for p in (5, 7, 11, 17, 19, 37, 43))
    assert g7.adaptive and g23.adaptive


def test_kind_partition():
    for e in all_entries():
        assert isinstance(e, (IdentityCase, CongruenceFamily))
    assert sum(isinstance(e, CongruenceFamily) for e in all_entries()) >= 20
    assert sum(isinstance(e, IdentityCase) for e in all_entries()) >= 50


def test_worst_case_argument_values():
    """The largest indices the prime families can request, computed by hand."""
    by_id = {f.id: f for f in congruence_families()}
    g7 = by_id["thm1.8-prime"]
    worst = max(g7.argument(0, t) for t in g7.tuples)
    assert worst == 2 * 47**3 * 46 + (2 * 47**4 + 1) // 3 == 12_804_837
    g23 = by_id["thm1.9-prime"]
    worst23 = max(g23.argument(0, t) for t in g23.tuples)
    assert worst23 == 2 * 43**3 * 42 + 2 * 43**4 + 1 == 13_516_191
