"""Run registry entries and produce structured pass/fail reports.

Identity entries compare two independently built truncated series
coefficient-by-coefficient.  Family entries walk a parameter grid and check
single table values mod m.  Either way the outcome is a
:class:`VerificationReport` whose JSON form has exactly the fields

    id, status, mode, precision_or_range, first_failure, elapsed_ms

with ``first_failure`` either null or ``{"index", "expected", "got"}``.
For identities ``index`` is the exponent, ``expected`` the left-side
coefficient and ``got`` the right-side one; for families ``index`` is the
argument of the sequence, ``expected`` the target residue and ``got`` the
actual one.

Entries flagged ``expect_failure`` (negative controls) are skipped by
default runs; select them explicitly with a filter to watch them fail.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fnmatch import fnmatch
from time import perf_counter

from . import modtables
from .registry import (
    CongruenceFamily,
    IdentityCase,
    all_entries,
)
from .series import eq_upto

DEFAULT_ARG_BUDGET = 3_000_000

Entry = IdentityCase | CongruenceFamily


@dataclass(frozen=True)
class VerificationReport:
    id: str
    status: str
    mode: str
    precision_or_range: str
    first_failure: dict | None
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "mode": self.mode,
            "precision_or_range": self.precision_or_range,
            "first_failure": self.first_failure,
            "elapsed_ms": self.elapsed_ms,
        }


def verify_identity(case: IdentityCase, precision: int | None = None) -> VerificationReport:
    n = case.precision if precision is None else precision
    start = perf_counter()
    lhs = case.lhs(n)
    rhs = case.rhs(n)
    diff = eq_upto(lhs, rhs, n)
    elapsed = (perf_counter() - start) * 1000.0
    failure = None
    if not diff.equal:
        failure = {"index": diff.index, "expected": diff.left, "got": diff.right}
    mode = "exact" if case.modulus is None else f"mod {case.modulus}"
    return VerificationReport(
        id=case.id,
        status="pass" if diff.equal else "fail",
        mode=mode,
        precision_or_range=f"N={n}",
        first_failure=failure,
        elapsed_ms=round(elapsed, 3),
    )


def _range_cap(family: CongruenceFamily, tup, n_max: int, budget: int) -> int:
    """Largest n <= n_max keeping the argument within budget; n=0 always allowed."""
    if not family.adaptive or family.argument(n_max, tup) <= budget:
        return n_max
    if family.argument(0, tup) > budget:
        return 0
    lo, hi = 0, n_max
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if family.argument(mid, tup) <= budget:
            lo = mid
        else:
            hi = mid - 1
    return lo


def family_table_bound(
    family: CongruenceFamily, n_max: int | None = None, budget: int = DEFAULT_ARG_BUDGET
) -> int:
    """Largest sequence index the family will read from the mod-m table."""
    nm = family.n_max if n_max is None else n_max
    bound = 0
    for tup in family.tuples:
        cap = _range_cap(family, tup, nm, budget)
        bound = max(bound, family.argument(cap, tup))
        if family.companion is not None:
            bound = max(bound, family.companion(cap, tup))
    return bound


def check_family(
    family: CongruenceFamily,
    n_max: int | None = None,
    budget: int = DEFAULT_ARG_BUDGET,
) -> VerificationReport:
    nm = family.n_max if n_max is None else n_max
    m = family.modulus
    start = perf_counter()
    table = modtables.signed_table_mod(family.k, m, family_table_bound(family, nm, budget))
    failure = None
    checked = 0
    capped = False
    for tup in family.tuples:
        cap = _range_cap(family, tup, nm, budget)
        capped = capped or cap < nm
        for n in range(cap + 1):
            arg = family.argument(n, tup)
            got = int(table[arg])
            if family.companion is None:
                target = 0
            else:
                target = (family.companion_sign * int(table[family.companion(n, tup)])) % m
            checked += 1
            if got != target and failure is None:
                failure = {"index": arg, "expected": target, "got": got}
        if failure is not None:
            break
    elapsed = (perf_counter() - start) * 1000.0
    scope = f"{len(family.tuples)} tuple(s), n<={nm}, {checked} checks"
    if capped:
        scope += f", adaptive cap arg<={budget}"
    return VerificationReport(
        id=family.id,
        status="pass" if failure is None else "fail",
        mode=f"family mod {m}",
        precision_or_range=scope,
        first_failure=failure,
        elapsed_ms=round(elapsed, 3),
    )


def verify_entry(
    entry: Entry,
    precision: int | None = None,
    n_max: int | None = None,
    budget: int = DEFAULT_ARG_BUDGET,
) -> VerificationReport:
    if isinstance(entry, IdentityCase):
        return verify_identity(entry, precision)
    return check_family(entry, n_max, budget)


def select(pattern: str | None = None) -> list[Entry]:
    """Entries matching the glob pattern, sorted by id.

    Without a pattern, every regular entry is selected and the negative
    controls are left out; an explicit pattern can reach the controls.
    """
    entries = all_entries()
    if pattern is None:
        chosen = [e for e in entries if not e.expect_failure]
    else:
        chosen = [e for e in entries if fnmatch(e.id, pattern)]
    return sorted(chosen, key=lambda e: e.id)


def _prebuild_tables(entries: list[Entry], n_max: int | None, budget: int) -> None:
    """Request each (k, m) table once at its largest needed bound."""
    bounds: dict[tuple[int, int], int] = {}
    for entry in entries:
        if isinstance(entry, CongruenceFamily):
            key = (entry.k, entry.modulus)
            bound = family_table_bound(entry, n_max, budget)
            bounds[key] = max(bounds.get(key, 0), bound)
    for (k, m), bound in sorted(bounds.items()):
        modtables.signed_table_mod(k, m, bound)


def run(
    pattern: str | None = None,
    precision: int | None = None,
    n_max: int | None = None,
    budget: int = DEFAULT_ARG_BUDGET,
) -> list[VerificationReport]:
    entries = select(pattern)
    _prebuild_tables(entries, n_max, budget)
    return [verify_entry(e, precision, n_max, budget) for e in entries]


def reports_to_jsonl(reports: list[VerificationReport]) -> str:
    return "\n".join(json.dumps(r.to_dict()) for r in reports)


def exit_code(reports: list[VerificationReport]) -> int:
    return 0 if all(r.passed for r in reports) else 1
