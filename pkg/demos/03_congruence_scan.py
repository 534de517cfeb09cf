"""
Fast modular tables and congruence hunting
==========================================

Verifying a congruence family like "a(9n+5) is divisible by 3 for every n"
needs tens of thousands of coefficients, far beyond what exact big-integer
tables are needed for.  The package keeps a second, independent engine for
this: numba-compiled staircase recurrences that build coefficient tables
directly in the mod-m ring (bit-packed words for m=2, byte arrays for odd m).

This script builds such a table, rediscovers the vanishing residue classes
by brute scan, and then runs the curated verifications from the registry.

Run with:  python3 demos/03_congruence_scan.py
"""

from qdissect import check_family, get_entry, run, signed_table, signed_table_mod

K = 2          # number of colors in the signed partition count
MOD = 3        # look for divisibility by 3
PERIOD = 9     # in arithmetic progressions 9n + r
N_MAX = 4000   # check n = 0 .. N_MAX in each class

# ---------------------------------------------------------------------------
# One call builds (and caches) the whole table mod 3.  Ask for the largest
# bound first: later, smaller requests reuse the same cached table.
# ---------------------------------------------------------------------------
table = signed_table_mod(K, MOD, PERIOD * N_MAX + PERIOD - 1)
print("table of a(n) mod %d built, %d entries" % (MOD, len(table)))

# Sanity: the modular table must agree with the exact oracle prefix.
exact = signed_table(K, 300)
assert all(int(table[n]) == exact[n] % MOD for n in range(301))
print("prefix agrees with the exact dynamic-programming oracle")

# ---------------------------------------------------------------------------
# Scan every residue class r for "a(PERIOD*n + r) == 0 mod MOD for all n".
# ---------------------------------------------------------------------------
vanishing = []
for r in range(PERIOD):
    if not table[r::PERIOD][: N_MAX + 1].any():
        vanishing.append(r)
print("residues with a(%dn+r) == 0 mod %d for n <= %d:" % (PERIOD, MOD, N_MAX), vanishing)
assert vanishing == [5]

# The CLI exposes the same scan:
#   python3 -m qdissect scan 2 --mod 3 --period 9 --n-max 4000
# An empirical scan is evidence, not proof — the registry entries below pin
# down the families that are actually theorems.

# ---------------------------------------------------------------------------
# Run a curated family from the registry.  check_family() builds the table
# once and walks every (tuple, n) pair in the declared range.
# ---------------------------------------------------------------------------
report = check_family(get_entry("thm1.2-9n5"), n_max=2000)
print(
    "%s: %s [%s] %s"
    % (report.id, report.status.upper(), report.mode, report.precision_or_range)
)
assert report.status == "pass"

# ---------------------------------------------------------------------------
# And a whole slice of the curated catalogue: run() selects entries by a
# glob over ids, executes each one, and returns the reports.
# ---------------------------------------------------------------------------
reports = run("thm1.2-*")
for rep in reports:
    print("  %s: %s [%s] %s" % (rep.id, rep.status.upper(), rep.mode, rep.precision_or_range))
assert all(rep.status == "pass" for rep in reports)

# Same thing from the shell:
#   python3 -m qdissect verify --filter 'thm1.2-*'
#   python3 -m qdissect list

print("done.")
