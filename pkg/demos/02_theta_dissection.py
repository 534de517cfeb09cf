"""
Theta builders, eta quotients, and a 3-dissection
=================================================

The package ships two independent routes to the same coefficients:

* a combinatorial oracle that counts signed k-colored partitions directly
  with a per-size dynamic program, and
* product/theta builders that expand the closed-form side of an identity.

This script builds both sides for the 3-colored case, slices the series into
residue classes, and checks a closed form for one slice against the oracle.

Run with:  python3 demos/02_theta_dissection.py
"""

from qdissect import (
    MonomialArg,
    chi,
    eq_upto,
    eta_quotient,
    f_minus,
    get_entry,
    p_dissect_f1,
    phi,
    psi,
    signed_series,
    verify_identity,
)

N = 120

# ---------------------------------------------------------------------------
# The oracle side: coefficients of  prod 1/((1+q^n)(1+q^{3n}))  computed by
# folding one factor at a time into an integer table — no series products.
# ---------------------------------------------------------------------------
oracle = signed_series(3, N)
print("oracle coefficients a(0..10):", list(oracle)[:11])

# The product side of the same function as an eta quotient.  f(k) denotes
# the infinite product (q^k; q^k) and an exponent map {k: e} multiplies
# f(k)^e together:  prod 1/(1+q^n) = f1/f2  and  prod 1/(1+q^3n) = f3/f6.
product = eta_quotient({1: 1, 2: -1, 3: 1, 6: -1}, N)
diff = eq_upto(oracle, product, upto=N)
print("oracle == eta quotient f1*f3/(f2*f6) through q^%d: %s" % (N, diff.equal))
assert diff.equal

# ---------------------------------------------------------------------------
# Slice into the three residue classes a(3n), a(3n+1), a(3n+2).
# ---------------------------------------------------------------------------
for r in range(3):
    slice_r = oracle.dissect(3, r)
    print("a(3n+%d), n=0..7:" % r, list(slice_r)[:8])

# Each slice has its own closed form; the registry stores them under the ids
# thm1.4-A3n, thm1.4-A3n1, thm1.4-A3n2.  Verify one end to end: the builder
# expands the closed form, the oracle side comes from the dissected table.
report = verify_identity(get_entry("thm1.4-A3n2"), precision=N)
print("registry entry thm1.4-A3n2:", report.status.upper(), "at N=%d" % N)
assert report.status == "pass"

# ---------------------------------------------------------------------------
# The classical theta builders phi, psi, chi take a signed monomial argument
# parsed from text: "q", "-q", "q^2", ...   A few standard relations:
# ---------------------------------------------------------------------------
q = MonomialArg.from_text("q")
minus_q = MonomialArg.from_text("-q")
q2 = MonomialArg.from_text("q^2")

# phi(-q) flips the sign of every odd coefficient of phi(q).
assert phi(minus_q, N) == phi(q, N).alternate()

# chi(q) * chi(-q) = chi(-q^2)
lhs = chi(q, N) * chi(minus_q, N)
rhs = chi(MonomialArg.from_text("-q^2"), N)
assert eq_upto(lhs, rhs, upto=N).equal
print("chi(q) chi(-q) == chi(-q^2) through q^%d: True" % N)

# psi(q^2) is psi(q) with q -> q^2 (inflate by 2).
assert psi(q2, N) == psi(q, N // 2).inflate(2, precision=N)

# ---------------------------------------------------------------------------
# Prime dissections of f(1) = (q; q).  p_dissect_f1(p) splits the series
# into residue-class components: component r is a full series in q whose
# support lies in exponents congruent to r mod p, and one component
# collapses to a lone f(p^2) term.  Summing them must reproduce f(1).
# ---------------------------------------------------------------------------
p = 5
parts = p_dissect_f1(p, N)
rebuilt = None
for r, comp in sorted(parts.items()):
    assert all(e % p == r % p for e, c in enumerate(comp) if c)
    rebuilt = comp if rebuilt is None else rebuilt + comp
direct = f_minus(1, N)
assert eq_upto(direct, rebuilt, upto=N).equal
print("5-dissection of f(1) reassembles exactly through q^%d" % N)

print("done.")
