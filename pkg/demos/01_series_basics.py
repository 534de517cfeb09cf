"""
Exact truncated q-series arithmetic
===================================

A walk through the core series type: building series, exact big-integer
multiplication, inversion, powers, and the dissection / inflation operators
that the rest of the package is built on.

Run with:  python3 demos/01_series_basics.py
"""

from qdissect import eq_upto, from_text, make, monomial, one

# ---------------------------------------------------------------------------
# Construction.  A TruncatedSeries stores exact integer coefficients
# a_0 .. a_N for a fixed truncation order N ("precision").  Values are plain
# Python ints, so coefficients can grow without bound.
# ---------------------------------------------------------------------------
f = make([1, -1, -1, 0, 0, 1])          # 1 - q - q^2 + q^5, precision 5
g = monomial(2, 3, precision=5)          # 2q^3 truncated at q^5
print("f =", list(f))
print("g =", list(g))

# Arithmetic keeps track of precision: the sum of a precision-5 and a
# precision-3 series is only trustworthy through q^3, and the result says so.
h = f + g
print("f + g =", list(h), " (precision", h.precision, ")")

# ---------------------------------------------------------------------------
# Multiplication is exact.  Under the hood large products are evaluated by
# packing each factor into a single big integer (one fixed-width slot per
# coefficient) and doing one bignum multiply, which is far faster than a
# Python-level convolution loop once precision reaches the hundreds.
# ---------------------------------------------------------------------------
product = f * f
print("f^2  =", list(product))

# ---------------------------------------------------------------------------
# Inversion works whenever the constant term is a unit (here +1).  The
# inverse of 1 - q is the geometric series.
# ---------------------------------------------------------------------------
geom = make([1, -1] + [0] * 9).inverse()
print("1/(1-q) =", list(geom))
assert list(geom) == [1] * 11

# Integer powers, including negative ones, go through square-and-multiply.
cube = make([1, 1] + [0] * 6) ** 3       # (1+q)^3
print("(1+q)^3 =", list(cube))
assert list(cube)[:4] == [1, 3, 3, 1]

# ---------------------------------------------------------------------------
# Dissection: pick out every m-th coefficient.  dissect(m, r) maps
# sum a_n q^n  to  sum a_{mn+r} q^n, the residue-class slice of the series.
# Inflation is the reverse substitution q -> q^k.
# ---------------------------------------------------------------------------
s = make(list(range(13)))                # coefficients 0,1,2,...,12
evens = s.dissect(2, 0)
odds = s.dissect(2, 1)
print("even slice:", list(evens))
print("odd  slice:", list(odds))
assert list(evens) == [0, 2, 4, 6, 8, 10, 12]
assert list(odds) == [1, 3, 5, 7, 9, 11]

# Interleaving the slices back together recovers the original series:
# s(q) = evens(q^2) + q * odds(q^2).  After q -> q^2 every odd-order slot is
# a known zero, so the odd slice may be inflated one order past 2*precision.
rebuilt = evens.inflate(2) + odds.inflate(2, precision=11).times_monomial(1, 1)
diff = eq_upto(s, rebuilt, upto=12)
print("reassembly equal through q^12:", diff.equal)
assert diff.equal

# ---------------------------------------------------------------------------
# Modular views.  reduce_mod(m) maps an exact series into the mod-m ring;
# arithmetic there keeps every coefficient in [0, m).
# ---------------------------------------------------------------------------
mod3 = product.reduce_mod(3)
print("f^2 mod 3 =", list(mod3))

# ---------------------------------------------------------------------------
# Text form: a stable tab-separated format ("n<TAB>coefficient") that the
# CLI's expand subcommand prints and from_text() parses back.
# ---------------------------------------------------------------------------
text = one(3).to_text()
print("text form of 1 at precision 3:")
print(text, end="")
assert from_text(text) == one(3)

print("done.")
