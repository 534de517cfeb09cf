"""Theta functions, infinite products, and eta quotients as truncated series.

Arguments to the classical builders are signed powers of the formal variable:
:class:`MonomialArg` ``(sign, exponent)`` stands for ``sign * q^exponent``.
The four classical series are

    phi(x)  = sum_{j in Z} x^(j^2)
    psi(x)  = sum_{j >= 0} x^(j(j+1)/2)
    chi(x)  = prod_{j >= 0} (1 + x^(2j+1))
    f_k     = prod_{j >= 1} (1 - q^(jk))

together with the general bilateral theta ``f(a, b) = sum_j a^(j(j+1)/2) *
b^(j(j-1)/2)`` and arbitrary integer-exponent quotients of the ``f_k``.

Everything returns an exact :class:`~qdissect.series.TruncatedSeries`; the
identity registry reduces mod m afterwards where needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .arith import is_prime
from .series import SeriesError, TruncatedSeries, make, one, zero

_ARG_RE = re.compile(r"^(-?)q(?:\^(\d+))?$")


@dataclass(frozen=True)
class MonomialArg:
    """A signed power ``sign * q^exponent`` with ``sign = +-1``, ``exponent >= 1``."""

    sign: int
    exponent: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise SeriesError(f"sign must be +1 or -1, got {self.sign}")
        if self.exponent < 1:
            raise SeriesError(f"exponent must be >= 1, got {self.exponent}")

    def __neg__(self) -> MonomialArg:
        return MonomialArg(-self.sign, self.exponent)

    @classmethod
    def from_text(cls, text: str) -> MonomialArg:
        """Parse ``"q"``, ``"-q"``, ``"q^3"``, ``"-q^12"``."""
        m = _ARG_RE.match(text.strip())
        if not m:
            raise SeriesError(f"cannot parse monomial argument {text!r}")
        return cls(-1 if m.group(1) else 1, int(m.group(2) or 1))


class ThetaSpec(NamedTuple):
    """The two arguments of the general theta ``f(a, b)``."""

    a: MonomialArg
    b: MonomialArg


def pochhammer_inf(first: MonomialArg, step: int, precision: int) -> TruncatedSeries:
    """The product ``prod_{j>=0} (1 - sign * q^(e + j*step))`` through the precision.

    This is the q-Pochhammer symbol ``(x; q^step)_inf`` for ``x = sign*q^e``.
    Factors whose exponent exceeds the precision are identically 1 there, so
    the product is finite; with no factors at all it is 1.
    """
    if step < 1:
        raise SeriesError(f"pochhammer step must be >= 1, got {step}")
    coeffs = [0] * (precision + 1)
    coeffs[0] = 1
    e = first.exponent
    while e <= precision:
        # Multiply by (1 - sign*q^e) in place; descending order keeps the
        # not-yet-updated low entries as the old values.
        for n in range(precision, e - 1, -1):
            coeffs[n] -= first.sign * coeffs[n - e]
        e += step
    return make(coeffs)


def f_minus(k: int, precision: int) -> TruncatedSeries:
    """The product ``(q^k; q^k)_inf``, often written ``f_k``."""
    if k < 1:
        raise SeriesError(f"f_k needs k >= 1, got {k}")
    return pochhammer_inf(MonomialArg(1, k), k, precision)


def eta_quotient(factors: Mapping[int, int], precision: int) -> TruncatedSeries:
    """Expand ``prod_k f_k^(e_k)`` for an exponent map ``{k: e}``.

    Keys must be >= 1 and exponents nonzero.  Negative exponents go through a
    single series inversion of the combined denominator.
    """
    if not factors:
        raise SeriesError("eta quotient needs at least one factor")
    num = one(precision)
    den = one(precision)
    for k in sorted(factors):
        e = factors[k]
        if k < 1:
            raise SeriesError(f"eta quotient factor index must be >= 1, got {k}")
        if e == 0:
            raise SeriesError(f"eta quotient exponent for f_{k} must be nonzero")
        base = f_minus(k, precision)
        if e > 0:
            num = num * base.pow(e)
        else:
            den = den * base.pow(-e)
    return num * den.inverse()


def theta_f(a: MonomialArg, b: MonomialArg, precision: int) -> TruncatedSeries:
    """The bilateral theta ``f(a, b) = sum_j a^T(j) b^T(j-1)`` with ``T(j)=j(j+1)/2``.

    The exponent of the ``j``-th term is a convex parabola in ``j`` whose
    vertex lies strictly inside (-1, 1), so walking ``j = 0, 1, -1, 2, -2...``
    and stopping once both directions overflow the precision is exhaustive.
    """
    coeffs = [0] * (precision + 1)

    def term(j: int) -> bool:
        e = a.exponent * (j * (j + 1) // 2) + b.exponent * (j * (j - 1) // 2)
        if e > precision:
            return False
        c = (a.sign ** (j * (j + 1) // 2)) * (b.sign ** (j * (j - 1) // 2))
        coeffs[e] += c
        return True

    term(0)
    j = 1
    up = down = True
    while up or down:
        if up:
            up = term(j)
        if down:
            down = term(-j)
        j += 1
    return make(coeffs)


def theta_spec(spec: ThetaSpec, precision: int) -> TruncatedSeries:
    return theta_f(spec.a, spec.b, precision)


def phi(x: MonomialArg, precision: int) -> TruncatedSeries:
    """``phi(x) = f(x, x) = sum_{j in Z} x^(j^2)``."""
    return theta_f(x, x, precision)


def psi(x: MonomialArg, precision: int) -> TruncatedSeries:
    """``psi(x) = f(x, x^3) = sum_{j>=0} x^(j(j+1)/2)``."""
    return theta_f(x, MonomialArg(x.sign, 3 * x.exponent), precision)


def chi(x: MonomialArg, precision: int) -> TruncatedSeries:
    """``chi(x) = prod_{j>=0} (1 + x^(2j+1)) = (-x; x^2)_inf``."""
    return pochhammer_inf(-x, 2 * x.exponent, precision)


def jacobi_triangular_cube(precision: int) -> TruncatedSeries:
    """Jacobi's expansion ``sum_{j>=0} (-1)^j (2j+1) q^(j(j+1)/2)`` (equals ``f_1^3``)."""
    coeffs = [0] * (precision + 1)
    j = 0
    while j * (j + 1) // 2 <= precision:
        coeffs[j * (j + 1) // 2] += (-1) ** j * (2 * j + 1)
        j += 1
    return make(coeffs)


def p_dissect_f1(p: int, precision: int) -> dict[int, TruncatedSeries]:
    """Split ``f_1`` into residue classes mod a prime ``p > 3``.

    Each term of the classical dissection

        f_1 = (-1)^(k*) q^((p^2-1)/24) f_(p^2)
              + sum_{k != k*} (-1)^k q^((3k^2+k)/2)
                    f(-q^((3p^2+(6k+1)p)/2), -q^((3p^2-(6k+1)p)/2))

    with ``k`` over ``-(p-1)/2 .. (p-1)/2`` and ``k* = (p-1)/6`` or
    ``-(p+1)/6`` (whichever is an integer), only produces exponents congruent
    to its leading one mod ``p``.  The result maps every residue ``0..p-1``
    to the sum of its terms; residues hit by no term map to the zero series,
    and adding all classes reconstructs ``f_1`` exactly.
    """
    if p <= 3 or not is_prime(p):
        raise SeriesError(f"dissection index must be a prime > 3, got {p}")
    k_star = (p - 1) // 6 if p % 6 == 1 else -(p + 1) // 6
    classes = {r: zero(precision) for r in range(p)}

    def add_term(series: TruncatedSeries, sign: int, shift: int) -> None:
        classes[shift % p] += series.times_monomial(sign, shift, precision=precision)

    lone_shift = (p * p - 1) // 24
    if lone_shift <= precision:
        add_term(f_minus(p * p, precision - lone_shift), (-1) ** (k_star % 2), lone_shift)
    for k in range(-(p - 1) // 2, (p - 1) // 2 + 1):
        if k == k_star:
            continue
        shift = (3 * k * k + k) // 2
        if shift > precision:
            continue
        high = (3 * p * p + (6 * k + 1) * p) // 2
        low = (3 * p * p - (6 * k + 1) * p) // 2
        body = theta_f(MonomialArg(-1, high), MonomialArg(-1, low), precision - shift)
        add_term(body, (-1) ** (k % 2), shift)
    return classes
