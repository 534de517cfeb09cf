"""Catalogue of verifiable identities and congruence families.

Every :class:`IdentityCase` pairs two independent constructions of the same
truncated series: the left side comes from the combinatorial fold oracle (or
is the left-hand side of a classical identity), the right side from the
theta/product builders.  Every :class:`CongruenceFamily` asserts that
``A_k(argument(n))`` vanishes — or matches a signed companion value — mod
``m`` over a parameter grid, with values drawn from the fast modular tables.

Entries whose ``expect_failure`` flag is set are deliberate negative
controls: known-broken variants (a wrong sign, a wrong exponent, a wrong
modulus, a false family) that the verifier must catch.  They are excluded
from default runs and selectable by the ``control-*`` id prefix.

Ids are stable opaque keys used by the command-line filter; display strings
describe the mathematical content.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Callable, Mapping

from . import modtables
from .arith import legendre, primes_below
from .oracles import signed_series
from .series import TruncatedSeries, make
from .theta import (
    MonomialArg,
    chi,
    eta_quotient,
    f_minus,
    jacobi_triangular_cube,
    p_dissect_f1,
    phi,
    pochhammer_inf,
    psi,
    theta_f,
)

Builder = Callable[[int], TruncatedSeries]


class EncodingError(RuntimeError):
    """A registry formula produced a non-integer argument — a bug, not a failure."""


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise EncodingError(f"{a} is not divisible by {b}")
    return q


@dataclass(frozen=True)
class IdentityCase:
    """Two builders expected to produce identical coefficients through order N."""

    id: str
    description: str
    lhs: Builder
    rhs: Builder
    precision: int = 200
    modulus: int | None = None
    expect_failure: bool = False


@dataclass(frozen=True)
class CongruenceFamily:
    """``A_k(argument(n, t)) mod m`` must equal 0 (or a signed companion).

    ``tuples`` is the expanded parameter grid; ``argument`` maps ``(n, t)`` to
    the index checked.  When ``adaptive`` is set, each tuple's n-range is
    individually capped so the largest argument stays within the verifier's
    budget, but n=0 is always covered.
    """

    id: str
    description: str
    k: int
    modulus: int
    argument: Callable[[int, Mapping[str, int]], int]
    tuples: tuple[Mapping[str, int], ...] = ({},)
    companion: Callable[[int, Mapping[str, int]], int] | None = None
    companion_sign: int = 1
    n_max: int = 500
    adaptive: bool = False
    expect_failure: bool = False


# ----------------------------------------------------------------------
# Builder combinators
# ----------------------------------------------------------------------


def _mul(*fns: Builder) -> Builder:
    return lambda n: reduce(lambda a, b: a * b, (f(n) for f in fns))


def _add(*fns: Builder) -> Builder:
    return lambda n: reduce(lambda a, b: a + b, (f(n) for f in fns))


def _div(num: Builder, den: Builder) -> Builder:
    return lambda n: num(n) * den(n).inverse()


def _neg(f: Builder) -> Builder:
    return lambda n: -f(n)


def _scale(c: int, f: Builder) -> Builder:
    return lambda n: f(n).scale(c)


def _pow(f: Builder, e: int) -> Builder:
    return lambda n: f(n).pow(e)


def _shifted(c: int, s: int, f: Builder) -> Builder:
    """``c * q^s * f``, degrading gracefully when the precision is below ``s``."""

    def build(n: int) -> TruncatedSeries:
        if n < s:
            return make([0] * (n + 1))
        return f(n - s).times_monomial(c, s, precision=n)

    return build


def _const(c: int) -> Builder:
    return lambda n: make([c] + [0] * n)


def _phi(sign: int, e: int) -> Builder:
    return lambda n: phi(MonomialArg(sign, e), n)


def _psi(sign: int, e: int) -> Builder:
    return lambda n: psi(MonomialArg(sign, e), n)


def _chi(sign: int, e: int) -> Builder:
    return lambda n: chi(MonomialArg(sign, e), n)


def _fm(k: int) -> Builder:
    return lambda n: f_minus(k, n)


def _eta(factors: Mapping[int, int]) -> Builder:
    return lambda n: eta_quotient(factors, n)


def _theta(sa: int, ea: int, sb: int, eb: int) -> Builder:
    return lambda n: theta_f(MonomialArg(sa, ea), MonomialArg(sb, eb), n)


def _poch(sign: int, e: int, step: int) -> Builder:
    return lambda n: pochhammer_inf(MonomialArg(sign, e), step, n)


def _reduced(m: int, f: Builder) -> Builder:
    return lambda n: f(n).reduce_mod(m)


def _oracle(k: int, step: int = 1, r: int = 0) -> Builder:
    """Exact oracle series of ``A_k`` along the progression ``step*n + r``."""

    def build(n: int) -> TruncatedSeries:
        return signed_series(k, step * n + r).dissect(step, r)

    return build


def _oracle_mod(k: int, m: int, step: int = 1, r: int = 0) -> Builder:
    """Same progression, but read from the fast modular tables."""

    def build(n: int) -> TruncatedSeries:
        table = modtables.signed_table_mod(k, m, step * n + r)
        return make([int(table[step * i + r]) for i in range(n + 1)], modulus=m)

    return build


def _f1_reassembled(p: int) -> Builder:
    def build(n: int) -> TruncatedSeries:
        classes = p_dissect_f1(p, n)
        return reduce(lambda a, b: a + b, classes.values())

    return build


# ----------------------------------------------------------------------
# Identity entries
# ----------------------------------------------------------------------


def _jtpi_case(tag: str, sa: int, ea: int, sb: int, eb: int) -> IdentityCase:
    """Triple-product check ``f(a,b) = (-a; ab) (-b; ab) (ab; ab)``.

    Requires ``sign(a)*sign(b) = +1`` so the base ``ab`` is a plain power.
    """
    step = ea + eb
    assert sa * sb == 1
    return IdentityCase(
        id=f"jtpi-{tag}",
        description=f"triple product identity at a={'-' if sa < 0 else ''}q^{ea}, "
        f"b={'-' if sb < 0 else ''}q^{eb}",
        lhs=_theta(sa, ea, sb, eb),
        rhs=_mul(_poch(-sa, ea, step), _poch(-sb, eb, step), _fm(step)),
    )


def _merca_terms() -> Builder:
    """Four-term eta-quotient expression for the 9n+5 slice of the signed series."""
    parts = []
    for i, coeff in zip(range(1, 5), (-3, 9, 3, -9)):
        factors = {2: 2 * i + 1, 3: 1, 12: 4 * i + 2, 1: -2, 4: -(4 * i - 1), 6: -(2 * i + 3)}
        parts.append(_shifted(coeff, i, _eta(factors)))
    return _add(*parts)


def _identity_cases() -> tuple[IdentityCase, ...]:
    cases = [
        # --- flagship generating function and oracle agreement ---
        IdentityCase(
            id="genAn",
            description="signed 2-colored series equals (q;q^2)inf (q^2;q^4)inf",
            lhs=_oracle(2),
            rhs=_mul(_poch(1, 1, 2), _poch(1, 2, 4)),
            precision=400,
        ),
        *[
            IdentityCase(
                id=f"oracle-series-k{k}",
                description=f"fold oracle for k={k} matches chi(-q) chi(-q^{k})",
                lhs=_oracle(k),
                rhs=_mul(_chi(-1, 1), _chi(-1, k)),
                precision=300,
            )
            for k in (3, 5, 7, 23)
        ],
        # --- three-dissection of the signed series ---
        IdentityCase(
            id="thm1.4-A3n",
            description="3n slice: chi(-q) psi(q^3) phi(-q^3) / (psi(-q) psi(q^2))",
            lhs=_oracle(2, 3, 0),
            rhs=_div(
                _mul(_chi(-1, 1), _psi(1, 3), _phi(-1, 3)),
                _mul(_psi(-1, 1), _psi(1, 2)),
            ),
        ),
        IdentityCase(
            id="thm1.4-A3n1",
            description="3n+1 slice: -psi^2(q^3) chi^2(-q) / (psi(-q) psi(q^2))",
            lhs=_oracle(2, 3, 1),
            rhs=_neg(
                _div(
                    _mul(_pow(_psi(1, 3), 2), _pow(_chi(-1, 1), 2)),
                    _mul(_psi(-1, 1), _psi(1, 2)),
                )
            ),
        ),
        IdentityCase(
            id="thm1.4-A3n2",
            description="3n+2 slice: -psi(-q^3) psi(q^6) / psi^2(q^2)",
            lhs=_oracle(2, 3, 2),
            rhs=_neg(_div(_mul(_psi(-1, 3), _psi(1, 6)), _pow(_psi(1, 2), 2))),
        ),
        IdentityCase(
            id="thm1.4-A9n5",
            description="9n+5 slice: -3q f_1 f_2^4 f_12^6 / f_4^11",
            lhs=_oracle(2, 9, 5),
            rhs=_shifted(-3, 1, _eta({1: 1, 2: 4, 12: 6, 4: -11})),
        ),
        IdentityCase(
            id="merca-gen-A9n5",
            description="9n+5 slice against the original four-term eta expression",
            lhs=_oracle(2, 9, 5),
            rhs=_merca_terms(),
            precision=150,
        ),
        # --- supporting dissection lemmas (theta both sides) ---
        IdentityCase(
            id="lemma2.1",
            description="2-dissection phi(q) = phi(q^4) + 2q psi(q^8)",
            lhs=_phi(1, 1),
            rhs=_add(_phi(1, 4), _shifted(2, 1, _psi(1, 8))),
        ),
        IdentityCase(
            id="lemma2.2a",
            description="psi(q) psi(q^3) = phi(q^6) psi(q^4) + q phi(q^2) psi(q^12)",
            lhs=_mul(_psi(1, 1), _psi(1, 3)),
            rhs=_add(
                _mul(_phi(1, 6), _psi(1, 4)),
                _shifted(1, 1, _mul(_phi(1, 2), _psi(1, 12))),
            ),
        ),
        IdentityCase(
            id="lemma2.2b",
            description="psi(q) psi(q^7) 2-dissection into three theta terms",
            lhs=_mul(_psi(1, 1), _psi(1, 7)),
            rhs=_add(
                _mul(_phi(1, 28), _psi(1, 8)),
                _shifted(1, 1, _mul(_psi(1, 2), _psi(1, 14))),
                _shifted(1, 6, _mul(_phi(1, 4), _psi(1, 56))),
            ),
        ),
        IdentityCase(
            id="lemma2.3a",
            description="3-dissection psi(q) = f(q^3,q^6) + q psi(q^9)",
            lhs=_psi(1, 1),
            rhs=_add(_theta(1, 3, 1, 6), _shifted(1, 1, _psi(1, 9))),
        ),
        IdentityCase(
            id="lemma2.3b",
            description="3-dissection phi(q) = phi(q^9) + 2q psi(-q^9) chi(q^3)",
            lhs=_phi(1, 1),
            rhs=_add(_phi(1, 9), _shifted(2, 1, _mul(_psi(-1, 9), _chi(1, 3)))),
        ),
        IdentityCase(
            id="lemma2.4",
            description="5-dissection phi(q) = phi(q^25) + 2q f(q^15,q^35) + 2q^4 f(q^5,q^45)",
            lhs=_phi(1, 1),
            rhs=_add(
                _phi(1, 25),
                _shifted(2, 1, _theta(1, 15, 1, 35)),
                _shifted(2, 4, _theta(1, 5, 1, 45)),
            ),
        ),
        *[
            IdentityCase(
                id=f"lemma2.5-p{p}",
                description=f"p={p} residue-class split of f_1 reassembles exactly",
                lhs=_fm(1),
                rhs=_f1_reassembled(p),
                precision=300,
            )
            for p in (5, 7, 11, 13, 23)
        ],
        # --- classical auxiliary identities ---
        IdentityCase(
            id="phi-q-q3",
            description="phi^2(q) - phi^2(q^3) = 4q chi(q) chi(-q^2) psi(q^3) psi(q^6)",
            lhs=_add(_pow(_phi(1, 1), 2), _neg(_pow(_phi(1, 3), 2))),
            rhs=_shifted(4, 1, _mul(_chi(1, 1), _chi(-1, 2), _psi(1, 3), _psi(1, 6))),
        ),
        IdentityCase(
            id="phi-q-q5",
            description="phi^2(q) - phi^2(q^5) = 4q f(q,q^9) f(q^3,q^7)",
            lhs=_add(_pow(_phi(1, 1), 2), _neg(_pow(_phi(1, 5), 2))),
            rhs=_shifted(4, 1, _mul(_theta(1, 1, 1, 9), _theta(1, 3, 1, 7))),
        ),
        IdentityCase(
            id="dasilva-psi-inv",
            description="five-term 3-dissection of 1/psi^2(q^2)",
            lhs=lambda n: psi(MonomialArg(1, 2), n).pow(-2),
            rhs=_add(
                _eta({6: 4, 18: 6, 12: -12}),
                _shifted(-2, 2, _eta({6: 5, 18: 3, 36: 3, 12: -13})),
                _shifted(3, 4, _eta({6: 6, 36: 6, 12: -14})),
                _shifted(-2, 6, _eta({6: 7, 36: 9, 12: -15, 18: -3})),
                _shifted(1, 8, _eta({6: 8, 36: 12, 12: -16, 18: -6})),
            ),
        ),
        IdentityCase(
            id="jacobi-cube",
            description="f_1^3 equals the alternating odd-weight triangular series",
            lhs=_pow(_fm(1), 3),
            rhs=jacobi_triangular_cube,
            precision=500,
        ),
        _jtpi_case("q-q", 1, 1, 1, 1),
        _jtpi_case("q-q3", 1, 1, 1, 3),
        _jtpi_case("mq-mq2", -1, 1, -1, 2),
        _jtpi_case("q3-q6", 1, 3, 1, 6),
        _jtpi_case("mq3-mq6", -1, 3, -1, 6),
        _jtpi_case("q-q9", 1, 1, 1, 9),
        # --- mod-3 reduction steps ---
        IdentityCase(
            id="psi-cube-mod3",
            description="psi^3(q) is psi(q^3) mod 3",
            lhs=_reduced(3, _pow(_psi(1, 1), 3)),
            rhs=_reduced(3, _psi(1, 3)),
            modulus=3,
        ),
        IdentityCase(
            id="f1-cube-mod3",
            description="f_1^3 is f_3 mod 3",
            lhs=_reduced(3, _pow(_fm(1), 3)),
            rhs=_reduced(3, _fm(3)),
            modulus=3,
        ),
        IdentityCase(
            id="eq-A3n2-mod3",
            description="3n+2 slice is 2 psi(-q^3) psi(q^2) mod 3",
            lhs=_oracle_mod(2, 3, 3, 2),
            rhs=_reduced(3, _scale(2, _mul(_psi(-1, 3), _psi(1, 2)))),
            modulus=3,
        ),
        IdentityCase(
            id="equ8",
            description="9n+8 slice is 2 psi(q^6) psi(-q) mod 3",
            lhs=_oracle_mod(2, 3, 9, 8),
            rhs=_reduced(3, _scale(2, _mul(_psi(1, 6), _psi(-1, 1)))),
            modulus=3,
        ),
        IdentityCase(
            id="A3n1-cong3",
            description="3n+1 slice is 2 f_1 f_6 f_18 / (f_3^2 f_12) mod 3",
            lhs=_oracle_mod(2, 3, 3, 1),
            rhs=_reduced(3, _scale(2, _eta({1: 1, 6: 1, 18: 1, 3: -2, 12: -1}))),
            modulus=3,
        ),
        IdentityCase(
            id="A27n8-cong3a",
            description="27n+8 slice is 2 f_1 f_4^3 f_6^5 / (f_2^3 f_3^2 f_12^2) mod 3",
            lhs=_oracle_mod(2, 3, 27, 8),
            rhs=_reduced(3, _scale(2, _eta({1: 1, 4: 3, 6: 5, 2: -3, 3: -2, 12: -2}))),
            modulus=3,
        ),
        IdentityCase(
            id="equ27n+17",
            description="27n+17 slice is psi(q^2) psi(-q^3) mod 3",
            lhs=_oracle_mod(2, 3, 27, 17),
            rhs=_reduced(3, _mul(_psi(1, 2), _psi(-1, 3))),
            modulus=3,
        ),
        # --- k=3 even/odd split ---
        IdentityCase(
            id="gen-A3-2n",
            description="even slice of the k=3 series: phi(q^3) psi(q^2) / (f_2 f_6)",
            lhs=_oracle(3, 2, 0),
            rhs=_div(_mul(_phi(1, 3), _psi(1, 2)), _mul(_fm(2), _fm(6))),
        ),
        IdentityCase(
            id="gen-A3-2n1",
            description="odd slice of the k=3 series: -phi(q) psi(q^6) / (f_2 f_6)",
            lhs=_oracle(3, 2, 1),
            rhs=_neg(_div(_mul(_phi(1, 1), _psi(1, 6)), _mul(_fm(2), _fm(6)))),
        ),
        # --- k=5 ---
        IdentityCase(
            id="gen-A5n4",
            description="5n+4 slice of the k=5 series: f_1^3 f_10^3 / (f_2^5 f_5)",
            lhs=_oracle(5, 5, 4),
            rhs=_eta({1: 3, 10: 3, 2: -5, 5: -1}),
        ),
        # --- k=7 ---
        IdentityCase(
            id="gen-A7n",
            description="k=7 series as a three-term theta sum over f_4 f_28",
            lhs=_oracle(7),
            rhs=_div(
                _add(
                    _mul(_phi(1, 28), _psi(1, 8)),
                    _shifted(-1, 1, _mul(_psi(1, 2), _psi(1, 14))),
                    _shifted(1, 6, _mul(_phi(1, 4), _psi(1, 56))),
                ),
                _mul(_fm(4), _fm(28)),
            ),
        ),
        IdentityCase(
            id="gen-A7-2n1",
            description="odd slice of the k=7 series: -psi(q) psi(q^7) / (f_2 f_14)",
            lhs=_oracle(7, 2, 1),
            rhs=_neg(_div(_mul(_psi(1, 1), _psi(1, 7)), _mul(_fm(2), _fm(14)))),
        ),
        IdentityCase(
            id="gen-A7-4n3",
            description="4n+3 slice of the k=7 series: -f_2^2 f_14^2 / (f_1^2 f_7^2)",
            lhs=_oracle(7, 4, 3),
            rhs=_neg(_eta({2: 2, 14: 2, 1: -2, 7: -2})),
        ),
        IdentityCase(
            id="remark-A7-product",
            description="product of the k=7 series and its odd slice is -1",
            lhs=lambda n: _oracle(7)(n) * _oracle(7, 2, 1)(n),
            rhs=_const(-1),
            precision=400,
        ),
        IdentityCase(
            id="cong-A7-2n1-f1f7",
            description="odd slice of the k=7 series is f_1 f_7 mod 2",
            lhs=_oracle_mod(7, 2, 2, 1),
            rhs=_reduced(2, _mul(_fm(1), _fm(7))),
            modulus=2,
        ),
        IdentityCase(
            id="cong-A7-14n5-f1f7",
            description="14n+5 slice of the k=7 series is also f_1 f_7 mod 2",
            lhs=_oracle_mod(7, 2, 14, 5),
            rhs=_reduced(2, _mul(_fm(1), _fm(7))),
            modulus=2,
        ),
        # --- k=23 ---
        IdentityCase(
            id="baruah-chi23",
            description="chi(-q) chi(-q^23) - chi(q) chi(q^23) collapses to two terms",
            lhs=_add(
                _mul(_chi(-1, 1), _chi(-1, 23)),
                _neg(_mul(_chi(1, 1), _chi(1, 23))),
            ),
            rhs=_add(
                lambda n: make([0] + [-2] + [0] * (n - 1)) if n >= 1 else make([0]),
                _shifted(-2, 3, _mul(_poch(-1, 2, 2), _poch(-1, 46, 46))),
            ),
        ),
        IdentityCase(
            id="gen-A23-2n1",
            description="odd slice of the k=23 series: -1 - q (-q;q)inf (-q^23;q^23)inf",
            lhs=_oracle(23, 2, 1),
            rhs=_add(_const(-1), _shifted(-1, 1, _mul(_poch(-1, 1, 1), _poch(-1, 23, 23)))),
        ),
        IdentityCase(
            id="cong-A23-gen-alpha",
            description="2n+3 slice of the k=23 series is f_1 f_23 mod 2",
            lhs=_oracle_mod(23, 2, 2, 3),
            rhs=_reduced(2, _mul(_fm(1), _fm(23))),
            modulus=2,
        ),
        IdentityCase(
            id="cong-A23-gen-alpha1",
            description="46n+47 slice of the k=23 series is f_1 f_23 mod 2",
            lhs=_oracle_mod(23, 2, 46, 47),
            rhs=_reduced(2, _mul(_fm(1), _fm(23))),
            modulus=2,
        ),
        # --- negative controls ---
        IdentityCase(
            id="control-thm1.4-A3n-stmt",
            description="discarded 3n-slice variant with phi(-q) phi(q^2) denominator",
            lhs=_oracle(2, 3, 0),
            rhs=_div(
                _mul(_chi(-1, 1), _psi(1, 3), _phi(-1, 3)),
                _mul(_phi(-1, 1), _phi(1, 2)),
            ),
            expect_failure=True,
        ),
        IdentityCase(
            id="control-lemma2.1-sign",
            description="2-dissection of phi with the q-term sign flipped",
            lhs=_phi(1, 1),
            rhs=_add(_phi(1, 4), _shifted(-2, 1, _psi(1, 8))),
            expect_failure=True,
        ),
        IdentityCase(
            id="control-phi-q-q3-exponent",
            description="phi^2 difference with psi(q^6) miswritten as psi(q^7)",
            lhs=_add(_pow(_phi(1, 1), 2), _neg(_pow(_phi(1, 3), 2))),
            rhs=_shifted(4, 1, _mul(_chi(1, 1), _chi(-1, 2), _psi(1, 3), _psi(1, 7))),
            expect_failure=True,
        ),
        IdentityCase(
            id="control-psi-cube-mod5",
            description="psi^3(q) against psi(q^3) at the wrong modulus 5",
            lhs=_reduced(5, _pow(_psi(1, 1), 3)),
            rhs=_reduced(5, _psi(1, 3)),
            modulus=5,
            expect_failure=True,
        ),
    ]
    return tuple(cases)


# ----------------------------------------------------------------------
# Congruence families
# ----------------------------------------------------------------------


def _qualifying_primes(d: int, bound: int = 50) -> tuple[int, ...]:
    """Primes ``3 < p < bound`` with Legendre symbol ``(d/p) = -1``."""
    return tuple(p for p in primes_below(bound) if p > 3 and legendre(d, p) == -1)


def _prime_grid(d: int) -> tuple[dict[str, int], ...]:
    return tuple(
        {"p": p, "alpha": alpha, "r": r}
        for p in _qualifying_primes(d)
        for alpha in (0, 1)
        for r in range(1, p)
    )


def _congruence_families() -> tuple[CongruenceFamily, ...]:
    families = [
        CongruenceFamily(
            id="thm1.2-9n5",
            description="A(9n+5) vanishes mod 3",
            k=2,
            modulus=3,
            argument=lambda n, t: 9 * n + 5,
        ),
        CongruenceFamily(
            id="thm1.2-27n26",
            description="A(27n+26) vanishes mod 3",
            k=2,
            modulus=3,
            argument=lambda n, t: 27 * n + 26,
        ),
        CongruenceFamily(
            id="thm1.3-3n1-27n8",
            description="A(3n+1) matches A(27n+8) mod 3",
            k=2,
            modulus=3,
            argument=lambda n, t: 3 * n + 1,
            companion=lambda n, t: 27 * n + 8,
            n_max=300,
        ),
        CongruenceFamily(
            id="thm1.3-fam-9j",
            description="A(9^(j+1) n + (39*9^j+1)/8) vanishes mod 3",
            k=2,
            modulus=3,
            argument=lambda n, t: 9 ** (t["j"] + 1) * n + exact_div(39 * 9 ** t["j"] + 1, 8),
            tuples=({"j": 0}, {"j": 1}, {"j": 2}),
            n_max=150,
        ),
        CongruenceFamily(
            id="thm1.3-fam-27j",
            description="A(3*9^(j+1) n + (23*9^(j+1)+1)/8) vanishes mod 3",
            k=2,
            modulus=3,
            argument=lambda n, t: 3 * 9 ** (t["j"] + 1) * n
            + exact_div(23 * 9 ** (t["j"] + 1) + 1, 8),
            tuples=({"j": 0}, {"j": 1}, {"j": 2}),
            n_max=150,
        ),
        CongruenceFamily(
            id="cong-3n2-27n17",
            description="A(3n+2) matches -A(27n+17) mod 3",
            k=2,
            modulus=3,
            argument=lambda n, t: 3 * n + 2,
            companion=lambda n, t: 27 * n + 17,
            companion_sign=-1,
        ),
        CongruenceFamily(
            id="cong-81n44",
            description="A(81n+44) vanishes mod 3",
            k=2,
            modulus=3,
            argument=lambda n, t: 81 * n + 44,
        ),
        CongruenceFamily(
            id="thm1.6-4n2",
            description="A_3(4n+2) vanishes mod 2",
            k=3,
            modulus=2,
            argument=lambda n, t: 4 * n + 2,
        ),
        CongruenceFamily(
            id="thm1.6-4n3",
            description="A_3(4n+3) vanishes mod 2",
            k=3,
            modulus=2,
            argument=lambda n, t: 4 * n + 3,
        ),
        *[
            CongruenceFamily(
                id=f"thm1.7-10n{r}",
                description=f"A_5(10n+{r}) vanishes mod 2",
                k=5,
                modulus=2,
                argument=(lambda rr: lambda n, t: 10 * n + rr)(r),
            )
            for r in (2, 6)
        ],
        *[
            CongruenceFamily(
                id=f"thm1.7-25n{r}",
                description=f"A_5(25n+{r}) vanishes mod 5",
                k=5,
                modulus=5,
                argument=(lambda rr: lambda n, t: 25 * n + rr)(r),
            )
            for r in (14, 19, 24)
        ],
        CongruenceFamily(
            id="thm1.8-2n1-8n3",
            description="A_7(2n+1) matches A_7(8n+3) mod 2",
            k=7,
            modulus=2,
            argument=lambda n, t: 2 * n + 1,
            companion=lambda n, t: 8 * n + 3,
            n_max=2000,
        ),
        CongruenceFamily(
            id="cong-A7-8n7",
            description="A_7(8n+7) vanishes mod 2",
            k=7,
            modulus=2,
            argument=lambda n, t: 8 * n + 7,
            n_max=2000,
        ),
        CongruenceFamily(
            id="thm1.8-pow2j",
            description="A_7(2^(2j+3) n + (10*2^(2j+1)+1)/3) vanishes mod 2",
            k=7,
            modulus=2,
            argument=lambda n, t: 2 ** (2 * t["j"] + 3) * n
            + exact_div(10 * 2 ** (2 * t["j"] + 1) + 1, 3),
            tuples=({"j": 0}, {"j": 1}, {"j": 2}),
            n_max=150,
        ),
        *[
            CongruenceFamily(
                id=f"thm1.8-16n{r}",
                description=f"A_7(16n+{r}) vanishes mod 2",
                k=7,
                modulus=2,
                argument=(lambda rr: lambda n, t: 16 * n + rr)(r),
                n_max=2000,
            )
            for r in (9, 13)
        ],
        CongruenceFamily(
            id="thm1.8-14nr",
            description="A_7(2*7^a (7n+r) + (2*7^a+1)/3) vanishes mod 2 for r in {3,4,6}",
            k=7,
            modulus=2,
            argument=lambda n, t: 2 * 7 ** t["alpha"] * (7 * n + t["r"])
            + exact_div(2 * 7 ** t["alpha"] + 1, 3),
            tuples=tuple({"alpha": a, "r": r} for a in (0, 1) for r in (3, 4, 6)),
        ),
        CongruenceFamily(
            id="thm1.8-prime",
            description="A_7(2 p^(2a+1) (pn+r) + (2 p^(2a+2)+1)/3) vanishes mod 2 "
            "for qualifying primes p",
            k=7,
            modulus=2,
            argument=lambda n, t: 2 * t["p"] ** (2 * t["alpha"] + 1) * (t["p"] * n + t["r"])
            + exact_div(2 * t["p"] ** (2 * t["alpha"] + 2) + 1, 3),
            tuples=_prime_grid(-7),
            n_max=150,
            adaptive=True,
        ),
        CongruenceFamily(
            id="thm1.9-23nr",
            description="A_23(2*23^a (23n+r) + 2*23^a + 1) vanishes mod 2 "
            "for eleven residues r",
            k=23,
            modulus=2,
            argument=lambda n, t: 2 * 23 ** t["alpha"] * (23 * n + t["r"])
            + 2 * 23 ** t["alpha"]
            + 1,
            tuples=tuple(
                {"alpha": a, "r": r}
                for a in (0, 1)
                for r in (4, 6, 9, 10, 13, 14, 16, 18, 19, 20, 21)
            ),
            n_max=150,
        ),
        CongruenceFamily(
            id="thm1.9-prime",
            description="A_23(2 p^(2a+1) (pn+r) + 2 p^(2a+2) + 1) vanishes mod 2 "
            "for qualifying primes p",
            k=23,
            modulus=2,
            argument=lambda n, t: 2 * t["p"] ** (2 * t["alpha"] + 1) * (t["p"] * n + t["r"])
            + 2 * t["p"] ** (2 * (t["alpha"] + 1))
            + 1,
            tuples=_prime_grid(-23),
            n_max=150,
            adaptive=True,
        ),
        CongruenceFamily(
            id="control-fam-9n4",
            description="false claim that A(9n+4) vanishes mod 3",
            k=2,
            modulus=3,
            argument=lambda n, t: 9 * n + 4,
            n_max=200,
            expect_failure=True,
        ),
    ]
    return tuple(families)


# ----------------------------------------------------------------------
# Access
# ----------------------------------------------------------------------


@lru_cache(maxsize=1)
def identity_cases() -> tuple[IdentityCase, ...]:
    return _identity_cases()


@lru_cache(maxsize=1)
def congruence_families() -> tuple[CongruenceFamily, ...]:
    return _congruence_families()


def all_entries() -> tuple[IdentityCase | CongruenceFamily, ...]:
    entries = identity_cases() + congruence_families()
    ids = [e.id for e in entries]
    if len(ids) != len(set(ids)):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise EncodingError(f"duplicate registry ids: {dupes}")
    return entries


def get_entry(entry_id: str) -> IdentityCase | CongruenceFamily:
    for entry in all_entries():
        if entry.id == entry_id:
            return entry
    raise KeyError(entry_id)
