"""Truncated formal power series with exact integer or modular coefficients.

A :class:`TruncatedSeries` stores the coefficients ``a_0 .. a_N`` of a formal
power series in one variable, together with the truncation order ``N``
(called *precision* throughout) and an optional modulus.  Exact series carry
Python big integers; modular series carry canonical residues in ``[0, m)``.
Precision is part of the value: binary operations require matching
coefficient rings and truncate to the smaller precision of the operands, and
reading a coefficient beyond the stored precision raises instead of
pretending the series is a polynomial.

Multiplication packs coefficients into a single big integer per operand
(Kronecker substitution) so that one Python bignum product performs the whole
convolution; this keeps thousand-term exact products well under the
performance budgets without any external bignum library.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class SeriesError(ValueError):
    """Base class for all series-arithmetic errors."""


class RingMismatchError(SeriesError):
    """Operands live over different coefficient rings (exact vs. mod m)."""


class PrecisionError(SeriesError):
    """A coefficient or comparison was requested beyond the stored precision."""


class NonUnitError(SeriesError):
    """Inversion of a series whose constant term is not a unit."""


class NonDivisibleError(SeriesError):
    """Exact division by an integer that does not divide every coefficient."""


def _canonical(value: int, modulus: int | None) -> int:
    return value if modulus is None else value % modulus


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``a_0 .. a_N`` of a series known through order ``N``.

    Instances are immutable; every operation returns a new series.  Use
    :func:`make` (or the :func:`zero` / :func:`one` / :func:`monomial`
    helpers) rather than the raw constructor.
    """

    coeffs: tuple[int, ...]
    precision: int
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.precision < 0:
            raise SeriesError(f"precision must be >= 0, got {self.precision}")
        if self.modulus is not None and self.modulus < 2:
            raise SeriesError(f"modulus must be >= 2, got {self.modulus}")
        if len(self.coeffs) != self.precision + 1:
            raise SeriesError(
                f"need exactly {self.precision + 1} coefficients for "
                f"precision {self.precision}, got {len(self.coeffs)}"
            )
        coeffs = tuple(_canonical(int(c), self.modulus) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    # ------------------------------------------------------------------
    # Introspection
    # ------------------------------------------------------------------

    def __repr__(self) -> str:
        ring = "Z" if self.modulus is None else f"Z/{self.modulus}"
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.precision >= 6 else ""
        return f"TruncatedSeries([{head}{tail}] + O(q^{self.precision + 1}), {ring})"

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def coefficient(self, n: int) -> int:
        """Return ``a_n``; it is an error to look past the truncation order."""
        if n < 0:
            raise SeriesError(f"coefficient index must be >= 0, got {n}")
        if n > self.precision:
            raise PrecisionError(
                f"coefficient {n} requested but series is only known "
                f"through order {self.precision}"
            )
        return self.coeffs[n]

    def __getitem__(self, n: int) -> int:
        return self.coefficient(n)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # ------------------------------------------------------------------
    # Ring plumbing
    # ------------------------------------------------------------------

    def _join(self, other: TruncatedSeries) -> int:
        if not isinstance(other, TruncatedSeries):
            raise RingMismatchError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if self.modulus != other.modulus:
            raise RingMismatchError(
                f"cannot combine series over different rings: "
                f"mod {self.modulus} vs mod {other.modulus}"
            )
        return min(self.precision, other.precision)

    def _replace(self, coeffs: Sequence[int], precision: int) -> TruncatedSeries:
        return TruncatedSeries(tuple(coeffs), precision, self.modulus)

    # ------------------------------------------------------------------
    # Additive structure
    # ------------------------------------------------------------------

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._join(other)
        return self._replace(
            [_canonical(a + b, self.modulus) for a, b in zip(self.coeffs, other.coeffs)][: n + 1],
            n,
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._join(other)
        return self._replace(
            [_canonical(a - b, self.modulus) for a, b in zip(self.coeffs, other.coeffs)][: n + 1],
            n,
        )

    def __neg__(self) -> TruncatedSeries:
        return self._replace([_canonical(-a, self.modulus) for a in self.coeffs], self.precision)

    # ------------------------------------------------------------------
    # Multiplicative structure
    # ------------------------------------------------------------------

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._join(other)
        out = _kron_mul(self.coeffs[: n + 1], other.coeffs[: n + 1], n)
        if self.modulus is not None:
            out = [c % self.modulus for c in out]
        return self._replace(out, n)

    def scale(self, c: int) -> TruncatedSeries:
        """Multiply every coefficient by the integer ``c``."""
        return self._replace([_canonical(c * a, self.modulus) for a in self.coeffs], self.precision)

    def div_exact(self, c: int) -> TruncatedSeries:
        """Divide by a nonzero integer ``c``.

        Over the exact ring this is only legal when ``c`` divides every
        coefficient; otherwise :class:`NonDivisibleError` is raised.  Over
        ``Z/m`` the constant must be invertible mod ``m``.
        """
        if c == 0:
            raise SeriesError("division by zero")
        if self.modulus is not None:
            try:
                inv = pow(c, -1, self.modulus)
            except ValueError:
                raise NonUnitError(f"{c} is not invertible mod {self.modulus}") from None
            return self.scale(inv)
        for i, a in enumerate(self.coeffs):
            if a % c:
                raise NonDivisibleError(f"coefficient of q^{i} is {a}, not divisible by {c}")
        return self._replace([a // c for a in self.coeffs], self.precision)

    def times_monomial(self, c: int, s: int, precision: int | None = None) -> TruncatedSeries:
        """Multiply by ``c * q^s`` (``s >= 0``).

        By default the result is carried to precision ``N + s`` — shifting
        loses no information about the known coefficients — but an explicit
        smaller target may be given.
        """
        if s < 0:
            raise SeriesError(f"monomial exponent must be >= 0, got {s}")
        n = self.precision + s if precision is None else precision
        if n > self.precision + s:
            raise PrecisionError(
                f"cannot produce precision {n} from input precision {self.precision} "
                f"shifted by {s}"
            )
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if s + i > n:
                break
            out[s + i] = _canonical(c * a, self.modulus)
        return self._replace(out, n)

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse, by Newton iteration with doubling precision.

        The constant term must be a unit: ``+1`` or ``-1`` exactly, or
        invertible mod ``m``.
        """
        c0 = self.coeffs[0]
        if self.modulus is None:
            if c0 not in (1, -1):
                raise NonUnitError(f"constant term {c0} is not invertible over the integers")
            x0 = c0
        else:
            try:
                x0 = pow(c0, -1, self.modulus)
            except ValueError:
                raise NonUnitError(f"constant term {c0} is not invertible mod {self.modulus}") from None
        n = self.precision
        b = [x0]
        known = 0
        while known < n:
            # If b inverts self through order t, then b*(2 - self*b) inverts
            # it through order 2t+1.
            target = min(2 * known + 1, n)
            ab = _kron_mul(self.coeffs[: target + 1], b, target)
            two_minus = [-c for c in ab]
            two_minus[0] += 2
            b = _kron_mul(b, two_minus, target)
            if self.modulus is not None:
                b = [c % self.modulus for c in b]
            known = target
        return self._replace(b, n)

    def pow(self, e: int) -> TruncatedSeries:
        """Raise to an arbitrary (possibly negative) integer power."""
        if e == 0:
            return one(self.precision, self.modulus)
        base = self.inverse() if e < 0 else self
        e = abs(e)
        result: TruncatedSeries | None = None
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        assert result is not None
        return result

    def __pow__(self, e: int) -> TruncatedSeries:
        return self.pow(e)

    # ------------------------------------------------------------------
    # Structural operators
    # ------------------------------------------------------------------

    def inflate(self, k: int, precision: int | None = None) -> TruncatedSeries:
        """Substitute ``q -> q^k`` (``k >= 1``).

        Every known input coefficient survives the substitution, so the
        default result precision is ``N * k``; pass ``precision`` to request
        less.  Input coefficients beyond ``floor(precision / k)`` are then
        simply unused.
        """
        if k < 1:
            raise SeriesError(f"inflation step must be >= 1, got {k}")
        n = self.precision * k if precision is None else precision
        # Orders k*P+1 .. k*P+k-1 hold no multiple of k, so they are knowable
        # zeros; order k*(P+1) is the first genuinely unknown coefficient.
        if n > self.precision * k + k - 1:
            raise PrecisionError(
                f"cannot produce precision {n} from input precision {self.precision} "
                f"inflated by {k}"
            )
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if i * k > n:
                break
            out[i * k] = a
        return self._replace(out, n)

    def alternate(self) -> TruncatedSeries:
        """Substitute ``q -> -q``: negate the odd-index coefficients."""
        return self._replace(
            [_canonical(-a, self.modulus) if i & 1 else a for i, a in enumerate(self.coeffs)],
            self.precision,
        )

    def dissect(self, m: int, r: int) -> TruncatedSeries:
        """Extract the arithmetic progression ``r mod m``: ``T_n = a_{m n + r}``.

        Requires ``0 <= r < m``.  The result is known through order
        ``floor((N - r) / m)``, so the source must satisfy ``N >= r``.
        """
        if m < 1:
            raise SeriesError(f"dissection modulus must be >= 1, got {m}")
        if not 0 <= r < m:
            raise SeriesError(f"dissection residue must satisfy 0 <= r < m, got r={r}, m={m}")
        if self.precision < r:
            raise PrecisionError(
                f"cannot dissect residue {r} from a series of precision {self.precision}"
            )
        n = (self.precision - r) // m
        return self._replace([self.coeffs[m * i + r] for i in range(n + 1)], n)

    def reduce_mod(self, m: int) -> TruncatedSeries:
        """Map an exact series into ``Z/m`` (``m >= 2``), coefficientwise."""
        if m < 2:
            raise SeriesError(f"reduction modulus must be >= 2, got {m}")
        if self.modulus is not None:
            raise RingMismatchError(
                f"series is already modular (mod {self.modulus}); reduce from the exact ring"
            )
        return TruncatedSeries(tuple(c % m for c in self.coeffs), self.precision, m)

    # ------------------------------------------------------------------
    # Text round trip
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        """Render as one ``exponent<TAB>coefficient`` line per order, ascending.

        Modular series carry a leading ``# mod m`` header so the ring
        survives the round trip.
        """
        lines = [] if self.modulus is None else [f"# mod {self.modulus}"]
        lines.extend(f"{i}\t{c}" for i, c in enumerate(self.coeffs))
        return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# Constructors
# ----------------------------------------------------------------------


def make(
    coeffs: Iterable[int], precision: int | None = None, modulus: int | None = None
) -> TruncatedSeries:
    """Build a series from ``a_0 .. a_N``.

    When ``precision`` is given the coefficient list must have exactly
    ``precision + 1`` entries; otherwise the precision is inferred from the
    length.
    """
    cs = tuple(coeffs)
    if precision is None:
        if not cs:
            raise SeriesError("need at least the constant coefficient")
        precision = len(cs) - 1
    return TruncatedSeries(cs, precision, modulus)


def zero(precision: int, modulus: int | None = None) -> TruncatedSeries:
    return TruncatedSeries((0,) * (precision + 1), precision, modulus)


def one(precision: int, modulus: int | None = None) -> TruncatedSeries:
    return monomial(1, 0, precision, modulus)


def monomial(c: int, e: int, precision: int, modulus: int | None = None) -> TruncatedSeries:
    """The single term ``c * q^e`` known through the given precision."""
    if e < 0:
        raise SeriesError(f"exponent must be >= 0, got {e}")
    if e > precision:
        raise PrecisionError(f"monomial exponent {e} exceeds precision {precision}")
    coeffs = [0] * (precision + 1)
    coeffs[e] = _canonical(c, modulus)
    return TruncatedSeries(tuple(coeffs), precision, modulus)


def from_text(text: str) -> TruncatedSeries:
    """Parse the :meth:`TruncatedSeries.to_text` format."""
    modulus: int | None = None
    coeffs: list[int] = []
    expected = 0
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) != 2 or fields[0] != "mod":
                raise SeriesError(f"unrecognized header line: {raw!r}")
            modulus = int(fields[1])
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise SeriesError(f"expected 'exponent<TAB>coefficient', got {raw!r}")
        n, c = int(fields[0]), int(fields[1])
        if n != expected:
            raise SeriesError(f"exponents must ascend from 0 without gaps; got {n} after {expected - 1}")
        coeffs.append(c)
        expected += 1
    if not coeffs:
        raise SeriesError("no coefficient lines found")
    return TruncatedSeries(tuple(coeffs), len(coeffs) - 1, modulus)


# ----------------------------------------------------------------------
# Comparison
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesDiff:
    """Outcome of comparing two series through a common order.

    ``index`` is the smallest exponent where they disagree (``None`` when
    they agree), with the two offending coefficients alongside.
    """

    equal: bool
    upto: int
    index: int | None = None
    left: int | None = None
    right: int | None = None


def eq_upto(a: TruncatedSeries, b: TruncatedSeries, upto: int | None = None) -> SeriesDiff:
    """Compare coefficients of ``a`` and ``b`` through order ``upto``.

    Both operands must live over the same ring and be known at least through
    ``upto`` (default: the smaller of the two precisions).  The first
    disagreement, if any, is reported with both values.
    """
    a._join(b)
    if upto is None:
        upto = min(a.precision, b.precision)
    if a.precision < upto or b.precision < upto:
        raise PrecisionError(
            f"comparison through order {upto} needs both operands at that precision "
            f"(have {a.precision} and {b.precision})"
        )
    for i in range(upto + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return SeriesDiff(False, upto, i, a.coeffs[i], b.coeffs[i])
    return SeriesDiff(True, upto)


# ----------------------------------------------------------------------
# Kronecker-substitution convolution
# ----------------------------------------------------------------------


def _kron_mul(a: Sequence[int], b: Sequence[int], n_out: int) -> list[int]:
    """Convolution of signed integer sequences, truncated to ``n_out``.

    Coefficients are packed into byte-aligned slots of one big integer per
    sign part, multiplied with two bignum products, and unpacked.  The slot
    width is sized so no column of the convolution can overflow into its
    neighbor.
    """
    la, lb = min(len(a), n_out + 1), min(len(b), n_out + 1)
    amax = max((abs(c) for c in a[:la]), default=0)
    bmax = max((abs(c) for c in b[:lb]), default=0)
    if amax == 0 or bmax == 0:
        return [0] * (n_out + 1)
    bits = amax.bit_length() + bmax.bit_length() + min(la, lb).bit_length() + 2
    slot = (bits + 7) // 8  # bytes per packed coefficient
    ap, an = _pack_split(a[:la], slot)
    bp, bn = _pack_split(b[:lb], slot)
    pos = ap * bp + an * bn
    neg = ap * bn + an * bp
    return _unpack_sub(pos, neg, slot, n_out)


def _pack_split(c: Sequence[int], slot: int) -> tuple[int, int]:
    pos = bytearray(slot * len(c))
    neg = bytearray(slot * len(c))
    for i, v in enumerate(c):
        if v > 0:
            pos[i * slot : i * slot + slot] = v.to_bytes(slot, "little")
        elif v < 0:
            neg[i * slot : i * slot + slot] = (-v).to_bytes(slot, "little")
    return int.from_bytes(pos, "little"), int.from_bytes(neg, "little")


def _unpack_sub(pos: int, neg: int, slot: int, n_out: int) -> list[int]:
    nbytes = slot * (n_out + 1)
    pb = pos.to_bytes(max(nbytes, (pos.bit_length() + 7) // 8), "little")[:nbytes]
    nb = neg.to_bytes(max(nbytes, (neg.bit_length() + 7) // 8), "little")[:nbytes]
    out = []
    for i in range(n_out + 1):
        p = int.from_bytes(pb[i * slot : i * slot + slot], "little")
        m = int.from_bytes(nb[i * slot : i * slot + slot], "little")
        out.append(p - m)
    return out
