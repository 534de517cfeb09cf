"""Combinatorial oracles for signed 2-colored partition counts.

``A_k(n)`` is the number of partitions of ``n`` with an even number of parts
minus the number with an odd number of parts, where parts divisible by ``k``
come in two colors.  Equivalently, expanding every factor of

    prod_s 1/(1+q^s) * prod_{k|s} 1/(1+q^s)

a part size ``s`` taken with multiplicity ``t`` contributes weight
``(-1)^t * (t+1)`` when ``k | s`` and ``(-1)^t`` otherwise.  The tables here
are computed by folding one size at a time into a running array — no series
multiplication, no theta functions — so they are an independent route against
which the product/theta side of every identity is checked.

A tiny exponential-time enumerator over explicit partition multiplicity
vectors provides a third route for small ``n``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .series import TruncatedSeries, make

_SIGNED_CACHE: dict[int, list[int]] = {}


def _fold_reciprocal_one_plus(table: list[int], s: int) -> None:
    # In-place multiply by 1/(1+q^s): ascending order yields the full
    # alternating geometric series in q^s.
    for n in range(s, len(table)):
        table[n] -= table[n - s]


def _fold_reciprocal_one_minus(table: list[int], s: int) -> None:
    # In-place multiply by 1/(1-q^s).
    for n in range(s, len(table)):
        table[n] += table[n - s]


def signed_table(k: int, n_max: int, order: str = "ascending") -> list[int]:
    """Exact values ``A_k(0) .. A_k(n_max)``.

    ``order`` selects the size-processing order; the result must not depend
    on it, which the tests exploit.
    """
    if k < 1:
        raise ValueError(f"color modulus k must be >= 1, got {k}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if order not in ("ascending", "descending"):
        raise ValueError(f"order must be 'ascending' or 'descending', got {order!r}")
    table = [0] * (n_max + 1)
    table[0] = 1
    sizes = range(1, n_max + 1) if order == "ascending" else range(n_max, 0, -1)
    for s in sizes:
        _fold_reciprocal_one_plus(table, s)
        if s % k == 0:
            _fold_reciprocal_one_plus(table, s)
    return table


def signed_series(k: int, precision: int) -> TruncatedSeries:
    """The exact generating series of ``A_k`` through the given order, cached."""
    cached = _SIGNED_CACHE.get(k)
    if cached is None or len(cached) <= precision:
        cached = signed_table(k, precision)
        _SIGNED_CACHE[k] = cached
    return make(cached[: precision + 1])


def parity_tables(k: int, n_max: int) -> tuple[list[int], list[int]]:
    """Unsigned counts split by parts parity: ``(even_table, odd_table)``.

    ``even[n] - odd[n]`` equals ``A_k(n)`` and ``even[n] + odd[n]`` counts all
    partitions of ``n`` with two colors on multiples of ``k``.
    """
    if k < 1:
        raise ValueError(f"color modulus k must be >= 1, got {k}")
    even = [0] * (n_max + 1)
    odd = [0] * (n_max + 1)
    even[0] = 1
    for s in range(1, n_max + 1):
        folds = 2 if s % k == 0 else 1
        for _ in range(folds):
            # Multiply by sum_t z^t q^{st} with z tracking parts parity:
            # ascending order makes each added part chain onto the
            # already-updated opposite-parity entry.
            for n in range(s, n_max + 1):
                e, o = even[n - s], odd[n - s]
                even[n] += o
                odd[n] += e
    return even, odd


def cubic_table(n_max: int) -> list[int]:
    """Partitions of ``n`` where even parts come in two colors (cubic counts)."""
    even, odd = parity_tables(2, n_max)
    return [e + o for e, o in zip(even, odd)]


def partition_table(n_max: int) -> list[int]:
    """Ordinary partition numbers ``p(0) .. p(n_max)``."""
    table = [0] * (n_max + 1)
    table[0] = 1
    for s in range(1, n_max + 1):
        _fold_reciprocal_one_minus(table, s)
    return table


# ----------------------------------------------------------------------
# Brute-force enumeration (third, exponential route; small n only)
# ----------------------------------------------------------------------


def _partition_multiplicities(n: int, largest: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield partitions of ``n`` as ((size, multiplicity), ...), parts <= largest."""
    if n == 0:
        yield ()
        return
    for s in range(min(n, largest), 0, -1):
        for t in range(1, n // s + 1):
            for rest in _partition_multiplicities(n - s * t, s - 1):
                yield ((s, t),) + rest


@lru_cache(maxsize=None)
def brute_force_parity(k: int, n: int) -> tuple[int, int]:
    """Directly enumerated ``(even, odd)`` colored-partition counts of ``n``.

    Every plain partition with multiplicities ``t_s`` spawns
    ``prod_{k|s} (t_s + 1)`` colored objects, all sharing the parity of the
    total part count.  Practical only for roughly ``n <= 40``.
    """
    even = odd = 0
    for parts in _partition_multiplicities(n, n):
        total = sum(t for _, t in parts)
        ways = 1
        for s, t in parts:
            if s % k == 0:
                ways *= t + 1
        if total % 2 == 0:
            even += ways
        else:
            odd += ways
    return even, odd


def brute_force_signed(k: int, n: int) -> int:
    """``A_k(n)`` by explicit enumeration; independent of the fold DP."""
    even, odd = brute_force_parity(k, n)
    return even - odd
