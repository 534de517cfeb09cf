"""Fast modular tables of ``A_k(n)`` for congruence-family scans.

The per-size fold DP is quadratic in the table length, which is hopeless for
the multi-million-entry tables the prime-indexed families need.  This module
replaces it with a staircase decomposition: sizes above a split point
``S ~ sqrt(L)`` are handled through the parts-count recurrence

    G_0 = 1,    G_j = -q^(S+1) / (1 - q^j) * G_{j-1},

whose sum over ``j`` is the signed generating function of partitions into
parts ``> S`` (peel one copy of ``S+1`` off each of ``j`` parts, then grow
parts freely in steps of ``j``).  Sizes ``<= S`` are folded directly.  Either
way each step is a single linear pass, so the whole table costs
``O(L * sqrt(L))`` element operations and never convolves anything.

The second factor ``prod_{k|s} 1/(1+q^s)`` reuses the same staircase with
step ``k``, seeded with the already-accumulated table instead of 1.

Mod 2 the table is bit-packed into uint64 words and every fold becomes a
handful of word-wide xor-shifts (``1/(1+q^s) = prod_i (1 + q^{s 2^i})`` over
GF(2)); odd moduli use uint8 arrays.  All kernels are numba-compiled.

These tables share no code with :mod:`qdissect.series` or
:mod:`qdissect.oracles`; unit tests pin them against the exact fold DP.
"""

from __future__ import annotations

from math import isqrt

import numpy as np
from numba import njit

_TABLE_CACHE: dict[tuple[int, int], np.ndarray] = {}


# ----------------------------------------------------------------------
# Bit-packed GF(2) kernels
# ----------------------------------------------------------------------


@njit(cache=True)
def _xor_shift(w: np.ndarray, t: int) -> None:
    """In place ``w ^= w << t`` on a little-endian uint64 bit string."""
    nwords = w.shape[0]
    off = t >> 6
    r = t & 63
    if r == 0:
        for i in range(nwords - 1, off - 1, -1):
            w[i] ^= w[i - off]
    else:
        for i in range(nwords - 1, off, -1):
            w[i] ^= (w[i - off] << r) | (w[i - off - 1] >> (64 - r))
        if off < nwords:
            w[off] ^= w[0] << r


@njit(cache=True)
def _gf2_fold(w: np.ndarray, s: int, nbits: int) -> None:
    """In place ``w *= 1/(1+q^s)`` over GF(2), valid through bit ``nbits``."""
    t = s
    while t <= nbits:
        _xor_shift(w, t)
        t <<= 1


@njit(cache=True)
def _shift_into(dst: np.ndarray, src: np.ndarray, t: int) -> None:
    """``dst = src << t`` (bitwise), zero-filling the low bits."""
    nwords = dst.shape[0]
    off = t >> 6
    r = t & 63
    if r == 0:
        for i in range(nwords - 1, off - 1, -1):
            dst[i] = src[i - off]
    else:
        for i in range(nwords - 1, off, -1):
            dst[i] = (src[i - off] << r) | (src[i - off - 1] >> (64 - r))
        if off < nwords:
            dst[off] = src[0] << r
    for i in range(off):
        dst[i] = 0


@njit(cache=True)
def _xor_into(acc: np.ndarray, g: np.ndarray) -> None:
    for i in range(acc.shape[0]):
        acc[i] ^= g[i]


def _plain_bits(length: int, split: int | None = None) -> np.ndarray:
    """Bit-packed ``prod_s 1/(1+q^s) mod 2`` through order ``length``."""
    if split is None:
        split = max(64, isqrt(length))
    nwords = (length >> 6) + 1
    acc = np.zeros(nwords, dtype=np.uint64)
    g = np.zeros(nwords, dtype=np.uint64)
    tmp = np.zeros(nwords, dtype=np.uint64)
    acc[0] = 1
    g[0] = 1
    j = 1
    while j * (split + 1) <= length:
        _shift_into(tmp, g, split + 1)
        g, tmp = tmp, g
        _gf2_fold(g, j, length)
        _xor_into(acc, g)
        j += 1
    for s in range(1, min(split, length) + 1):
        _gf2_fold(acc, s, length)
    return acc


def _extra_multiples_bits(plain: np.ndarray, k: int, length: int) -> np.ndarray:
    """Apply the second ``prod_t 1/(1+q^{kt})`` factor, staircase seeded with ``plain``."""
    split = max(8, isqrt(length // k)) if length >= k else 1
    acc = plain.copy()
    g = plain.copy()
    tmp = np.zeros_like(plain)
    j = 1
    while k * j * (split + 1) <= length:
        _shift_into(tmp, g, k * (split + 1))
        g, tmp = tmp, g
        _gf2_fold(g, k * j, length)
        _xor_into(acc, g)
        j += 1
    for t in range(1, split + 1):
        if k * t <= length:
            _gf2_fold(acc, k * t, length)
    return acc


def _unpack_bits(bits: np.ndarray, length: int) -> np.ndarray:
    return np.unpackbits(bits.view(np.uint8), bitorder="little")[: length + 1]


# ----------------------------------------------------------------------
# uint8 kernels for odd moduli
# ----------------------------------------------------------------------


@njit(cache=True)
def _fold_neg(b: np.ndarray, s: int, m: int) -> None:
    """In place ``b *= 1/(1+q^s)`` on canonical residues mod ``m``."""
    for n in range(s, b.shape[0]):
        v = b[n] + m - b[n - s]
        if v >= m:
            v -= m
        b[n] = v


@njit(cache=True)
def _fold_pos(b: np.ndarray, s: int, m: int) -> None:
    """In place ``b *= 1/(1-q^s)`` on canonical residues mod ``m``."""
    for n in range(s, b.shape[0]):
        v = b[n] + b[n - s]
        if v >= m:
            v -= m
        b[n] = v


@njit(cache=True)
def _shift_neg_into(dst: np.ndarray, src: np.ndarray, t: int, m: int) -> None:
    """``dst = -q^t * src`` on canonical residues mod ``m``."""
    for n in range(min(t, dst.shape[0])):
        dst[n] = 0
    for n in range(t, dst.shape[0]):
        v = src[n - t]
        dst[n] = 0 if v == 0 else m - v


@njit(cache=True)
def _add_into(acc: np.ndarray, g: np.ndarray, m: int) -> None:
    for n in range(acc.shape[0]):
        v = acc[n] + g[n]
        if v >= m:
            v -= m
        acc[n] = v


def _plain_modm(length: int, m: int, split: int | None = None) -> np.ndarray:
    """``prod_s 1/(1+q^s) mod m`` as a uint8 table through order ``length``."""
    if split is None:
        split = max(32, isqrt(length))
    acc = np.zeros(length + 1, dtype=np.uint8)
    g = np.zeros(length + 1, dtype=np.uint8)
    tmp = np.zeros(length + 1, dtype=np.uint8)
    acc[0] = 1
    g[0] = 1
    j = 1
    while j * (split + 1) <= length:
        _shift_neg_into(tmp, g, split + 1, m)
        g, tmp = tmp, g
        _fold_pos(g, j, m)
        _add_into(acc, g, m)
        j += 1
    for s in range(1, min(split, length) + 1):
        _fold_neg(acc, s, m)
    return acc


def _extra_multiples_modm(plain: np.ndarray, k: int, length: int, m: int) -> np.ndarray:
    split = max(8, isqrt(length // k)) if length >= k else 1
    acc = plain.copy()
    g = plain.copy()
    tmp = np.zeros_like(plain)
    j = 1
    while k * j * (split + 1) <= length:
        _shift_neg_into(tmp, g, k * (split + 1), m)
        g, tmp = tmp, g
        _fold_pos(g, k * j, m)
        _add_into(acc, g, m)
        j += 1
    for t in range(1, split + 1):
        if k * t <= length:
            _fold_neg(acc, k * t, m)
    return acc


# ----------------------------------------------------------------------
# Public entry points
# ----------------------------------------------------------------------


def plain_signed_mod(m: int, n_max: int) -> np.ndarray:
    """Table of ``prod_s 1/(1+q^s) mod m`` (the one-factor half), for tests."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if m == 2:
        return _unpack_bits(_plain_bits(n_max), n_max)
    return _plain_modm(n_max, m)[: n_max + 1]


def signed_table_mod(k: int, m: int, n_max: int) -> np.ndarray:
    """``A_k(n) mod m`` for ``n = 0 .. n_max`` as canonical uint8 residues.

    Tables are cached per ``(k, m)`` and grow monotonically; request the
    largest bound first when several ranges share a table.
    """
    if k < 1:
        raise ValueError(f"color modulus k must be >= 1, got {k}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    cached = _TABLE_CACHE.get((k, m))
    if cached is None or cached.shape[0] <= n_max:
        if m == 2:
            bits = _plain_bits(n_max)
            bits = _extra_multiples_bits(bits, k, n_max)
            table = _unpack_bits(bits, n_max)
        else:
            table = _extra_multiples_modm(_plain_modm(n_max, m), k, n_max, m)
        table = table[: n_max + 1]
        table.flags.writeable = False
        _TABLE_CACHE[(k, m)] = table
        cached = table
    return cached[: n_max + 1]
