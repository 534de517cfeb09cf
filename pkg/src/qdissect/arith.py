"""Small number-theoretic helpers: primality, prime lists, Legendre symbol."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test for small ``n``."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_below(bound: int) -> list[int]:
    """All primes ``p < bound``, ascending."""
    return [p for p in range(2, bound) if is_prime(p)]


def legendre(a: int, p: int) -> int:
    """Legendre symbol ``(a/p)`` for an odd prime ``p``, via Euler's criterion.

    Returns ``0`` when ``p`` divides ``a``, else ``+1`` or ``-1`` according to
    whether ``a`` is a quadratic residue mod ``p``.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"Legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    e = pow(a, (p - 1) // 2, p)
    return 1 if e == 1 else -1
