"""Integer factorization, Euler totient, and divisor utilities.

Deterministic trial division on desk-scale integers (n up to ~10**6).
Every block partition downstream keys off the ascending divisor order
produced here, so the ordering is part of the contract.
"""

from __future__ import annotations

__all__ = [
    "factorize",
    "totient",
    "divisors",
    "proper_divisors",
    "is_prime",
    "prime_power",
]


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected a positive integer, got {n!r}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs with primes ascending.

    factorize(1) == [] (empty product).
    """
    _check_positive(n)
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def totient(n: int) -> int:
    """Euler's phi: how many of 1..n are coprime to n.  totient(1) == 1."""
    _check_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    _check_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def proper_divisors(n: int) -> list[int]:
    """Divisors of n strictly below n.  Needs n >= 2 (1 has none)."""
    _check_positive(n)
    if n < 2:
        raise ValueError("proper divisors need n >= 2")
    return divisors(n)[:-1]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    facs = factorize(n)
    return len(facs) == 1 and facs[0][1] == 1


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, r) with n == p**r if n is a prime power, else None.  1 is not one."""
    if n < 2:
        return None
    facs = factorize(n)
    if len(facs) == 1:
        return facs[0]
    return None
