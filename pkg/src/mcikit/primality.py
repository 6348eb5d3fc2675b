"""Primality testing and small integer factorization.

Below 2**64 the Miller-Rabin test with the first twelve prime bases is a
proof.  Above it we run Baillie-PSW (base-2 strong probable prime test plus a
strong Lucas test with Selfridge parameters) and label the verdict
"probable-prime".
"""
from __future__ import annotations

import math
from enum import Enum

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64


class Verdict(str, Enum):
    PRIME = "prime"
    PROBABLE_PRIME = "probable-prime"
    COMPOSITE = "composite"

    def __bool__(self) -> bool:
        return self is not Verdict.COMPOSITE

    def __str__(self) -> str:
        return self.value


def _strong_probable_prime(n: int, a: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # binary Lucas chain for U_d, V_d
    U, V, Qk = 1, P, Q % n
    inv2 = (n + 1) // 2
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> Verdict:
    """Primality verdict; exact below 2**64, Baillie-PSW above."""
    n = int(n)
    if n < 2:
        return Verdict.COMPOSITE
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return Verdict.PRIME if n == p else Verdict.COMPOSITE
    if n < 41 * 41:
        return Verdict.PRIME
    if n < _DETERMINISTIC_LIMIT:
        ok = all(_strong_probable_prime(n, a) for a in _SMALL_PRIMES)
        return Verdict.PRIME if ok else Verdict.COMPOSITE
    if _strong_probable_prime(n, 2) and _strong_lucas(n):
        return Verdict.PROBABLE_PRIME
    return Verdict.COMPOSITE


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization, meant for group orders."""
    n = int(n)
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_prime_power(q: int) -> tuple[int, int] | None:
    """``(p, e)`` with ``q = p**e`` and ``e >= 1``, or ``None`` (also for 0 and 1)."""
    q = int(q)
    if q < 2:
        return None
    for e in range(q.bit_length(), 0, -1):
        r = _iroot(q, e)
        if r >= 2 and r ** e == q and is_prime(r):
            return r, e
    return None


def _iroot(q: int, e: int) -> int:
    if e == 1:
        return q
    r = int(round(q ** (1.0 / e))) if q < 1 << 1000 else 1 << (q.bit_length() // e)
    # correct floating error in either direction
    while r ** e > q:
        r -= 1
    while (r + 1) ** e <= q:
        r += 1
    return r


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, v in enumerate(sieve) if v]
