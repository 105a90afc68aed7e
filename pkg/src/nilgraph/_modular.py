"""Prime generation, CRT and size bounds for the multi-modular solver."""

from __future__ import annotations

import math

PRIME_CEILING = 1 << 32


def _is_prime_u32(n: int) -> bool:
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13):
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # bases 2, 7, 61 are deterministic below 4_759_123_141
    for a in (2, 7, 61):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []


def primes():
    """Yield primes below 2**32 in decreasing order, cached across calls."""
    k = 0
    while True:
        while k >= len(_PRIMES):
            n = (_PRIMES[-1] if _PRIMES else PRIME_CEILING + 1) - 2
            while not _is_prime_u32(n):
                n -= 2
            _PRIMES.append(n)
        yield _PRIMES[k]
        k += 1


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Combine x = r1 mod m1 and x = r2 mod m2 (coprime moduli) into x mod m1*m2."""
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * t


def symmetric(x: int, m: int) -> int:
    return x - m if x > m // 2 else x


def hadamard_bound(rows: list[list[int]], rhs: list[int]) -> int:
    """Bound on |det A| and on every Cramer numerator det(A with column i := b)."""
    n = len(rows)
    col_sq = [sum(rows[i][j] * rows[i][j] for i in range(n)) for j in range(n)]
    b_sq = sum(x * x for x in rhs)
    bound = 1
    for c in col_sq:
        bound *= math.isqrt(max(c, b_sq)) + 1
    return bound


def verify(rows: list[list[int]], rhs: list[int], nums: list[int], den: int) -> bool:
    """Exact check A @ nums == den * rhs over the integers."""
    if den == 0:
        return False
    for row, b in zip(rows, rhs):
        if sum(a * x for a, x in zip(row, nums) if a) != den * b:
            return False
    return True
