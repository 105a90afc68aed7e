# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact solver: Gaussian elimination modulo 32-bit primes + CRT.

Residues are combined until the reconstruction stabilises and passes an exact
integer check ``A @ nums == den * rhs``; the check makes the answer a
certificate rather than a probabilistic result.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

from ._modular import crt_pair, hadamard_bound, primes, symmetric, verify
from .errors import SingularMatrix

cnp.import_array()

BACKEND = "cython"


cdef uint64_t _powmod(uint64_t a, uint64_t e, uint64_t p) nogil:
    cdef uint64_t r = 1
    a %= p
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


cdef uint64_t _eliminate(uint64_t[:, ::1] m, uint64_t[::1] x, uint64_t p) nogil:
    """Solve in place; m is n x (n+1) augmented. Returns det mod p (0 if singular)."""
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, j, k, r
    cdef uint64_t det = 1, inv, f, t, acc
    for k in range(n):
        r = k
        while r < n and m[r, k] == 0:
            r += 1
        if r == n:
            return 0
        if r != k:
            for j in range(k, n + 1):
                t = m[k, j]
                m[k, j] = m[r, j]
                m[r, j] = t
            det = (p - det) % p
        det = det * m[k, k] % p
        inv = _powmod(m[k, k], p - 2, p)
        for j in range(k, n + 1):
            m[k, j] = m[k, j] * inv % p
        for i in range(k + 1, n):
            f = m[i, k]
            if f == 0:
                continue
            f = p - f
            for j in range(k, n + 1):
                m[i, j] = (m[i, j] + f * m[k, j]) % p
    for i in range(n - 1, -1, -1):
        acc = m[i, n]
        for j in range(i + 1, n):
            acc = (acc + (p - m[i, j]) * x[j]) % p
        x[i] = acc
    return det


def solve_mod(a, b, uint64_t p):
    """Return ``(det mod p, det * A^-1 b mod p)``; the vector is None when det = 0."""
    cdef Py_ssize_t n = len(b)
    cdef cnp.ndarray[cnp.uint64_t, ndim=2] m = np.empty((n, n + 1), dtype=np.uint64)
    m[:, :n] = a
    m[:, n] = b
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] x = np.zeros(n, dtype=np.uint64)
    cdef uint64_t det = _eliminate(m, x, p)
    cdef Py_ssize_t i
    if det == 0:
        return 0, None
    for i in range(n):
        x[i] = x[i] * det % p
    return int(det), [int(v) for v in x]


def _reduce(rows, rhs, p, small):
    if small is not None:
        a64, b64 = small
        return (a64 % np.int64(p)).astype(np.uint64), (b64 % np.int64(p)).astype(np.uint64)
    a = np.array([[v % p for v in row] for row in rows], dtype=np.uint64)
    b = np.array([v % p for v in rhs], dtype=np.uint64)
    return a, b


def solve_integer_system(rows, rhs):
    """Return ``(nums, den)`` with ``A @ nums == den * rhs`` exactly and ``den > 0``."""
    n = len(rows)
    if n == 0:
        return [], 1
    rows = [list(r) for r in rows]
    rhs = list(rhs)
    limit = 1 << 62
    if all(-limit < v < limit for row in rows for v in row) and all(-limit < v < limit for v in rhs):
        small = (np.array(rows, dtype=np.int64), np.array(rhs, dtype=np.int64))
    else:
        small = None
    bound = 2 * hadamard_bound(rows, rhs) + 1
    modulus = 1
    skipped = 1
    det_r = 0
    nums_r = None
    last = None
    for p in primes():
        a, b = _reduce(rows, rhs, p, small)
        d, y = solve_mod(a, b, p)
        if y is None:
            skipped *= p
            if skipped > bound:
                raise SingularMatrix("matrix is singular")
            continue
        if nums_r is None:
            det_r, nums_r, modulus = d, y, p
        else:
            det_r = crt_pair(det_r, modulus, d, p)
            nums_r = [crt_pair(u, modulus, v, p) for u, v in zip(nums_r, y)]
            modulus *= p
        cand_den = symmetric(det_r, modulus)
        cand = [symmetric(v, modulus) for v in nums_r]
        done = modulus > bound
        if done or (last is not None and last == (cand_den, cand)):
            if verify(rows, rhs, cand, cand_den):
                if cand_den < 0:
                    cand_den = -cand_den
                    cand = [-v for v in cand]
                return cand, cand_den
            if done:
                raise ArithmeticError("multi-modular reconstruction failed verification")
        last = (cand_den, cand)
