"""Exact rational matrices and linear solving.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator). Solving scales each row to integers and hands the system to the
kernel selected in :mod:`nilgraph.kernels`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .errors import SingularMatrix


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


class RationalMatrix:
    """Dense immutable matrix of Fractions."""

    __slots__ = ("_rows", "n_rows", "n_cols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(Fraction(v) for v in row) for row in rows)
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise ValueError("rows have different lengths")
        self._rows = data
        self.n_rows = len(data)
        self.n_cols = widths.pop() if widths else 0

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(v) for v in r) for r in self._rows)
        return f"RationalMatrix([{body}])"

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._rows)) if self.n_rows else RationalMatrix([])

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.n_rows) for j in range(i)
        )

    def apply(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.n_cols:
            raise ValueError(f"vector length {len(x)} does not match {self.n_cols} columns")
        x = [Fraction(v) for v in x]
        return [sum((a * b for a, b in zip(row, x) if a), Fraction(0)) for row in self._rows]

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.n_cols != other.n_rows:
                raise ValueError("inner dimensions differ")
            cols = list(zip(*other.rows))
            return RationalMatrix(
                [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._rows]
            )
        return self.apply(other)

    def submatrix(self, k: int) -> "RationalMatrix":
        """Leading k x k block."""
        return RationalMatrix(row[:k] for row in self._rows[:k])


def _integer_rows(a: RationalMatrix, b: Sequence[Fraction]) -> tuple[list[list[int]], list[int]]:
    rows, rhs = [], []
    for row, bi in zip(a.rows, b):
        scale = math.lcm(bi.denominator, *(v.denominator for v in row))
        rows.append([v.numerator * (scale // v.denominator) for v in row])
        rhs.append(bi.numerator * (scale // bi.denominator))
    return rows, rhs


def solve(a: RationalMatrix, b: Sequence) -> list[Fraction]:
    """Exact solution of ``a @ x == b``; raises SingularMatrix."""
    if not a.is_square():
        raise ValueError(f"solve needs a square matrix, got {a.shape}")
    if len(b) != a.n_rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {a.n_rows}")
    b = [Fraction(v) for v in b]
    rows, rhs = _integer_rows(a, b)
    nums, den = kernels.solve_integer_system(rows, rhs)
    return [Fraction(v, den) for v in nums]


def determinant(a: RationalMatrix) -> Fraction:
    """Determinant by Gaussian elimination with pivoting on nonzero entries."""
    if not a.is_square():
        raise ValueError("determinant needs a square matrix")
    m = [list(r) for r in a.rows]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        pk = m[k][k]
        det *= pk
        for i in range(k + 1, n):
            f = m[i][k] / pk
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return det


def leading_principal_minors(a: RationalMatrix) -> list[Fraction]:
    """All n leading principal minors, computed by elimination without row swaps.

    The k-th pivot of unpivoted elimination is the ratio of consecutive minors;
    once a minor vanishes the remaining ones are computed directly.
    """
    if not a.is_square():
        raise ValueError("leading principal minors need a square matrix")
    n = a.n_rows
    m = [list(r) for r in a.rows]
    minors = []
    prod = Fraction(1)
    for k in range(n):
        pk = m[k][k]
        if pk == 0:
            minors.append(Fraction(0))
            minors.extend(determinant(a.submatrix(j)) for j in range(k + 2, n + 1))
            return minors
        prod *= pk
        minors.append(prod)
        for i in range(k + 1, n):
            f = m[i][k] / pk
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return minors
