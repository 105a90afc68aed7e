"""Pure-Python exact solver: fraction-free Bareiss elimination."""

from __future__ import annotations

from .errors import SingularMatrix

BACKEND = "python"


def solve_integer_system(rows: list[list[int]], rhs: list[int]) -> tuple[list[int], int]:
    """Return ``(nums, den)`` with ``A @ nums == den * rhs`` exactly and ``den > 0``."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    break
            else:
                raise SingularMatrix(f"matrix is singular (no pivot in column {k})")
        rowk = m[k]
        pk = rowk[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            if f:
                for j in range(k + 1, n + 1):
                    ri[j] = (ri[j] * pk - f * rowk[j]) // prev
            else:
                for j in range(k + 1, n + 1):
                    ri[j] = ri[j] * pk // prev
            ri[k] = 0
        prev = pk
    det = prev if n else 1
    # back substitution on the Bareiss upper triangle; nums_i = det * x_i
    nums = [0] * n
    for i in range(n - 1, -1, -1):
        ri = m[i]
        acc = det * ri[n] - sum(ri[j] * nums[j] for j in range(i + 1, n))
        nums[i] = acc // ri[i]
    if det < 0:
        det = -det
        nums = [-x for x in nums]
    return nums, det
