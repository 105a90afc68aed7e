"""The positivity criterion for graph algebras.

A graph is positive when the unique solution ``c`` of
``(3I + Adj L(G)) c = nu * 1`` has every entry strictly positive; the attached
2-step nilpotent Lie algebra is an Einstein nilradical exactly in that case.
The solution scales linearly with ``nu``, so ``nu = 1`` decides the sign
pattern for every ``nu > 0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .linalg import RationalMatrix, format_rational, solve


class Verdict(enum.Enum):
    POSITIVE = "POSITIVE"
    NON_POSITIVE = "NON-POSITIVE"
    VACUOUS = "VACUOUS"

    @property
    def einstein(self) -> bool:
        return self is not Verdict.NON_POSITIVE


@dataclass(frozen=True)
class PositivityReport:
    weights: tuple[Fraction, ...]
    nu: Fraction
    verdict: Verdict
    negative_or_zero_indices: tuple[int, ...]  # 1-based edge indices

    @property
    def min_weight(self) -> Fraction | None:
        return min(self.weights) if self.weights else None


def positivity_matrix(g: Graph) -> RationalMatrix:
    """``3I + Adj L(g)``: diagonal 3, off-diagonal 1 where two edges share a vertex."""
    p = g.p
    rows = [[0] * p for _ in range(p)]
    for k in range(p):
        rows[k][k] = 3
    for ks in g.incident_edges().values():
        for a in ks:
            for b in ks:
                if a != b:
                    rows[a][b] = 1
    return RationalMatrix(rows)


def edge_weights(g: Graph, nu=1) -> list[Fraction]:
    if g.p == 0:
        return []
    return solve(positivity_matrix(g), [Fraction(nu)] * g.p)


def check_positive(g: Graph, nu=1) -> PositivityReport:
    nu = Fraction(nu)
    if nu <= 0:
        raise ValueError("nu must be positive")
    weights = tuple(edge_weights(g, nu))
    bad = tuple(k + 1 for k, c in enumerate(weights) if c <= 0)
    if not weights:
        verdict = Verdict.VACUOUS
    elif bad:
        verdict = Verdict.NON_POSITIVE
    else:
        verdict = Verdict.POSITIVE
    return PositivityReport(weights, nu, verdict, bad)


def is_einstein_nilradical(g: Graph) -> bool:
    return check_positive(g).verdict.einstein


def format_report(g: Graph, report: PositivityReport, decimals: bool = False) -> str:
    lines = [
        "# nilgraph positivity report v1",
        f"type: p={g.p} q={g.q}",
        f"nu: {format_rational(report.nu)}",
    ]
    for k, ((i, j), c) in enumerate(zip(g.edges, report.weights), 1):
        line = f"c{k} {{{i},{j}}} = {format_rational(c)}"
        if decimals:
            line += f"  ~ {float(c):.12g}"
        lines.append(line)
    lines.append("offending edges: " + (" ".join(map(str, report.negative_or_zero_indices)) or "none"))
    lines.append(report.verdict.value)
    return "\n".join(lines) + "\n"
