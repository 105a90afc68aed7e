"""The deletion ladder: non-Einstein, indecomposable algebras of every type (p, q).

Start from the five-component graph G(q) (the right5 shape with r=1, u=2,
v=q-6), delete the edges of the fixed ordered list H one at a time, and
certify every intermediate graph G(l): the exact solver finds a weight <= 0,
the graph is connected, and it has q vertices and D_q - 2q + 9 - l edges.
The family shape assigned to each step is compared with the coherence
signature actually computed; disagreements are reported, never hidden.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .coherence import CoherentDecomposition, coherent_decomposition
from .errors import QTooSmall, TheoremViolation
from .families import FAMILIES, format_params, match_families, realize, right5
from .graph import Edge, Graph, is_connected, lie_type, max_edges
from .linalg import format_rational
from .positivity import Verdict, check_positive

Q_MIN = 21
Q_MAX_DEFAULT = 40
CSV_VERSION = "# nilgraph theorem csv v1"
CSV_COLUMNS = ["l", "i", "j", "p", "q", "verdict", "connected", "signature", "min_weight", "family"]


def top_edge_count(q: int) -> int:
    """Edges of G(q): D_q - 2q + 9 = q^2/2 - 5q/2 + 9."""
    return max_edges(q) - 2 * q + 9


def _check_q(q: int, allow_small: bool):
    if q < 7:
        raise QTooSmall(f"the construction needs q >= 7, got {q}")
    if q < Q_MIN and not allow_small:
        raise QTooSmall(f"q={q} is below {Q_MIN}; use the q-min override to explore anyway")


def build_theorem_graph(q: int, allow_small: bool = False) -> Graph:
    _check_q(q, allow_small)
    return realize(right5(1, 2, q - 6))


def deletion_sequence(q: int, allow_small: bool = False) -> list[Edge]:
    _check_q(q, allow_small)
    h: list[Edge] = [(4, 5), (4, 6)]
    h.extend(itertools.combinations(range(5, q + 1), 2))
    h.extend((2, j) for j in range(5, q + 1))
    h.extend([(2, 3), (1, 2)])
    return h


def theorem_graph_at(q: int, l: int, allow_small: bool = False) -> Graph:
    """G(l): the theorem graph with the first ``l`` edges of H deleted."""
    return build_theorem_graph(q, allow_small).without_edges(deletion_sequence(q, allow_small)[:l])


def assigned_family(q: int, l: int) -> tuple[str, dict]:
    """Family and parameters the construction assigns to G(l), as stated (typos included)."""
    if l == 0:
        return "right5", {"r": 1, "u": 2, "v": q - 6}
    if l == 1:
        return "right5", {"r": 1, "u": 1, "v": q - 5}
    if l == 2:
        return "three-chain", {"r": 2, "s": 2, "t": q - 4}
    i, j = deletion_sequence(q, allow_small=True)[l - 1]
    if i == 2 and j >= 5:
        return "mid4", {"r": j - 4, "s": 1, "t": q - j + 2, "u": 1}
    if (i, j) == (2, 3):
        return "left4", {"s": 2, "u": q - 4}
    if (i, j) == (1, 2):
        return "left4", {"s": 1, "u": q - 4}
    if (i, j) == (q - 1, q):
        return "two-chain", {"r": q - 2, "s": 2}
    if (i, j) == (q - 2, q - 1):
        return "mid4", {"r": q - 5, "s": 2, "t": 2, "u": q - 5}
    if (i, j) == (q - 2, q):
        return "three-chain", {"r": q - 4, "s": 2, "t": 2}
    if (i, j) == (5, 6):
        return "mid4", {"r": 2, "s": 2, "t": 2, "u": q - 6}
    if j == i + 1:
        return "mid4", {"r": i - 2, "s": 2, "t": 2, "u": q - i - 1}
    if j == q:
        return "three-chain", {"r": i - 2, "s": 2, "t": q - i}
    return "right5", {"r": i - 3, "u": q - j, "v": j - i}


# -- coherence signatures ----------------------------------------------------

@dataclass(frozen=True)
class CoherenceSignature:
    labels: tuple[str, ...]  # "size" + kind letter, in canonical order
    edges: tuple[tuple[int, int], ...]
    canonical: bool = True

    def __str__(self):
        body = "[" + ",".join(self.labels) + "]{" + ",".join(f"{a}-{b}" for a, b in self.edges) + "}"
        return body if self.canonical else body + "~"


_MAX_PERMUTATIONS = 5040


def signature_of(d: CoherentDecomposition) -> CoherenceSignature:
    """Canonical form of the coherence graph up to relabelling of components.

    Components are first sorted by an isomorphism-invariant key; permutations
    are then tried only inside groups with equal keys. If that search would be
    too large the sorted order is used and the signature is marked
    non-canonical (a trailing ``~``).
    """
    n = len(d.components)
    labels = [f"{len(c)}{k.value}" for c, k in zip(d.components, d.kinds)]
    nbrs: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, b in d.coherence_edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    key = {i: (len(d.components[i]), d.kinds[i].value, len(nbrs[i]), tuple(sorted(labels[j] for j in nbrs[i])))
           for i in range(n)}
    order = sorted(range(n), key=lambda i: (key[i], i))
    groups = [list(g) for _, g in itertools.groupby(order, key=lambda i: key[i])]
    count = math.prod(math.factorial(len(g)) for g in groups)

    def encode(seq):
        pos = {lam: k for k, lam in enumerate(seq)}
        return tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in d.coherence_edges))

    if count > _MAX_PERMUTATIONS:
        best, canonical = order, False
    else:
        canonical = True
        best, best_code = None, None
        for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
            seq = [lam for part in choice for lam in part]
            code = encode(seq)
            if best_code is None or code < best_code:
                best, best_code = seq, code
    return CoherenceSignature(tuple(labels[i] for i in best), encode(best), canonical)


def coherence_signature(g: Graph) -> CoherenceSignature:
    return signature_of(coherent_decomposition(g))


# -- certification --------------------------------------------------------------

@dataclass(frozen=True)
class StepRecord:
    l: int
    deleted: Edge | None
    p: int
    q: int
    verdict: Verdict
    connected: bool
    signature: str
    families: tuple[str, ...]  # every family shape the signature matches
    min_weight: Fraction
    assigned: str
    conforms: bool  # the assigned family/parameters are among the matches
    claim_holds: bool  # the matched family's predicate also predicts non-positivity

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.NON_POSITIVE and self.connected


@dataclass
class TheoremReport:
    q: int
    records: list[StepRecord] = field(default_factory=list)

    @property
    def p_range(self) -> tuple[int, int]:
        ps = [r.p for r in self.records]
        return min(ps), max(ps)

    @property
    def expected_p_range(self) -> tuple[int, int]:
        return self.q - 1, top_edge_count(self.q)

    def violations(self) -> list[tuple[int, str]]:
        out = []
        top = top_edge_count(self.q)
        for rec in self.records:
            if rec.verdict is not Verdict.NON_POSITIVE:
                out.append((rec.l, f"verdict {rec.verdict.value}"))
            if not rec.connected:
                out.append((rec.l, "graph is disconnected"))
            if rec.p != top - rec.l or rec.q != self.q:
                out.append((rec.l, f"type ({rec.p},{rec.q}) != ({top - rec.l},{self.q})"))
        if self.records and self.p_range != self.expected_p_range:
            out.append((self.records[-1].l, f"p covers {self.p_range}, expected {self.expected_p_range}"))
        return out

    @property
    def certified(self) -> bool:
        return bool(self.records) and not self.violations()

    def nonconforming(self) -> list[StepRecord]:
        return [r for r in self.records if not r.conforms]


def certify_step(q: int, l: int, allow_small: bool = False) -> StepRecord:
    h = deletion_sequence(q, allow_small)
    g = build_theorem_graph(q, allow_small).without_edges(h[:l])
    report = check_positive(g)
    d = coherent_decomposition(g)
    matches = match_families(d)
    claim_name, claim_params = assigned_family(q, l)
    conforms = any(name == claim_name and params == claim_params for name, params in matches)
    claim_holds = False
    for name, params in matches:
        fam = FAMILIES[name]
        pred = fam.predicate(**params)
        claim_holds |= (not pred) if fam.biconditional else pred
    t = lie_type(g)
    return StepRecord(
        l=l,
        deleted=h[l - 1] if l else None,
        p=t.p,
        q=t.q,
        verdict=report.verdict,
        connected=is_connected(g),
        signature=str(signature_of(d)),
        families=tuple(format_params(n, p) for n, p in matches),
        min_weight=report.min_weight,
        assigned=format_params(claim_name, claim_params),
        conforms=conforms,
        claim_holds=claim_holds,
    )


def _certify_args(args):
    return certify_step(*args)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("NILGRAPH_JOBS", "1")))
    except ValueError:
        return 1


def run_theorem(q: int, jobs: int | None = None, allow_small: bool = False,
                allow_large: bool = False, strict: bool = True) -> TheoremReport:
    """Certify G(0), ..., G(|H|). With ``strict`` the first failure raises TheoremViolation."""
    _check_q(q, allow_small)
    if q > Q_MAX_DEFAULT and not allow_large:
        raise ValueError(f"q={q} exceeds the default cap {Q_MAX_DEFAULT}; pass allow_large")
    jobs = default_jobs() if jobs is None else max(1, jobs)
    steps = [(q, l, allow_small) for l in range(len(deletion_sequence(q, allow_small)) + 1)]
    if jobs == 1:
        records = [_certify_args(s) for s in steps]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_certify_args, steps, chunksize=4))
    report = TheoremReport(q, records)
    if strict:
        bad = report.violations()
        if bad:
            l, reason = bad[0]
            raise TheoremViolation(l, reason, report)
    return report


def report_csv(report: TheoremReport) -> str:
    buf = io.StringIO()
    buf.write(CSV_VERSION + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report.records:
        i, j = r.deleted if r.deleted else ("", "")
        w.writerow([r.l, i, j, r.p, r.q, r.verdict.value, str(r.connected).lower(), r.signature,
                    format_rational(r.min_weight), ";".join(r.families)])
    return buf.getvalue()


def report_summary(report: TheoremReport) -> str:
    lo, hi = report.p_range
    elo, ehi = report.expected_p_range
    lines = [
        "# nilgraph theorem summary v1",
        f"q: {report.q}",
        f"graphs: {len(report.records)}",
        f"covered: p in [{lo}, {hi}] (expected [{elo}, {ehi}])",
        f"all non-positive: {all(r.verdict is Verdict.NON_POSITIVE for r in report.records)}",
        f"all connected: {all(r.connected for r in report.records)}",
        f"certified: {report.certified}",
    ]
    for l, reason in report.violations():
        lines.append(f"violation l={l}: {reason}")
    odd = report.nonconforming()
    lines.append(f"steps whose computed shape differs from the assigned one: {len(odd)}")
    for r in odd:
        got = ";".join(r.families) or r.signature
        lines.append(f"  l={r.l} deleted={r.deleted}: assigned {r.assigned}, computed {got}")
    return "\n".join(lines) + "\n"
