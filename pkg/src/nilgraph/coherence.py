"""Coherent (twin-vertex) decomposition and the reduced weight system.

Two vertices are coherent when they have the same neighbours apart from each
other. Each coherent component induces a complete or an edgeless subgraph,
and two components are joined either by every cross edge or by none. Edges
joining the same pair of components, or lying in the same component, carry
equal weights, which collapses the per-edge system to one equation per
similarity class.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import EmptySystem
from .graph import Graph
from .linalg import RationalMatrix, solve


class Kind(enum.Enum):
    COMPLETE = "C"
    DISCRETE = "D"
    SINGLETON = "S"

    def compatible(self, other: "Kind") -> bool:
        """Singletons are degenerate cases of both complete and discrete."""
        return self is other or Kind.SINGLETON in (self, other)


@dataclass(frozen=True, order=True)
class CrossPair:
    a: int
    b: int

    def __str__(self):
        return f"cross({self.a},{self.b})"


@dataclass(frozen=True, order=True)
class Internal:
    a: int

    def __str__(self):
        return f"internal({self.a})"


Descriptor = Union[CrossPair, Internal]


def _descriptor_key(d: Descriptor):
    return (0, d.a, d.b) if isinstance(d, CrossPair) else (1, d.a, 0)


@dataclass(frozen=True)
class CoherentDecomposition:
    components: tuple[tuple[int, ...], ...]  # sorted by smallest vertex
    kinds: tuple[Kind, ...]
    coherence_edges: tuple[tuple[int, int], ...]  # component index pairs a < b

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def component_of(self) -> dict[int, int]:
        return {v: lam for lam, comp in enumerate(self.components) for v in comp}


@dataclass(frozen=True)
class SimilarityClasses:
    descriptors: tuple[Descriptor, ...]
    members: tuple[tuple[int, ...], ...]  # 0-based edge indices per class

    def __len__(self):
        return len(self.descriptors)

    def class_of(self) -> dict[int, int]:
        return {k: c for c, ks in enumerate(self.members) for k in ks}


@dataclass(frozen=True)
class ReducedSystem:
    variable_order: tuple[Descriptor, ...]
    matrix: RationalMatrix
    classes: SimilarityClasses

    @property
    def rhs(self) -> tuple[Fraction, ...]:
        return (Fraction(1),) * len(self.variable_order)


def coherent(nbrs: dict[int, set[int]], a: int, b: int) -> bool:
    """The relation a ~ b: N(a) within N[b] and N(b) within N[a]."""
    return nbrs[a] <= nbrs[b] | {b} and nbrs[b] <= nbrs[a] | {a}


def coherent_decomposition(g: Graph) -> CoherentDecomposition:
    nbrs = g.neighbors()
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    # coherent vertices always have equal degree
    for a, b in itertools.combinations(g.vertices, 2):
        if len(nbrs[a]) == len(nbrs[b]) and coherent(nbrs, a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    comps = tuple(sorted(tuple(sorted(c)) for c in groups.values()))
    where = {v: lam for lam, comp in enumerate(comps) for v in comp}
    kinds = []
    for comp in comps:
        if len(comp) == 1:
            kinds.append(Kind.SINGLETON)
        elif g.has_edge(comp[0], comp[1]):
            kinds.append(Kind.COMPLETE)
        else:
            kinds.append(Kind.DISCRETE)
    cross = sorted({tuple(sorted((where[i], where[j]))) for i, j in g.edges if where[i] != where[j]})
    return CoherentDecomposition(comps, tuple(kinds), tuple(cross))


def edge_descriptor(where: dict[int, int], edge: tuple[int, int]) -> Descriptor:
    a, b = where[edge[0]], where[edge[1]]
    return Internal(a) if a == b else CrossPair(min(a, b), max(a, b))


def similar_edge_classes(g: Graph, d: CoherentDecomposition | None = None) -> SimilarityClasses:
    if d is None:
        d = coherent_decomposition(g)
    where = d.component_of()
    buckets: dict[Descriptor, list[int]] = {}
    for k, e in enumerate(g.edges):
        buckets.setdefault(edge_descriptor(where, e), []).append(k)
    order = sorted(buckets, key=_descriptor_key)
    return SimilarityClasses(tuple(order), tuple(tuple(buckets[x]) for x in order))


def reduced_row(g: Graph, s: SimilarityClasses, representative: int) -> list[int]:
    """Equation of edge ``representative`` with weights replaced by class variables."""
    cls = s.class_of()
    row = [0] * len(s)
    row[cls[representative]] += 3
    i, j = g.edges[representative]
    for m, (a, b) in enumerate(g.edges):
        if m != representative and (a in (i, j) or b in (i, j)):
            row[cls[m]] += 1
    return row


def reduced_system(g: Graph, s: SimilarityClasses | None = None) -> ReducedSystem:
    if g.p == 0:
        raise EmptySystem("graph has no edges: the weight system is empty")
    if s is None:
        s = similar_edge_classes(g)
    rows = [reduced_row(g, s, members[0]) for members in s.members]
    return ReducedSystem(s.descriptors, RationalMatrix(rows), s)


def solve_reduced(rs: ReducedSystem) -> list[Fraction]:
    return solve(rs.matrix, rs.rhs)


def expand(rs: ReducedSystem, class_weights) -> list[Fraction]:
    """Per-edge weights from per-class weights."""
    p = sum(len(m) for m in rs.classes.members)
    out = [Fraction(0)] * p
    for w, members in zip(class_weights, rs.classes.members):
        for k in members:
            out[k] = Fraction(w)
    return out


def expected_dimension(d: CoherentDecomposition) -> int:
    """|coherence edges| + number of complete components with more than one vertex."""
    return len(d.coherence_edges) + sum(k is Kind.COMPLETE for k in d.kinds)


def to_dot(d: CoherentDecomposition, name: str = "coherence") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for lam, (comp, kind) in enumerate(zip(d.components, d.kinds)):
        kind_name = {Kind.COMPLETE: "complete", Kind.DISCRETE: "discrete", Kind.SINGLETON: "singleton"}[kind]
        if kind is Kind.COMPLETE:
            style = 'style=filled, fillcolor=black, fontcolor=white'
        elif kind is Kind.SINGLETON:
            style = 'style=filled, fillcolor=gray'
        else:
            style = 'style=solid'
        members = ",".join(map(str, comp))
        lines.append(f'  c{lam} [label="{len(comp)}:{kind_name}", tooltip="{members}", {style}];')
    for a, b in d.coherence_edges:
        lines.append(f"  c{a} -- c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
