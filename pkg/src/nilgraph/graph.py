"""Simple labelled graphs, line graphs and the (p, q) bookkeeping.

Vertices are labelled ``1..q``. Edges are stored in a fixed order because the
k-th edge corresponds to the basis vector ``e_{q+k}`` of the attached Lie
algebra, so every weight vector downstream is indexed by that order.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import GraphError, ParseError

Edge = tuple[int, int]


def max_edges(q: int) -> int:
    """D_q = q(q-1)/2, the edge count of the complete graph on q vertices."""
    return q * (q - 1) // 2


class LieType(NamedTuple):
    p: int
    q: int

    @property
    def d_q(self) -> int:
        return max_edges(self.q)


@dataclass(frozen=True)
class Graph:
    q: int
    edges: tuple[Edge, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.q < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.q}")
        normalized = []
        index = {}
        for k, (i, j) in enumerate(self.edges):
            i, j = int(i), int(j)
            if i == j:
                raise GraphError(f"self-loop at vertex {i} (edge {k + 1})")
            if i > j:
                i, j = j, i
            if i < 1 or j > self.q:
                raise GraphError(f"edge {k + 1} = {{{i},{j}}} has a label outside 1..{self.q}")
            if (i, j) in index:
                raise GraphError(f"repeated edge {{{i},{j}}} (edges {index[(i, j)] + 1} and {k + 1})")
            index[(i, j)] = k
            normalized.append((i, j))
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "_index", index)

    @property
    def p(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.q + 1)

    def edge_index(self, i: int, j: int) -> int:
        """0-based position of edge {i, j}; KeyError if absent."""
        return self._index[(min(i, j), max(i, j))]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._index

    def neighbors(self) -> dict[int, set[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return nbrs

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def incident_edges(self) -> dict[int, list[int]]:
        """Map vertex -> 0-based indices of the edges touching it."""
        inc: dict[int, list[int]] = {v: [] for v in self.vertices}
        for k, (i, j) in enumerate(self.edges):
            inc[i].append(k)
            inc[j].append(k)
        return inc

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        drop = {(min(i, j), max(i, j)) for i, j in removed}
        missing = drop - set(self._index)
        if missing:
            raise GraphError(f"cannot delete absent edges {sorted(missing)}")
        return Graph(self.q, tuple(e for e in self.edges if e not in drop))


def complete_graph(q: int) -> Graph:
    return Graph(q, tuple(itertools.combinations(range(1, q + 1), 2)))


def path_graph(q: int) -> Graph:
    return Graph(q, tuple((i, i + 1) for i in range(1, q)))


def empty_graph(q: int) -> Graph:
    return Graph(q, ())


def line_graph(g: Graph) -> Graph:
    """Vertex k of the result is edge k of ``g``; edges join edges sharing a vertex."""
    pairs = set()
    for ks in g.incident_edges().values():
        for a, b in itertools.combinations(ks, 2):
            pairs.add((a + 1, b + 1))
    return Graph(g.p, tuple(sorted(pairs)))


def adjacency(g: Graph) -> tuple[tuple[int, ...], ...]:
    rows = [[0] * g.q for _ in range(g.q)]
    for i, j in g.edges:
        rows[i - 1][j - 1] = 1
        rows[j - 1][i - 1] = 1
    return tuple(tuple(r) for r in rows)


def components(g: Graph) -> list[list[int]]:
    nbrs = g.neighbors()
    seen: set[int] = set()
    out = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in sorted(nbrs[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    if g.q < 1:
        raise GraphError("connectivity is undefined for the graph with no vertices")
    return len(components(g)) == 1


def lie_type(g: Graph) -> LieType:
    return LieType(g.p, g.q)


# -- edge-list text format -------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``q p`` followed by ``p`` lines ``i j``.

    Blank lines and ``#`` comments are ignored. Errors carry the 1-based line
    number of the offending line.
    """
    lines = [(n, raw.split("#", 1)[0].strip()) for n, raw in enumerate(text.splitlines(), 1)]
    lines = [(n, s) for n, s in lines if s]
    if not lines:
        raise ParseError("empty input: expected header 'q p'", 1)
    n0, header = lines[0]
    q, p = _ints(header, 2, n0, "header 'q p'")
    if q < 0 or p < 0:
        raise ParseError("negative count in header", n0)
    body = lines[1:]
    if len(body) != p:
        line = body[p][0] if len(body) > p else (body[-1][0] + 1 if body else n0 + 1)
        raise ParseError(f"header announces {p} edges but {len(body)} were given", line)
    edges = []
    seen: dict[Edge, int] = {}
    for n, s in body:
        i, j = _ints(s, 2, n, "edge 'i j'")
        if i == j:
            raise ParseError(f"self-loop {i} {j}", n)
        if not (1 <= i <= q and 1 <= j <= q):
            raise ParseError(f"vertex label outside 1..{q}", n)
        if i > j:
            raise ParseError(f"edge must be written with i < j, got {i} {j}", n)
        if (i, j) in seen:
            raise ParseError(f"repeated edge {i} {j} (first at line {seen[(i, j)]})", n)
        seen[(i, j)] = n
        edges.append((i, j))
    return Graph(q, tuple(edges))


def _ints(s: str, count: int, line: int, what: str) -> list[int]:
    parts = s.split()
    if len(parts) != count:
        raise ParseError(f"expected {what}", line)
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {what}", line) from None


def format_edge_list(g: Graph) -> str:
    out = [f"{g.q} {g.p}"]
    out.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(out) + "\n"
