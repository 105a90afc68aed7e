"""Parametric graph families described by their coherence graphs.

Each family is a small coherence graph whose circles carry a size and a kind
(complete or discrete). ``realize`` expands it to a concrete graph with the
blocks on consecutive labels. The predicates here are the closed-form
positivity classifications for two and three components and the sufficient
non-positivity conditions for the four- and five-component shapes; the
latter are one-sided claims and are named accordingly.

Letters name the similarity classes of each family::

    two-chain    o(r) - *(s)                      a = S1S2, b = inside S2
    three-chain  o(r) - *(s) - *(t)               a = S1S2, b = S2S3, c, d = inside S2, S3
    left4        *(1) - o(s) - *(1) - o(u)        a, b, c along the chain
    mid4         o(r) - *(s) - o(t) - *(u) - *(s) a..d = S1S2, S2S3, S3S4, S2S4; e, f inside S2, S4
    right5       o(r) - *(2) - *(1) - *(u) - *(v) plus S2S5, S2S4;
                 a..f = S1S2, S2S3, S3S4, S4S5, S2S5, S2S4; g, h, i inside S2, S4, S5
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .coherence import (
    CoherentDecomposition,
    CrossPair,
    Descriptor,
    Internal,
    Kind,
    coherent_decomposition,
    edge_descriptor,
    expand,
    reduced_system,
    similar_edge_classes,
    solve_reduced,
)
from .errors import UnknownFamily, UnsupportedRegime
from .graph import Graph

C, D = Kind.COMPLETE, Kind.DISCRETE


@dataclass(frozen=True)
class ComponentSpec:
    size: int
    kind: Kind

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"component size must be >= 1, got {self.size}")
        if self.kind is Kind.SINGLETON and self.size != 1:
            raise ValueError("singleton components have size 1")


@dataclass(frozen=True)
class FamilySpec:
    components: tuple[ComponentSpec, ...]
    adjacency: frozenset  # frozenset of (i, j) with i < j, 0-based

    def __post_init__(self):
        norm = set()
        for i, j in self.adjacency:
            if i == j:
                raise ValueError("coherence graph adjacency must be irreflexive")
            if not (0 <= i < len(self.components) and 0 <= j < len(self.components)):
                raise ValueError(f"adjacency pair ({i},{j}) out of range")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "adjacency", frozenset(norm))

    @classmethod
    def of(cls, comps: Sequence[tuple[int, Kind]], adjacency) -> "FamilySpec":
        return cls(tuple(ComponentSpec(n, k) for n, k in comps), frozenset(adjacency))

    def blocks(self) -> list[tuple[int, ...]]:
        out, start = [], 1
        for comp in self.components:
            out.append(tuple(range(start, start + comp.size)))
            start += comp.size
        return out


def realize(spec: FamilySpec) -> Graph:
    blocks = spec.blocks()
    edges = set()
    for comp, block in zip(spec.components, blocks):
        if comp.kind is Kind.COMPLETE:
            edges.update(itertools.combinations(block, 2))
    for a, b in spec.adjacency:
        edges.update((min(i, j), max(i, j)) for i in blocks[a] for j in blocks[b])
    q = sum(c.size for c in spec.components)
    return Graph(q, tuple(sorted(edges)))


def fidelity_problems(spec: FamilySpec, g: Graph | None = None) -> list[str]:
    """Differences between ``spec`` and the decomposition of its realization.

    Empty when the realized graph has exactly the intended coherent components,
    kinds and coherence edges; otherwise the components merged.
    """
    if g is None:
        g = realize(spec)
    d = coherent_decomposition(g)
    problems = []
    blocks = [tuple(b) for b in spec.blocks()]
    if list(d.components) != blocks:
        problems.append(f"components {list(d.components)} differ from blocks {blocks}")
        return problems
    for i, (comp, kind) in enumerate(zip(spec.components, d.kinds)):
        if not comp.kind.compatible(kind):
            problems.append(f"component {i} realized as {kind.name}, expected {comp.kind.name}")
    if set(d.coherence_edges) != set(spec.adjacency):
        problems.append(f"coherence edges {sorted(d.coherence_edges)} != {sorted(spec.adjacency)}")
    return problems


# -- the five shapes --------------------------------------------------------

def two_chain(r: int, s: int) -> FamilySpec:
    return FamilySpec.of([(r, D), (s, C)], [(0, 1)])


def three_chain(r: int, s: int, t: int) -> FamilySpec:
    return FamilySpec.of([(r, D), (s, C), (t, C)], [(0, 1), (1, 2)])


def left4(s: int, u: int) -> FamilySpec:
    return FamilySpec.of([(1, C), (s, D), (1, C), (u, D)], [(0, 1), (1, 2), (2, 3)])


def mid4(r: int, s: int, t: int, u: int) -> FamilySpec:
    return FamilySpec.of([(r, D), (s, C), (t, D), (u, C)], [(0, 1), (1, 2), (2, 3), (1, 3)])


def right5(r: int, u: int, v: int) -> FamilySpec:
    return FamilySpec.of(
        [(r, D), (2, C), (1, C), (u, C), (v, C)],
        [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (1, 3)],
    )


def two_chain_positive(r: int, s: int) -> bool:
    return s >= r or s == 1


def three_chain_positive(r: int, s: int, t: int) -> bool:
    if (s + t) * (s - r) > (r - 1) * (t - 1):
        return True
    if s == 1 and t == 1:
        return True
    return s == 1 and ((r, t) == (3, 2) or (r in (1, 2) and t >= 2))


def left4_claim_nonpositive(s: int, u: int) -> bool:
    return u >= 6 and s in (1, 2)


def mid4_claim_nonpositive(r: int, s: int, t: int, u: int) -> bool:
    return (r >= 2 and s == 2 and t == 2) or (t >= 2 and s == 1 and u == 1)


def right5_claim_nonpositive(r: int, u: int, v: int) -> bool:
    return (r >= 2 and u >= 2) or (u == 2 and v >= 15) or (u == 1 and (r >= 2 or v >= 4))


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple[str, ...]
    build: Callable[..., FamilySpec]
    letters: dict  # class letter -> Descriptor over spec component indices
    predicate: Callable[..., bool]
    biconditional: bool  # True: predicate is "positive iff"; False: "non-positive claim"

    def spec(self, **params) -> FamilySpec:
        return self.build(**self.check_params(params))

    def check_params(self, params: dict) -> dict:
        missing = [p for p in self.params if p not in params]
        extra = [p for p in params if p not in self.params]
        if missing or extra:
            raise ValueError(f"{self.name} takes parameters {', '.join(self.params)}")
        for k, v in params.items():
            if int(v) != v or v < 1:
                raise ValueError(f"parameter {k} must be a positive integer, got {v}")
        return {k: int(params[k]) for k in self.params}


FAMILIES: dict[str, Family] = {
    "two-chain": Family(
        "two-chain", ("r", "s"), two_chain,
        {"a": CrossPair(0, 1), "b": Internal(1)},
        two_chain_positive, True,
    ),
    "three-chain": Family(
        "three-chain", ("r", "s", "t"), three_chain,
        {"a": CrossPair(0, 1), "b": CrossPair(1, 2), "c": Internal(1), "d": Internal(2)},
        three_chain_positive, True,
    ),
    "left4": Family(
        "left4", ("s", "u"), left4,
        {"a": CrossPair(0, 1), "b": CrossPair(1, 2), "c": CrossPair(2, 3)},
        left4_claim_nonpositive, False,
    ),
    "mid4": Family(
        "mid4", ("r", "s", "t", "u"), mid4,
        {"a": CrossPair(0, 1), "b": CrossPair(1, 2), "c": CrossPair(2, 3),
         "d": CrossPair(1, 3), "e": Internal(1), "f": Internal(3)},
        mid4_claim_nonpositive, False,
    ),
    "right5": Family(
        "right5", ("r", "u", "v"), right5,
        {"a": CrossPair(0, 1), "b": CrossPair(1, 2), "c": CrossPair(2, 3),
         "d": CrossPair(3, 4), "e": CrossPair(1, 4), "f": CrossPair(1, 3),
         "g": Internal(1), "h": Internal(3), "i": Internal(4)},
        right5_claim_nonpositive, False,
    ),
}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise UnknownFamily(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None


def letter_classes(name: str, **params) -> tuple[Graph, dict[str, list[int]]]:
    """Realized graph and, per class letter, the 0-based indices of its edges.

    Letters whose class is empty for these parameters (an internal class of
    a one-vertex component) are omitted.
    """
    fam = get_family(name)
    spec = fam.spec(**params)
    g = realize(spec)
    where = {v: lam for lam, block in enumerate(spec.blocks()) for v in block}
    by_desc: dict[Descriptor, list[int]] = {}
    for k, e in enumerate(g.edges):
        by_desc.setdefault(edge_descriptor(where, e), []).append(k)
    return g, {x: by_desc[dsc] for x, dsc in fam.letters.items() if dsc in by_desc}


def letter_weights(name: str, **params) -> dict[str, Fraction]:
    """Exact weight of every class letter, from the reduced system of the realized graph."""
    g, letters = letter_classes(name, **params)
    rs = reduced_system(g, similar_edge_classes(g))
    per_edge = expand(rs, solve_reduced(rs))
    out = {}
    for x, ks in letters.items():
        vals = {per_edge[k] for k in ks}
        if len(vals) != 1:
            raise AssertionError(f"letter {x} carries unequal weights {sorted(vals)}")
        out[x] = vals.pop()
    return out


def closed_form_weights(name: str, **params) -> dict[str, Fraction]:
    """Closed-form class weights at ``nu = 1``.

    Supported: two-chain with s = 1; three-chain with s = 1 < t; left4 for all
    s, u; mid4 with s = t = 2 and u = 1. The three-chain formula is commonly
    quoted as a column in the order (d, a, b); entries here are keyed by the
    letter each one actually solves for.
    """
    fam = get_family(name)
    p = fam.check_params(params)
    if name == "two-chain" and p["s"] == 1:
        return {"a": Fraction(1, 2 + p["r"])}
    if name == "three-chain" and p["s"] == 1 and p["t"] > 1:
        r, t = p["r"], p["t"]
        den = 2 * t * (2 * t + r + 1)
        return {"a": Fraction((1 + t) * t, den), "b": Fraction(2 * t + r - r * t, den),
                "d": Fraction(2 * (r + t), den)}
    if name == "left4":
        s, u = p["s"], p["u"]
        den = 6 + 3 * u + 8 * s + 2 * s * u + 2 * s * s
        return {"a": Fraction(2 * (1 + s + u), den), "b": Fraction(2 + 2 * s - u, den),
                "c": Fraction(3 * (1 + s), den)}
    if name == "mid4" and p["s"] == 2 and p["t"] == 2 and p["u"] == 1:
        r = p["r"]
        den = 264 + 18 * r
        nums = (48, -3 * (r - 12), 9 * (r + 4), -6 * (r - 4), -6 * (3 * r - 4))
        return {x: Fraction(n, den) for x, n in zip("abcde", nums)}
    raise UnsupportedRegime(f"no closed form for {name} at {p}")


@dataclass(frozen=True)
class SignedNumerators:
    """Cramer numerators over an unevaluated ``det(A)`` whose sign is asserted.

    Only ``key`` matters for the non-positivity argument; the other entries
    are kept for comparison and need not be consistent.
    """

    numerators: dict
    det_sign: int
    key: str  # the entry whose sign drives the non-positivity argument

    def predicted_sign(self, letter: str | None = None) -> int:
        n = self.numerators[letter or self.key]
        return self.det_sign * ((n > 0) - (n < 0))


def determinant_form(name: str, **params) -> SignedNumerators:
    fam = get_family(name)
    p = fam.check_params(params)
    if name == "mid4" and p["s"] == 2 and p["t"] == 2 and p["u"] > 1:
        r, u = p["r"], p["u"]
        nums = {
            "a": 18 + u ** 3 + 21 * u + 8 * u ** 2,
            "b": -18 - 15 * u + 2 * r * u - 3 * u ** 2 + r * u ** 2,
            "c": 3 * (6 + 2 * r + 5 * u + r * u + u ** 2),
            "d": r * u ** 2 + 2 * r * u + 3 * r - 3 * u ** 2 - 12 * u - 9,
            "e": (2 * r - 3) * u ** 2 + (7 * r - 12) * u + 9 * (r - 1),
            "f": 3 * (3 + r + 4 * u + r * u + u ** 2),
        }
        return SignedNumerators(nums, -1, "e")
    if name == "mid4" and p["s"] == 1 and p["u"] == 1:
        r, t = p["r"], p["t"]
        nums = {"a": 3 * (1 + t), "b": 2 * t - r + 2, "c": 2 * (r + t + 1),
                "d": t * (2 - t) + (3 - r * t)}
        return SignedNumerators(nums, 1, "d")
    if name == "right5" and p["u"] >= 2:
        r, u, v = p["r"], p["u"], p["v"]
        poly = (u * u * (2 * r - 3) + u * v * (2 * r - 3) + u * (5 * r - 9)
                + 3 * v * (2 * r - 1) + (3 * r - 6))
        return SignedNumerators({"g": (u + v + 2) * poly}, -1, "g")
    if name == "right5" and p["u"] == 1:
        r, v = p["r"], p["v"]
        return SignedNumerators({"g": 2 * (3 + v) * ((5 * r - 9) + v * (4 * r - 3))}, -1, "g")
    raise UnsupportedRegime(f"no determinant-form solution for {name} at {p}")


# -- recognising shapes in a decomposition -------------------------------------

# template: per circle (kind, fixed size or parameter name)
_TEMPLATES: dict[str, tuple[list[tuple[Kind, object]], list[tuple[int, int]]]] = {
    "two-chain": ([(D, "r"), (C, "s")], [(0, 1)]),
    "three-chain": ([(D, "r"), (C, "s"), (C, "t")], [(0, 1), (1, 2)]),
    "left4": ([(C, 1), (D, "s"), (C, 1), (D, "u")], [(0, 1), (1, 2), (2, 3)]),
    "mid4": ([(D, "r"), (C, "s"), (D, "t"), (C, "u")], [(0, 1), (1, 2), (2, 3), (1, 3)]),
    "right5": ([(D, "r"), (C, 2), (C, 1), (C, "u"), (C, "v")],
               [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]),
}


def match_families(d: CoherentDecomposition) -> list[tuple[str, dict]]:
    """Every (family, parameters) whose coherence graph is isomorphic to ``d``'s."""
    n = len(d.components)
    actual_edges = set(d.coherence_edges)
    sizes = d.sizes
    found = []
    for name, (circles, edges) in _TEMPLATES.items():
        if len(circles) != n:
            continue
        seen = set()
        for perm in itertools.permutations(range(n)):
            params = {}
            ok = True
            for (kind, size), lam in zip(circles, perm):
                if not kind.compatible(d.kinds[lam]):
                    ok = False
                    break
                if isinstance(size, int):
                    if sizes[lam] != size:
                        ok = False
                        break
                else:
                    params[size] = sizes[lam]
            if not ok:
                continue
            mapped = {tuple(sorted((perm[a], perm[b]))) for a, b in edges}
            if mapped != actual_edges:
                continue
            key = tuple(sorted(params.items()))
            if key not in seen:
                seen.add(key)
                found.append((name, dict(params)))
    found.sort(key=lambda item: (item[0], tuple(item[1][k] for k in FAMILIES[item[0]].params)))
    return found


def format_params(name: str, params: dict) -> str:
    return f"{name}(" + ",".join(f"{k}={params[k]}" for k in FAMILIES[name].params) + ")"
