"""
Trivalent graphs with oriented vertices, Lie algebra weight systems, and the
powers of the cubic Maurer-Cartan element as Chevalley-Eilenberg chains.

A graph is a list of vertices, each an ordered triple of half-edge names
(the cyclic order is the orientation), plus a perfect matching of the
half-edges into edges. Its weight for a metric Lie algebra puts the lowered
structure constants ``c_ijk`` on every vertex, in the vertex's order, and
the inverse metric on every edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import factorial
from pathlib import Path

from .ce import ce_boundary, sym_normalize
from .element import Element
from .errors import ArgumentError, MaurerCartanError, StateError
from .lie import LieAlgebra, check_metric_invariance
from .weyl import WeylAlgebra, build_mc_element, ge3_project, mc_defect


@dataclass(frozen=True)
class TrivalentGraph:
    vertices: tuple
    edges: tuple
    name: str = ""

    def __post_init__(self):
        vertices = tuple(tuple(str(h) for h in v) for v in self.vertices)
        edges = tuple(tuple(str(h) for h in e) for e in self.edges)
        if any(len(v) != 3 for v in vertices):
            raise ArgumentError("every vertex needs exactly three half-edges")
        if any(len(e) != 2 for e in edges):
            raise ArgumentError("every edge joins exactly two half-edges")
        at_vertices = [h for v in vertices for h in v]
        on_edges = [h for e in edges for h in e]
        if len(set(at_vertices)) != len(at_vertices):
            raise ArgumentError("a half-edge appears at two vertex slots")
        if sorted(at_vertices) != sorted(on_edges):
            raise ArgumentError("edges must match the vertex half-edges perfectly")
        if not vertices:
            raise ArgumentError("a graph needs at least one vertex")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @property
    def loops(self) -> int:
        """First Betti number of a connected graph: ``E - V + 1``."""
        return len(self.edges) - len(self.vertices) + 1

    def vertex_of(self, half: str) -> int:
        for i, v in enumerate(self.vertices):
            if half in v:
                return i
        raise ArgumentError(f"unknown half-edge {half!r}")

    def flip(self, vertex: int) -> TrivalentGraph:
        """Reverse the cyclic order at one vertex."""
        vs = list(self.vertices)
        a, b, c = vs[vertex]
        vs[vertex] = (a, c, b)
        return TrivalentGraph(tuple(vs), self.edges, self.name)

    def with_vertices(self, vertices) -> TrivalentGraph:
        return TrivalentGraph(tuple(vertices), self.edges, self.name)

    def disjoint_union(self, other: TrivalentGraph) -> TrivalentGraph:
        def tag(t, p):
            return tuple(tuple(f"{p}{h}" for h in x) for x in t)
        return TrivalentGraph(tag(self.vertices, "L.") + tag(other.vertices, "R."),
                              tag(self.edges, "L.") + tag(other.edges, "R."),
                              f"{self.name}+{other.name}")

    def to_json(self) -> dict:
        out = {"edges": [list(e) for e in self.edges], "vertices": [list(v) for v in self.vertices]}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict) -> TrivalentGraph:
        if "vertices" not in data or "edges" not in data:
            raise ArgumentError("graph json needs 'vertices' and 'edges'")
        return cls(tuple(map(tuple, data["vertices"])), tuple(map(tuple, data["edges"])),
                   data.get("name", ""))


CATALOGUE = ("theta", "k4", "necklace", "tadpole")


def load_graph(source) -> TrivalentGraph:
    """Load from a JSON path or by catalogue name."""
    p = Path(str(source))
    if p.suffix == ".json" and p.exists():
        return TrivalentGraph.from_json(json.loads(p.read_text()))
    try:
        text = resources.files("weylalg").joinpath("data").joinpath("graphs").joinpath(f"{source}.json").read_text()
    except FileNotFoundError:
        raise ArgumentError(f"no graph file or catalogue entry {source!r}") from None
    return TrivalentGraph.from_json(json.loads(text))


# -- contraction -------------------------------------------------------------

def _contract(a, b):
    la, ta = a
    lb, tb = b
    shared = [x for x in la if x in lb]
    ia = [la.index(x) for x in shared]
    ib = [lb.index(x) for x in shared]
    keep_a = [i for i in range(len(la)) if la[i] not in shared]
    keep_b = [i for i in range(len(lb)) if lb[i] not in shared]
    labels = [la[i] for i in keep_a] + [lb[i] for i in keep_b]
    groups = {}
    for idx, v in tb.items():
        groups.setdefault(tuple(idx[i] for i in ib), []).append((tuple(idx[i] for i in keep_b), v))
    out = {}
    for idx, v in ta.items():
        match = groups.get(tuple(idx[i] for i in ia))
        if not match:
            continue
        head = tuple(idx[i] for i in keep_a)
        for tail, w in match:
            key = head + tail
            s = out.get(key, 0) + v * w
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return labels, out


def _require_invariant(lie: LieAlgebra):
    if lie.metric is None:
        raise StateError("lie algebra has no metric")
    problems = [p for p in check_metric_invariance(lie) if p.startswith(("metric", "invariance"))]
    if problems:
        raise StateError("metric is not invariant: " + "; ".join(problems[:3]))


def graph_weight(G: TrivalentGraph, lie: LieAlgebra) -> Fraction:
    """Full contraction of ``c_ijk`` at vertices against ``g^ij`` on edges."""
    _require_invariant(lie)
    c = lie.lowered()
    ginv = lie.inverse_metric()
    gt = {(i, j): v for i, row in enumerate(ginv) for j, v in enumerate(row) if v}
    tensors = [(list(v), dict(c)) for v in G.vertices]
    for h1, h2 in G.edges:
        tensors.append(([h1, h2], dict(gt)))
    # greedy pairwise contraction; order does not affect the exact sum
    result = Fraction(1)
    while tensors:
        best = None
        for i in range(len(tensors)):
            for j in range(i + 1, len(tensors)):
                shared = set(tensors[i][0]) & set(tensors[j][0])
                if not shared:
                    continue
                size = len(set(tensors[i][0]) ^ set(tensors[j][0]))
                cost = (size, len(tensors[i][1]) * len(tensors[j][1]))
                if best is None or cost < best[0]:
                    best = (cost, i, j)
        if best is None:
            raise ArgumentError("half-edges left uncontracted")
        _, i, j = best
        merged = _contract(tensors[i], tensors[j])
        tensors = [t for k, t in enumerate(tensors) if k not in (i, j)]
        if merged[0]:
            tensors.append(merged)
        else:
            result *= merged[1].get((), 0)
    return result


def _edge_resolutions(G: TrivalentGraph, edge: int):
    h_u, h_v = G.edges[edge]
    u, v = G.vertex_of(h_u), G.vertex_of(h_v)
    if u == v:
        raise ArgumentError("IHX needs an edge between two distinct vertices")

    def rotate(triple, half, last):
        t = list(triple)
        while (t[2] if last else t[0]) != half:
            t = t[1:] + t[:1]
        return t

    a, b, _ = rotate(G.vertices[u], h_u, last=True)
    _, c, d = rotate(G.vertices[v], h_v, last=False)

    def build(tu, tv):
        vs = list(G.vertices)
        vs[u], vs[v] = tuple(tu), tuple(tv)
        return G.with_vertices(vs)

    I = build((a, b, h_u), (h_v, c, d))
    H = build((a, c, h_u), (h_v, b, d))
    X = build((b, c, h_u), (h_v, a, d))
    return I, H, X


def ihx_values(lie: LieAlgebra, G: TrivalentGraph, edge: int) -> tuple:
    return tuple(graph_weight(g, lie) for g in _edge_resolutions(G, edge))


def ihx_check(lie: LieAlgebra, G: TrivalentGraph, edge: int) -> bool:
    """``w(I) = w(H) - w(X)`` for the three resolutions of one edge."""
    i, h, x = ihx_values(lie, G, edge)
    return i == h - x


# -- powers of q as CE chains -------------------------------------------------

def _key_parity(algebra: WeylAlgebra):
    sp = algebra.space
    return lambda key: (sp.degree_of(key[0]) - sp.n) % 2


def weyl_lie_bracket(algebra: WeylAlgebra):
    """Shifted bracket on ``L[1]``, ``L = W[n-1]``, over keys ``(monomial, h_exponent)``."""
    sp = algebra.space

    def l2(a, b):
        ea = Element(sp, {a[0]: 1}).scale_h(a[1])
        eb = Element(sp, {b[0]: 1}).scale_h(b[1])
        s = -1 if (sp.degree_of(a[0]) - (sp.n - 1)) % 2 else 1
        out = {}
        for m, c in algebra.bracket(ea, eb).terms():
            for e, v in c.items():
                out[(m, e)] = s * v
        return out
    return l2


def element_keys(a: Element) -> dict:
    return {(m, e): v for m, c in a.terms() for e, v in c.items()}


def power_chain(q: Element, i: int, algebra: WeylAlgebra) -> dict:
    """``q^i / i!`` in the symmetric algebra on ``L[1]``."""
    par = _key_parity(algebra)
    chain = {(): Fraction(1)}
    for _ in range(i):
        nxt = {}
        for factors, c in chain.items():
            for key, v in element_keys(q).items():
                s, new = sym_normalize(list(factors) + [key], par)
                if s:
                    nxt[new] = nxt.get(new, 0) + c * v * s
        chain = {k: v for k, v in nxt.items() if v}
    return {k: v / factorial(i) for k, v in chain.items()}


def chain_boundary(chain: dict, algebra: WeylAlgebra) -> dict:
    return ce_boundary(chain, weyl_lie_bracket(algebra), _key_parity(algebra))


@dataclass
class QPowerClass:
    """The chain ``h^{h_exponent} * chain``; ``closed`` records ``d chain = 0``."""

    i: int
    h_exponent: int
    chain: dict
    closed: bool
    in_ge3: bool


def q_power_class(lie: LieAlgebra, i: int, algebra: WeylAlgebra) -> QPowerClass:
    q = build_mc_element(lie, algebra)
    if mc_defect(q, algebra):
        raise MaurerCartanError("{q, q} != 0")
    chain = power_chain(q, i, algebra)
    in_ge3 = ge3_project(q) == q
    closed = not chain_boundary(chain, algebra)
    return QPowerClass(i, -i, chain, closed, in_ge3)
