"""Tropical curves, parameterized tropical curves and their combinatorics.

A graph has finite vertices (an unordered collection) and infinite vertices
(an ordered tuple). Edges are stored in a tuple and referred to by index, so
loops and multi-edges need no special casing. Lengths are exact Fractions;
unbounded edges carry the symbol INF.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, NamedTuple, Optional, Sequence, Union

from .lattice_toric import LatticePolygon, LatticeVec, cross, edge_degrees, integral_length, primitive


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
Length = Union[Fraction, _Infinity]
QVec = tuple[Fraction, Fraction]


def as_length(x) -> Length:
    if x is INF or x == "inf":
        return INF
    return Fraction(x)


def qvec(p) -> QVec:
    return (Fraction(p[0]), Fraction(p[1]))


@dataclass(frozen=True)
class Edge:
    u: Hashable
    v: Hashable
    length: Length

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class TropicalGraph:
    finite_vertices: tuple
    infinite_vertices: tuple
    edges: tuple[Edge, ...]

    def __init__(self, finite_vertices: Iterable, infinite_vertices: Iterable, edges: Iterable):
        es = []
        for e in edges:
            if not isinstance(e, Edge):
                u, v, ln = e
                e = Edge(u, v, as_length(ln))
            es.append(e)
        object.__setattr__(self, "finite_vertices", tuple(finite_vertices))
        object.__setattr__(self, "infinite_vertices", tuple(infinite_vertices))
        object.__setattr__(self, "edges", tuple(es))

    @property
    def vertices(self) -> tuple:
        return self.finite_vertices + self.infinite_vertices

    def is_infinite(self, v) -> bool:
        return v in self._inf_set

    @property
    def _inf_set(self) -> frozenset:
        s = self.__dict__.get("_inf_cache")
        if s is None:
            s = frozenset(self.infinite_vertices)
            object.__setattr__(self, "_inf_cache", s)
        return s

    def is_bounded(self, i: int) -> bool:
        e = self.edges[i]
        return not (self.is_infinite(e.u) or self.is_infinite(e.v))

    def bounded_edges(self) -> list[int]:
        return [i for i in range(len(self.edges)) if self.is_bounded(i)]

    def unbounded_edges(self) -> list[int]:
        return [i for i in range(len(self.edges)) if not self.is_bounded(i)]

    def ends(self, i: int) -> tuple:
        """(finite vertex, infinite vertex) of an unbounded edge."""
        e = self.edges[i]
        return (e.v, e.u) if self.is_infinite(e.u) else (e.u, e.v)

    def end_edge(self, inf_vertex) -> int:
        for i, e in enumerate(self.edges):
            if inf_vertex in (e.u, e.v):
                return i
        raise KeyError(inf_vertex)

    def incident(self, v) -> list[int]:
        """Edge indices at v; a loop is listed twice."""
        out = []
        for i, e in enumerate(self.edges):
            if e.u == v:
                out.append(i)
            if e.v == v:
                out.append(i)
        return out

    def valency(self, v) -> int:
        return len(self.incident(v))

    def components(self) -> list[set]:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            if e.u in parent and e.v in parent:
                parent[find(e.u)] = find(e.v)
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), set()).add(v)
        return list(groups.values())


@dataclass(frozen=True)
class ParamTropCurve:
    graph: TropicalGraph
    h: dict = field(hash=False)

    def __init__(self, graph: TropicalGraph, h: dict):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "h", {v: qvec(p) for v, p in h.items()})


class Violation(NamedTuple):
    clause: str
    where: str
    detail: str


@dataclass
class ValidationReport:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def clauses(self) -> set[str]:
        return {v.clause for v in self.violations}

    def to_json(self) -> dict:
        return {"valid": self.ok, "violations": [v._asdict() for v in self.violations]}


def validate_graph(g: TropicalGraph) -> list[Violation]:
    out: list[Violation] = []
    fin, inf = set(g.finite_vertices), set(g.infinite_vertices)
    if len(fin) != len(g.finite_vertices):
        out.append(Violation("s1", "finite", "repeated finite vertex"))
    if len(inf) != len(g.infinite_vertices):
        out.append(Violation("s2", "infinite", "repeated infinite vertex in the order"))
    if fin & inf:
        out.append(Violation("s1", "vertices", f"both finite and infinite: {sorted(map(str, fin & inf))}"))
    for i, e in enumerate(g.edges):
        for x in (e.u, e.v):
            if x not in fin and x not in inf:
                out.append(Violation("p1", f"edge {i}", f"unknown endpoint {x!r}"))
    for w in g.infinite_vertices:
        inc = g.incident(w)
        if len(inc) != 1:
            out.append(Violation("p2", str(w), f"infinite vertex has valency {len(inc)}"))
            continue
        e = g.edges[inc[0]]
        other = e.v if e.u == w else e.u
        if other not in fin:
            out.append(Violation("p2", str(w), "unbounded edge does not reach a finite vertex"))
    for i, e in enumerate(g.edges):
        touches_inf = e.u in inf or e.v in inf
        if touches_inf and e.length is not INF:
            out.append(Violation("p3", f"edge {i}", "unbounded edge with finite length"))
        if not touches_inf:
            if e.length is INF:
                out.append(Violation("p3", f"edge {i}", "bounded edge with infinite length"))
            elif e.length <= 0:
                out.append(Violation("p3", f"edge {i}", f"non-positive length {e.length}"))
    return out


def _is_integral(p: QVec) -> bool:
    return p[0].denominator == 1 and p[1].denominator == 1


def validate(c: ParamTropCurve) -> ValidationReport:
    g = c.graph
    out = validate_graph(g)
    if any(v.clause in ("p1", "p3") for v in out):
        return ValidationReport(out)
    missing = [v for v in g.vertices if v not in c.h]
    for v in missing:
        out.append(Violation("h", str(v), "no position given"))
    if missing:
        return ValidationReport(out)
    for w in g.infinite_vertices:
        if not _is_integral(c.h[w]):
            out.append(Violation("1", str(w), f"h = {_fmt(c.h[w])} is not in N"))
    for i in g.bounded_edges():
        e = g.edges[i]
        d = _sub(c.h[e.u], c.h[e.v])
        d = (d[0] / e.length, d[1] / e.length)
        if not _is_integral(d):
            out.append(Violation("2", f"edge {i}", f"(h(u)-h(v))/|e| = {_fmt(d)} is not in N"))
    for v in g.finite_vertices:
        s = _balance(c, v)
        if s != (0, 0):
            out.append(Violation("3", str(v), f"balancing sum {_fmt(s)}"))
    return ValidationReport(out)


def _balance(c: ParamTropCurve, v) -> QVec:
    g = c.graph
    sx, sy = Fraction(0), Fraction(0)
    for i in g.incident(v):
        e = g.edges[i]
        if g.is_bounded(i):
            other = e.v if e.u == v else e.u
            sx += (c.h[other][0] - c.h[v][0]) / e.length
            sy += (c.h[other][1] - c.h[v][1]) / e.length
        else:
            w = g.ends(i)[1]
            sx += c.h[w][0]
            sy += c.h[w][1]
    return (sx, sy)


def _sub(a: QVec, b: QVec) -> QVec:
    return (a[0] - b[0], a[1] - b[1])


def _fmt(p) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


def genus(g: TropicalGraph) -> int:
    return 1 - len(g.vertices) + len(g.edges)


def is_stable(g: TropicalGraph) -> bool:
    return all(g.valency(v) >= 3 for v in g.finite_vertices)


def edge_vector(c: ParamTropCurve, i: int, tail=None) -> LatticeVec:
    """l(e) n_e with a chosen orientation: (h(head) - h(tail)) / |e| for a
    bounded edge (tail defaults to edge.u), h(infinite vertex) otherwise."""
    g = c.graph
    e = g.edges[i]
    if not g.is_bounded(i):
        p = c.h[g.ends(i)[1]]
    else:
        if tail is None:
            tail = e.u
        head = e.v if tail == e.u else e.u
        if tail not in (e.u, e.v):
            raise ValueError(f"{tail!r} is not an endpoint of edge {i}")
        d = _sub(c.h[head], c.h[tail])
        p = (d[0] / e.length, d[1] / e.length)
    if not _is_integral(p):
        raise ValueError(f"edge {i} has non-integral slope vector {_fmt(p)}")
    return LatticeVec(int(p[0]), int(p[1]))


def sign_normalize(v: Sequence[int]) -> LatticeVec:
    """Representative of +-v whose first nonzero coordinate is positive."""
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        return LatticeVec(-v[0], -v[1])
    return LatticeVec(v[0], v[1])


class EdgeData(NamedTuple):
    multiplicity: int
    generator: LatticeVec  # (0, 0) when the slope is trivial


def edge_data(c: ParamTropCurve, i: int) -> EdgeData:
    w = edge_vector(c, i)
    l = integral_length(w)
    if l == 0:
        return EdgeData(0, LatticeVec(0, 0))
    n = primitive(w)
    if c.graph.is_bounded(i):
        n = sign_normalize(n)
    return EdgeData(l, n)


@dataclass(frozen=True, order=True)
class DegreeSpec:
    """Primitive end directions with total multiplicities."""

    entries: tuple[tuple[LatticeVec, int], ...]

    def __init__(self, entries: Iterable, check: bool = True):
        es = sorted((LatticeVec(int(n[0]), int(n[1])), int(d)) for n, d in entries)
        if check:
            ns = [n for n, _ in es]
            if len(set(ns)) != len(ns):
                raise ValueError("repeated direction in degree")
            for n, d in es:
                if integral_length(n) != 1:
                    raise ValueError(f"direction {tuple(n)} is not primitive")
                if d <= 0:
                    raise ValueError("multiplicities must be positive")
            if (sum(d * n.x for n, d in es), sum(d * n.y for n, d in es)) != (0, 0):
                raise ValueError("degree does not sum to zero")
        object.__setattr__(self, "entries", tuple(es))

    @classmethod
    def from_polygon(cls, p: LatticePolygon) -> "DegreeSpec":
        return cls(edge_degrees(p).items())

    @property
    def total(self) -> int:
        return sum(d for _, d in self.entries)

    def to_json(self) -> list:
        return [[list(n), d] for n, d in self.entries]

    @classmethod
    def from_json(cls, data) -> "DegreeSpec":
        if isinstance(data, dict):
            data = data["degree"]
        return cls([(n, d) for n, d in data])


def degree(c: ParamTropCurve) -> DegreeSpec:
    acc: Counter = Counter()
    for i in c.graph.unbounded_edges():
        l, n = edge_data(c, i)
        if l:
            acc[n] += l
    return DegreeSpec(acc.items(), check=False)


# --- combinatorial types ---------------------------------------------------


@dataclass(frozen=True, order=True)
class CombinatorialType:
    """Canonical encoding of a graph decorated with edge sublattices.

    `vertices[i]` is the sorted tuple of end labels at canonical finite vertex
    i; `edges` lists bounded edges as (i, j, w) with i <= j and w the
    sign-normalized vector l(e) n_e. With ordered ends an end label is
    (index, wx, wy); otherwise just (wx, wy), i.e. ends sharing a direction
    and multiplicity are interchangeable.
    """

    ordered_ends: bool
    vertices: tuple
    edges: tuple

    @property
    def n_ends(self) -> int:
        return sum(len(v) for v in self.vertices)

    @property
    def n_bounded(self) -> int:
        return len(self.edges)

    def to_json(self) -> dict:
        return {
            "ordered_ends": self.ordered_ends,
            "vertices": [[list(x) for x in v] for v in self.vertices],
            "edges": [[a, b, list(w)] for a, b, w in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CombinatorialType":
        return cls(
            bool(data["ordered_ends"]),
            tuple(tuple(tuple(x) for x in v) for v in data["vertices"]),
            tuple((a, b, tuple(w)) for a, b, w in data["edges"]),
        )


def canonical_form(labels: Sequence, edges: Sequence[tuple]) -> tuple[tuple, tuple]:
    """Canonical (labels, edges) of a vertex- and edge-labelled multigraph.

    Vertices are 0..n-1 with comparable labels; edges are (a, b, w) with a
    comparable edge label w, undirected, loops allowed. Colour refinement,
    then individualization of each vertex in the first non-trivial cell, and
    the lexicographically least encoding over all leaves.
    """
    n = len(labels)
    adj: list[list] = [[] for _ in range(n)]
    for a, b, w in edges:
        adj[a].append((w, b))
        adj[b].append((w, a))

    def refine(colors):
        ncells = len(set(colors))
        while True:
            sigs = [(colors[v], tuple(sorted((w, colors[u]) for w, u in adj[v]))) for v in range(n)]
            rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
            new = [rank[s] for s in sigs]
            if len(rank) == ncells:
                return new
            colors, ncells = new, len(rank)

    def encode(colors):
        pos = colors
        lab = [None] * n
        for v in range(n):
            lab[pos[v]] = labels[v]
        es = sorted((min(pos[a], pos[b]), max(pos[a], pos[b]), w) for a, b, w in edges)
        return (tuple(lab), tuple(es))

    def search(colors):
        colors = refine(colors)
        counts = Counter(colors)
        if len(counts) == n:
            return encode(colors)
        cell = min(c for c, k in counts.items() if k > 1)
        best = None
        for v in range(n):
            if colors[v] != cell:
                continue
            ind = [2 * c + (1 if c == cell and u != v else 0) for u, c in enumerate(colors)]
            enc = search(ind)
            if best is None or enc < best:
                best = enc
        return best

    if n == 0:
        return ((), ())
    lrank = {l: r for r, l in enumerate(sorted(set(labels)))}
    return search([lrank[l] for l in labels])


def combinatorial_type(c: ParamTropCurve, ordered_ends: bool = True) -> CombinatorialType:
    g = c.graph
    index = {v: k for k, v in enumerate(g.finite_vertices)}
    order = {w: j for j, w in enumerate(g.infinite_vertices)}
    ends: list[list] = [[] for _ in g.finite_vertices]
    bounded = []
    for i in range(len(g.edges)):
        w = edge_vector(c, i)
        if g.is_bounded(i):
            e = g.edges[i]
            a, b = index[e.u], index[e.v]
            bounded.append((min(a, b), max(a, b), tuple(sign_normalize(w))))
        else:
            fv, iv = g.ends(i)
            lab = (order[iv], w.x, w.y) if ordered_ends else (w.x, w.y)
            ends[index[fv]].append(lab)
    labels = [tuple(sorted(x)) for x in ends]
    lab, es = canonical_form(labels, bounded)
    return CombinatorialType(ordered_ends, lab, es)


# --- geometry of the image ----------------------------------------------------


class Segment(NamedTuple):
    edge: int
    start: QVec
    end: QVec


class Ray(NamedTuple):
    edge: int
    origin: QVec
    direction: LatticeVec


class Point(NamedTuple):
    edge: int
    at: QVec


def image_segments(c: ParamTropCurve) -> list:
    """Image of each edge: a segment, a ray, or a point for contracted edges."""
    g = c.graph
    out: list = []
    for i, e in enumerate(g.edges):
        if g.is_bounded(i):
            a, b = c.h[e.u], c.h[e.v]
            out.append(Point(i, a) if a == b else Segment(i, a, b))
        else:
            fv, iv = g.ends(i)
            d = c.h[iv]
            if d == (0, 0):
                out.append(Point(i, c.h[fv]))
            else:
                out.append(Ray(i, c.h[fv], LatticeVec(int(d[0]), int(d[1]))))
    return out


def translate(c: ParamTropCurve, shift: Sequence) -> ParamTropCurve:
    s = qvec(shift)
    h = dict(c.h)
    for v in c.graph.finite_vertices:
        h[v] = (h[v][0] + s[0], h[v][1] + s[1])
    return ParamTropCurve(c.graph, h)


def relabel(c: ParamTropCurve, mapping: dict) -> ParamTropCurve:
    """Rename vertices (infinite vertices keep their positions in the order)."""
    m = lambda v: mapping.get(v, v)  # noqa: E731
    g = c.graph
    ng = TropicalGraph(
        [m(v) for v in g.finite_vertices],
        [m(v) for v in g.infinite_vertices],
        [Edge(m(e.u), m(e.v), e.length) for e in g.edges],
    )
    return ParamTropCurve(ng, {m(v): p for v, p in c.h.items()})


def subdivide(c: ParamTropCurve, i: int, new_vertex, fraction=Fraction(1, 2)) -> ParamTropCurve:
    """Insert a 2-valent finite vertex into edge i.

    A bounded edge is split at `fraction` of its length from edge.u; an
    unbounded edge gets the new vertex at distance 1 from its finite end.
    """
    g = c.graph
    e = g.edges[i]
    h = dict(c.h)
    if g.is_bounded(i):
        s = Fraction(fraction)
        if not 0 < s < 1:
            raise ValueError("fraction must lie strictly between 0 and 1")
        a, b = c.h[e.u], c.h[e.v]
        h[new_vertex] = (a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1]))
        new = [Edge(e.u, new_vertex, s * e.length), Edge(new_vertex, e.v, (1 - s) * e.length)]
    else:
        fv, iv = g.ends(i)
        a, d = c.h[fv], c.h[iv]
        h[new_vertex] = (a[0] + d[0], a[1] + d[1])
        new = [Edge(fv, new_vertex, Fraction(1)), Edge(new_vertex, iv, INF)]
    edges = list(g.edges[:i]) + new + list(g.edges[i + 1:])
    ng = TropicalGraph(g.finite_vertices + (new_vertex,), g.infinite_vertices, edges)
    return ParamTropCurve(ng, h)


def attach_end(c: ParamTropCurve, at, inf_vertex, vector=(0, 0), position: Optional[int] = None) -> ParamTropCurve:
    """Add an unbounded edge from finite vertex `at` to a new infinite vertex
    with h = vector, inserted at `position` in the order (default: last)."""
    g = c.graph
    infs = list(g.infinite_vertices)
    infs.insert(len(infs) if position is None else position, inf_vertex)
    ng = TropicalGraph(g.finite_vertices, infs, list(g.edges) + [Edge(at, inf_vertex, INF)])
    h = dict(c.h)
    h[inf_vertex] = qvec(vector)
    return ParamTropCurve(ng, h)
