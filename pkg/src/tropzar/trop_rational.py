"""Tropicalization of a marked rational curve mapping to the 2-torus.

Points of the projective line over a valued field are finitely supported
Puiseux series; the stable marked tree is read off from the discs that the
points generate, and vertex positions come from the valuations of the
pulled-back characters on the generic point of each disc.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .lattice_toric import LatticeVec
from .tropical_curve import INF, Edge, ParamTropCurve, TropicalGraph

POS_INF = float("inf")


class ValuedElement:
    """A finite sum of c * t^a with rational exponents a in (1/e)Z, or the
    point at infinity. Coefficients live in Q (p = 0) or in F_p."""

    __slots__ = ("terms", "e", "p", "is_infinity")

    def __init__(self, terms=None, e: int = 1, p: int = 0, infinity: bool = False):
        if e < 1:
            raise ValueError("ramification index must be positive")
        self.e, self.p, self.is_infinity = e, p, infinity
        clean = {}
        for a, c in (terms or {}).items():
            a = Fraction(a)
            if (a * e).denominator != 1:
                raise ValueError(f"exponent {a} is not in (1/{e})Z")
            c = Fraction(c) if p == 0 else Fraction(int(c) % p)
            if p and Fraction(c).denominator != 1:
                raise ValueError("coefficients over F_p must be integers")
            if c != 0:
                clean[a] = clean.get(a, 0) + c
        if p:
            clean = {a: c % p for a, c in clean.items()}
        self.terms = {a: c for a, c in sorted(clean.items()) if c != 0}

    @classmethod
    def infinity(cls, e: int = 1, p: int = 0) -> "ValuedElement":
        return cls({}, e, p, infinity=True)

    def __sub__(self, other: "ValuedElement") -> "ValuedElement":
        if self.is_infinity or other.is_infinity:
            raise ValueError("cannot subtract the point at infinity")
        merged = dict(self.terms)
        for a, c in other.terms.items():
            merged[a] = merged.get(a, 0) - c
        return ValuedElement(merged, max(self.e, other.e), self.p or other.p)

    def __neg__(self):
        return ValuedElement({a: -c for a, c in self.terms.items()}, self.e, self.p)

    def __eq__(self, other):
        return (
            isinstance(other, ValuedElement)
            and self.is_infinity == other.is_infinity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.is_infinity, tuple(self.terms.items())))

    def __repr__(self):
        if self.is_infinity:
            return "ValuedElement(inf)"
        return f"ValuedElement({format_series(self)!r}, e={self.e})"

    def with_ramification(self, e: int) -> "ValuedElement":
        if e % self.e:
            raise ValueError("new ramification index must be a multiple of the old one")
        if self.is_infinity:
            return ValuedElement.infinity(e, self.p)
        return ValuedElement(self.terms, e, self.p)

    def leading(self):
        """(exponent, coefficient) of the lowest term."""
        a = next(iter(self.terms))
        return a, self.terms[a]


def valuation(x: ValuedElement) -> Union[Fraction, float]:
    """Least exponent; nu(0) = +inf and, for clustering, nu(inf) = -inf."""
    if x.is_infinity:
        return -POS_INF
    if not x.terms:
        return POS_INF
    return next(iter(x.terms))


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(t(?:\s*\^\s*(?:\((-?\d+(?:/\d+)?)\)|(-?\d+)))?)?")


def parse_series(s: Union[str, list, dict], e: int = 1, p: int = 0) -> ValuedElement:
    """Read "1 - t", "-t + 3t^2", "t^(1/2)", "inf", or a list of
    [exponent, coefficient] pairs."""
    if isinstance(s, (list, tuple)):
        from .formats import parse_q

        return ValuedElement({parse_q(a): parse_q(c) for a, c in s}, e, p)
    if isinstance(s, (int, Fraction)):
        return ValuedElement({0: s}, e, p)
    text = str(s).replace(" ", "")
    if text in ("inf", "oo", "infinity"):
        return ValuedElement.infinity(e, p)
    if text in ("0", ""):
        return ValuedElement({}, e, p)
    terms: dict = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse series {s!r} at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            exp = Fraction(m.group(4) or m.group(5) or 1)
        else:
            exp = Fraction(0)
        terms[exp] = terms.get(exp, 0) + sign * coeff
        pos = m.end()
    return ValuedElement(terms, e, p)


def format_series(x: ValuedElement) -> str:
    if x.is_infinity:
        return "inf"
    if not x.terms:
        return "0"
    parts = []
    for a, c in x.terms.items():
        if a == 0:
            body = f"{abs(c)}"
        else:
            tp = "t" if a == 1 else (f"t^{a}" if a.denominator == 1 else f"t^({a})")
            body = tp if abs(c) == 1 else f"{abs(c)}*{tp}"
        parts.append(("-" if c < 0 else "+") + body)
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


# --- the cluster tree -------------------------------------------------------------


@dataclass
class ClusterVertex:
    name: str
    members: tuple[int, ...]  # indices of finite marked points in the disc
    radius: Fraction


@dataclass
class ClusterTree:
    vertices: list[ClusterVertex]
    edges: list[tuple[str, str, Fraction]]  # bounded edges between disc vertices
    leaf_vertex: dict  # marked point index -> vertex name
    root: str

    def vertex(self, name: str) -> ClusterVertex:
        return next(v for v in self.vertices if v.name == name)


def _name(members) -> str:
    return "v" + "_".join(str(i) for i in members)


def cluster_tree(points: Sequence[ValuedElement]) -> ClusterTree:
    """Stable tree of discs for at least three distinct marked points."""
    if len(points) < 3:
        raise ValueError("need at least three marked points")
    for i in range(len(points)):
        for j in range(i):
            if points[i] == points[j]:
                raise ValueError(f"marked points {j} and {i} coincide")
    finite = [i for i, x in enumerate(points) if not x.is_infinity]
    inf_idx = [i for i, x in enumerate(points) if x.is_infinity]

    def nu(i, j):
        return valuation(points[i] - points[j])

    vertices: list[ClusterVertex] = []
    edges: list = []
    leaf: dict = {}

    def build(members: list[int]) -> ClusterVertex:
        rho = min(nu(i, j) for i in members for j in members if i < j)
        v = ClusterVertex(_name(members), tuple(members), rho)
        vertices.append(v)
        blocks: list[list[int]] = []
        for i in members:
            for blk in blocks:
                if nu(i, blk[0]) > rho:
                    blk.append(i)
                    break
            else:
                blocks.append([i])
        for blk in blocks:
            if len(blk) == 1:
                leaf[blk[0]] = v.name
            else:
                child = build(blk)
                edges.append((v.name, child.name, child.radius - rho))
        return v

    root = build(finite)
    for i in inf_idx:
        leaf[i] = root.name
    tree = ClusterTree(vertices, edges, leaf, root.name)
    _suppress_root(tree)
    return tree


def _suppress_root(tree: ClusterTree) -> None:
    """Remove a 2-valent root (only possible when infinity is not marked)."""
    r = tree.root
    inc = [e for e in tree.edges if r in (e[0], e[1])]
    leaves = [i for i, v in tree.leaf_vertex.items() if v == r]
    if len(inc) + len(leaves) != 2:
        return
    tree.vertices = [v for v in tree.vertices if v.name != r]
    tree.edges = [e for e in tree.edges if e not in inc]
    if len(inc) == 2:
        (_, a, la), (_, b, lb) = inc
        tree.edges.append((a, b, la + lb))
        tree.root = a
    else:
        (_, a, _la), = inc
        tree.leaf_vertex[leaves[0]] = a
        tree.root = a


# --- marked maps ---------------------------------------------------------------------


@dataclass
class MarkedRationalMap:
    """f*(x^m) = chi(m) * prod_j (z - p_j)^{n_j(m)} over the finite support.

    `divisor` maps a marked point index to its vector in N; the vector at a
    marked infinity is implied (minus the sum of the others) and must not be
    listed. Unlisted finite marked points are torus-marked.
    """

    points: list[ValuedElement]
    divisor: dict  # index -> LatticeVec
    chi: tuple[ValuedElement, ValuedElement]
    e: int = 1

    def __post_init__(self):
        self.divisor = {int(i): LatticeVec(int(n[0]), int(n[1])) for i, n in self.divisor.items()}
        for i, n in self.divisor.items():
            if not 0 <= i < len(self.points):
                raise ValueError(f"divisor refers to unknown marked point {i}")
            if self.points[i].is_infinity:
                raise ValueError("the vector at infinity is implied and must not be listed")
        for c in self.chi:
            if c.is_infinity or not c.terms:
                raise ValueError("character values must be nonzero series")
        sx = sum(n.x for n in self.divisor.values())
        sy = sum(n.y for n in self.divisor.values())
        has_inf = any(p.is_infinity for p in self.points)
        if (sx, sy) != (0, 0) and not has_inf:
            raise ValueError("divisor has nonzero degree but infinity is not marked")

    def vector_at(self, i: int) -> LatticeVec:
        if self.points[i].is_infinity:
            sx = sum(n.x for n in self.divisor.values())
            sy = sum(n.y for n in self.divisor.values())
            return LatticeVec(-sx, -sy)
        return self.divisor.get(i, LatticeVec(0, 0))

    @classmethod
    def from_json(cls, data: dict) -> "MarkedRationalMap":
        e = int(data.get("e", 1))
        p = int(data.get("p", 0))
        pts = [parse_series(x, e, p) for x in data["points"]]
        div = {}
        for item in data.get("divisor", []):
            at = int(item["at"])
            if at in div:
                raise ValueError(f"marked point {at} listed twice in the divisor")
            div[at] = tuple(item["n"])
        chi = tuple(parse_series(x, e, p) for x in data.get("chi", [1, 1]))
        if len(chi) != 2:
            raise ValueError("chi needs two values")
        return cls(pts, div, chi, e)

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "points": [format_series(x) for x in self.points],
            "divisor": [{"at": i, "n": list(n)} for i, n in sorted(self.divisor.items())],
            "chi": [format_series(x) for x in self.chi],
        }


def _disc_value(tree_v: ClusterVertex, rep: ValuedElement, mp: MarkedRationalMap) -> tuple[Fraction, Fraction]:
    out = []
    for k in (0, 1):
        s = Fraction(valuation(mp.chi[k]))
        for j, n in mp.divisor.items():
            nk = n[k]
            if nk == 0:
                continue
            d = valuation(rep - mp.points[j])
            s += nk * (tree_v.radius if d == POS_INF else min(d, tree_v.radius))
        out.append(s)
    return (out[0], out[1])


def vertex_position(tree: ClusterTree, name: str, mp: MarkedRationalMap) -> tuple[Fraction, Fraction]:
    """Valuation of chi(m) * prod (z - p_j)^{n_j(m)} at the generic point of
    the disc: h(v)(m) = nu(chi(m)) + sum_j n_j(m) min(nu(a_v - p_j), rho_v)."""
    v = tree.vertex(name)
    values = {_disc_value(v, mp.points[i], mp) for i in v.members}
    if len(values) != 1:
        raise AssertionError(f"disc value at {name} depends on the representative: {values}")
    return values.pop()


def end_slope(i: int, mp: MarkedRationalMap) -> LatticeVec:
    return mp.vector_at(i)


def tropicalize(mp: MarkedRationalMap) -> ParamTropCurve:
    tree = cluster_tree(mp.points)
    fin = [v.name for v in tree.vertices]
    infs = [f"q{i + 1}" for i in range(len(mp.points))]
    edges = [Edge(a, b, ln) for a, b, ln in tree.edges]
    edges += [Edge(tree.leaf_vertex[i], infs[i], INF) for i in range(len(mp.points))]
    h = {v: vertex_position(tree, v, mp) for v in fin}
    for i, name in enumerate(infs):
        n = end_slope(i, mp)
        h[name] = (Fraction(n.x), Fraction(n.y))
    return ParamTropCurve(TropicalGraph(fin, infs, edges), h)


def cross_ratio_distance(points: Sequence[ValuedElement], i: int, j: int, k: int, l: int) -> Fraction:
    """|nu| of the cross-ratio (z_i,z_j;z_k,z_l), the length of the path
    shared by the two pairs in the tree; infinity drops out."""

    def term(a, b):
        if points[a].is_infinity or points[b].is_infinity:
            return Fraction(0)
        return Fraction(valuation(points[a] - points[b]))

    v = term(i, k) + term(j, l) - term(i, l) - term(j, k)
    return abs(v)


def example_line() -> MarkedRationalMap:
    """The line x + t y = z with four marked points, in the chart u = x/y:
    x/z = u/(u+t) and y/z = 1/(u+t)."""
    pts = [parse_series("1-t"), ValuedElement.infinity(), parse_series("-t"), parse_series("0")]
    return MarkedRationalMap(pts, {2: (-1, -1), 3: (1, 0)}, (parse_series("1"), parse_series("1")))
