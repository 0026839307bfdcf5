"""Rank-2 lattice geometry: polygons, their dual fans, toric numerics."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence


class LatticeVec(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return LatticeVec(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return LatticeVec(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return LatticeVec(-self.x, -self.y)

    def scale(self, k: int) -> "LatticeVec":
        return LatticeVec(k * self.x, k * self.y)


def cross(a: Sequence, b: Sequence):
    return a[0] * b[1] - a[1] * b[0]


def integral_length(v: Sequence[int]) -> int:
    """Lattice length of an integer vector: gcd of the absolute coordinates."""
    return math.gcd(abs(int(v[0])), abs(int(v[1])))


def primitive(v: Sequence[int]) -> LatticeVec:
    g = integral_length(v)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return LatticeVec(v[0] // g, v[1] // g)


def _angle_key(v: Sequence[int]):
    # exact ordering by polar angle in [0, 2pi)
    upper = v[1] > 0 or (v[1] == 0 and v[0] > 0)
    return (0 if upper else 1, _CrossKey(v))


class _CrossKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return cross(self.v, other.v) > 0

    def __eq__(self, other):
        return cross(self.v, other.v) == 0


class DegeneratePolygon(ValueError):
    pass


@dataclass(frozen=True)
class LatticePolygon:
    """Convex lattice polygon, stored counterclockwise from its lexicographically
    smallest vertex. Input may be given in either orientation."""

    vertices: tuple[LatticeVec, ...]

    def __init__(self, vertices: Sequence[Sequence[int]]):
        vs = [LatticeVec(int(v[0]), int(v[1])) for v in vertices]
        if len(vs) < 3:
            raise DegeneratePolygon(f"need at least 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise DegeneratePolygon("repeated vertex")
        turns = [cross(vs[i] - vs[i - 1], vs[(i + 1) % len(vs)] - vs[i]) for i in range(len(vs))]
        if all(t < 0 for t in turns):
            vs.reverse()
        elif not all(t > 0 for t in turns):
            raise DegeneratePolygon("vertices are not in strictly convex position")
        # strict turns in one direction can still wind more than once
        if _winding_exceeds_one(vs):
            raise DegeneratePolygon("self-overlapping vertex sequence")
        start = vs.index(min(vs))
        object.__setattr__(self, "vertices", tuple(vs[start:] + vs[:start]))

    @property
    def edges(self) -> list[LatticeVec]:
        vs = self.vertices
        return [vs[(i + 1) % len(vs)] - vs[i] for i in range(len(vs))]

    def scale(self, d: int) -> "LatticePolygon":
        if d < 1:
            raise ValueError("dilation factor must be positive")
        return LatticePolygon([v.scale(d) for v in self.vertices])

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "LatticePolygon":
        return cls(data["vertices"])


def _shoelace(vs) -> int:
    return sum(cross(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def _winding_exceeds_one(vs) -> bool:
    # total turning of a convex CCW loop is exactly one revolution; a
    # star-shaped sequence with all-left turns wraps more, which shows up as
    # edge directions that are not sorted by angle once rotated to start first
    es = [vs[(i + 1) % len(vs)] - vs[i] for i in range(len(vs))]
    keys = [_angle_key(e) for e in es]
    k0 = min(range(len(es)), key=lambda i: keys[i])
    rot = es[k0:] + es[:k0]
    return any(not (_angle_key(rot[i]) < _angle_key(rot[i + 1])) for i in range(len(rot) - 1))


@dataclass(frozen=True)
class Fan2D:
    """Complete or partial fan given by primitive ray generators, sorted by angle."""

    rays: tuple[LatticeVec, ...]
    complete: bool = True

    def __init__(self, rays: Sequence[Sequence[int]], complete: bool = True):
        rs = [LatticeVec(int(r[0]), int(r[1])) for r in rays]
        for r in rs:
            if integral_length(r) != 1:
                raise ValueError(f"ray {tuple(r)} is not primitive")
        if len(set(rs)) != len(rs):
            raise ValueError("repeated ray")
        rs.sort(key=_angle_key)
        if complete:
            if len(rs) < 3 or any(cross(rs[i], rs[(i + 1) % len(rs)]) <= 0 for i in range(len(rs))):
                raise ValueError("rays do not span a complete fan")
        object.__setattr__(self, "rays", tuple(rs))
        object.__setattr__(self, "complete", complete)


@dataclass(frozen=True)
class ToricSurfaceData:
    fan: Fan2D
    polygon: Optional[LatticePolygon] = None

    def __post_init__(self):
        if self.polygon is not None and dual_fan(self.polygon) != self.fan:
            raise ValueError("fan is not the dual fan of the polygon")


def dual_fan(p: LatticePolygon) -> Fan2D:
    """Inward primitive normals of the edges; for a CCW polygon the inward
    normal of edge (a, b) is (-b, a)."""
    return Fan2D([primitive((-e.y, e.x)) for e in p.edges])


def area2(p: LatticePolygon) -> int:
    """Twice the Euclidean area (the self-intersection of the ample class)."""
    return _shoelace(p.vertices)


def boundary_length(p: LatticePolygon) -> int:
    return sum(integral_length(e) for e in p.edges)


def edge_degrees(p: LatticePolygon) -> dict[LatticeVec, int]:
    """Ray of the dual fan -> lattice length of the dual edge."""
    return {primitive((-e.y, e.x)): integral_length(e) for e in p.edges}


def interior_points(p: LatticePolygon, check: bool = __debug__) -> int:
    """Lattice points strictly inside p, counted column by column."""
    vs = p.vertices
    xs = [v.x for v in vs]
    total = 0
    for x in range(min(xs) + 1, max(xs)):
        ys = []
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            if a.x == b.x:
                continue
            if min(a.x, b.x) <= x <= max(a.x, b.x):
                ys.append(Fraction(a.y) + Fraction(b.y - a.y, b.x - a.x) * (x - a.x))
        lo, hi = min(ys), max(ys)
        total += max(0, math.ceil(hi) - math.floor(lo) - 1)
    if check:
        assert area2(p) == 2 * total + boundary_length(p) - 2, "Pick's theorem violated"
    return total


def standard_surfaces(k: int, variant: str) -> ToricSurfaceData:
    """The triangle Delta_k / parallelogram Delta'_k and their fans.

    For even k the triangle's third ray (-k, -2) is not primitive; the fan
    stores its primitive generator (-k/2, -1).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if variant == "triangle":
        poly = LatticePolygon([(1, 0), (-1, k), (0, 0)])
        rays = [(0, 1), (k, 1), primitive((-k, -2))]
    elif variant == "parallelogram":
        poly = LatticePolygon([(0, 0), (1, 0), (0, k), (-1, k)])
        rays = [(0, 1), (k, 1), (0, -1), (-k, -1)]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return ToricSurfaceData(Fan2D(rays), poly)


def zariski_bound(minus_KC: int, beta_total: int, genus: int, toric_boundary: bool) -> int:
    """Upper bound on the dimension of a family of curves of geometric genus
    `genus`. With the full toric boundary K_S + E = 0 so only the
    unconstrained boundary contacts count."""
    if toric_boundary:
        return beta_total + genus - 1
    return minus_KC + genus - 1


def convex_hull(points: Sequence[Sequence[int]]) -> list[LatticeVec]:
    """Strict convex hull (monotone chain), counterclockwise."""
    pts = sorted({LatticeVec(int(a), int(b)) for a, b in points})
    if len(pts) <= 2:
        return pts

    def half(seq):
        out: list[LatticeVec] = []
        for q in seq:
            while len(out) >= 2 and cross(out[-1] - out[-2], q - out[-1]) <= 0:
                out.pop()
            out.append(q)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]


def polygon_report(p: LatticePolygon) -> dict:
    fan = dual_fan(p)
    deg = edge_degrees(p)
    return {
        "vertices": [list(v) for v in p.vertices],
        "area2": area2(p),
        "boundary": boundary_length(p),
        "interior": interior_points(p),
        "rays": [list(r) for r in fan.rays],
        "degrees": [[list(r), deg[r]] for r in fan.rays],
    }
