"""Deformation spaces of parameterized tropical curves and the dimension-bound
certificate obtained by cutting the curve at its torus-marked vertices."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import linalg
from .lattice_toric import cross, integral_length, primitive
from .tropical_curve import (
    Edge,
    ParamTropCurve,
    TropicalGraph,
    edge_vector,
    genus,
    is_stable,
    qvec,
    validate,
)

Orientation = dict  # bounded edge index -> (tail, head)


class CertificateError(ValueError):
    pass


def default_orientation(c: ParamTropCurve) -> Orientation:
    g = c.graph
    return {i: (g.edges[i].u, g.edges[i].v) for i in g.bounded_edges()}


def _check_orientation(c: ParamTropCurve, o: Orientation) -> Orientation:
    g = c.graph
    full = default_orientation(c)
    for i, (tail, head) in o.items():
        if i not in full:
            raise ValueError(f"edge {i} is not a bounded edge")
        e = g.edges[i]
        if {tail, head} != {e.u, e.v}:
            raise ValueError(f"orientation ({tail!r}, {head!r}) does not match edge {i}")
        full[i] = (tail, head)
    return full


@dataclass
class ConstraintMatrix:
    rows: list[list[Fraction]]
    columns: list[tuple]  # (vertex, "x" | "y")
    row_labels: list[tuple]  # (edge index, functional description)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def to_json(self) -> dict:
        return {
            "columns": [[str(v), a] for v, a in self.columns],
            "rows": self.rows,
            "row_labels": [list(r) for r in self.row_labels],
        }


def _columns(c: ParamTropCurve) -> tuple[list, dict]:
    cols = [(v, a) for v in c.graph.finite_vertices for a in ("x", "y")]
    return cols, {v: 2 * k for k, v in enumerate(c.graph.finite_vertices)}


def constraint_matrix(c: ParamTropCurve, o: Optional[Orientation] = None) -> ConstraintMatrix:
    """Matrix of x -> (sum_v eps(e, v) x_v mod N_e)_e over the bounded edges.

    For a nontrivial slope the quotient N/N_e is identified with Z through
    det(n_e, .), n_e the generator pointing from tail to head. A contracted
    bounded edge has N_e = 0 and contributes both coordinates.
    """
    o = _check_orientation(c, o or {})
    cols, off = _columns(c)
    rows, labels = [], []
    for i in sorted(o):
        tail, head = o[i]
        w = edge_vector(c, i, tail=tail)
        if integral_length(w):
            n = primitive(w)
            row = [Fraction(0)] * len(cols)
            # det(n, x_head - x_tail) = n.x * dy - n.y * dx
            for v, s in ((head, 1), (tail, -1)):
                row[off[v]] += -s * n.y
                row[off[v] + 1] += s * n.x
            rows.append(row)
            labels.append((i, f"det(({n.x},{n.y}), .)"))
        else:
            for a in (0, 1):
                row = [Fraction(0)] * len(cols)
                row[off[head] + a] += 1
                row[off[tail] + a] -= 1
                rows.append(row)
                labels.append((i, "xy"[a]))
    return ConstraintMatrix(rows, cols, labels)


def c_gamma(c: ParamTropCurve) -> int:
    g = c.graph
    return sum(1 for i in g.bounded_edges() if integral_length(edge_vector(c, i)) == 0)


@dataclass
class DeformationSpace:
    basis: list[list[Fraction]]
    dim_E1: int
    c_gamma: int
    columns: list[tuple]

    @property
    def universal_dim(self) -> int:
        return self.dim_E1 + self.c_gamma

    def to_json(self) -> dict:
        return {
            "dim_E1": self.dim_E1,
            "c": self.c_gamma,
            "columns": [[str(v), a] for v, a in self.columns],
            "basis": self.basis,
        }


def deformation_space(c: ParamTropCurve, o: Optional[Orientation] = None) -> DeformationSpace:
    m = constraint_matrix(c, o)
    basis = linalg.nullspace(m.rows, m.ncols)
    return DeformationSpace(basis, len(basis), c_gamma(c), m.columns)


@dataclass
class MarkedConstraints:
    point_constraints: dict = field(default_factory=dict)  # vertex -> A in Q^2
    line_constraints: dict = field(default_factory=dict)  # vertex -> (base, direction)


def _constraint_rows(c: ParamTropCurve, m: MarkedConstraints, with_rhs: bool = False):
    cols, off = _columns(c)
    rows, rhs = [], []
    for v, a in m.point_constraints.items():
        if v not in off:
            raise KeyError(f"constraint on unknown finite vertex {v!r}")
        a = qvec(a)
        for k in (0, 1):
            row = [Fraction(0)] * len(cols)
            row[off[v] + k] = Fraction(1)
            rows.append(row)
            rhs.append(a[k] - c.h[v][k])
    for v, (base, d) in m.line_constraints.items():
        if v not in off:
            raise KeyError(f"constraint on unknown finite vertex {v!r}")
        if integral_length(d) != 1:
            raise ValueError(f"line direction {tuple(d)} is not primitive")
        base = qvec(base)
        row = [Fraction(0)] * len(cols)
        # det(d, x_v) = 0 keeps the displacement parallel to the line
        row[off[v]] = Fraction(-d[1])
        row[off[v] + 1] = Fraction(d[0])
        rows.append(row)
        rhs.append(cross(d, base) - cross(d, c.h[v]))
    return (rows, rhs) if with_rhs else rows


def constrained_dim(c: ParamTropCurve, m: MarkedConstraints, o: Optional[Orientation] = None) -> int:
    cm = constraint_matrix(c, o)
    rows = cm.rows + _constraint_rows(c, m)
    return cm.ncols - linalg.rank(rows, cm.ncols) + c_gamma(c)


def affine_feasible(c: ParamTropCurve, m: MarkedConstraints, o: Optional[Orientation] = None) -> bool:
    """Is there a displacement in E^1 moving the constrained vertices onto
    their targets (points) or target lines?"""
    cm = constraint_matrix(c, o)
    rows, rhs = _constraint_rows(c, m, with_rhs=True)
    full = cm.rows + rows
    b = [Fraction(0)] * len(cm.rows) + rhs
    return linalg.solve(full, b, cm.ncols) is not None


class GenericFeasibility:
    """Feasibility of the marked system for many target vectors at once.

    The target only enters through the right-hand side, so the system is
    solvable iff b is orthogonal to the left nullspace of the stacked matrix.
    """

    def __init__(self, c: ParamTropCurve, point_vertices: Sequence, line_data: Sequence = (), o=None):
        self.c = c
        self.point_vertices = list(point_vertices)
        self.line_data = list(line_data)  # (vertex, direction)
        cm = constraint_matrix(c, o)
        rows = list(cm.rows)
        cols, off = _columns(c)
        for v in self.point_vertices:
            for k in (0, 1):
                row = [Fraction(0)] * len(cols)
                row[off[v] + k] = Fraction(1)
                rows.append(row)
        for v, d in self.line_data:
            row = [Fraction(0)] * len(cols)
            row[off[v]] = Fraction(-d[1])
            row[off[v] + 1] = Fraction(d[0])
            rows.append(row)
        self.n_edge_rows = len(cm.rows)
        self.obstructions = linalg.left_nullspace(rows, len(cols)) if rows else []
        self.rank = len(rows) - len(self.obstructions)
        self.edge_rank = linalg.rank(cm.rows, cm.ncols)
        # the edge part of b is zero, so only the target block of each
        # obstruction matters; scale it to integers once
        self._int_obstructions = []
        for vec in self.obstructions:
            tail = vec[self.n_edge_rows:]
            den = math.lcm(*(y.denominator for y in tail)) if tail else 1
            ints = [int(y * den) for y in tail]
            if any(ints):
                self._int_obstructions.append(ints)

    @property
    def n_target_coords(self) -> int:
        return 2 * len(self.point_vertices) + len(self.line_data)

    def feasible(self, target: Sequence[Fraction]) -> bool:
        """`target` lists the displacement coordinates: two per point vertex,
        then one line offset per line constraint."""
        if len(target) != self.n_target_coords:
            raise ValueError("wrong number of target coordinates")
        ts = [Fraction(t) for t in target]
        common = math.prod(t.denominator for t in ts)
        scaled = [t.numerator * (common // t.denominator) for t in ts]
        return all(sum(y * x for y, x in zip(vec, scaled)) == 0 for vec in self._int_obstructions)


def random_rational(rng, bits: int = 40) -> Fraction:
    """Pseudorandom rational with a large denominator for genericity tests."""
    num = rng.getrandbits(bits + 1) - (1 << bits)
    return Fraction(num, rng.getrandbits(bits) or 1)


# --- the cut graph and the certificate ---------------------------------------


@dataclass
class CutGraph:
    graph: TropicalGraph
    caps: frozenset

    def component_data(self, beta: Iterable) -> list[dict]:
        beta = set(beta)
        g = self.graph
        out = []
        for comp in sorted(g.components(), key=lambda s: sorted(map(str, s))):
            edges = [e for e in g.edges if e.u in comp]
            v1 = [v for v in comp if g.valency(v) == 1]
            out.append(
                {
                    "vertices": sorted(str(v) for v in comp),
                    "V": len(comp),
                    "E": len(edges),
                    "b1": len(edges) - len(comp) + 1,
                    "V1": len(v1),
                    "beta_ends": sorted(str(v) for v in comp if v in beta),
                }
            )
        return out


def cut_graph(c: ParamTropCurve, marked: Sequence) -> CutGraph:
    """Delete the marked infinite vertices, their finite neighbours and the
    joining ends; every other half-edge at a deleted vertex gets a new
    1-valent finite cap (a loop yields two caps). Lengths are kept."""
    g = c.graph
    marked = list(marked)
    doomed_inf = set(marked)
    doomed_fin = {g.ends(g.end_edge(w))[0] for w in marked}
    fin = [v for v in g.finite_vertices if v not in doomed_fin]
    infs = [w for w in g.infinite_vertices if w not in doomed_inf]
    edges, caps = [], []
    for i, e in enumerate(g.edges):
        if e.u in doomed_inf or e.v in doomed_inf:
            continue
        u, v = e.u, e.v
        if u in doomed_fin:
            u = ("cap", i, 0)
            caps.append(u)
        if v in doomed_fin:
            v = ("cap", i, 1)
            caps.append(v)
        edges.append(Edge(u, v, e.length))
    return CutGraph(TropicalGraph(fin + caps, infs, edges), frozenset(caps))


def _marked_ends(c: ParamTropCurve, k: int, alpha: Iterable, beta: Iterable) -> tuple[list, set, set]:
    g = c.graph
    if k < 0 or k > len(g.infinite_vertices):
        raise CertificateError(f"k={k} exceeds the number of infinite vertices ({len(g.infinite_vertices)})")
    alpha, beta = set(alpha), set(beta)
    marked = list(g.infinite_vertices[:k])
    rest = set(g.infinite_vertices[k:])
    if alpha & beta:
        raise CertificateError("alpha and beta ends overlap")
    if alpha | beta != rest:
        raise CertificateError("alpha and beta must partition the ends after the first k")
    for w in marked:
        if c.h[w] != (0, 0):
            raise CertificateError(f"marked end {w!r} is not contracted")
    return marked, alpha, beta


def projection_rank(c: ParamTropCurve, marked: Sequence, alpha: Iterable, o=None) -> tuple[int, int]:
    """(rank, target dimension) of E^1 -> (+)_{marked} N (+) (+)_{alpha} N/N_e."""
    gf, target = _projection(c, marked, alpha, o)
    # rank of the restriction to the kernel of the edge rows
    return gf.rank - gf.edge_rank, target


def _projection(c: ParamTropCurve, marked: Sequence, alpha: Iterable, o=None) -> tuple["GenericFeasibility", int]:
    g = c.graph
    point_vs = [g.ends(g.end_edge(w))[0] for w in marked]
    lines = []
    target = 2 * len(marked)
    for w in sorted(alpha, key=g.infinite_vertices.index):
        i = g.end_edge(w)
        v = g.ends(i)[0]
        vec = edge_vector(c, i)
        if integral_length(vec):
            lines.append((v, primitive(vec)))
            target += 1
        else:
            point_vs.append(v)
            target += 2
    return GenericFeasibility(c, point_vs, lines, o), target


@dataclass
class Certificate:
    verdict: str  # "VIOLATED" or "CONSISTENT"
    k: int
    bound: int
    genus: int
    beta: int
    alpha: int
    projection_rank: int
    projection_target: int
    trace: list = field(default_factory=list)
    components: list = field(default_factory=list)
    # the marked system itself, for replaying generic targets
    feasibility: Optional[GenericFeasibility] = field(default=None, repr=False, compare=False)

    @property
    def surjective(self) -> bool:
        return self.projection_rank == self.projection_target

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "k": self.k,
            "bound": self.bound,
            "genus": self.genus,
            "beta": self.beta,
            "alpha": self.alpha,
            "projection": {
                "rank": self.projection_rank,
                "target_dim": self.projection_target,
                "surjective": self.surjective,
            },
            "components": self.components,
            "trace": self.trace,
        }


def _step(name: str, lhs, rel: str, rhs, holds: bool, note: str = "") -> dict:
    d = {"step": name, "lhs": lhs, "rel": rel, "rhs": rhs, "holds": holds}
    if note:
        d["note"] = note
    return d


def certify_bound(c: ParamTropCurve, k: int, alpha_ends: Iterable = (), beta_ends: Iterable = (), o=None) -> Certificate:
    """Replay the counting argument behind dim <= |beta| + g - 1.

    The verdict compares k with the bound; the trace evaluates every link of
    the Euler-characteristic chain on the actual cut graph and, when the
    bound is exceeded, exhibits the tree component without beta-ends and the
    two incompatible valency inequalities on it.
    """
    rep = validate(c)
    if not rep.ok:
        raise CertificateError(f"curve is not valid: {rep.violations[0]}")
    if not is_stable(c.graph):
        raise CertificateError("curve is not stable")
    marked, alpha, beta = _marked_ends(c, k, alpha_ends, beta_ends)
    g = genus(c.graph)
    bound = len(beta) + g - 1
    gf, target = _projection(c, marked, alpha, o)
    rank = gf.rank - gf.edge_rank
    cut = cut_graph(c, marked)
    comps = cut.component_data(beta)

    chi_gamma = len(c.graph.vertices) - len(c.graph.edges)
    chi_cut = len(cut.graph.vertices) - len(cut.graph.edges)
    t1, t2, t3, t4 = -len(beta), -1 - len(beta), -chi_gamma - k, -chi_cut
    t5 = sum(x["b1"] - 1 for x in comps)
    trace = [
        _step("-|beta| > -1-|beta|", t1, ">", t2, t1 > t2),
        _step("-1-|beta| >= -chi(G)-k", t2, ">=", t3, t2 >= t3, "equivalent to k >= |beta|+g"),
        _step("-chi(G)-k >= -chi(G')", t3, ">=", t4, t3 >= t4),
        _step("-chi(G') = sum(b1(G_j)-1)", t4, "=", t5, t4 == t5),
    ]
    violated = k > bound
    if violated:
        trees = [x for x in comps if x["b1"] == 0 and not x["beta_ends"]]
        trace.append(
            _step("exists tree component without beta-ends", len(trees), ">=", 1, bool(trees))
        )
        if trees:
            t = trees[0]
            lhs_a, rhs_a = 2 * t["V"], t["E"] + 2 * t["V1"]
            lhs_b, rhs_b = 2 * t["E"], 3 * t["V"] - 2 * t["V1"]
            trace.append(_step("2|V| >= |E|+2|V1| (needed for surjectivity)", lhs_a, ">=", rhs_a, lhs_a >= rhs_a,
                               f"component {t['vertices']}"))
            trace.append(_step("2|E| >= 3|V|-2|V1| (stability)", lhs_b, ">=", rhs_b, lhs_b >= rhs_b))
            trace.append(_step("|V|-|E| = 1 (tree) contradicts |E| >= |V|", t["V"] - t["E"], "=", 1,
                               t["V"] - t["E"] == 1))
    return Certificate(
        "VIOLATED" if violated else "CONSISTENT",
        k, bound, g, len(beta), len(alpha), rank, target, trace, comps, gf,
    )


@dataclass
class EqualityProfile:
    satisfied: bool
    failures: list[str]
    components: list

    def to_json(self) -> dict:
        return {"satisfied": self.satisfied, "failures": self.failures, "components": self.components}


def classify_equality(c: ParamTropCurve, k: int, alpha_ends: Iterable = (), beta_ends: Iterable = ()) -> EqualityProfile:
    """Check the shape forced on a curve that attains the bound exactly."""
    marked, alpha, beta = _marked_ends(c, k, alpha_ends, beta_ends)
    g = genus(c.graph)
    if k != len(beta) + g - 1:
        raise CertificateError(f"equality profile needs k = |beta|+g-1 = {len(beta) + g - 1}, got k={k}")
    failures = []
    comps = cut_graph(c, marked).component_data(beta)
    for x in comps:
        if x["b1"] != 0:
            failures.append(f"component {x['vertices']} has b1={x['b1']}")
        elif len(x["beta_ends"]) != 1:
            failures.append(f"component {x['vertices']} has {len(x['beta_ends'])} beta-ends")
    gr = c.graph
    for v in gr.finite_vertices:
        if gr.valency(v) != 3:
            failures.append(f"vertex {v!s} has valency {gr.valency(v)}")
    skip = {gr.end_edge(w) for w in marked}
    for i in range(len(gr.edges)):
        if i not in skip and integral_length(edge_vector(c, i)) == 0:
            failures.append(f"edge {i} has trivial slope")
    return EqualityProfile(not failures, failures, comps)
