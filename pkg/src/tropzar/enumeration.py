"""Exhaustive enumeration of combinatorial types of stable parameterized
tropical curves with a given degree and genus and fewer than r ends.

Search: split every degree entry into ends, choose the number of finite
vertices, enumerate connected multigraphs and end attachments up to
isomorphism, solve the balancing equations for the bounded-edge vectors and
keep the candidates that admit positive edge lengths.
"""
from __future__ import annotations

import itertools
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from . import linalg
from .lattice_toric import LatticeVec
from .tropical_curve import (
    INF,
    CombinatorialType,
    DegreeSpec,
    Edge,
    ParamTropCurve,
    TropicalGraph,
    canonical_form,
    combinatorial_type,
    validate,
)

MAX_EDGE_BOUND = 40


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, partial_count: int):
        super().__init__(f"{message} (partial count {partial_count})")
        self.partial_count = partial_count


@dataclass(frozen=True)
class EnumerationBudget:
    genus: int
    ends: int  # r: curves have fewer than r infinite vertices

    @property
    def edge_bound(self) -> int:
        # |E| < 2r + 3g - 3
        return 2 * self.ends + 3 * self.genus - 4


@dataclass
class EnumerationResult:
    types: list[CombinatorialType]
    witnesses: dict
    stats: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.types)

    def to_json(self) -> dict:
        from .formats import curve_to_json

        return {
            "count": self.count,
            "types": [t.to_json() for t in self.types],
            "witnesses": [curve_to_json(self.witnesses[t]) for t in self.types],
            "stats": self.stats,
        }


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def end_lists(d: DegreeSpec, r: int, allow_contracted: int = 0) -> list[tuple[LatticeVec, ...]]:
    """Every multiset of end vectors realizing d, plus up to
    `allow_contracted` zero ends, with fewer than r ends in total."""
    per_entry = [[tuple(n.scale(l) for l in part) for part in _partitions(m)] for n, m in d.entries]
    out = []
    for choice in itertools.product(*per_entry):
        base = [v for part in choice for v in part]
        for c in range(allow_contracted + 1):
            ends = tuple(sorted(base + [LatticeVec(0, 0)] * c))
            if len(ends) < r:
                out.append(ends)
    return sorted(set(out))


def _connected(v: int, edges) -> bool:
    parent = list(range(v))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(a) for a in range(v)}) == 1


def multigraphs(v: int, b: int) -> list[tuple]:
    """Connected multigraphs (loops allowed) on v vertices with b edges, one
    per isomorphism class, as sorted tuples of (i, j) with i <= j."""
    pairs = [(i, j) for i in range(v) for j in range(i, v)]
    seen, out = set(), []
    for es in itertools.combinations_with_replacement(pairs, b):
        if not _connected(v, es):
            continue
        key = canonical_form([()] * v, [(a, c, 0) for a, c in es])
        if key not in seen:
            seen.add(key)
            out.append(es)
    return out


def attachments(v: int, edges: tuple, ends: tuple) -> list[tuple]:
    """End multisets per vertex making every vertex at least trivalent, one
    per isomorphism class of the decorated graph."""
    val = [0] * v
    for a, b in edges:
        val[a] += 1
        val[b] += 1
    need = sum(max(0, 3 - x) for x in val)
    if need > len(ends):
        return []
    seen, out = set(), []
    for assign in itertools.product(range(v), repeat=len(ends)):
        per = [[] for _ in range(v)]
        for end, w in zip(ends, assign):
            per[w].append(end)
        if any(val[i] + len(per[i]) < 3 for i in range(v)):
            continue
        labels = tuple(tuple(sorted(p)) for p in per)
        key = canonical_form(list(labels), [(a, c, 0) for a, c in edges])
        if key not in seen:
            seen.add(key)
            out.append(labels)
    return out


def _spanning_tree(v: int, edges) -> tuple[list[int], list[int], list[int], list]:
    """BFS tree: (BFS order, parent edge index per vertex, free edge indices,
    parent vertex per vertex). Loops are neither tree nor free edges."""
    adj = [[] for _ in range(v)]
    for i, (a, b) in enumerate(edges):
        if a != b:
            adj[a].append((i, b))
            adj[b].append((i, a))
    parent_edge = [-1] * v
    parent = [-1] * v
    order, seen = [0], {0}
    q = deque([0])
    while q:
        a = q.popleft()
        for i, b in adj[a]:
            if b not in seen:
                seen.add(b)
                parent_edge[b], parent[b] = i, a
                order.append(b)
                q.append(b)
    tree = {i for i in parent_edge if i >= 0}
    free = [i for i, (a, b) in enumerate(edges) if a != b and i not in tree]
    return order, parent_edge, free, parent


def slope_solutions(v: int, edges: tuple, labels: tuple, box: tuple[int, int]) -> Iterator[list[LatticeVec]]:
    """Integer vectors w_e (oriented from edges[e][0] to edges[e][1]) that
    balance every vertex, with loops forced to 0 and every coordinate inside
    the a-priori box."""
    bx, by = box
    order, parent_edge, free, _ = _spanning_tree(v, edges)
    base = [[sum(e.x for e in lab), sum(e.y for e in lab)] for lab in labels]
    rng = [(x, y) for x in range(-bx, bx + 1) for y in range(-by, by + 1)]
    for choice in itertools.product(rng, repeat=len(free)):
        w: list = [None] * len(edges)
        for i, (a, b) in enumerate(edges):
            if a == b:
                w[i] = (0, 0)
        s = [list(x) for x in base]
        for i, vec in zip(free, choice):
            a, b = edges[i]
            w[i] = vec
            s[a][0] += vec[0]
            s[a][1] += vec[1]
            s[b][0] -= vec[0]
            s[b][1] -= vec[1]
        ok = True
        for node in reversed(order[1:]):
            i = parent_edge[node]
            a, b = edges[i]
            # outgoing sum at node must vanish: fix the parent edge
            if node == a:
                vec = (-s[node][0], -s[node][1])
            else:
                vec = (s[node][0], s[node][1])
            if abs(vec[0]) > bx or abs(vec[1]) > by:
                ok = False
                break
            w[i] = vec
            s[a][0] += vec[0]
            s[a][1] += vec[1]
            s[b][0] -= vec[0]
            s[b][1] -= vec[1]
        if ok and s[order[0]] == [0, 0]:
            yield [LatticeVec(*x) for x in w]


def cycle_rows(v: int, edges: tuple, w: list) -> list[list[int]]:
    """Two rows per fundamental cycle: sum of sign * length * w_e = 0."""
    order, parent_edge, free, parent = _spanning_tree(v, edges)

    def path_to_root(x):
        out = []
        while parent[x] >= 0:
            out.append(x)
            x = parent[x]
        return out

    rows = []
    for f in free:
        a, b = edges[f]
        coef = [0] * len(edges)
        coef[f] += 1  # a -> b along f
        # back from b to a through the tree: b -> root, then root -> a
        for node in path_to_root(b):  # upward: h(parent) - h(node)
            i = parent_edge[node]
            coef[i] += -1 if edges[i][1] == node else 1
        for node in path_to_root(a):  # downward: h(node) - h(parent)
            i = parent_edge[node]
            coef[i] += 1 if edges[i][1] == node else -1
        for k in (0, 1):
            rows.append([coef[i] * w[i][k] for i in range(len(edges))])
    return rows


def realize_lengths(v: int, edges: tuple, w: list) -> tuple[Optional[list[Fraction]], str]:
    """Positive lengths closing every cycle, or None. The second item says
    which test succeeded ("unit", "positive") or "none"."""
    rows = cycle_rows(v, edges, w)
    ones = [Fraction(1)] * len(edges)
    if all(sum(r) == 0 for r in rows):
        return ones, "unit"
    sol = linalg.positive_kernel_vector(rows, len(edges))
    if sol is None:
        return None, "none"
    return sol, "positive"


def build_witness(v: int, edges: tuple, labels: tuple, w: list, lengths: list) -> ParamTropCurve:
    fin = [f"v{i}" for i in range(v)]
    h = {fin[0]: (Fraction(0), Fraction(0))}
    adj = [[] for _ in range(v)]
    for i, (a, b) in enumerate(edges):
        if a != b:
            adj[a].append((i, b, 1))
            adj[b].append((i, a, -1))
    q = deque([0])
    while q:
        a = q.popleft()
        for i, b, s in adj[a]:
            if fin[b] not in h:
                p = h[fin[a]]
                h[fin[b]] = (p[0] + s * lengths[i] * w[i][0], p[1] + s * lengths[i] * w[i][1])
                q.append(b)
    es = [Edge(fin[a], fin[b], lengths[i]) for i, (a, b) in enumerate(edges)]
    infs = []
    k = 0
    for i, lab in enumerate(labels):
        for vec in lab:
            name = f"e{k}"
            k += 1
            infs.append(name)
            es.append(Edge(fin[i], name, INF))
            h[name] = (Fraction(vec[0]), Fraction(vec[1]))
    return ParamTropCurve(TropicalGraph(fin, infs, es), h)


def _box(d: DegreeSpec) -> tuple[int, int]:
    # flow of any bounded edge across a level line is at most the inflow
    bx = sum(m * max(0, n.x) for n, m in d.entries)
    by = sum(m * max(0, n.y) for n, m in d.entries)
    return bx, by


def candidates(d: DegreeSpec, g: int, r: int, allow_contracted: int = 0) -> list[tuple]:
    """All (v, edges, labels) up to isomorphism within the budget."""
    bound = EnumerationBudget(g, r).edge_bound
    out = []
    for ends in end_lists(d, r, allow_contracted):
        x = len(ends)
        for v in range(1, 2 * g - 2 + x + 1):
            b = v + g - 1
            if b < 0 or b + x > bound:
                continue
            for es in multigraphs(v, b):
                for labels in attachments(v, es, ends):
                    out.append((v, es, labels))
    return out


def _solve_chunk(args) -> list:
    chunk, box = args
    out = []
    for v, es, labels in chunk:
        for w in slope_solutions(v, es, labels, box):
            lengths, how = realize_lengths(v, es, w)
            if lengths is None:
                out.append((None, None, "none"))
                continue
            c = build_witness(v, es, labels, w, lengths)
            out.append((combinatorial_type(c, ordered_ends=False), c, how))
    return out


def enumerate_types(
    d: DegreeSpec,
    g: int,
    r: int,
    allow_contracted: int = 0,
    jobs: int = 1,
    max_candidates: int = 2_000_000,
    override_bound: bool = False,
) -> EnumerationResult:
    if sum(m * n.x for n, m in d.entries) or sum(m * n.y for n, m in d.entries):
        raise ValueError("degree does not sum to zero")
    budget = EnumerationBudget(g, r)
    if budget.edge_bound > MAX_EDGE_BOUND and not override_bound:
        raise BudgetExceeded(f"edge bound {budget.edge_bound} exceeds {MAX_EDGE_BOUND}", 0)
    cands = candidates(d, g, r, allow_contracted)
    if len(cands) > max_candidates:
        raise BudgetExceeded(f"{len(cands)} candidate graphs exceed the budget of {max_candidates}", 0)
    box = _box(d)
    if jobs > 1 and len(cands) > 1:
        size = max(1, len(cands) // (4 * jobs))
        chunks = [(cands[i:i + size], box) for i in range(0, len(cands), size)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = [item for part in ex.map(_solve_chunk, chunks) for item in part]
    else:
        results = _solve_chunk((cands, box))
    witnesses: dict = {}
    stats = {"candidate_graphs": len(cands), "balanced": len(results), "unit_lengths": 0,
             "positive_lengths": 0, "discarded_unrealizable": 0, "duplicates": 0,
             "edge_bound": budget.edge_bound}
    for t, c, how in results:
        if t is None:
            stats["discarded_unrealizable"] += 1
            continue
        stats["unit_lengths" if how == "unit" else "positive_lengths"] += 1
        if t in witnesses:
            stats["duplicates"] += 1
        else:
            witnesses[t] = c
    types = sorted(witnesses)
    return EnumerationResult(types, witnesses, stats)


@lru_cache(maxsize=None)
def count_types(d: DegreeSpec, g: int, r: int, allow_contracted: int = 0) -> int:
    return enumerate_types(d, g, r, allow_contracted).count


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("TROPZAR_JOBS", "1")))
    except ValueError:
        return 1


def check_witness(t: CombinatorialType, c: ParamTropCurve, g: int, d: DegreeSpec) -> list[str]:
    """Soundness checks for one emitted type; returns the failures."""
    from .tropical_curve import degree, genus, is_stable

    bad = []
    if not validate(c).ok:
        bad.append("witness invalid")
    if not is_stable(c.graph):
        bad.append("witness unstable")
    if genus(c.graph) != g:
        bad.append("wrong genus")
    if degree(c) != d:
        bad.append("wrong degree")
    gr = c.graph
    if len(gr.edges) != len(gr.vertices) + g - 1:
        bad.append("edge count")
    if 2 * len(gr.edges) != sum(gr.valency(v) for v in gr.vertices):
        bad.append("handshake")
    if combinatorial_type(c, ordered_ends=False) != t:
        bad.append("type mismatch")
    return bad
