"""Hand-built curves shared by several test modules."""
from functools import lru_cache

from tropzar.enumeration import enumerate_types
from tropzar.lattice_toric import LatticePolygon, standard_surfaces
from tropzar.tropical_curve import INF, DegreeSpec, ParamTropCurve, TropicalGraph

LINE = DegreeSpec([((0, 1), 1), ((-1, -1), 1), ((1, 0), 1)])
DELTA2 = DegreeSpec.from_polygon(standard_surfaces(2, "triangle").polygon)
CONIC = DegreeSpec.from_polygon(LatticePolygon([(0, 0), (2, 0), (0, 2)]))


def worked_curve(h_e=(0, -1), length=1):
    """Two finite vertices vL, vE; a contracted end q1 and the end q2 at vL,
    the ends q3, q4 at vE."""
    g = TropicalGraph(
        ["vL", "vE"],
        ["q1", "q2", "q3", "q4"],
        [("vL", "vE", length), ("vL", "q1", INF), ("vL", "q2", INF), ("vE", "q3", INF), ("vE", "q4", INF)],
    )
    h = {"vL": (0, 0), "vE": h_e, "q1": (0, 0), "q2": (0, 1), "q3": (-1, -1), "q4": (1, 0)}
    return ParamTropCurve(g, h)


def tropical_line(center=(0, 0)):
    g = TropicalGraph(["v"], ["a", "b", "c"], [("v", "a", INF), ("v", "b", INF), ("v", "c", INF)])
    return ParamTropCurve(g, {"v": center, "a": (0, 1), "b": (-1, -1), "c": (1, 0)})


def loop_curve():
    """Genus one: a loop at v plus the three line ends."""
    g = TropicalGraph(["v"], ["a", "b", "c"], [("v", "v", 2), ("v", "a", INF), ("v", "b", INF), ("v", "c", INF)])
    return ParamTropCurve(g, {"v": (0, 0), "a": (0, 1), "b": (-1, -1), "c": (1, 0)})


@lru_cache(maxsize=None)
def witness_pool():
    out = []
    for d in (LINE, DELTA2):
        for g in (0, 1):
            res = enumerate_types(d, g, 6)
            out.extend(res.witnesses[t] for t in res.types)
    return tuple(out)


def oracle_types(d, g, r, contracted=0):
    """Oracle representatives converted to unordered-end combinatorial types."""
    from oracles import brute_force_types
    from tropzar.tropical_curve import CombinatorialType, canonical_form, sign_normalize

    out = set()
    for v, es, labels, w in brute_force_types(d.entries, g, r, contracted):
        edges = [(a, c, tuple(sign_normalize(w[i]))) for i, (a, c) in enumerate(es)]
        lab, ces = canonical_form([tuple(sorted(x)) for x in labels], edges)
        out.add(CombinatorialType(False, lab, ces))
    return out
