import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tropzar.lattice_toric import (
    DegeneratePolygon,
    LatticePolygon,
    area2,
    boundary_length,
    convex_hull,
    cross,
    dual_fan,
    edge_degrees,
    integral_length,
    interior_points,
    polygon_report,
    primitive,
    standard_surfaces,
    zariski_bound,
)

UNIT = LatticePolygon([(0, 0), (1, 0), (0, 1)])


def tri(k):
    return standard_surfaces(k, "triangle").polygon


def par(k):
    return standard_surfaces(k, "parallelogram").polygon


def brute_counts(p):
    """(interior, boundary) by testing every point of the bounding box."""
    vs = p.vertices
    xs, ys = [v.x for v in vs], [v.y for v in vs]
    inside = on = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            sides = [cross((b.x - a.x, b.y - a.y), (x - a.x, y - a.y)) for a, b in zip(vs, vs[1:] + vs[:1])]
            if all(s > 0 for s in sides):
                inside += 1
            elif all(s >= 0 for s in sides):
                on += 1
    return inside, on


polygons = st.lists(st.tuples(st.integers(-7, 7), st.integers(-7, 7)), min_size=3, max_size=10)


@given(polygons)
def test_pick_against_point_count(pts):
    hull = convex_hull(pts)
    assume(len(hull) >= 3)
    p = LatticePolygon(hull)
    inside, on = brute_counts(p)
    assert interior_points(p, check=False) == inside
    assert boundary_length(p) == on
    assert area2(p) == 2 * inside + on - 2


@given(polygons)
def test_fan_closes_up(pts):
    hull = convex_hull(pts)
    assume(len(hull) >= 3)
    p = LatticePolygon(hull)
    rays = dual_fan(p).rays
    deg = edge_degrees(p)
    assert all(integral_length(r) == 1 for r in rays)
    assert sum(deg[r] * r[0] for r in rays) == 0 and sum(deg[r] * r[1] for r in rays) == 0
    # consecutive rays turn counterclockwise
    assert all(cross(rays[i], rays[(i + 1) % len(rays)]) > 0 for i in range(len(rays)))


@given(st.integers(-5, 5), st.integers(0, 5), st.integers(0, 5), st.booleans())
def test_zariski_bound_monotone(kc, beta, g, toric):
    b = zariski_bound(kc, beta, g, toric)
    assert zariski_bound(kc, beta + 1, g, toric) >= b
    assert zariski_bound(kc, beta, g + 1, toric) >= b


@pytest.mark.parametrize("v,expect", [((0, 0), 0), ((3, 1), 1), ((4, 6), 2)])
def test_integral_length(v, expect):
    assert integral_length(v) == expect


def test_dual_fans():
    assert set(dual_fan(tri(3)).rays) == {(0, 1), (3, 1), (-3, -2)}
    assert set(dual_fan(LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)])).rays) == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    assert set(dual_fan(par(2)).rays) == {(0, 1), (2, 1), (0, -1), (-2, -1)}


def test_area_boundary_interior_examples():
    assert area2(tri(3)) == 3 and area2(UNIT) == 1 and area2(par(5)) == 10
    for q in (3, 5, 9):
        assert boundary_length(tri(q)) == 3
        assert interior_points(tri(q)) == (q - 1) // 2
    for q in (2, 3, 4, 5):
        assert boundary_length(par(q)) == 4
        assert interior_points(par(q)) == q - 1
    assert boundary_length(LatticePolygon([(0, 0), (2, 0), (2, 2), (0, 2)])) == 8
    assert interior_points(UNIT) == 0


def test_edge_degrees():
    assert edge_degrees(tri(3)) == {(0, 1): 1, (3, 1): 1, (-3, -2): 1}
    for d in (2, 3, 4):
        assert set(edge_degrees(tri(3).scale(d)).values()) == {d}
    assert set(edge_degrees(par(4)).values()) == {1}
    for k in (1, 3, 5, 7):
        assert set(edge_degrees(tri(k)).values()) == {1}


def test_standard_surfaces():
    s = standard_surfaces(3, "triangle")
    assert set(s.polygon.vertices) == {(1, 0), (-1, 3), (0, 0)}
    assert set(s.fan.rays) == {(0, 1), (3, 1), (-3, -2)}
    assert area2(standard_surfaces(1, "triangle").polygon) == 1
    assert set(par(2).vertices) == {(0, 0), (1, 0), (0, 2), (-1, 2)}
    # even k: the third ray is stored primitive
    assert primitive((-4, -2)) in standard_surfaces(4, "triangle").fan.rays
    with pytest.raises(ValueError):
        standard_surfaces(0, "triangle")
    with pytest.raises(ValueError):
        standard_surfaces(2, "hexagon")


def test_zariski_bound_examples():
    assert zariski_bound(0, 3, 0, True) == 2
    for d in (1, 2, 5):
        for g in (0, 2):
            assert zariski_bound(3 * d, 0, g, False) == 3 * d + g - 1
    assert zariski_bound(0, 0, 0, True) == -1


def test_polygon_normalization():
    a = LatticePolygon([(0, 1), (1, 0), (0, 0)])
    b = LatticePolygon([(0, 0), (1, 0), (0, 1)])
    assert a == b and a.vertices[0] == (0, 0)


@pytest.mark.parametrize("vs", [[(0, 0), (1, 0)], [(0, 0), (1, 0), (2, 0)], [(0, 0), (1, 0), (0, 0)],
                                [(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)]])
def test_degenerate_polygons(vs):
    with pytest.raises(DegeneratePolygon):
        LatticePolygon(vs)


def test_report_is_consistent():
    rep = polygon_report(tri(5))
    assert rep["area2"] == 5 and rep["interior"] == 2 and rep["boundary"] == 3
    assert len(rep["rays"]) == 3
