"""JSON encodings of the package's objects, plus SVG rendering of curve images.

Rationals inside reports are written as {"num": a, "den": b}. The curve
schema keeps its own compact form: lengths are strings ("3/2" or "inf") and
vertex positions are pairs of [num, den] pairs.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Optional

from .tropical_curve import INF, Edge, ParamTropCurve, Point, Ray, Segment, TropicalGraph, image_segments


class InputError(ValueError):
    """Malformed input data (maps to exit status 3 on the command line)."""


def parse_q(x: Any) -> Fraction:
    """Accept an int, a "a/b" string, a [num, den] pair or a {"num","den"} dict."""
    try:
        if isinstance(x, dict):
            return Fraction(int(x["num"]), int(x["den"]))
        if isinstance(x, (list, tuple)):
            if len(x) != 2:
                raise InputError(f"rational pair must have two entries: {x!r}")
            return Fraction(int(x[0]), int(x[1]))
        if isinstance(x, float):
            raise InputError(f"floats are not exact, write {x!r} as a fraction")
        return Fraction(x)
    except (KeyError, ValueError, ZeroDivisionError, TypeError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"not a rational number: {x!r}") from exc


def q_json(x) -> Any:
    """Exact JSON form of a rational; integers are tagged too, so consumers
    never have to guess."""
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def to_jsonable(obj: Any) -> Any:
    """Recursively convert Fractions, tuples and INF into JSON-ready values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return q_json(obj)
    if obj is INF:
        return "inf"
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True) + "\n"


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


# --- tropical curves ----------------------------------------------------------


def _length_str(ln) -> str:
    return "inf" if ln is INF else str(ln)


def curve_to_json(c: ParamTropCurve) -> dict:
    g = c.graph
    return {
        "finite": [str(v) for v in g.finite_vertices],
        "infinite": [str(v) for v in g.infinite_vertices],
        "edges": [[str(e.u), str(e.v), _length_str(e.length)] for e in g.edges],
        "h": {
            str(v): [[p.numerator, p.denominator] for p in c.h[v]]
            for v in g.vertices
            if v in c.h
        },
    }


def curve_from_json(data: dict) -> ParamTropCurve:
    try:
        fin = [str(v) for v in data["finite"]]
        inf = [str(v) for v in data["infinite"]]
        edges = []
        for item in data["edges"]:
            u, v, ln = item
            ln = INF if ln == "inf" else parse_q(ln)
            edges.append(Edge(str(u), str(v), ln))
        h = {str(k): (parse_q(p[0]), parse_q(p[1])) for k, p in data.get("h", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed curve: {exc}") from exc
    return ParamTropCurve(TropicalGraph(fin, inf, edges), h)


# --- SVG ------------------------------------------------------------------------


def _clip_ray(origin, d, bbox) -> Optional[tuple]:
    """Clip origin + s*d (s >= 0) to the box; None when it misses the box."""
    xmin, ymin, xmax, ymax = bbox
    lo, hi = Fraction(0), None
    for o, dd, a, b in ((origin[0], d[0], xmin, xmax), (origin[1], d[1], ymin, ymax)):
        if dd == 0:
            if not a <= o <= b:
                return None
            continue
        s1, s2 = (a - o) / dd, (b - o) / dd
        s1, s2 = min(s1, s2), max(s1, s2)
        lo = max(lo, s1)
        hi = s2 if hi is None else min(hi, s2)
    if hi is None or lo > hi:
        return None
    return ((origin[0] + lo * d[0], origin[1] + lo * d[1]), (origin[0] + hi * d[0], origin[1] + hi * d[1]))


def _clip_segment(a, b, bbox) -> Optional[tuple]:
    d = (b[0] - a[0], b[1] - a[1])
    r = _clip_ray(a, d, bbox)
    if r is None:
        return None
    # restrict the parameter to [0, 1]
    s_lo = _param(a, d, r[0])
    s_hi = _param(a, d, r[1])
    if s_lo > 1:
        return None
    s_hi = min(s_hi, Fraction(1))
    return ((a[0] + s_lo * d[0], a[1] + s_lo * d[1]), (a[0] + s_hi * d[0], a[1] + s_hi * d[1]))


def _param(a, d, p) -> Fraction:
    return (p[0] - a[0]) / d[0] if d[0] != 0 else (p[1] - a[1]) / d[1]


def _num(x: Fraction) -> str:
    # fixed 4-decimal rendering keeps the output byte-stable
    return f"{float(x):.4f}"


def default_bbox(c: ParamTropCurve, margin: int = 2) -> tuple:
    pts = [c.h[v] for v in c.graph.finite_vertices] or [(Fraction(0), Fraction(0))]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    return (min(xs) - margin, min(ys) - margin, max(xs) + margin, max(ys) + margin)


def render_svg(c: ParamTropCurve, bbox: Optional[Iterable] = None, size: int = 400) -> str:
    bbox = tuple(Fraction(x) for x in bbox) if bbox is not None else default_bbox(c)
    xmin, ymin, xmax, ymax = bbox
    if xmax <= xmin or ymax <= ymin:
        raise InputError("empty bounding box")
    sx, sy = size / (xmax - xmin), size / (ymax - ymin)

    def px(p):
        # SVG y grows downward
        return _num((p[0] - xmin) * sx), _num((ymax - p[1]) * sy)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white" stroke="none"/>',
    ]
    for item in image_segments(c):
        if isinstance(item, Segment):
            clipped = _clip_segment(item.start, item.end, bbox)
            cls = "bounded"
        elif isinstance(item, Ray):
            clipped = _clip_ray(item.origin, item.direction, bbox)
            cls = "end"
        else:
            continue
        if clipped is None:
            continue
        (x1, y1), (x2, y2) = px(clipped[0]), px(clipped[1])
        lines.append(
            f'<line class="{cls}" data-edge="{item.edge}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="black" stroke-width="2"/>'
        )
    for item in image_segments(c):
        if isinstance(item, Point):
            x, y = px(item.at)
            lines.append(f'<circle class="contracted" data-edge="{item.edge}" cx="{x}" cy="{y}" r="4" fill="red"/>')
    for v in c.graph.finite_vertices:
        p = c.h[v]
        if xmin <= p[0] <= xmax and ymin <= p[1] <= ymax:
            x, y = px(p)
            lines.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="3" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
