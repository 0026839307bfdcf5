"""Rational curves on the weighted projective planes S_q and the surfaces S'_q
over F_{p^n}: parametrizations by torus characters, critical points, branch
invariants, intersections, and the reducibility numerology of Severi varieties.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .gf import (
    GF,
    FqElement,
    distinct_root_count,
    embedding,
    field,
    pdeg,
    pgcd,
    pmul,
    prime_power,
    ptrim,
    radical,
    roots_in_field,
    series_div,
    taylor_shift,
)
from .lattice_toric import boundary_length, interior_points, standard_surfaces, zariski_bound

S_Q = "S_q"
S_QPRIME = "S'_q"
_VARIANT_ALIASES = {"s": S_Q, "S_q": S_Q, "sq": S_Q, "sprime": S_QPRIME, "S'_q": S_QPRIME, "sqprime": S_QPRIME}


def variant_name(v: str) -> str:
    try:
        return _VARIANT_ALIASES[v]
    except KeyError:
        raise ValueError(f"unknown surface variant {v!r} (use s or sprime)") from None


def surface(q: int, variant: str):
    shape = "triangle" if variant_name(variant) == S_Q else "parallelogram"
    return standard_surfaces(q, shape)


class DegenerateInput(ValueError):
    """Curves or parameters in special position."""


class TruncationError(ArithmeticError):
    """The jets are too short to determine the conductor."""


@dataclass(frozen=True)
class Character:
    chi_e1: FqElement
    chi_e2: FqElement

    def __post_init__(self):
        if not self.chi_e1 or not self.chi_e2:
            raise ValueError("character values must be units")
        if self.chi_e1.field is not self.chi_e2.field:
            raise ValueError("character values lie in different fields")

    @property
    def field(self) -> GF:
        return self.chi_e1.field

    def __call__(self, m: Sequence[int]) -> FqElement:
        return self.chi_e1 ** m[0] * self.chi_e2 ** m[1]

    def to_json(self):
        return {"chi_e1": self.chi_e1.to_json(), "chi_e2": self.chi_e2.to_json()}


@dataclass(frozen=True)
class ParamCurveCharP:
    """Rational curve t -> torus. On S_q the boundary points are t = 0, 1, inf;
    on S'_q they are t = 0, 1, xi, inf and xi is the remaining cross-ratio
    modulus of the (1,1)-curve."""

    q: int
    variant: str
    character: Character
    xi: Optional[FqElement] = None

    def __post_init__(self):
        object.__setattr__(self, "variant", variant_name(self.variant))
        p, _ = prime_power(self.q)
        if p != self.field.p:
            raise ValueError(f"q={self.q} is not a power of the characteristic {self.field.p}")
        if self.variant == S_QPRIME:
            if self.xi is None:
                raise ValueError("S'_q curves need the parameter xi")
            if self.xi.field is not self.field:
                raise ValueError("xi lies in a different field")
            if self.xi in (self.field.zero, self.field.one):
                raise DegenerateInput("xi must avoid 0 and 1")
        elif self.xi is not None:
            raise ValueError("xi only applies to S'_q")

    @property
    def field(self) -> GF:
        return self.character.field

    @property
    def p(self) -> int:
        return self.field.p

    def rays(self) -> list[tuple[int, int]]:
        if self.variant == S_Q:
            return [(0, 1), (self.q, 1)]
        return [(0, 1), (self.q, 1), (0, -1)]

    def roots(self) -> list[FqElement]:
        f = self.field
        return [f.zero, f.one] if self.variant == S_Q else [f.zero, f.one, self.xi]

    def to_json(self):
        out = {"q": self.q, "variant": self.variant, "p": self.p, "n": self.field.n, "character": self.character}
        if self.xi is not None:
            out["xi"] = self.xi.to_json()
        return out


@dataclass(frozen=True)
class RationalFunction:
    """coeff * prod (t - root)^exp."""

    coeff: FqElement
    factors: tuple

    def __call__(self, t: FqElement) -> FqElement:
        out = self.coeff
        for root, e in self.factors:
            out = out * (t - root) ** e
        return out

    def expansion(self, t0: FqElement, order: int) -> list[FqElement]:
        """Taylor coefficients in s = t - t0."""
        f = t0.field
        num, den = [self.coeff], [f.one]
        for root, e in self.factors:
            lin = taylor_shift([-root, f.one], t0)
            for _ in range(abs(e)):
                if e > 0:
                    num = pmul(num, lin)
                else:
                    den = pmul(den, lin)
        return series_div(num, den, order)

    def __str__(self):
        parts = [] if self.coeff == self.coeff.field.one else [f"({self.coeff!r})"]
        for root, e in self.factors:
            base = "t" if not root else f"(t-{root!r})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts) or "1"

    def to_json(self):
        return {"coeff": self.coeff.to_json(), "factors": [[r.to_json(), e] for r, e in self.factors]}


def pullback(c: ParamCurveCharP, m: Sequence[int]) -> RationalFunction:
    """f^*(x^m) = chi(m) prod_i (t - a_i)^<n_i, m> over the finite boundary points."""
    factors = []
    for root, n in zip(c.roots(), c.rays()):
        e = n[0] * m[0] + n[1] * m[1]
        if e:
            factors.append((root, e))
    return RationalFunction(c.character(m), tuple(factors))


def _log_derivative_numerator(c: ParamCurveCharP, m: Sequence[int]) -> list:
    f = c.field
    roots = c.roots()
    out: list = []
    for i, (root, n) in enumerate(zip(roots, c.rays())):
        e = (n[0] * m[0] + n[1] * m[1]) % c.p
        if not e:
            continue
        term = [f(e)]
        for j, other in enumerate(roots):
            if j != i:
                term = pmul(term, [-other, f.one])
        out = term if not out else ptrim([a + b for a, b in _pad(out, term)])
    return out


def _pad(a, b):
    z = (a or b)[0].field.zero
    n = max(len(a), len(b))
    return zip(list(a) + [z] * (n - len(a)), list(b) + [z] * (n - len(b)))


def critical_polynomial(c: ParamCurveCharP) -> list:
    """Monic gcd of the log-derivative numerators for m = e1, e2."""
    g: list = []
    for m in ((1, 0), (0, 1)):
        g = pgcd(g, _log_derivative_numerator(c, m)) if g else _log_derivative_numerator(c, m)
    return g


def critical_points(c: ParamCurveCharP) -> list[FqElement]:
    """Parameters in the field where df vanishes; raises if some lie outside it."""
    if c.variant == S_Q and c.p == 2:
        raise DegenerateInput("S_q curves are only treated for p > 2")
    g = critical_polynomial(c)
    if not g:
        raise DegenerateInput("the differential vanishes identically")
    pts = roots_in_field(g, c.field)
    if len(pts) != pdeg(radical(g)):
        raise ArithmeticError(f"critical points not all rational over {c.field}; extend the field")
    return sorted(pts, key=lambda z: z.v)


def _check_chart(c: ParamCurveCharP, t0: FqElement):
    if t0.field is not c.field:
        raise ValueError("parameter lies in a different field")
    if t0 in c.roots():
        raise DegenerateInput(f"t0={t0!r} maps to the toric boundary")


@dataclass(frozen=True)
class BranchGerm:
    u: tuple
    v: tuple
    order: int

    def __post_init__(self):
        if len(self.u) != self.order or len(self.v) != self.order:
            raise ValueError("series length must equal the truncation order")
        if self.u[0] or self.v[0]:
            raise ValueError("germ coordinates must vanish at the origin")

    @staticmethod
    def monomial(f: GF, a: int, b: int, order: int) -> "BranchGerm":
        """The germ (t^a, t^b)."""
        u = [f.zero] * order
        v = [f.zero] * order
        if a < order:
            u[a] = f.one
        if b < order:
            v[b] = f.one
        return BranchGerm(tuple(u), tuple(v), order)

    def orders(self) -> tuple[Optional[int], Optional[int]]:
        return _ord(self.u), _ord(self.v)


def _ord(series) -> Optional[int]:
    return next((i for i, a in enumerate(series) if a), None)


def branch_germ(c: ParamCurveCharP, t0: FqElement, order: Optional[int] = None) -> BranchGerm:
    _check_chart(c, t0)
    order = order or 4 * c.q
    coords = []
    for m in ((1, 0), (0, 1)):
        s = pullback(c, m).expansion(t0, order)
        s[0] = c.field.zero
        coords.append(tuple(s))
    return BranchGerm(coords[0], coords[1], order)


def local_orders(c: ParamCurveCharP, t0: FqElement) -> tuple[int, int]:
    """Vanishing orders at t0 of the two torus coordinates recentred at f(t0)."""
    a, b = branch_germ(c, t0).orders()
    if a is None or b is None:
        raise TruncationError("coordinate vanishes beyond the default truncation")
    return a, b


def df_order(c: ParamCurveCharP, t0: FqElement) -> int:
    """Order of vanishing of df at t0 (min over the two coordinate derivatives)."""
    g = branch_germ(c, t0)
    best = None
    for s in (g.u, g.v):
        d = [a * k for k, a in enumerate(s)][1:]
        o = _ord(d)
        if o is not None:
            best = o if best is None else min(best, o)
    if best is None:
        raise TruncationError("df vanishes to the truncation order")
    return best


@dataclass(frozen=True)
class SemigroupData:
    elements: tuple  # semigroup elements below the conductor
    conductor: int
    delta: int
    multiplicity: int

    def to_json(self):
        return {"elements_below_conductor": list(self.elements), "conductor": self.conductor,
                "delta": self.delta, "multiplicity": self.multiplicity}


def _mul_trunc(a, b, order):
    f = a[0].field
    out = [f.zero] * order
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(order - i):
            y = b[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def value_semigroup(g: BranchGerm) -> SemigroupData:
    """Orders of all power series in (u, v), from an echelon form of the
    truncated monomials u^i v^j."""
    T = g.order
    ou, ov = g.orders()
    if ou is None or ov is None:
        raise TruncationError("a germ coordinate vanishes to the truncation order")
    f = g.u[ou].field
    one = [f.one] + [f.zero] * (T - 1)
    pivots: dict[int, list] = {}

    def insert(vec):
        vec = list(vec)
        while True:
            k = _ord(vec)
            if k is None:
                return
            if k not in pivots:
                inv = vec[k].inverse()
                pivots[k] = [a * inv for a in vec]
                return
            row = pivots[k]
            c = vec[k]
            vec = [a - c * b for a, b in zip(vec, row)]

    upow = one
    i = 0
    while i * ou < T:
        mono = upow
        j = 0
        while i * ou + j * ov < T:
            insert(mono)
            mono = _mul_trunc(mono, g.v, T)
            j += 1
        upow = _mul_trunc(upow, g.u, T)
        i += 1
    S = set(pivots)
    m = min(ou, ov)
    cond = next((c for c in range(T - m + 1) if all(c + k in S for k in range(m))), None)
    if cond is None:
        raise TruncationError(f"truncation order {T} is below the conductor; raise it")
    gaps = [n for n in range(cond) if n not in S]
    return SemigroupData(tuple(sorted(n for n in S if n < cond)), cond, len(gaps), m)


def delta_invariant(g: BranchGerm) -> int:
    data = value_semigroup(g)
    # plane branches are Gorenstein: conductor = 2 delta
    if data.conductor != 2 * data.delta:
        raise ArithmeticError(f"conductor {data.conductor} != 2*delta {2 * data.delta}; germ is not a plane branch")
    return data.delta


# --- intersections on S_q ------------------------------------------------------

M1 = (1, 0)


def _m2(q: int) -> tuple[int, int]:
    return (-1, q)


@dataclass(frozen=True)
class Intersection:
    s: FqElement
    s_prime: FqElement
    multiplicity: int
    point: tuple
    in_torus: bool

    def to_json(self):
        return {"s": self.s.to_json(), "s_prime": self.s_prime.to_json(), "multiplicity": self.multiplicity,
                "point": [x.to_json() for x in self.point] if self.point else None, "in_torus": self.in_torus}


def torus_point(c: ParamCurveCharP, t: FqElement) -> tuple[FqElement, FqElement]:
    return pullback(c, (1, 0))(t), pullback(c, (0, 1))(t)


def intersect_sq(c: ParamCurveCharP, c2: ParamCurveCharP) -> Intersection:
    """Common point of two rational curves in |L_q| by the radical formulas:
    with m1 = (1,0), m2 = (-1,q) both curves pull x^{m1}, x^{m2} back to
    q-th powers, so s^q and s'^q solve a 2x2 linear system."""
    for cc in (c, c2):
        if cc.variant != S_Q:
            raise ValueError("intersect_sq needs S_q curves")
        if cc.p == 2:
            raise DegenerateInput("S_q curves are only treated for p > 2")
    if c.q != c2.q or c.field is not c2.field:
        raise ValueError("curves on different surfaces or fields")
    q = c.q
    chi, chi2 = c.character, c2.character
    if chi == chi2:
        raise DegenerateInput("identical characters describe the same curve")
    m1, m2 = M1, _m2(q)
    den = chi(m1) * chi2(m2) - chi2(m1) * chi(m2)
    if not den:
        raise DegenerateInput("curves in special position (vanishing denominator)")
    X = chi2(m2) * (chi(m1) - chi2(m1)) / den
    Y = chi(m2) * (chi(m1) - chi2(m1)) / den
    s, s2 = X.qth_root(q), Y.qth_root(q)
    f = c.field
    in_torus = all(z not in (f.zero, f.one) for z in (s, s2))
    point = ()
    if in_torus:
        point = torus_point(c, s)
        if point != torus_point(c2, s2):
            raise ArithmeticError("radical formulas failed to produce a common point")
    mult = _area2(q, S_Q)
    return Intersection(s, s2, mult, point, in_torus)


def _area2(q, variant):
    from .lattice_toric import area2

    return area2(surface(q, variant).polygon)


def scan_intersections(c: ParamCurveCharP, c2: ParamCurveCharP) -> list[tuple[FqElement, FqElement]]:
    """All (s, s') in the torus chart over the base field with f(s) = f'(s')."""
    f = c.field
    image: dict = {}
    for t in f.elements():
        if t not in c2.roots():
            image.setdefault(torus_point(c2, t), []).append(t)
    out = []
    for t in f.elements():
        if t in c.roots():
            continue
        for t2 in image.get(torus_point(c, t), []):
            out.append((t, t2))
    return sorted(out, key=lambda st: (st[0].v, st[1].v))


# --- S'_q ----------------------------------------------------------------------


def singular_polynomial(c: ParamCurveCharP) -> list:
    """Numerator of the derivative of t(t-1)/(t-xi): t^2 - 2 xi t + xi."""
    f = c.field
    return ptrim([c.xi, f(-2) * c.xi, f.one])


def singular_count_sqprime(c: ParamCurveCharP) -> int:
    if c.variant != S_QPRIME:
        raise ValueError("singular_count_sqprime needs an S'_q curve")
    return distinct_root_count(singular_polynomial(c))


def genus_budget_check(q: int, variant: str, deltas: Sequence[int]) -> bool:
    return sum(deltas) == interior_points(surface(q, variant).polygon)


def sqprime_base_field(q: int) -> GF:
    """Field carrying the xi parameters: F_q, except F_4 for q = 2 (F_2 has no
    admissible xi)."""
    p, r = prime_power(q)
    return field(p, r if q > 2 else 2)


def sqprime_curves(q: int, chi: Optional[tuple] = None):
    """(xi in base field, curve over the quadratic extension) for every admissible xi."""
    base = sqprime_base_field(q)
    big = field(base.p, 2 * base.n)
    emb = embedding(base, big)
    c1, c2 = chi or (big.one, big.one)
    for xi in base.elements():
        if xi in (base.zero, base.one):
            continue
        yield xi, ParamCurveCharP(q, S_QPRIME, Character(c1, c2), emb(xi))


# --- suites ----------------------------------------------------------------------


def default_extension(p: int, r: int) -> int:
    """Extension degree used for S_q experiments: large enough for non-trivial
    characters, small enough for the exhaustive oracle."""
    return max(2, r + 1)


def random_unit(rng: random.Random, f: GF) -> FqElement:
    return f.element(rng.randrange(1, f.size))


def sq_suite(p: int, r: int, n: Optional[int] = None, pairs: int = 20, seed: int = 0,
             oracle_limit: int = 125, chi: Optional[tuple] = None) -> dict:
    """Critical point, branch invariants and pairwise intersections for S_q."""
    q = p**r
    if p == 2:
        raise DegenerateInput("S_q curves are only treated for p > 2")
    F = field(p, n or default_extension(p, r))
    rng = random.Random(seed)
    base = Character(*(chi or (F.one, F.one)))
    c = ParamCurveCharP(q, S_Q, base)
    crit = critical_points(c)
    half = F(2).inverse()
    germ = branch_germ(c, crit[0])
    sg = value_semigroup(germ)
    delta = delta_invariant(germ)
    interior = interior_points(surface(q, S_Q).polygon)
    checks = {
        "unique_critical_point": len(crit) == 1,
        "critical_point_is_half": crit == [half],
        "local_orders": local_orders(c, crit[0]) == (q, 2),
        "delta": delta == (q - 1) // 2,
        "genus_budget": genus_budget_check(q, S_Q, [delta]),
    }
    rows, skipped = [], 0
    use_oracle = F.size <= oracle_limit
    while len(rows) < pairs:
        if skipped > 50 * pairs:
            raise RuntimeError("could not draw enough generic character pairs")
        a = ParamCurveCharP(q, S_Q, Character(random_unit(rng, F), random_unit(rng, F)))
        b = ParamCurveCharP(q, S_Q, Character(random_unit(rng, F), random_unit(rng, F)))
        try:
            x = intersect_sq(a, b)
        except DegenerateInput:
            skipped += 1
            continue
        if not x.in_torus:
            skipped += 1
            continue
        row = {"chi": a.character, "chi_prime": b.character, "intersection": x}
        if use_oracle:
            scan = scan_intersections(a, b)
            row["oracle"] = [[s.to_json(), t.to_json()] for s, t in scan]
            row["oracle_agrees"] = scan == [(x.s, x.s_prime)]
        rows.append(row)
    checks["intersections_match_oracle"] = all(r.get("oracle_agrees", True) for r in rows)
    checks["multiplicity"] = all(r["intersection"].multiplicity == q for r in rows)
    return {
        "q": q, "p": p, "r": r, "field": {"p": p, "n": F.n, "modulus": list(F.modulus)},
        "critical_points": [z.to_json() for z in crit],
        "local_orders": list(local_orders(c, crit[0])),
        "semigroup": sg, "delta": delta, "interior_points": interior,
        "df_order": df_order(c, crit[0]),
        "pairs": rows, "skipped_pairs": skipped, "oracle_used": use_oracle,
        "checks": checks, "ok": all(checks.values()),
    }


def sqprime_suite(p: int, r: int, xi: Optional[int] = None) -> dict:
    """Singular points of S'_q curves for every admissible xi (or one, given by
    its index in the base field)."""
    q = p**r
    interior = interior_points(surface(q, S_QPRIME).polygon)
    expected = 1 if p == 2 else 2
    rows = []
    base = sqprime_base_field(q)
    for x, c in sqprime_curves(q):
        if xi is not None and x.v != xi:
            continue
        count = singular_count_sqprime(c)
        pts = roots_in_field(singular_polynomial(c), c.field)
        deltas, orders, dfo = [], [], []
        for t0 in pts:
            g = branch_germ(c, t0)
            deltas.append(delta_invariant(g))
            orders.append(list(g.orders()))
            dfo.append(df_order(c, t0))
        unibranch = len({torus_point(c, t) for t in c.field.elements() if t not in c.roots()}) == c.field.size - 3
        rows.append({
            "xi": x.to_json(), "xi_index": x.v, "singular_count": count, "rational_singular_points": len(pts),
            "deltas": deltas, "local_orders": orders, "df_orders": dfo, "injective_on_points": unibranch,
            "ok": count == expected == len(pts) and genus_budget_check(q, S_QPRIME, deltas) and unibranch,
        })
    if xi is not None and not rows:
        raise ValueError(f"xi index {xi} is not admissible in {base}")
    return {
        "q": q, "p": p, "r": r, "base_field": {"p": p, "n": base.n, "modulus": list(base.modulus)},
        "expected_singular_count": expected, "interior_points": interior, "per_xi": rows,
        "ok": all(row["ok"] for row in rows),
    }


# --- Severi numerology ------------------------------------------------------------


@lru_cache(maxsize=None)
def component_condition(q: int, variant: str) -> dict:
    """-K.C_i minus the total vanishing order of df on a rational component,
    computed from an actual parametrization."""
    variant = variant_name(variant)
    p, r = prime_power(q)
    minus_k = boundary_length(surface(q, variant).polygon)
    if variant == S_Q:
        F = field(p, default_extension(p, r))
        c = ParamCurveCharP(q, S_Q, Character(F.one, F.one))
        pts = critical_points(c)
    else:
        _, c = next(sqprime_curves(q))
        pts = roots_in_field(singular_polynomial(c), c.field)
    orders = [df_order(c, t) for t in pts]
    return {"minus_K_dot_C": minus_k, "df_orders": orders, "value": minus_k - sum(orders)}


def _half(x: int) -> Optional[int]:
    return x // 2 if x % 2 == 0 else None


def severi_numerology(d: int, q: int, g: int, variant: str, p: Optional[int] = None) -> dict:
    """Evaluate the genus range, node counts and dimensions behind the
    reducibility of V^irr(S, L^d, g); failed conditions are named."""
    variant = variant_name(variant)
    pq, r = prime_power(q)
    if p is not None and p != pq:
        raise ValueError(f"q={q} is not a power of p={p}")
    p = pq
    surf = surface(q, variant)
    pa_E = interior_points(surf.polygon)
    minus_kc = boundary_length(surf.polygon.scale(d))
    failed: list[str] = []
    notes: list[str] = []
    if d < 2:
        failed.append("d>=2")
    if g < 1:
        failed.append("g>=1")
    if variant == S_Q:
        if p == 2:
            failed.append("p>2")
        lower = Fraction(q - 1, 2)
        upper_mixed = Fraction(2 * d * q - 2 * d - q - 1, 2)
        upper_nodeless = Fraction((d - 1) * (d - 2), 2)
        names = ("g>=(q-1)/2", "g<=(2dq-2d-q-1)/2", "g<=(d-1)(d-2)/2")
        nodes = (d - 1) * q
        marked2 = 2 * d * q - 2 * d - q + 1 - 2 * g
        k2 = 2 * g + 2 * d - q - 1
        marked, k = _half(marked2), _half(k2)
        if marked is None or k is None:
            failed.append("parity:(2d-q-1)/2 integral")
            notes.append("q even: marked node count and k are not integers")
        dim_formula = 3 * d + g - 1
    else:
        lower = Fraction(q - 1)
        upper_mixed = Fraction(2 * d * q - q - d - 1)
        upper_nodeless = Fraction((d - 1) ** 2)
        names = ("g>=q-1", "g<=2dq-q-d-1", "g<=(d-1)^2")
        nodes = 2 * q * (d - 1)
        marked = 2 * d * q - q - d - g
        k = g - q + d
        dim_formula = 4 * d + g - 1
    if g < lower:
        failed.append(names[0])
    if g > upper_mixed:
        failed.append(names[1])
    if g > upper_nodeless:
        failed.append(names[2])
    pa_Cprime = None if k is None else pa_E + k - (d - 1)
    expected_dim = zariski_bound(minus_kc, 0, g, False)
    derived = {}
    if marked is not None and k is not None:
        derived = {"at_least_one_marked_node": marked >= 1, "unmarked_node_on_each_rational_component": k >= d - 1,
                   "node_split_consistent": marked + k == nodes, "p_a_reconstructs_genus": pa_Cprime == g}
    deform_cond = None
    if not (variant == S_Q and p == 2):
        cond = component_condition(q, variant)
        minus_ke = boundary_length(surf.polygon)
        deform_cond = {"E": {"minus_K_dot_C": minus_ke, "df_orders": [], "value": minus_ke}, "rational_component": cond}
        if min(cond["value"], minus_ke) <= 0:
            failed.append("deformation_condition")
    in_range = not failed
    nodal_exists = in_range and all(derived.values())
    nodeless_exists = in_range
    return {
        "d": d, "q": q, "p": p, "g": g, "variant": variant,
        "genus_range": {"lower": lower, "upper": min(upper_mixed, upper_nodeless),
                        "upper_mixed": upper_mixed, "upper_nodeless": upper_nodeless},
        "in_range": in_range, "failed_bounds": failed, "notes": notes,
        "minus_K_dot_C": minus_kc, "expected_dim": expected_dim, "expected_dim_formula": dim_formula,
        "p_a_E": pa_E, "nodes": nodes, "marked_nodes": marked, "k": k, "p_a_Cprime": pa_Cprime,
        "derived_checks": derived, "deformation_condition": deform_cond,
        "nodeless_component": nodeless_exists, "nodal_component": nodal_exists,
        "reducible": nodeless_exists and nodal_exists,
    }
