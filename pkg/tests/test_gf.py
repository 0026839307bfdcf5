import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from tropzar.gf import (
    GF,
    conway_like_modulus,
    distinct_root_count,
    embedding,
    field,
    pdivmod,
    peval,
    pmul,
    poly_from_roots,
    prime_power,
    radical,
    roots_in_field,
    series_div,
    taylor_shift,
)

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (5, 2), (3, 3)]
X = sympy.Symbol("x")


@st.composite
def field_and_elements(draw, k=3):
    p, n = draw(st.sampled_from(FIELDS))
    f = field(p, n)
    return f, [f.element(draw(st.integers(0, f.size - 1))) for _ in range(k)]


@given(field_and_elements())
def test_field_axioms(fe):
    f, (a, b, c) = fe
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + f.zero == a and a * f.one == a and a - a == f.zero
    if a:
        assert a * a.inverse() == f.one and (b / a) * a == b
    assert a ** f.size == a
    # Frobenius is additive
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()


@given(field_and_elements(1), st.integers(1, 3))
def test_qth_roots(fe, r):
    f, (a,) = fe
    q = f.p ** r
    assert a.qth_root(q) ** q == a


@pytest.mark.parametrize("p,n", [f for f in FIELDS if f[1] > 1] + [(7, 2), (2, 5), (5, 3)])
def test_modulus_is_primitive_irreducible(p, n):
    mod = conway_like_modulus(p, n)
    poly = sympy.Poly(list(reversed(mod)), X, modulus=p)
    assert poly.is_irreducible and poly.degree() == n and poly.LC() == 1
    f = field(p, n)
    g = f.generator
    order = f.size - 1
    assert all(g ** (order // r) != f.one for r in sympy.primefactors(order))


def test_prime_field_generator():
    for p in (2, 3, 5, 7):
        f = field(p)
        assert len({f.generator ** k for k in range(p - 1)}) == p - 1
    with pytest.raises(ValueError):
        conway_like_modulus(5, 1)


def test_prime_power():
    assert prime_power(9) == (3, 2) and prime_power(2) == (2, 1) and prime_power(125) == (5, 3)
    for bad in (1, 6, 12, 0):
        with pytest.raises(ValueError):
            prime_power(bad)


@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), min_size=2, max_size=8))
def test_radical_matches_sympy(p, coeffs):
    f = field(p)
    a = [f(c % p) for c in coeffs]
    if not any(a[1:]):
        return
    ours = radical(a)
    poly = sympy.Poly(list(reversed([c % p for c in coeffs])), X, modulus=p)
    # over a perfect field the radical is the product of distinct irreducible factors
    factors = poly.factor_list()[1]
    expect = sympy.prod([fac.as_expr() for fac, _ in factors]) if factors else 1
    expect = sympy.Poly(expect, X, modulus=p).monic()
    assert [int(c.v) for c in ours] == [int(c) % p for c in reversed(expect.all_coeffs())]
    assert distinct_root_count(a) == expect.degree()


def test_distinct_roots_examples():
    f9 = field(3, 2)
    i = next(z for z in f9.elements() if z * z == f9(-1))
    sq = pmul([f9.one, f9.zero, f9.one], [f9.one, f9.zero, f9.one])
    assert distinct_root_count(sq) == 2 and sorted(z.v for z in roots_in_field(sq, f9)) == sorted([i.v, (-i).v])
    f3 = field(3)
    assert distinct_root_count(pmul(pmul([f3.one, f3.one], [f3.one, f3.one]), [f3.one, f3.one])) == 1
    f4 = field(2, 2)
    a = f4.generator
    assert distinct_root_count([a, f4.zero, f4.one]) == 1


@pytest.mark.parametrize("small,big", [((3, 1), (3, 2)), ((3, 2), (3, 4)), ((2, 2), (2, 4)), ((2, 1), (2, 3))])
def test_embedding_is_a_homomorphism(small, big):
    s, b = field(*small), field(*big)
    emb = embedding(s, b)
    elems = list(s.elements())
    images = {emb(x) for x in elems}
    assert len(images) == len(elems)
    for x in elems[:9]:
        for y in elems[:9]:
            assert emb(x + y) == emb(x) + emb(y) and emb(x * y) == emb(x) * emb(y)
    with pytest.raises(ValueError):
        embedding(b, s)


@given(field_and_elements(2), st.lists(st.integers(0, 8), min_size=1, max_size=5))
def test_taylor_shift_evaluates_consistently(fe, coeffs):
    f, (t0, s) = fe
    a = [f.element(c % f.size) for c in coeffs]
    assert peval(taylor_shift(a, t0), s) == peval(a, s + t0)


@given(field_and_elements(3))
def test_division_with_remainder(fe):
    f, roots = fe
    a = poly_from_roots(roots, f)
    b = poly_from_roots(roots[:1], f)
    q, r = pdivmod(a, b)
    assert r == [] and pmul(q, b) == a


def test_series_division_geometric():
    f = field(5)
    s = series_div([f.one], [f.one, -f.one], 6)
    assert s == [f.one] * 6
    with pytest.raises(ZeroDivisionError):
        series_div([f.one], [f.zero, f.one], 3)


def test_fields_are_cached_and_picklable():
    import pickle

    f = field(3, 2)
    assert field(3, 2) is f and isinstance(f, GF)
    assert pickle.loads(pickle.dumps(f.element(5))) == f.element(5)
