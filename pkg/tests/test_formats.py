import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curves import witness_pool, worked_curve
from tropzar.formats import InputError, curve_from_json, curve_to_json, dumps, parse_q, q_json, render_svg
from tropzar.tropical_curve import INF, combinatorial_type, translate

pool = st.sampled_from(range(len(witness_pool())))


@given(st.fractions())
def test_rational_roundtrip(x):
    assert parse_q(q_json(x)) == x
    assert parse_q(str(x)) == x
    assert parse_q([x.numerator, x.denominator]) == x


@pytest.mark.parametrize("bad", [0.5, "abc", [1], [1, 0], {"num": 1}])
def test_parse_q_rejects(bad):
    with pytest.raises(InputError):
        parse_q(bad)


@given(pool, st.tuples(st.fractions(max_denominator=5), st.fractions(max_denominator=5)))
def test_curve_json_roundtrip(i, shift):
    c = translate(witness_pool()[i], shift)
    back = curve_from_json(json.loads(json.dumps(curve_to_json(c))))
    assert curve_to_json(back) == curve_to_json(c)
    assert combinatorial_type(back) == combinatorial_type(c)


def test_curve_json_shape():
    data = curve_to_json(worked_curve())
    assert data["infinite"] == ["q1", "q2", "q3", "q4"]
    assert ["vL", "q1", "inf"] in data["edges"]
    assert data["h"]["vE"] == [[0, 1], [-1, 1]]


def test_malformed_curve():
    with pytest.raises(InputError):
        curve_from_json({"finite": ["a"]})


def test_dumps_is_exact_and_sorted():
    text = dumps({"b": Fraction(1, 3), "a": (INF, 2)})
    assert json.loads(text) == {"a": ["inf", 2], "b": {"num": 1, "den": 3}}
    assert text.index('"a"') < text.index('"b"')


@given(pool)
def test_svg_deterministic(i):
    c = witness_pool()[i]
    assert render_svg(c) == render_svg(c)
    assert render_svg(c, (-3, -3, 3, 3)) == render_svg(c, (-3, -3, 3, 3))


def test_svg_contents():
    svg = render_svg(worked_curve(), (-2, -2, 2, 2))
    assert svg.startswith("<svg")
    assert svg.count('class="end"') == 3
    assert svg.count('class="bounded"') == 1
    assert svg.count('class="contracted"') == 1
    with pytest.raises(InputError):
        render_svg(worked_curve(), (1, 1, 0, 0))
