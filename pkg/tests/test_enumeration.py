import pytest

from curves import CONIC, DELTA2, LINE, oracle_types
from tropzar.enumeration import (
    BudgetExceeded,
    EnumerationBudget,
    check_witness,
    count_types,
    default_jobs,
    enumerate_types,
)
from tropzar.tropical_curve import DegreeSpec, genus, validate

OPPOSITE = DegreeSpec([((1, 0), 1), ((-1, 0), 1)])

BUDGETS = [
    (LINE, 0, 4, 0), (LINE, 0, 6, 0), (LINE, 1, 4, 0), (LINE, 0, 5, 1),
    (DELTA2, 0, 5, 0), (DELTA2, 0, 6, 0), (DELTA2, 1, 4, 0), (DELTA2, 0, 5, 1),
    (CONIC, 0, 5, 0), (CONIC, 0, 6, 0), (CONIC, 1, 4, 0), (CONIC, 0, 6, 2),
    (OPPOSITE, 0, 3, 0), (OPPOSITE, 1, 4, 0), (OPPOSITE, 0, 6, 2),
]


def test_line_has_a_single_type():
    res = enumerate_types(LINE, 0, 4)
    assert res.count == 1
    t = res.types[0]
    assert len(t.vertices) == 1 and t.n_ends == 3 and t.n_bounded == 0


def test_opposite_ends_have_no_stable_tree():
    assert enumerate_types(OPPOSITE, 0, 3).count == 0
    assert count_types(OPPOSITE, 0, 3) == 0


def test_pinned_counts():
    assert count_types(LINE, 0, 4) == 1
    assert count_types(LINE, 1, 4) == len(oracle_types(LINE, 1, 4)) == 8


@pytest.mark.parametrize("d,g,r,c", BUDGETS)
def test_matches_oracle(d, g, r, c):
    assert EnumerationBudget(g, r).edge_bound <= 8
    assert set(enumerate_types(d, g, r, c).types) == oracle_types(d, g, r, c)


@pytest.mark.parametrize("d,g,r,c", BUDGETS)
def test_witnesses_are_sound(d, g, r, c):
    res = enumerate_types(d, g, r, c)
    for t in res.types:
        w = res.witnesses[t]
        assert check_witness(t, w, g, d) == []
        gr = w.graph
        assert validate(w).ok and genus(gr) == g
        assert len(gr.edges) <= len(gr.vertices) + g - 1
        assert 2 * len(gr.edges) == sum(gr.valency(v) for v in gr.vertices)
        assert len(gr.infinite_vertices) < r


def test_contracted_ends_only_on_request():
    plain = enumerate_types(LINE, 0, 5)
    marked = enumerate_types(LINE, 0, 5, allow_contracted=1)
    assert all(all((0, 0) not in v for v in t.vertices) for t in plain.types)
    assert any(any((0, 0) in v for v in t.vertices) for t in marked.types)
    assert marked.count == len(oracle_types(LINE, 0, 5, 1))


def test_parallel_jobs_agree():
    a = enumerate_types(CONIC, 0, 6)
    b = enumerate_types(CONIC, 0, 6, jobs=2)
    assert a.types == b.types
    assert a.to_json() == b.to_json()


def test_budget_errors():
    with pytest.raises(BudgetExceeded):
        enumerate_types(LINE, 5, 20)
    with pytest.raises(BudgetExceeded) as info:
        enumerate_types(CONIC, 1, 6, max_candidates=10)
    assert info.value.partial_count == 0


def test_default_jobs(monkeypatch):
    monkeypatch.setenv("TROPZAR_JOBS", "3")
    assert default_jobs() == 3
    monkeypatch.setenv("TROPZAR_JOBS", "x")
    assert default_jobs() == 1
