from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperdom.constructions import disjoint_edges, projective_design
from hyperdom.domination import (
    DominationVariant,
    brute_force_oracle,
    certify_at_least,
    cover_problem,
    greedy_solution,
    greedy_upper_bound,
    is_distance_dominating,
    is_dominating,
    is_s_dominating,
    is_s_tuple_dominating,
    min_dominating,
    satisfies,
)
from hyperdom.hypergraph import Hypergraph
from hyperdom.rng import SplitMix64, random_uniform_hypergraph

from .conftest import hypergraphs

V = DominationVariant
param = st.integers(1, 3)
any_variant = st.one_of(
    st.just(V.plain()), param.map(V.s_dominating), param.map(V.s_tuple), param.map(V.distance))


def test_predicate_examples():
    h = disjoint_edges(3, 3)
    assert is_dominating(h, range(h.n))
    assert is_dominating(h, [0, 3, 6])
    assert not is_dominating(h, [0, 3])
    single = Hypergraph(4, [[0, 1, 2, 3]])
    assert is_s_dominating(single, range(4), 3)
    assert is_s_dominating(single, [0, 1], 2)
    assert not is_s_dominating(single, [0], 2)
    assert is_s_tuple_dominating(single, range(4), 4)
    assert is_s_tuple_dominating(single, [1, 2], 2)
    assert not is_s_tuple_dominating(single, [1], 2)
    assert not is_s_tuple_dominating(disjoint_edges(3, 2), [0, 1], 2)
    path = Hypergraph(4, [[0, 1], [1, 2], [2, 3]])
    assert is_distance_dominating(path, [0], 3)
    for l in (1, 2, 5):
        assert is_distance_dominating(h, [1, 4, 7], l)
        assert not is_distance_dominating(h, [1, 4], l)


def test_solver_examples():
    assert min_dominating(disjoint_edges(3, 3)).value == 3
    h, _ = projective_design(2, 2, 2)
    assert (h.n, h.m) == (9, 3)
    assert min_dominating(h).value == 2
    assert brute_force_oracle(h).value == 2
    for s in (1, 2, 3):
        assert min_dominating(Hypergraph(4, [[0, 1, 2, 3]]), V.s_tuple(s)).value == s


def test_empty_set_never_dominates_nonempty():
    h = Hypergraph(3, [[0, 1, 2]])
    assert not is_dominating(h, [])
    assert brute_force_oracle(h).value >= 1


def test_large_design_has_no_two_dominators():
    h, _ = projective_design(3, 3, 3)
    res = certify_at_least(h, V.plain(), 3)
    assert res.status == "lower_bound" and res.lower_bound == 3
    assert res.nodes_explored == 1 + 52 + 52 * 51 // 2
    assert res.certifies_at_least(3)


def test_greedy_examples():
    assert greedy_upper_bound(disjoint_edges(3, 4)) == 4
    assert greedy_upper_bound(Hypergraph(5, [[0, 1, 2, 3, 4]])) == 1


def test_greedy_bounds_exact_on_random_instances():
    rng = SplitMix64(5)
    for _ in range(30):
        h = random_uniform_hypergraph(rng, 12, 3, rng.between(3, 9))
        g = greedy_solution(h)
        assert is_dominating(h, g)
        assert len(g) >= brute_force_oracle(h).value


def test_infeasible_s_tuple():
    h = Hypergraph(3, [[0, 1]])
    res = min_dominating(h, V.s_tuple(2))
    assert res.status == "infeasible" and res.value is None
    assert brute_force_oracle(h, V.s_tuple(2)).status == "infeasible"


def test_budget_exhaustion_is_explicit():
    h, _ = projective_design(2, 3, 2)
    res = min_dominating(h, budget=2)
    assert res.status == "budget_exhausted" and res.value is None
    oracle = brute_force_oracle(h, budget=5)
    assert oracle.status == "budget_exhausted"
    assert not oracle.certifies_at_least(3)


def test_budget_env_override(monkeypatch):
    h, _ = projective_design(2, 3, 2)
    monkeypatch.setenv("HYPERDOM_BUDGET", "3")
    assert min_dominating(h).status == "budget_exhausted"


def test_isolated_vertices_are_reported():
    res = min_dominating(Hypergraph(3, [[0, 1]]))
    assert res.value == 2 and res.warnings


def test_variant_validation():
    with pytest.raises(ValueError):
        V.s_dominating(0)
    with pytest.raises(ValueError):
        V("bogus", 1)


@given(hypergraphs(max_n=9), any_variant)
def test_solver_matches_oracle(h, variant):
    a = min_dominating(h, variant)
    b = brute_force_oracle(h, variant)
    assert (a.status, a.value, a.witness) == (b.status, b.value, b.witness)
    if a.witness is not None:
        assert satisfies(h, a.witness, variant)


@given(hypergraphs(max_n=7), any_variant)
def test_witness_is_lexicographically_least(h, variant):
    res = min_dominating(h, variant)
    if res.status != "optimal":
        return
    first = next(c for c in combinations(range(h.n), res.value) if satisfies(h, c, variant))
    assert res.witness.tolist() == list(first)


@given(hypergraphs(max_n=9))
def test_variants_collapse_at_parameter_one(h):
    values = {min_dominating(h, v).value for v in
              (V.plain(), V.s_dominating(1), V.s_tuple(1), V.distance(1))}
    assert len(values) == 1


@given(hypergraphs(max_n=9, isolate_free=True), st.integers(1, 3))
def test_s_domination_at_most_s_tuple(h, s):
    tup = min_dominating(h, V.s_tuple(s))
    if tup.status == "optimal":
        assert min_dominating(h, V.s_dominating(s)).value <= tup.value
        assert tup.value - (s - 1) >= min_dominating(h, V.s_tuple(1)).value


@given(hypergraphs(max_n=8), any_variant, st.data())
def test_adding_an_edge_never_increases(h, variant, data):
    edge = data.draw(st.lists(st.integers(0, h.n - 1), min_size=1, max_size=min(h.n, 4),
                              unique=True))
    before = min_dominating(h, variant)
    after = min_dominating(h.with_edge(edge), variant)
    if before.status == "optimal":
        assert after.status == "optimal" and after.value <= before.value


@given(hypergraphs(max_n=8), any_variant)
def test_cover_problem_is_symmetric(h, variant):
    coverers, _, _ = cover_problem(h, variant)
    for u in range(h.n):
        for v in range(h.n):
            assert (coverers[u] >> v & 1) == (coverers[v] >> u & 1)


def test_pure_fallback_gives_same_answers(monkeypatch):
    from hyperdom import _backend, _pykernels

    h, _ = projective_design(2, 3, 2)
    compiled = brute_force_oracle(h, V.s_dominating(2), max_size=3)
    monkeypatch.setattr(_backend, "first_satisfying", _pykernels.first_satisfying)
    pure = brute_force_oracle(h, V.s_dominating(2), max_size=3)
    assert compiled == pure
