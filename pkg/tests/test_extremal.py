import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperdom.constructions import construction1, construction2, disjoint_edges
from hyperdom.domination import DominationVariant, min_dominating
from hyperdom.extremal import (
    ExtremalQuery,
    SearchTooLarge,
    canonical_form,
    is_isomorphic,
    max_domination_over,
    monotonicity_holds,
    n_min,
)
from hyperdom.hypergraph import Hypergraph
from hyperdom.rng import SplitMix64, random_uniform_hypergraph

from .conftest import hypergraphs

V = DominationVariant


def test_small_maxima():
    assert max_domination_over(3, 2).value == 1
    res = max_domination_over(4, 2)
    assert res.value == 2 and is_isomorphic(res.witness, disjoint_edges(2, 2))
    assert max_domination_over(2, 3).value is None


@pytest.mark.parametrize("k", [2, 3])
def test_disjoint_edges_unique_extremal(k):
    rec = n_min(ExtremalQuery(V.distance(2), k, 2), all_witnesses=True)
    assert rec.n_min == 2 * k
    assert len(rec.witnesses) == 1 and is_isomorphic(rec.witnesses[0], disjoint_edges(k, 2))


def test_n_min_plain():
    rec = n_min(ExtremalQuery(V.plain(), 2, 2))
    assert rec.n_min == 4 and rec.exhaustive
    assert rec.refutations[3] >= 1
    for k in (2, 3, 4):
        assert n_min(ExtremalQuery(V.plain(), k, 1)).n_min == k


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (4, 3), (5, 3), (7, 6)])
@pytest.mark.parametrize("variant", [V.plain(), V.s_dominating(2), V.distance(2), V.distance(3)])
@pytest.mark.parametrize("connected", [False, True])
def test_sparse_search_matches_unpruned(n, k, variant, connected):
    a = max_domination_over(n, k, variant, connected)
    b = max_domination_over(n, k, variant, connected, unpruned=True)
    assert a.value == b.value


def test_sparse_search_matches_unpruned_six_vertices():
    for connected in (False, True):
        a = max_domination_over(6, 2, V.plain(), connected)
        b = max_domination_over(6, 2, V.plain(), connected, unpruned=True)
        assert a.value == b.value


def test_connected_search_small_values():
    # a connected graph on n >= 2 vertices has domination number <= n/2
    for n in range(3, 8):
        assert max_domination_over(n, 2, V.plain(), True).value == n // 2


def test_witness_closure_counts_graphs():
    # connected graphs on 4 vertices with domination number 2: P4 and C4
    rec = n_min(ExtremalQuery(V.plain(), 2, 2, require_connected=True), all_witnesses=True)
    assert rec.n_min == 4 and len(rec.witnesses) == 2


def test_constructions_bound_connected_search():
    # construction sizes are upper bounds for the connected searches that complete
    rec = n_min(ExtremalQuery(V.distance(2), 2, 2, require_connected=True), n_max=8)
    assert rec.n_min is not None
    assert rec.n_min <= construction1(3, 2, 2).n
    assert rec.n_min <= construction2(2, 2, 2)[0].n


def test_guards():
    with pytest.raises(SearchTooLarge):
        max_domination_over(40, 5)
    with pytest.raises(ValueError):
        max_domination_over(4, 2, V.s_tuple(2))
    assert max_domination_over(4, 2, V.s_tuple(2), unpruned=True).value == 4


def test_budget_marks_partial_result():
    res = max_domination_over(6, 2, budget=3)
    assert not res.exhaustive


@given(hypergraphs(max_n=6, isolate_free=True), hypergraphs(max_n=6))
def test_canonical_form_soundness(a, b):
    if canonical_form(a) == canonical_form(b):
        assert min_dominating(a).value == min_dominating(b).value


@given(hypergraphs(max_n=6), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(h, random):
    perm = list(range(h.n))
    random.shuffle(perm)
    g = Hypergraph(h.n, [[perm[v] for v in e] for e in h.edge_list()])
    assert canonical_form(g) == canonical_form(h)


def test_monotonicity_oracle():
    rng = SplitMix64(4)
    for _ in range(60):
        h = random_uniform_hypergraph(rng, 9, 3, rng.between(2, 6))
        edge = rng.sample(range(9), 3)
        for variant in (V.plain(), V.s_dominating(2), V.s_tuple(2), V.distance(2)):
            assert monotonicity_holds(h, edge, variant)


def test_canonical_classes_match_permutation_orbits():
    from itertools import combinations, permutations

    n = 5
    pairs = [sum(1 << v for v in c) for c in combinations(range(n), 2)]
    families = [tuple(p for i, p in enumerate(pairs) if pick >> i & 1)
                for pick in range(1 << len(pairs))]
    by_form = {canonical_form(Hypergraph.from_masks(n, fam)) for fam in families}
    orbits = set()
    for fam in families:
        images = []
        for perm in permutations(range(n)):
            images.append(tuple(sorted(
                sum(1 << perm[v] for v in range(n) if m >> v & 1) for m in fam)))
        orbits.add(min(images))
    assert len(by_form) == len(orbits) == 34
