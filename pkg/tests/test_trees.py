from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperdom.rng import SplitMix64, random_prufer
from hyperdom.trees import (
    Tree,
    all_trees,
    all_trees_prufer,
    canonical_form,
    centers,
    cut_vertex,
    exc_set,
    fork,
    from_prufer,
    longest_path,
    path,
    path_copies,
    r_j_table,
    radius_j_constructive,
    radius_j_exact,
    spider,
    star,
    table_tsv,
    tree_from_spec,
)

prufer_trees = st.integers(3, 12).flatmap(
    lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)).map(from_prufer)


def _isomorphic_brute(a: Tree, b: Tree) -> bool:
    from itertools import permutations

    if a.n != b.n:
        return False
    target = {frozenset(e) for e in b.edges}
    return any({frozenset((p[x], p[y])) for x, y in a.edges} == target
               for p in permutations(range(a.n)))


def test_tree_validation():
    with pytest.raises(ValueError):
        Tree(3, [(0, 1)])
    with pytest.raises(ValueError):
        Tree(4, [(0, 1), (1, 0), (2, 3)])


def test_families():
    assert canonical_form(spider(1, 1, 1)) == canonical_form(star(3))
    f = fork(5)
    assert sorted(f.degree(v) for v in range(5)) == [1, 1, 1, 2, 3]
    assert path_copies(f, 4) == 2
    assert path_copies(path(6), 5) == 2
    assert tree_from_spec("spider:2,3").n == 6
    with pytest.raises(ValueError):
        tree_from_spec("cycle:4")


def test_tree_counts():
    assert [sum(1 for _ in all_trees(n)) for n in range(1, 11)] == \
        [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


@pytest.mark.parametrize("n", range(1, 8))
def test_prufer_enumeration_agrees(n):
    a = sorted(canonical_form(t) for t in all_trees(n))
    b = sorted(canonical_form(t) for t in all_trees_prufer(n))
    assert a == b


@pytest.mark.parametrize("n", [5, 6])
def test_canonical_forms_separate_isomorphism_classes(n):
    reps = list(all_trees(n))
    for a, b in combinations(reps, 2):
        assert not _isomorphic_brute(a, b)


@given(prufer_trees, st.randoms(use_true_random=False))
def test_canonical_form_is_label_invariant(tree, random):
    perm = list(range(tree.n))
    random.shuffle(perm)
    relabeled = Tree(tree.n, [(perm[a], perm[b]) for a, b in tree.edges])
    assert canonical_form(relabeled) == canonical_form(tree)


@given(prufer_trees)
def test_longest_path_is_a_diameter(tree):
    route = longest_path(tree)
    diameter = max(max(tree.distances(v)) for v in range(tree.n))
    assert len(route) == diameter + 1
    assert all(b in tree.adj[a] for a, b in zip(route, route[1:]))
    assert exc_set(tree, [centers(tree)[0]]) == -(-diameter // 2)


def test_exc_examples():
    assert exc_set(path(5), range(5)) == 0
    assert exc_set(path(5), [2]) == 2
    assert exc_set(spider(2, 2, 2), [0]) == 2
    with pytest.raises(ValueError):
        exc_set(path(3), [])


def test_exact_radius_examples():
    assert radius_j_exact(path(6), 6).exc == 0
    assert radius_j_exact(path(6), 1).exc == 3
    assert radius_j_exact(spider(2, 2, 2), 2).exc == 2


def test_constructive_radius_examples():
    assert radius_j_constructive(path(8), 2).exc <= 3
    assert radius_j_constructive(spider(2, 3, 3), 2).exc <= 3
    assert radius_j_constructive(path(7), 1).exc == 3


@given(prufer_trees, st.integers(1, 12))
def test_constructive_radius_bound(tree, j):
    j = min(j, tree.n)
    w = radius_j_constructive(tree, j)
    assert len(w.centers) == j == len(set(w.centers))
    assert radius_j_exact(tree, j).exc <= w.exc <= -(-tree.n // (j + 1))


def test_cut_vertex_examples():
    v, peeled = cut_vertex(path(5), 2)
    assert v == 2 and len(peeled) >= 2
    _, peeled = cut_vertex(star(4), 1)
    assert len(peeled) >= 1
    v, peeled = cut_vertex(star(4), 3)
    assert len(peeled) == 4


def test_cut_vertex_on_random_trees():
    rng = SplitMix64(9)
    for _ in range(300):
        n = rng.between(2, 30)
        tree = from_prufer(random_prufer(rng, n))
        m = rng.between(1, n - 1)
        v, peeled = cut_vertex(tree, m)
        assert len(peeled) >= m and v not in peeled
        dist = tree.distances(v)
        assert all(dist[x] <= m for x in peeled)


def test_spider_attains_floor_bound():
    for n in range(3, 11):
        for j in range(1, 4):
            legs = [(n + i - 1) // (j + 1) for i in range(j + 1)]
            if min(legs) == 0:
                continue
            s = spider(*legs)
            assert s.n == n
            assert radius_j_exact(s, j).exc == n // (j + 1)


def test_radius_table():
    rows = {(r.n, r.j): r for r in r_j_table(7, 2)}
    assert rows[6, 1].value == 3 and rows[6, 1].extremal == [canonical_form(path(6))]
    r7 = rows[7, 1]
    assert r7.value == 3
    assert all(path_copies(tree_of(c), 6) >= 1 for c in r7.extremal)
    assert rows[7, 2].value in (2, 3)
    assert all(r.sandwich_ok for r in rows.values())
    assert table_tsv(list(rows.values())).startswith("n\tj\tr_j")
    with pytest.raises(ValueError):
        r_j_table(11, 1)


def tree_of(code: str) -> Tree:
    n = code.count("(")
    return next(t for t in all_trees(n) if canonical_form(t) == code)
