"""Trees, multi-centre eccentricity and the j-radius.

``exc(W)`` is the largest distance from a vertex to its nearest member of
``W``; the j-radius of a tree is the least ``exc(W)`` over ``|W| <= j``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class Tree:
    def __init__(self, n: int, edges):
        if n < 1:
            raise ValueError("a tree needs at least one vertex")
        adj: list[list[int]] = [[] for _ in range(n)]
        count = 0
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError(f"bad tree edge ({a}, {b})")
            adj[a].append(b)
            adj[b].append(a)
            count += 1
        if count != n - 1:
            raise ValueError(f"a tree on {n} vertices has {n - 1} edges, got {count}")
        self.n = n
        self.adj = tuple(tuple(sorted(row)) for row in adj)
        if -1 in self.distances(0):
            raise ValueError("edges do not form a connected graph")

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in self.adj[a] if a < b]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def distances(self, src, alive=None) -> list[int]:
        """BFS distances from one vertex or a collection of sources (-1: unreached)."""
        sources = [src] if isinstance(src, int) else list(src)
        dist = [-1] * self.n
        queue = deque()
        for s in sources:
            if dist[s] == -1:
                dist[s] = 0
                queue.append(s)
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if dist[w] == -1 and (alive is None or w in alive):
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def __repr__(self):
        return f"Tree({self.n}, {self.edges})"


# -- families -----------------------------------------------------------------

def path(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Tree:
    return Tree(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider(*legs: int) -> Tree:
    """Legs of the given lengths glued at vertex 0."""
    if not legs or any(a < 1 for a in legs):
        raise ValueError("spider legs must have length >= 1")
    edges = []
    nxt = 1
    for a in legs:
        prev = 0
        for _ in range(a):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, edges)


def fork(n: int) -> Tree:
    """Path ``0..n-2`` with a pendant vertex ``n-1`` hung on vertex 1."""
    if n < 4:
        raise ValueError("a fork needs n >= 4")
    return Tree(n, [(i, i + 1) for i in range(n - 2)] + [(1, n - 1)])


def from_prufer(seq) -> Tree:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError("Prufer entry out of range")
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return Tree(n, edges)


# -- paths, centres, canonical forms -----------------------------------------------

def _farthest(tree: Tree, src: int, alive=None) -> tuple[int, list[int]]:
    dist = tree.distances(src, alive)
    best = max(dist)
    return dist.index(best), dist


def longest_path(tree: Tree, alive=None) -> list[int]:
    """Double BFS; ties go to the smallest vertex index."""
    start = min(alive) if alive is not None else 0
    a, _ = _farthest(tree, start, alive)
    b, dist = _farthest(tree, a, alive)
    route = [b]
    while route[-1] != a:
        v = route[-1]
        route.append(next(w for w in tree.adj[v] if dist[w] == dist[v] - 1))
    route.reverse()
    return route


def centers(tree: Tree) -> list[int]:
    p = longest_path(tree)
    mid = (len(p) - 1) // 2
    return [p[mid]] if len(p) % 2 else [p[mid], p[mid + 1]]


def _encode(tree: Tree, root: int) -> str:
    order = []
    parent = [-1] * tree.n
    seen = [False] * tree.n
    seen[root] = True
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in tree.adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                stack.append(w)
    code: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code[w] for w in tree.adj[v] if parent[w] == v and w != root)
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_form(tree: Tree) -> str:
    """AHU parenthesis code rooted at the centre (minimum over two centres)."""
    return min(_encode(tree, c) for c in centers(tree))


def path_copies(tree: Tree, vertices: int) -> int:
    """Number of subpaths of ``tree`` on exactly ``vertices`` vertices."""
    if vertices == 1:
        return tree.n
    count = 0
    for v in range(tree.n):
        dist = tree.distances(v)
        count += sum(1 for d in dist if d == vertices - 1)
    return count // 2


@lru_cache(maxsize=None)
def _trees_by_leaf_addition(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Tree(1, []),)
    found: dict[str, Tree] = {}
    for small in _trees_by_leaf_addition(n - 1):
        for v in range(n - 1):
            t = Tree(n, small.edges + [(v, n - 1)])
            found.setdefault(canonical_form(t), t)
    return tuple(found[c] for c in sorted(found))


def all_trees(n: int):
    """Each unlabeled tree on ``n`` vertices exactly once.

    Every tree on ``n >= 2`` vertices arises from one on ``n - 1`` vertices
    by attaching a leaf, so leaf augmentation plus canonical deduplication
    is exhaustive.
    """
    yield from _trees_by_leaf_addition(n)


def all_trees_prufer(n: int):
    """Same family via all ``n^(n-2)`` Prufer sequences (small ``n`` only)."""
    if n <= 2:
        yield from all_trees(n)
        return
    from itertools import product

    found: dict[str, Tree] = {}
    for seq in product(range(n), repeat=n - 2):
        t = from_prufer(seq)
        found.setdefault(canonical_form(t), t)
    for c in sorted(found):
        yield found[c]


# -- eccentricity and j-radius ------------------------------------------------------

@dataclass(frozen=True)
class RadiusWitness:
    centers: tuple[int, ...]
    exc: int


def exc_set(tree: Tree, w) -> int:
    w = list(w)
    if not w:
        raise ValueError("exc of an empty set is undefined")
    return max(tree.distances(w))


def radius_j_exact(tree: Tree, j: int) -> RadiusWitness:
    """Minimum ``exc`` over all ``j``-sets; lexicographically first witness."""
    if not 1 <= j <= tree.n:
        raise ValueError("need 1 <= j <= n")
    best = None
    for combo in combinations(range(tree.n), j):
        value = exc_set(tree, combo)
        if best is None or value < best.exc:
            best = RadiusWitness(combo, value)
            if value == 0:
                break
    return best


def _components_within(tree: Tree, v: int, m: int, alive) -> set[int]:
    peeled: set[int] = set()
    for w in tree.adj[v]:
        if w not in alive:
            continue
        comp = alive - {v}
        dist = tree.distances(w, comp)
        members = [x for x in comp if dist[x] != -1]
        if max(dist[x] for x in members) + 1 <= m:
            peeled.update(members)
    return peeled


def _cut(tree: Tree, m: int, alive) -> tuple[int, set[int]]:
    route = longest_path(tree, alive)
    if len(route) <= m:
        v = route[(len(route) - 1) // 2]
        return v, set(alive) - {v}
    v = route[m]
    return v, _components_within(tree, v, m, alive)


def cut_vertex(tree: Tree, m: int) -> tuple[int, set[int]]:
    """Vertex ``v`` plus the components of ``T - v`` lying within distance
    ``m`` of ``v``; these hold at least ``m`` vertices.

    ``v`` is the ``(m+1)``-st vertex of a longest path, or the middle of
    that path when it has at most ``m`` vertices.
    """
    if not 1 <= m < tree.n:
        raise ValueError("need 1 <= m < n")
    return _cut(tree, m, set(range(tree.n)))


def radius_j_constructive(tree: Tree, j: int) -> RadiusWitness:
    """Peel ``j - 1`` cut vertices, then take a centre of what remains.

    Step ``t`` uses ``m_t = floor((n + t - 1) / (j + 1))``; the result has
    ``exc <= ceil(n / (j + 1))``.
    """
    n = tree.n
    if not 1 <= j <= n:
        raise ValueError("need 1 <= j <= n")
    alive = set(range(n))
    chosen: list[int] = []
    for t in range(1, j):
        m_t = (n + t - 1) // (j + 1)
        if m_t == 0:
            # too small to peel: spend the centre on a leaf of the remainder
            leaf = longest_path(tree, alive)[0]
            chosen.append(leaf)
            if len(alive) > 1:
                alive.discard(leaf)
            continue
        v, peeled = _cut(tree, m_t, alive)
        chosen.append(v)
        alive -= peeled
    route = longest_path(tree, alive)
    chosen.append(route[(len(route) - 1) // 2])

    picked = list(dict.fromkeys(chosen))
    spare = (v for v in range(n) if v not in picked)
    while len(picked) < j:
        picked.append(next(spare))
    picked.sort()
    return RadiusWitness(tuple(picked), exc_set(tree, picked))


# -- r_j(n) tables -------------------------------------------------------------

@dataclass
class RadiusRow:
    n: int
    j: int
    value: int
    extremal: list[str]
    floor_bound: int
    ceil_bound: int

    @property
    def sandwich_ok(self) -> bool:
        return self.floor_bound <= self.value <= self.ceil_bound


def r_j_table(n_max: int, j_max: int) -> list[RadiusRow]:
    """``r_j(n)`` with all extremal trees, for ``j <= n <= n_max``."""
    if n_max > 10:
        raise ValueError("tree tables are limited to n <= 10")
    rows = []
    for n in range(1, n_max + 1):
        trees = list(all_trees(n))
        for j in range(1, min(j_max, n) + 1):
            values = [(radius_j_exact(t, j).exc, canonical_form(t)) for t in trees]
            top = max(v for v, _ in values)
            rows.append(RadiusRow(n, j, top, sorted(c for v, c in values if v == top),
                                  n // (j + 1), -(-n // (j + 1))))
    return rows


def table_tsv(rows: list[RadiusRow]) -> str:
    lines = ["n\tj\tr_j\tfloor\tceil\textremal_count\textremal_trees"]
    for r in rows:
        lines.append(f"{r.n}\t{r.j}\t{r.value}\t{r.floor_bound}\t{r.ceil_bound}\t"
                     f"{len(r.extremal)}\t{','.join(r.extremal)}")
    return "\n".join(lines) + "\n"


def tree_from_spec(spec: str) -> Tree:
    """Parse ``path:6``, ``star:4``, ``fork:7``, ``spider:2,2,2`` or ``prufer:0,1,1``."""
    kind, _, args = spec.partition(":")
    nums = [int(x) for x in args.split(",") if x]
    if kind == "path":
        return path(nums[0])
    if kind == "star":
        return star(nums[0])
    if kind == "fork":
        return fork(nums[0])
    if kind == "spider":
        return spider(*nums)
    if kind == "prufer":
        return from_prufer(nums)
    raise ValueError(f"unknown tree family {kind!r}")
