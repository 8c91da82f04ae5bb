"""Generators for the explicit hypergraph families.

Every generator returns a labelled :class:`Hypergraph`; the richer ones also
return a record describing the block structure and predicted parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .geometry import (
    Hyperplane,
    ProjectivePoint,
    enumerate_hyperplanes,
    enumerate_points,
    gaussian_binomial,
    incident,
    is_prime,
    moment_curve_arc,
)
from .hypergraph import Hypergraph


class _Builder:
    """Hands out consecutive vertex ids with role labels."""

    def __init__(self):
        self.n = 0
        self.labels: dict[int, str] = {}

    def take(self, count: int, label: str) -> list[int]:
        out = []
        for r in range(count):
            self.labels[self.n] = f"{label}#{r + 1}" if count > 1 else label
            out.append(self.n)
            self.n += 1
        return out


def disjoint_edges(k: int, gamma: int) -> Hypergraph:
    """``gamma`` pairwise disjoint ``k``-edges."""
    if k < 2 or gamma < 1:
        raise ValueError("need k >= 2 and gamma >= 1")
    b = _Builder()
    edges = [b.take(k, f"E_{i + 1}") for i in range(gamma)]
    return Hypergraph(b.n, edges, b.labels)


# -- projective designs -------------------------------------------------------

@dataclass
class ProjectiveDesign:
    q: int
    d: int
    t: int
    m: int
    n: int
    k: int
    points: list[ProjectivePoint]
    hyperplanes: list[Hyperplane]
    a_blocks: list[list[int]]
    b_vertices: list[int]
    edge_blocks: list[list[int]]

    def domination_lower_bound(self, s: int = 1) -> int:
        """Lower bound on the s-domination number forced by the design: ``d + s - 1``."""
        return self.d + s - 1


def projective_design(q: int, d: int, t: int,
                      hyperplanes: list[Hyperplane] | None = None):
    """Edge ``i`` is ``{b_i}`` plus every block ``A_j`` whose hyperplane
    ``U_j`` misses the point ``E_i``.

    Exactly ``[d-1 choose 1]_q`` hyperplanes contain a fixed point, so each
    edge has ``1 + q^(d-1) t`` vertices.
    """
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if d < 2 or t < 1:
        raise ValueError("need d >= 2 and t >= 1")
    points = enumerate_points(d, q)
    if hyperplanes is None:
        hyperplanes = enumerate_hyperplanes(d, q)
    m = len(points)
    if len(hyperplanes) != m:
        raise ValueError("hyperplane list must contain every hyperplane once")

    b = _Builder()
    a_blocks = [b.take(t, f"A_{j + 1}") for j in range(m)]
    b_vertices = [b.take(1, f"b_{i + 1}")[0] for i in range(m)]
    edges = []
    edge_blocks = []
    for i, p in enumerate(points):
        blocks = [j for j, u in enumerate(hyperplanes) if not incident(p, u)]
        edge_blocks.append(blocks)
        edge = [b_vertices[i]]
        for j in blocks:
            edge.extend(a_blocks[j])
        edges.append(sorted(edge))
    k = 1 + q ** (d - 1) * t
    design = ProjectiveDesign(q, d, t, m, b.n, k, points, hyperplanes,
                              a_blocks, b_vertices, edge_blocks)
    h = Hypergraph(b.n, edges, b.labels)
    assert m == gaussian_binomial(d, 1, q) and b.n == m * (t + 1)
    assert h.is_k_uniform(k)
    return h, design


@dataclass
class PaddedDesign:
    base: ProjectiveDesign
    gamma: int
    s: int
    e: int
    pad_size: int
    pads: list[list[int]]
    index_sets: list[list[int]]
    pad_choices: list[list[int]]
    dropped_pads: int
    k: int
    n: int


def admissible_prime(k_target: int, d: int) -> int:
    """Largest prime ``q >= d`` with ``1 + q^d <= k_target``."""
    best = None
    q = d
    while 1 + q ** d <= k_target:
        if is_prime(q):
            best = q
        q += 1
    if best is None:
        raise ValueError(f"no prime q >= {d} with 1 + q^{d} <= {k_target}")
    return best


def padded_projective(k_target: int, gamma: int, s: int = 1):
    """Pad ``H_{q,d,q}`` (``d = gamma - s + 1``) up to uniformity ``k_target``.

    The first ``q + 1`` hyperplanes are the duals of the moment-curve arc, so
    every point lies on at most ``d - 1`` of them and each edge can draw its
    ``e`` pad vertices from at least ``q + 2 - d`` pads.  Pad vertices that no
    edge selects are dropped instead of being left isolated.
    """
    if not gamma > s >= 1:
        raise ValueError("need gamma > s >= 1")
    d = gamma - s + 1
    q = admissible_prime(k_target, d)
    e = k_target - 1 - q ** d

    arc = moment_curve_arc(d, q)
    duals = [Hyperplane(p.coords, q) for p in arc]
    rest = [u for u in enumerate_hyperplanes(d, q) if u not in set(duals)]
    h0, base = projective_design(q, d, q, duals + rest)

    usable = q + 1 - (d - 1)
    pad_size = -(-e // usable) if e else 0
    pad_ids = [[base.n + j * pad_size + r for r in range(pad_size)] for j in range(q + 1)]

    index_sets = []
    choices = []
    for p in base.points:
        idx = [j for j in range(q + 1) if not incident(p, duals[j])]
        assert len(idx) >= usable
        index_sets.append(idx)
        pool = sorted(v for j in idx for v in pad_ids[j])
        choices.append(pool[:e])

    used = sorted({v for c in choices for v in c})
    relabel = {v: base.n + i for i, v in enumerate(used)}
    labels = dict(h0.labels)
    pads = []
    for j, ids in enumerate(pad_ids):
        kept = [relabel[v] for v in ids if v in relabel]
        for r, v in enumerate(kept):
            labels[v] = f"C_{j + 1}#{r + 1}"
        pads.append(kept)
    choices = [[relabel[v] for v in c] for c in choices]

    edges = [sorted(edge + c) for edge, c in zip(h0.edge_list(), choices)]
    n = base.n + len(used)
    h = Hypergraph(n, edges, labels)
    assert h.is_k_uniform(k_target)
    record = PaddedDesign(base, gamma, s, e, pad_size, pads, index_sets, choices,
                          (q + 1) * pad_size - len(used), k_target, n)
    return h, record


def pad_containment(h: Hypergraph, record: PaddedDesign) -> dict:
    """Compare neighbourhoods of pad vertices ``v in C_j`` with ``u in A_j``.

    Reports how many pairs satisfy ``N_v <= N_u`` and ``N_u <= N_v``.
    """
    pad_in_base = 0
    base_in_pad = 0
    pairs = 0
    nb = h.neighborhood_masks
    for j, pad in enumerate(record.pads):
        for v in pad:
            for u in record.base.a_blocks[j]:
                pairs += 1
                pad_in_base += nb[v] & ~nb[u] == 0
                base_in_pad += nb[u] & ~nb[v] == 0
    return {"pairs": pairs, "pad_within_base": pad_in_base, "base_within_pad": base_in_pad}


# -- distance-domination constructions ------------------------------------------

def construction1(k: int, gamma: int, l: int) -> Hypergraph:
    """Cycle of ``L = 2l(gamma-1)+1`` groups with edges ``U_i + U_{i+1} + v_i``.

    Odd ``k``: every ``|U_i| = (k-1)/2``.  Even ``k``: groups alternate
    between ``k/2 - 1`` (odd index) and ``k/2`` (even index) and the closing
    edge also takes the extra vertex ``w``.  Layout is ``U_1, v_1, U_2, v_2,
    ..., w``.
    """
    if k < 2 or gamma < 2 or l < 1:
        raise ValueError("need k >= 2, gamma >= 2, l >= 1")
    size_l = 2 * l * (gamma - 1) + 1
    if k % 2:
        sizes = [(k - 1) // 2] * size_l
    else:
        # 1-based index i: odd -> k/2 - 1, even -> k/2
        sizes = [k // 2 - 1 if (i + 1) % 2 else k // 2 for i in range(size_l)]
    b = _Builder()
    groups = []
    spokes = []
    for i in range(size_l):
        groups.append(b.take(sizes[i], f"U_{i + 1}"))
        spokes.append(b.take(1, f"v_{i + 1}")[0])
    w = b.take(1, "w")[0] if k % 2 == 0 else None
    edges = []
    for i in range(size_l):
        edge = groups[i] + groups[(i + 1) % size_l] + [spokes[i]]
        if i == size_l - 1 and w is not None:
            edge.append(w)
        edges.append(sorted(edge))
    h = Hypergraph(b.n, edges, b.labels)
    assert h.is_k_uniform(k)
    return h


def construction1_size(k: int, gamma: int, l: int) -> int:
    return -(-(2 * l * (gamma - 1) + 1) * (k + 1) // 2)


@dataclass
class SpiderConstruction:
    k: int
    gamma: int
    l: int
    leg_length: int
    w_parts: list[list[int]]
    # (leg, depth) -> (U_{u,1}, U_{u,2}); depth runs 1..leg_length
    u_sets: dict[tuple[int, int], tuple[list[int], list[int]]] = field(default_factory=dict)
    z_sets: list[list[int]] = field(default_factory=list)
    edge_types: list[int] = field(default_factory=list)

    def node_vertex(self, leg: int, depth: int) -> int:
        return self.u_sets[leg, depth][0][0]

    @property
    def exact_size(self) -> int:
        w = max(self.k, self.gamma)
        n = self.k * self.gamma * self.leg_length + w
        if self.l % 2:
            n += sum(self.k - len(p) for p in self.w_parts)
        return n


def construction2(k: int, gamma: int, l: int):
    """Hypergraph built around the spider with ``gamma`` legs of length
    ``floor(l/2)``; see :class:`SpiderConstruction` for the block layout."""
    if k < 2 or gamma < 2 or l < 2:
        raise ValueError("need k, gamma, l >= 2")
    a = l // 2
    size_w = max(k, gamma)
    b = _Builder()
    w_parts = [b.take((size_w + i) // gamma, f"W_{i + 1}") for i in range(gamma)]
    rec = SpiderConstruction(k, gamma, l, a, w_parts)
    for i in range(gamma):
        first = len(w_parts[i])
        for depth in range(1, a + 1):
            node = f"({i + 1},{depth})"
            part1 = b.take(first, f"U{node},1")
            part2 = b.take(k - first, f"U{node},2")
            rec.u_sets[i, depth] = (part1, part2)
    if l % 2:
        rec.z_sets = [b.take(k - len(w_parts[i]), f"Z_{i + 1}") for i in range(gamma)]

    edges = []
    w_all = [v for part in w_parts for v in part]
    for combo in combinations(w_all, k):
        edges.append(list(combo))
        rec.edge_types.append(1)
    for i in range(gamma):
        for depth in range(1, a + 1):
            p1, p2 = rec.u_sets[i, depth]
            edges.append(sorted(p1 + p2))
            rec.edge_types.append(2)
    for i in range(gamma):
        edges.append(sorted(w_parts[i] + rec.u_sets[i, 1][1]))
        rec.edge_types.append(3)
    for i in range(gamma):
        for depth in range(1, a):
            edges.append(sorted(rec.u_sets[i, depth][0] + rec.u_sets[i, depth + 1][1]))
            rec.edge_types.append(4)
    if l % 2:
        for i in range(gamma):
            edges.append(sorted(rec.u_sets[i, a][0] + rec.z_sets[i]))
            rec.edge_types.append(5)
    h = Hypergraph(b.n, edges, b.labels)
    assert h.is_k_uniform(k)
    assert h.n == rec.exact_size
    return h, rec
