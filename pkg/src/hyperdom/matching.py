"""Connected maximal matchings and the matching-based distance dominator.

The matching is grown so that every new edge touches an edge already met
by the matching; the auxiliary graph on matching edges is then connected and
its radius controls Berge distances in the hypergraph.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import matching_bound
from .hypergraph import Hypergraph, VertexSet, bits_of
from .trees import Tree, radius_j_constructive

log = logging.getLogger(__name__)


class DisconnectedError(ValueError):
    pass


@dataclass
class ConnectedMatching:
    edges: list[int]
    # (|M_s|, |I_s|, |R_s|) after each step
    history: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def t(self) -> int:
        return len(self.edges)


def connected_maximal_matching(h: Hypergraph) -> ConnectedMatching:
    """Start from edge 0; repeatedly add the lowest-index remaining edge that
    meets an already intersected edge."""
    if h.m == 0:
        raise ValueError("hypergraph has no edges")
    if h.has_isolated_vertices() or not h.is_connected():
        raise DisconnectedError("connected_maximal_matching needs a connected hypergraph")
    masks = h.masks
    chosen = [0]
    inter = {i for i in range(1, h.m) if masks[i] & masks[0]}
    rest = set(range(1, h.m)) - inter
    history = [(1, len(inter), len(rest))]
    inter_union = 0
    for i in inter:
        inter_union |= masks[i]
    while rest:
        nxt = min((i for i in rest if masks[i] & inter_union), default=None)
        if nxt is None:
            raise DisconnectedError("no admissible edge; hypergraph is disconnected")
        chosen.append(nxt)
        rest.discard(nxt)
        newly = {i for i in rest if masks[i] & masks[nxt]}
        inter |= newly
        rest -= newly
        for i in newly:
            inter_union |= masks[i]
        history.append((len(chosen), len(inter), len(rest)))
    return ConnectedMatching(chosen, history)


@dataclass
class AuxiliaryGraph:
    t: int
    # (a, b) with a < b, positions in the matching -> witnessing edge index
    edges: dict[tuple[int, int], int]

    def neighbors(self, a: int) -> list[int]:
        out = [b for (x, b) in self.edges if x == a] + [x for (x, b) in self.edges if b == a]
        return sorted(out)

    def distances(self, src: int) -> list[int]:
        dist = [-1] * self.t
        dist[src] = 0
        queue = deque([src])
        while queue:
            a = queue.popleft()
            for b in self.neighbors(a):
                if dist[b] == -1:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        return dist

    def is_connected(self) -> bool:
        return -1 not in self.distances(0)

    def bfs_tree(self) -> Tree:
        """Spanning tree from position 0, neighbours in increasing order."""
        parent = [-1] * self.t
        seen = [False] * self.t
        seen[0] = True
        queue = deque([0])
        edges = []
        while queue:
            a = queue.popleft()
            for b in self.neighbors(a):
                if not seen[b]:
                    seen[b] = True
                    parent[b] = a
                    edges.append((a, b))
                    queue.append(b)
        return Tree(self.t, edges)


def auxiliary_graph(h: Hypergraph, matching: ConnectedMatching) -> AuxiliaryGraph:
    """Positions ``a < b`` are adjacent iff some edge meets both matching edges."""
    mm = [h.masks[i] for i in matching.edges]
    edges: dict[tuple[int, int], int] = {}
    for idx, mask in enumerate(h.masks):
        hit = [a for a, me in enumerate(mm) if me & mask]
        for x in range(len(hit)):
            for y in range(x + 1, len(hit)):
                edges.setdefault((hit[x], hit[y]), idx)
    aux = AuxiliaryGraph(len(mm), dict(sorted(edges.items())))
    assert aux.is_connected()
    return aux


@dataclass
class MatchingDomination:
    matching: ConnectedMatching
    aux: AuxiliaryGraph
    witness: VertexSet
    chosen_positions: list[int]
    size_bound: int
    vertex_bound: Fraction
    guard_fired: bool

    @property
    def size(self) -> int:
        return len(self.witness)

    def to_dict(self) -> dict:
        return {
            "matching": self.matching.edges,
            "aux_edges": [[a, b, w] for (a, b), w in self.aux.edges.items()],
            "witness": self.witness.tolist(),
            "size": self.size,
            "bound": self.size_bound,
            "vertex_bound": str(self.vertex_bound),
            "guard_fired": self.guard_fired,
        }


def matching_size_bound(t: int, l: int) -> int:
    """Guaranteed output size: ``t`` for ``l <= 4``, else ``max(1, ceil(2t/(l-3)))``."""
    if l <= 4:
        return t
    return max(1, -(-2 * t // (l - 3)))


def centers_needed(t: int, l: int) -> int:
    """Worst-case centre count when each centre covers radius ``floor((l-2)/2)``."""
    reach = (l - 2) // 2
    return max(1, -(-t // reach) - 1)


def distance_dominating_via_matching(h: Hypergraph, l: int) -> MatchingDomination:
    """A distance-``l`` dominating set read off a connected maximal matching.

    For ``l <= 4`` the lowest vertex of every matching edge.  For larger
    ``l``, the fewest matching edges whose constructive ``j``-radius on a
    spanning tree of the auxiliary graph is at most ``floor((l-2)/2)``.
    """
    if l < 2:
        raise ValueError("need l >= 2")
    matching = connected_maximal_matching(h)
    aux = auxiliary_graph(h, matching)
    t = matching.t
    if l <= 4:
        positions = list(range(t))
    else:
        tree = aux.bfs_tree()
        reach = (l - 2) // 2
        for j in range(1, t + 1):
            wit = radius_j_constructive(tree, j)
            if wit.exc <= reach:
                positions = list(wit.centers)
                break
    picks = [bits_of(h.masks[matching.edges[p]])[0] for p in positions]
    raw = matching_bound(h.n, max(mask.bit_count() for mask in h.masks), l)
    guard = raw < 1
    if guard:
        log.info("vertex bound %s < 1 (n=%d, l=%d); clamped to 1", raw, h.n, l)
    return MatchingDomination(matching, aux, VertexSet.of(h.n, picks), positions,
                              matching_size_bound(t, l), max(Fraction(1), raw), guard)
