"""Hypergraphs over vertices ``0..n-1`` with bitmask vertex sets."""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Iterator
from functools import cached_property

MAX_VERTICES = 4096

#: Berge distance between vertices in different components.
INF = math.inf


def _mask_of(items: Iterable[int]) -> int:
    mask = 0
    for v in items:
        mask |= 1 << v
    return mask


def bits_of(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class VertexSet:
    """Immutable subset of ``range(n)`` stored as an integer bitmask."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if bits < 0 or bits >> n:
            raise ValueError(f"vertex set has members outside range({n})")
        self.n = n
        self.bits = bits

    @classmethod
    def of(cls, n: int, items: Iterable[int]) -> "VertexSet":
        items = list(items)
        for v in items:
            if not 0 <= v < n:
                raise IndexError(f"vertex {v} out of range({n})")
        return cls(n, _mask_of(items))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter(bits_of(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def _check(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise ValueError("vertex sets over different ground sets")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {self.tolist()})"

    def tolist(self) -> list[int]:
        return bits_of(self.bits)


class Hypergraph:
    """A hypergraph on ``range(n)`` with an ordered edge list.

    Edges are kept as bitmasks; their order is part of the identity and is
    used for deterministic tie-breaking.  ``labels`` maps vertices to role
    strings attached by the constructions and never affects algorithms.
    """

    def __init__(self, n: int, edges: Iterable[Iterable[int] | VertexSet] = (),
                 labels: dict[int, str] | None = None):
        if n < 0:
            raise ValueError("negative vertex count")
        if n > MAX_VERTICES:
            raise ValueError(f"n={n} exceeds the cap of {MAX_VERTICES} vertices")
        masks = []
        for edge in edges:
            if isinstance(edge, VertexSet):
                if edge.n != n:
                    raise ValueError("edge over a different ground set")
                mask = edge.bits
            else:
                edge = list(edge)
                for v in edge:
                    if not 0 <= v < n:
                        raise ValueError(f"edge vertex {v} out of range({n})")
                mask = _mask_of(edge)
            if mask == 0:
                raise ValueError("empty edge")
            masks.append(mask)
        self.n = n
        self.masks: tuple[int, ...] = tuple(masks)
        self.labels: dict[int, str] = dict(labels or {})

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int], labels=None) -> "Hypergraph":
        h = cls(n, (), labels)
        masks = tuple(masks)
        for mask in masks:
            if mask <= 0 or mask >> n:
                raise ValueError("invalid edge mask")
        h.masks = masks
        return h

    # -- basic structure -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.masks)

    @property
    def edges(self) -> list[VertexSet]:
        return [VertexSet(self.n, mask) for mask in self.masks]

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def edge_list(self) -> list[list[int]]:
        return [bits_of(mask) for mask in self.masks]

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, mask in enumerate(self.masks):
            for v in bits_of(mask):
                inc[v].append(i)
        return tuple(tuple(row) for row in inc)

    @cached_property
    def neighborhood_masks(self) -> tuple[int, ...]:
        out = []
        for v in range(self.n):
            mask = 1 << v
            for i in self.incidence[v]:
                mask |= self.masks[i]
            out.append(mask)
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def with_edge(self, edge: Iterable[int]) -> "Hypergraph":
        return Hypergraph(self.n, [*self.edge_list(), list(edge)], self.labels)

    def _vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range({self.n})")
        return v

    # -- neighborhoods and distances --------------------------------------

    def neighborhood(self, v: int) -> VertexSet:
        """Closed neighbourhood: ``v`` together with every edge through it."""
        return VertexSet(self.n, self.neighborhood_masks[self._vertex(v)])

    def neighborhood_of_set(self, s: VertexSet | Iterable[int]) -> VertexSet:
        if not isinstance(s, VertexSet):
            s = VertexSet.of(self.n, s)
        mask = 0
        for v in s:
            mask |= self.neighborhood_masks[v]
        return VertexSet(self.n, mask)

    def _ball_mask(self, u: int, radius: float) -> int:
        reached = 1 << u
        frontier = [u]
        used = bytearray(self.m)
        step = 0
        while frontier and step < radius:
            step += 1
            fresh = 0
            for v in frontier:
                for i in self.incidence[v]:
                    if not used[i]:
                        used[i] = 1
                        fresh |= self.masks[i]
            fresh &= ~reached
            reached |= fresh
            frontier = bits_of(fresh)
        return reached

    def ball(self, u: int, radius: int) -> VertexSet:
        """Vertices within Berge distance ``radius`` of ``u``."""
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        return VertexSet(self.n, self._ball_mask(self._vertex(u), radius))

    def ball_masks(self, radius: int) -> list[int]:
        return [self._ball_mask(u, radius) for u in range(self.n)]

    def distances_from(self, u: int) -> list[float]:
        """BFS over the vertex-edge incidence graph; each hop is one edge."""
        self._vertex(u)
        dist: list[float] = [INF] * self.n
        dist[u] = 0
        used = bytearray(self.m)
        frontier = [u]
        step = 0
        while frontier:
            step += 1
            nxt = []
            for v in frontier:
                for i in self.incidence[v]:
                    if used[i]:
                        continue
                    used[i] = 1
                    for w in bits_of(self.masks[i]):
                        if dist[w] == INF:
                            dist[w] = step
                            nxt.append(w)
            frontier = nxt
        return dist

    def berge_distance(self, u: int, v: int) -> float:
        self._vertex(v)
        return self.distances_from(u)[v]

    # -- predicates --------------------------------------------------------

    def is_k_uniform(self, k: int) -> bool:
        return all(mask.bit_count() == k for mask in self.masks)

    def has_isolated_vertices(self) -> bool:
        covered = 0
        for mask in self.masks:
            covered |= mask
        return covered != self.all_vertices

    def isolated_vertices(self) -> list[int]:
        covered = 0
        for mask in self.masks:
            covered |= mask
        return bits_of(self.all_vertices & ~covered)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self._ball_mask(0, self.n) == self.all_vertices

    def components(self) -> list[VertexSet]:
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = self._ball_mask(v, self.n)
            seen |= comp
            out.append(VertexSet(self.n, comp))
        return out

    # -- serialisation -----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        for v in sorted(self.labels):
            lines.append(f"# {v} {self.labels[v]}")
        for mask in self.masks:
            lines.append(" ".join(map(str, bits_of(mask))))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        header = None
        edges = []
        labels = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split(None, 1)
                if len(parts) == 2 and parts[0].isdigit():
                    labels[int(parts[0])] = parts[1]
                continue
            if header is None:
                fields = line.split()
                if len(fields) != 2:
                    raise ValueError("header must be 'n m'")
                header = (int(fields[0]), int(fields[1]))
            else:
                edges.append([int(x) for x in line.split()])
        if header is None:
            raise ValueError("missing header line")
        n, m = header
        if len(edges) != m:
            raise ValueError(f"header announces {m} edges, found {len(edges)}")
        return cls(n, edges, labels)

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "edges": self.edge_list(),
            "labels": {str(v): self.labels[v] for v in sorted(self.labels)},
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        payload = json.loads(text)
        labels = {int(v): s for v, s in payload.get("labels", {}).items()}
        return cls(payload["n"], payload["edges"], labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, edges={self.edge_list()})"
