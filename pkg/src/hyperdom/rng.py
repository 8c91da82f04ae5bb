"""Seeded random instances that any language can reproduce bit-exactly.

The generator is SplitMix64 (Steele, Lea, Flood 2014): a 64-bit state
advanced by the golden-gamma constant and finalised with the variant-13
mixer.  Derived draws are defined here, not delegated to ``random``, so
the instance streams are fully specified:

* ``below(b)``: rejection sampling.  Draw ``x``; reject while
  ``x < (2**64 - b) % b``; return ``x % b``.
* ``sample(pool, r)``: partial Fisher-Yates over a copy of ``pool``:
  for ``i`` in ``0..r-1`` swap position ``i`` with ``i + below(len - i)``.
"""

from __future__ import annotations

from .hypergraph import Hypergraph

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) - bound) % bound
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % bound

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def sample(self, pool, r: int) -> list:
        items = list(pool)
        for i in range(r):
            j = i + self.below(len(items) - i)
            items[i], items[j] = items[j], items[i]
        return items[:r]

    def derive(self, tag: int) -> "SplitMix64":
        """Independent child stream, e.g. one per instance index."""
        return SplitMix64(self.next_u64() ^ ((tag * GOLDEN_GAMMA) & MASK64))


def random_uniform_hypergraph(rng: SplitMix64, n: int, k: int, m: int) -> Hypergraph:
    """``m`` independent uniform ``k``-subsets of ``range(n)`` (repeats allowed)."""
    edges = [sorted(rng.sample(range(n), k)) for _ in range(m)]
    return Hypergraph(n, edges)


def random_hypergraph(rng: SplitMix64, n: int, max_edges: int) -> Hypergraph:
    """Non-uniform instance: edge sizes drawn from 1..min(n, 4)."""
    m = rng.between(1, max_edges)
    edges = []
    for _ in range(m):
        size = rng.between(1, min(n, 4))
        edges.append(sorted(rng.sample(range(n), size)))
    return Hypergraph(n, edges)


def random_connected_uniform(rng: SplitMix64, n: int, k: int, extra: int = 0) -> Hypergraph:
    """Connected ``k``-uniform hypergraph without isolated vertices.

    Grows from one random edge; each further edge joins one covered vertex,
    one uncovered vertex and ``k - 2`` arbitrary others, until everything is
    covered.  ``extra`` random edges are appended afterwards.
    """
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    first = rng.sample(range(n), k)
    edges = [sorted(first)]
    covered = set(first)
    while len(covered) < n:
        outside = sorted(set(range(n)) - covered)
        inside = sorted(covered)
        u = outside[rng.below(len(outside))]
        w = inside[rng.below(len(inside))]
        rest = [x for x in range(n) if x != u and x != w]
        edge = {u, w, *rng.sample(rest, k - 2)}
        edges.append(sorted(edge))
        covered |= edge
    for _ in range(extra):
        edges.append(sorted(rng.sample(range(n), k)))
    return Hypergraph(n, edges)


def random_prufer(rng: SplitMix64, n: int) -> list[int]:
    return [rng.below(n) for _ in range(max(n - 2, 0))]
