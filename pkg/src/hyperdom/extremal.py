"""Exhaustive search for the fewest vertices forcing a large domination number.

Adding an edge never increases any monotone variant, so the maximum over all
isolate-free ``k``-uniform hypergraphs on ``n`` vertices is attained on a
sparse spanning subfamily:

* without connectivity, on a *minimal cover* (every edge keeps a private
  vertex);
* with connectivity, on a *growth family*, where each edge meets the union of
  the earlier ones and brings at least one new vertex.

Both families are closed under removing the last edge, so they are generated
level by level with isomorphism classes merged at every level.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from . import _backend
from .domination import DominationVariant, default_budget, min_dominating
from .hypergraph import Hypergraph

log = logging.getLogger(__name__)

MAX_SUBSETS = 5000
MAX_CANONICAL_N = 9
MAX_UNPRUNED_SUBSETS = 20


class SearchTooLarge(ValueError):
    pass


# -- canonical forms ------------------------------------------------------------

def _refine(masks: tuple[int, ...], n: int) -> list[list[int]]:
    """Ordered partition of the vertices by iterated incidence invariants."""
    colour = [sum(1 for m in masks if m >> v & 1) for v in range(n)]
    while True:
        edge_sig = [tuple(sorted(colour[v] for v in range(n) if m >> v & 1)) for m in masks]
        sig = [(colour[v], tuple(sorted(edge_sig[i] for i, m in enumerate(masks) if m >> v & 1)))
               for v in range(n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(h: Hypergraph) -> tuple:
    """Isomorphism-invariant key: ``(n, least relabelled edge tuple)``."""
    return canonical_masks(h.masks, h.n)


def canonical_masks(masks, n: int) -> tuple:
    masks = tuple(masks)
    return (n, _backend.canonical_form(masks, n, _refine(masks, n)))


def is_isomorphic(a: Hypergraph, b: Hypergraph) -> bool:
    return canonical_form(a) == canonical_form(b)


# -- candidate families ------------------------------------------------------------

def _has_private_vertices(masks) -> bool:
    for i, m in enumerate(masks):
        others = 0
        for j, o in enumerate(masks):
            if j != i:
                others |= o
        if m & ~others == 0:
            return False
    return True


def candidate_families(n: int, k: int, connected: bool, dedup: bool = True,
                       level_counts: list | None = None):
    """Yield the edge masks of every spanning candidate.

    When given, ``level_counts`` receives the number of partial families
    kept at each edge count.
    """
    full = (1 << n) - 1
    subsets = [sum(1 << v for v in c) for c in combinations(range(n), k)]
    level = [(subsets[0],)]
    counts = [] if level_counts is None else level_counts
    counts.append(1)
    while level:
        nxt: dict = {}
        for fam in level:
            union = 0
            for m in fam:
                union |= m
            if union == full:
                yield fam
                continue
            for e in subsets:
                if e & ~union == 0:
                    continue
                if connected:
                    if e & union == 0:
                        continue
                    grown = tuple(sorted(fam + (e,)))
                else:
                    grown = tuple(sorted(fam + (e,)))
                    if not _has_private_vertices(grown):
                        continue
                key = canonical_masks(grown, n) if dedup else grown
                nxt.setdefault(key, grown)
        level = list(nxt.values())
        if level:
            counts.append(len(level))


def all_families(n: int, k: int, connected: bool):
    """Every isolate-free ``k``-uniform family on ``range(n)`` (tiny ``n`` only)."""
    subsets = [sum(1 << v for v in c) for c in combinations(range(n), k)]
    if len(subsets) > MAX_UNPRUNED_SUBSETS:
        raise SearchTooLarge(f"C({n},{k}) = {len(subsets)} subsets is too many to enumerate")
    full = (1 << n) - 1
    for pick in range(1, 1 << len(subsets)):
        fam = tuple(s for i, s in enumerate(subsets) if pick >> i & 1)
        union = 0
        for m in fam:
            union |= m
        if union != full:
            continue
        h = Hypergraph.from_masks(n, fam)
        if connected and not h.is_connected():
            continue
        yield fam


# -- searches -----------------------------------------------------------------------

@dataclass
class SearchResult:
    n: int
    k: int
    value: int | float | None
    witness: Hypergraph | None
    candidates: int
    exhaustive: bool
    pruned: bool
    level_counts: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "value": self.value,
            "witness": None if self.witness is None else self.witness.edge_list(),
            "candidates": self.candidates,
            "exhaustive": self.exhaustive,
            "pruned": self.pruned,
        }


def _check_variant(variant: DominationVariant, unpruned: bool):
    if variant.kind == "stuple" and not unpruned:
        # infeasible sparse families can have feasible supersets, so the
        # sparse-family reduction is not sound for s-tuple domination
        raise ValueError("s-tuple searches need unpruned=True")


def max_domination_over(n: int, k: int, variant: DominationVariant | None = None,
                        require_connected: bool = False, budget: int | None = None,
                        unpruned: bool = False) -> SearchResult:
    """Largest domination value over isolate-free ``k``-uniform hypergraphs on ``n`` vertices.

    Infeasible candidates are ignored.  The witness is the
    first candidate in enumeration order attaining the maximum.  ``budget``
    caps the total solver nodes; running out gives ``exhaustive=False``.
    """
    variant = variant or DominationVariant.plain()
    _check_variant(variant, unpruned)
    if k < 2:
        raise ValueError("need k >= 2")
    if n < k:
        return SearchResult(n, k, None, None, 0, True, not unpruned)
    if comb(n, k) > MAX_SUBSETS:
        raise SearchTooLarge(f"C({n},{k}) = {comb(n, k)} exceeds {MAX_SUBSETS}")
    budget = default_budget() if budget is None else budget
    dedup = n <= MAX_CANONICAL_N
    counts: list[int] = []
    if unpruned:
        families = all_families(n, k, require_connected)
    else:
        families = candidate_families(n, k, require_connected, dedup, counts)

    best = None
    witness = None
    seen = 0
    exhaustive = True
    for fam in families:
        seen += 1
        h = Hypergraph.from_masks(n, fam)
        res = min_dominating(h, variant, budget=budget)
        if res.status == "budget_exhausted":
            exhaustive = False
            break
        budget -= res.nodes_explored
        if res.status == "infeasible":
            continue
        if best is None or res.value > best:
            best, witness = res.value, h
    return SearchResult(n, k, best, witness, seen, exhaustive, not unpruned, counts)


@dataclass
class ExtremalQuery:
    variant: DominationVariant
    k: int
    gamma_target: int
    require_connected: bool = False

    def __post_init__(self):
        if self.k < 2 or self.gamma_target < 1:
            raise ValueError("need k >= 2 and gamma_target >= 1")


@dataclass
class ExtremalRecord:
    query: ExtremalQuery
    n_min: int | None
    witness: Hypergraph | None
    refutations: dict[int, int]
    exhaustive: bool
    witnesses: list[Hypergraph] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "k": self.query.k,
            "gamma": self.query.gamma_target,
            "variant": str(self.query.variant),
            "connected": self.query.require_connected,
            "n_min": self.n_min,
            "witness": None if self.witness is None else self.witness.edge_list(),
            "refutations": {str(n): c for n, c in sorted(self.refutations.items())},
            "exhaustive": self.exhaustive,
            "extremal_witnesses": [w.edge_list() for w in self.witnesses],
        }


def n_min(query: ExtremalQuery, n_max: int | None = None, budget: int | None = None,
          all_witnesses: bool = False) -> ExtremalRecord:
    """Smallest ``n`` whose maximum reaches ``query.gamma_target``.

    ``refutations[n]`` counts the candidates examined (and refuted) at each
    smaller ``n``.  With ``all_witnesses`` every extremal hypergraph at
    ``n_min`` is listed once up to isomorphism.
    """
    refutations: dict[int, int] = {}
    n = query.k
    for smaller in range(query.k):
        refutations[smaller] = 0
    while n_max is None or n <= n_max:
        try:
            res = max_domination_over(n, query.k, query.variant, query.require_connected, budget)
        except SearchTooLarge as exc:
            log.info("stopping at n=%d: %s", n, exc)
            return ExtremalRecord(query, None, None, refutations, False)
        if not res.exhaustive:
            return ExtremalRecord(query, None, None, refutations, False)
        if res.value is not None and res.value >= query.gamma_target:
            witnesses = []
            if all_witnesses:
                witnesses = extremal_witnesses(n, query.k, query.variant,
                                               query.gamma_target, query.require_connected)
            return ExtremalRecord(query, n, res.witness, refutations, True, witnesses)
        refutations[n] = res.candidates
        n += 1
    return ExtremalRecord(query, None, None, refutations, False)


def extremal_witnesses(n: int, k: int, variant: DominationVariant, target: int,
                       require_connected: bool = False) -> list[Hypergraph]:
    """All hypergraphs on ``n`` vertices reaching ``target``, up to isomorphism.

    Starts from the sparse candidates that reach it and adds edges one at a
    time while the value stays at least ``target``; by monotonicity every
    such hypergraph is reached.
    """
    _check_variant(variant, False)
    if n > MAX_CANONICAL_N:
        raise SearchTooLarge("witness closure needs canonical forms (n <= 9)")
    subsets = [sum(1 << v for v in c) for c in combinations(range(n), k)]

    def good(masks) -> bool:
        res = min_dominating(Hypergraph.from_masks(n, masks), variant)
        return res.status == "optimal" and res.value >= target

    frontier = {}
    for fam in candidate_families(n, k, require_connected):
        if good(fam):
            frontier.setdefault(canonical_masks(fam, n), fam)
    found = dict(frontier)
    while frontier:
        nxt = {}
        for fam in frontier.values():
            present = set(fam)
            for e in subsets:
                if e in present:
                    continue
                grown = tuple(sorted(fam + (e,)))
                key = canonical_masks(grown, n)
                if key in found or key in nxt:
                    continue
                if good(grown):
                    nxt[key] = grown
        found.update(nxt)
        frontier = nxt
    return [Hypergraph.from_masks(n, found[key]) for key in sorted(found)]


def monotonicity_holds(h: Hypergraph, edge, variant: DominationVariant) -> bool:
    """Adding ``edge`` does not raise the minimum."""
    before = min_dominating(h, variant)
    after = min_dominating(h.with_edge(edge), variant)
    if before.status == "infeasible":
        return True
    return after.status == "optimal" and after.value <= before.value
