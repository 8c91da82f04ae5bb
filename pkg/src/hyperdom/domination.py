"""Domination predicates and exact minimisers for the four variants.

Every variant is solved as a 0/1 multicover problem: vertex ``v`` needs
``demand[v]`` chosen vertices from its coverer set (closed neighbourhood, or
the radius-``l`` ball for distance domination).  Under s-domination the
demand of a chosen vertex is waived.
"""

from __future__ import annotations

import logging
import os
import sys
from dataclasses import dataclass, field

from . import _backend
from .hypergraph import Hypergraph, VertexSet, bits_of

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8

KINDS = ("plain", "sdom", "stuple", "dist")


def default_budget() -> int:
    env = os.environ.get("HYPERDOM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class DominationVariant:
    """``kind`` is one of ``plain``, ``sdom`` (s-dominating), ``stuple``
    (s-tuple dominating) or ``dist`` (distance-l dominating)."""

    kind: str = "plain"
    param: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown variant {self.kind!r}")
        if self.param < 1:
            raise ValueError("variant parameter must be >= 1")
        if self.kind == "plain" and self.param != 1:
            raise ValueError("plain domination takes no parameter")

    @classmethod
    def plain(cls):
        return cls("plain", 1)

    @classmethod
    def s_dominating(cls, s: int):
        return cls("sdom", s)

    @classmethod
    def s_tuple(cls, s: int):
        return cls("stuple", s)

    @classmethod
    def distance(cls, l: int):
        return cls("dist", l)

    def __str__(self):
        return "plain" if self.kind == "plain" else f"{self.kind}({self.param})"


@dataclass
class SolveResult:
    """Outcome of a minimisation.

    ``status`` is ``optimal``, ``infeasible`` (no vertex set qualifies),
    ``lower_bound`` (the oracle was capped and only proves
    ``value >= lower_bound``) or ``budget_exhausted``.
    """

    value: int | None
    witness: VertexSet | None
    nodes_explored: int
    status: str = "optimal"
    lower_bound: int = 0
    warnings: list[str] = field(default_factory=list)

    def certifies_at_least(self, g: int) -> bool:
        if self.status == "optimal":
            return self.value >= g
        if self.status in ("lower_bound", "budget_exhausted"):
            return self.lower_bound >= g
        return self.status == "infeasible"

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": self.witness.tolist() if self.witness is not None else None,
            "nodes": self.nodes_explored,
            "status": self.status,
            "lower_bound": self.lower_bound,
        }


def _as_mask(h: Hypergraph, d) -> int:
    if isinstance(d, VertexSet):
        if d.n != h.n:
            raise ValueError("vertex set over a different ground set")
        return d.bits
    return VertexSet.of(h.n, d).bits


# -- predicates -------------------------------------------------------------

def is_dominating(h: Hypergraph, d) -> bool:
    mask = _as_mask(h, d)
    reach = 0
    for v in bits_of(mask):
        reach |= h.neighborhood_masks[v]
    return reach == h.all_vertices


def is_s_dominating(h: Hypergraph, d, s: int) -> bool:
    mask = _as_mask(h, d)
    return all(
        (mask & h.neighborhood_masks[v]).bit_count() >= s
        for v in range(h.n)
        if not mask >> v & 1
    )


def is_s_tuple_dominating(h: Hypergraph, d, s: int) -> bool:
    mask = _as_mask(h, d)
    return all((mask & nb).bit_count() >= s for nb in h.neighborhood_masks)


def is_distance_dominating(h: Hypergraph, d, l: int) -> bool:
    mask = _as_mask(h, d)
    reach = 0
    for u in bits_of(mask):
        reach |= h._ball_mask(u, l)
    return reach == h.all_vertices


def satisfies(h: Hypergraph, d, variant: DominationVariant) -> bool:
    if variant.kind == "plain":
        return is_dominating(h, d)
    if variant.kind == "sdom":
        return is_s_dominating(h, d, variant.param)
    if variant.kind == "stuple":
        return is_s_tuple_dominating(h, d, variant.param)
    return is_distance_dominating(h, d, variant.param)


def cover_problem(h: Hypergraph, variant: DominationVariant):
    """``(coverers, demand, waive)`` for the multicover form of ``variant``.

    Neighbourhoods and balls are symmetric relations, so the coverers of
    ``v`` are also exactly the vertices whose choice helps ``v``.
    """
    if variant.kind == "dist":
        coverers = h.ball_masks(variant.param)
    else:
        coverers = list(h.neighborhood_masks)
    demand = [1 if variant.kind in ("plain", "dist") else variant.param] * h.n
    return coverers, demand, variant.kind == "sdom"


def _isolation_warnings(h: Hypergraph, variant: DominationVariant) -> list[str]:
    if variant.kind == "dist":
        return []
    iso = h.isolated_vertices()
    if not iso:
        return []
    msg = f"isolated vertices {iso} are forced into every solution"
    log.debug(msg)
    return [msg]


# -- branch and bound ---------------------------------------------------------

class BudgetExhausted(Exception):
    pass


class _Multicover:
    def __init__(self, coverers, demand, waive, n, budget):
        self.coverers = coverers
        self.demand = demand
        self.waive = waive
        self.n = n
        self.full = (1 << n) - 1
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted

    def feasible(self) -> bool:
        if self.waive:
            return True
        return all(
            self.coverers[v].bit_count() >= self.demand[v] for v in range(self.n)
        )

    def unmet(self, chosen: int, excluded: int):
        """Unsatisfied vertices as ``(v, available coverers, effective demand)``.

        Returns ``None`` when some vertex can no longer be satisfied.
        """
        avail = self.full & ~(chosen | excluded)
        need = []
        for v in range(self.n):
            if self.waive and chosen >> v & 1:
                continue
            row = self.coverers[v]
            residual = self.demand[v] - (chosen & row).bit_count()
            if residual <= 0:
                continue
            a = avail & row
            if self.waive and avail >> v & 1:
                # choosing v itself also settles v
                need.append((v, a, 1))
                continue
            if a.bit_count() < residual:
                return None
            need.append((v, a, residual))
        return need

    @staticmethod
    def lower_bound(need) -> int:
        if not need:
            return 0
        best = max(eff for _, _, eff in need)
        used = 0
        packed = 0
        for _, a, eff in sorted(need, key=lambda t: (t[1].bit_count(), t[0])):
            if not a & used:
                used |= a
                packed += eff
        best = max(best, packed)
        helps: dict[int, int] = {}
        total = 0
        for _, a, eff in need:
            total += eff
            for u in bits_of(a):
                helps[u] = helps.get(u, 0) + 1
        top = max(helps.values())
        return max(best, -(-total // top))

    def pick(self, need) -> int:
        v_star = min(need, key=lambda t: (t[1].bit_count() - t[2], t[1].bit_count(), t[0]))
        best_u, best_gain = -1, -1
        for u in bits_of(v_star[1]):
            gain = sum(1 for _, a, _ in need if a >> u & 1)
            if gain > best_gain:
                best_u, best_gain = u, gain
        return best_u

    def greedy(self):
        chosen = 0
        while True:
            need = self.unmet(chosen, 0)
            if need is None:
                return None
            if not need:
                return chosen
            gains: dict[int, int] = {}
            for _, a, _ in need:
                for u in bits_of(a):
                    gains[u] = gains.get(u, 0) + 1
            if not gains:
                return None
            u = min(gains, key=lambda x: (-gains[x], x))
            chosen |= 1 << u

    def minimum(self, incumbent: int) -> int:
        best = [incumbent.bit_count(), incumbent]

        def dfs(chosen, excluded, size):
            self.tick()
            need = self.unmet(chosen, excluded)
            if need is None:
                return
            if not need:
                if size < best[0]:
                    best[0], best[1] = size, chosen
                return
            if size + self.lower_bound(need) >= best[0]:
                return
            u = self.pick(need)
            dfs(chosen | 1 << u, excluded, size + 1)
            dfs(chosen, excluded | 1 << u, size)

        dfs(0, 0, 0)
        return best[0]

    def lex_first(self, size_cap: int) -> int | None:
        """Lexicographically smallest solution with at most ``size_cap`` members."""

        def dfs(i, chosen, size):
            self.tick()
            prefix = (1 << i) - 1
            need = self.unmet(chosen, prefix & ~chosen)
            if need is None:
                return None
            if not need:
                return chosen
            if i == self.n or size + self.lower_bound(need) > size_cap:
                return None
            helpful = any(a >> i & 1 for _, a, _ in need)
            if helpful and size < size_cap:
                found = dfs(i + 1, chosen | 1 << i, size + 1)
                if found is not None:
                    return found
            return dfs(i + 1, chosen, size)

        return dfs(0, 0, 0)


def _solve_cover(n, coverers, demand, waive, budget):
    """Returns ``(value, witness mask, nodes)``; value ``None`` if infeasible."""
    search = _Multicover(coverers, demand, waive, n, budget)
    if not search.feasible():
        return None, None, 0
    limit = sys.getrecursionlimit()
    if limit < 4 * n + 100:
        sys.setrecursionlimit(4 * n + 100)
    try:
        incumbent = search.greedy()
        value = search.minimum(incumbent)
        witness = search.lex_first(value)
    finally:
        sys.setrecursionlimit(limit)
    return value, witness, search.nodes


def min_dominating(h: Hypergraph, variant: DominationVariant | None = None,
                   budget: int | None = None) -> SolveResult:
    """Exact minimum for ``variant`` with the lexicographically least witness."""
    variant = variant or DominationVariant.plain()
    budget = default_budget() if budget is None else budget
    warnings = _isolation_warnings(h, variant)
    coverers, demand, waive = cover_problem(h, variant)
    try:
        value, witness, nodes = _solve_cover(h.n, coverers, demand, waive, budget)
    except BudgetExhausted:
        return SolveResult(None, None, budget, "budget_exhausted", 0, warnings)
    if value is None:
        return SolveResult(None, None, nodes, "infeasible", 0, warnings)
    return SolveResult(value, VertexSet(h.n, witness), nodes, "optimal", value, warnings)


def brute_force_oracle(h: Hypergraph, variant: DominationVariant | None = None,
                       max_size: int | None = None, budget: int | None = None) -> SolveResult:
    """Plain subset enumeration by increasing size.

    With ``max_size`` the sweep stops after that cardinality; if nothing
    qualifies the result has status ``lower_bound`` and certifies
    ``value >= max_size + 1``.
    """
    variant = variant or DominationVariant.plain()
    budget = default_budget() if budget is None else budget
    warnings = _isolation_warnings(h, variant)
    coverers, demand, waive = cover_problem(h, variant)
    top = h.n if max_size is None else min(max_size, h.n)
    nodes = 0
    for r in range(top + 1):
        combo, checked, complete = _backend.first_satisfying(
            coverers, demand, waive, h.n, r, budget - nodes)
        nodes += checked
        if combo is not None:
            return SolveResult(r, VertexSet.of(h.n, combo), nodes, "optimal", r, warnings)
        if not complete:
            return SolveResult(None, None, nodes, "budget_exhausted", r, warnings)
    if top == h.n:
        return SolveResult(None, None, nodes, "infeasible", h.n + 1, warnings)
    return SolveResult(None, None, nodes, "lower_bound", top + 1, warnings)


def certify_at_least(h: Hypergraph, variant: DominationVariant, g: int,
                     budget: int | None = None) -> SolveResult:
    """Exhaust every vertex set of size below ``g``; see ``certifies_at_least``."""
    return brute_force_oracle(h, variant, max_size=g - 1, budget=budget)


def greedy_solution(h: Hypergraph, variant: DominationVariant | None = None) -> VertexSet | None:
    """Greedy max-coverage set; ``None`` if the variant is infeasible on ``h``."""
    variant = variant or DominationVariant.plain()
    coverers, demand, waive = cover_problem(h, variant)
    search = _Multicover(coverers, demand, waive, h.n, default_budget())
    if not search.feasible():
        return None
    chosen = search.greedy()
    return None if chosen is None else VertexSet(h.n, chosen)


def greedy_upper_bound(h: Hypergraph, variant: DominationVariant | None = None) -> int | None:
    sol = greedy_solution(h, variant)
    return None if sol is None else len(sol)


def domination_number(h: Hypergraph, variant: DominationVariant | None = None,
                      budget: int | None = None) -> int:
    """Convenience wrapper that raises instead of returning a non-optimal status."""
    res = min_dominating(h, variant, budget)
    if res.status != "optimal":
        raise RuntimeError(f"domination number unavailable: {res.status}")
    return res.value


def variant_from_cli(name: str, param: int) -> DominationVariant:
    return DominationVariant.plain() if name == "plain" else DominationVariant(name, param)

