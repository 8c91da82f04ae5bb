"""Closed-form bounds on the extremal vertex counts.

Rational quantities are kept as :class:`fractions.Fraction`; the one
irrational family, ``k + c * k^(1 - 1/d)``, is compared against integers by
raising both sides to the ``d``-th power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


def _ceil(x: Fraction) -> int:
    return -(-x.numerator // x.denominator)


def root_term_float(k: int, d: int, c: int = 1) -> float:
    return k + c * k ** (1 - 1 / d)


def at_least_root_term(n: int, k: int, d: int, c: int = 1) -> bool:
    """Exact test of ``n >= k + c * k^(1 - 1/d)``."""
    gap = n - k
    return gap >= 0 and gap ** d >= c ** d * k ** (d - 1)


def at_most_root_term(n: int, k: int, d: int, c: int = 1) -> bool:
    """Exact test of ``n <= k + c * k^(1 - 1/d)``."""
    gap = n - k
    return gap < 0 or gap ** d <= c ** d * k ** (d - 1)


def f_upper(k: int, gamma: int, l: int) -> Fraction:
    """``(l/2) k gamma + max(k, gamma)`` for even ``l``, ``((l+1)/2) k gamma`` for odd."""
    if l % 2 == 0:
        return Fraction(l, 2) * k * gamma + max(k, gamma)
    return Fraction(l + 1, 2) * k * gamma


def matching_bound(n: int, k: int, l: int) -> Fraction:
    """Upper bound on the connected distance-``l`` domination number, unclamped."""
    if l < 2:
        raise ValueError("need l >= 2")
    base = Fraction(n, k)
    return base if l <= 4 else base * Fraction(2, l - 3)


@dataclass
class Bound:
    name: str
    quantity: str
    lower: Fraction | float | None = None
    upper: Fraction | float | None = None
    # strict lower bound (quantity > lower)
    strict: bool = False
    applicable: bool = True
    reason: str = ""

    @property
    def lower_int(self) -> int | None:
        """Smallest integer meeting the lower bound."""
        if self.lower is None:
            return None
        if isinstance(self.lower, float):
            return math.ceil(self.lower)
        return self.lower.numerator // self.lower.denominator + 1 if self.strict else _ceil(self.lower)

    @property
    def upper_int(self) -> int | None:
        if self.upper is None:
            return None
        if isinstance(self.upper, float):
            return math.floor(self.upper)
        return self.upper.numerator // self.upper.denominator

    def admits(self, value: int) -> bool:
        if not self.applicable:
            return True
        lo, hi = self.lower_int, self.upper_int
        return (lo is None or value >= lo) and (hi is None or value <= hi)

    def to_dict(self) -> dict:
        def fmt(x):
            return None if x is None else str(x) if isinstance(x, Fraction) else round(x, 6)
        return {
            "name": self.name,
            "quantity": self.quantity,
            "lower": fmt(self.lower),
            "upper": fmt(self.upper),
            "lower_int": self.lower_int if self.applicable else None,
            "upper_int": self.upper_int if self.applicable else None,
            "strict": self.strict,
            "applicable": self.applicable,
            "reason": self.reason,
        }


@dataclass
class BoundReport:
    k: int
    gamma: int
    s: int
    l: int
    n: int | None
    bounds: list[Bound] = field(default_factory=list)

    def get(self, name: str) -> Bound:
        return next(b for b in self.bounds if b.name == name)

    def to_dict(self) -> dict:
        return {"k": self.k, "gamma": self.gamma, "s": self.s, "l": self.l, "n": self.n,
                "bounds": [b.to_dict() for b in self.bounds]}

    def to_tsv(self) -> str:
        lines = ["name\tquantity\tlower\tupper\tlower_int\tupper_int\tapplicable\treason"]
        for b in self.bounds:
            row = b.to_dict()
            lines.append("\t".join("" if row[c] is None else str(row[c]) for c in
                                   ("name", "quantity", "lower", "upper", "lower_int",
                                    "upper_int", "applicable", "reason")))
        return "\n".join(lines) + "\n"


def _skip(name: str, quantity: str, reason: str) -> Bound:
    return Bound(name, quantity, applicable=False, reason=reason)


def theorem_bounds(k: int, gamma: int, s: int = 1, l: int = 2, n: int | None = None) -> BoundReport:
    """Every bound whose hypotheses hold at ``(k, gamma, s, l)``.

    Bounds whose hypotheses fail are listed with ``applicable=False``.
    ``n`` enables the matching-dominator bound.
    """
    if k < 2 or gamma < 1 or s < 1 or l < 1:
        raise ValueError("need k >= 2, gamma >= 1, s >= 1, l >= 1")
    rep = BoundReport(k, gamma, s, l, n)
    out = rep.bounds

    name, qty = "s_domination_sandwich", "n_x(k,gamma,s) <= n(k,gamma,s)"
    if gamma >= 2 and gamma > s:
        d = gamma - s + 1
        out.append(Bound(name, qty, root_term_float(k, d, 1), root_term_float(k, d, 4),
                         reason=f"k + c*k^(1-1/{d}), c=1 below, c=4 above without the o(1) term"))
    else:
        out.append(_skip(name, qty, "needs gamma >= 2 and gamma > s"))

    name, qty = "trivial_single_dominator", "n(k,1)"
    if gamma == 1:
        out.append(Bound(name, qty, Fraction(k), Fraction(k)))
    else:
        out.append(_skip(name, qty, "needs gamma = 1"))

    name, qty = "disconnected_distance", "n_d(k,gamma,l)"
    if l >= 2:
        out.append(Bound(name, qty, Fraction(k * gamma), Fraction(k * gamma),
                         reason="equality; extremal hypergraph is gamma disjoint edges"))
    else:
        out.append(_skip(name, qty, "needs l >= 2"))

    name, qty = "connected_two_dominators", "n_dc(k,2,l)"
    if gamma == 2 and l >= 2:
        upper = min(_ceil(Fraction((2 * l + 1) * (k + 1), 2)), (l + 1) * k)
        out.append(Bound(name, qty, Fraction((2 * l + 1) * k, 2), Fraction(upper)))
    else:
        out.append(_skip(name, qty, "needs gamma = 2 and l >= 2"))

    name, qty = "connected_long_range", "n_dc(k,gamma,l)"
    if l >= 4 and gamma >= 3:
        lower = k * _ceil((Fraction(l - 1, 2) - 1) * gamma)
        out.append(Bound(name, qty, Fraction(lower), f_upper(k, gamma, l), strict=True))
    else:
        out.append(_skip(name, qty, "needs l >= 4 and gamma >= 3"))

    name, qty = "connected_distance_two", "n_dc(k,gamma,2)"
    if l == 2 and gamma >= 3:
        out.append(Bound(name, qty, Fraction(k * gamma), Fraction(k * gamma + max(k, gamma))))
    else:
        out.append(_skip(name, qty, "needs l = 2 and gamma >= 3"))

    name, qty = "connected_distance_three", "n_dc(k,gamma,3)"
    if l == 3 and gamma >= 3:
        out.append(Bound(name, qty, Fraction(k * gamma), Fraction(2 * k * gamma)))
    else:
        out.append(_skip(name, qty, "needs l = 3 and gamma >= 3"))

    name, qty = "spider_construction_size", "f(k,gamma,l)"
    out.append(Bound(name, qty, None, f_upper(k, gamma, l), reason="construction vertex count"))

    name, qty = "matching_dominator", "gamma_dc(H,l)"
    if n is None:
        out.append(_skip(name, qty, "needs n"))
    elif l < 2:
        out.append(_skip(name, qty, "needs l >= 2"))
    else:
        raw = matching_bound(n, k, l)
        out.append(Bound(name, qty, None, max(Fraction(1), raw),
                         reason="clamped to 1" if raw < 1 else ""))
    return rep
