"""Prime-field linear algebra and projective points/hyperplanes.

Only prime fields are supported; vectors are tuples of ints mod ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def next_prime(x: int) -> int:
    """Smallest prime strictly larger than ``x``."""
    p = max(x + 1, 2)
    while not is_prime(p):
        p += 1
    return p


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``F_q^n``."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if q < 2:
        raise ValueError("need q >= 2")
    num = 1
    den = 1
    for i in range(1, k + 1):
        num *= q ** (n - i + 1) - 1
        den *= q ** i - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def mul(self, a: int, b: int) -> int:
        return a * b % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.q)

    def dot(self, u, v) -> int:
        return sum(a * b for a, b in zip(u, v)) % self.q


def normalize(vec, q: int) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate is 1."""
    vec = [x % q for x in vec]
    for x in vec:
        if x:
            inv = pow(x, -1, q)
            return tuple(y * inv % q for y in vec)
    raise ValueError("the zero vector is not a projective point")


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[int, ...]
    q: int

    @classmethod
    def of(cls, vec, q: int) -> "ProjectivePoint":
        return cls(normalize(vec, q), q)


@dataclass(frozen=True)
class Hyperplane:
    """The hyperplane ``{x : <normal, x> = 0}``."""

    normal: tuple[int, ...]
    q: int

    @classmethod
    def of(cls, vec, q: int) -> "Hyperplane":
        return cls(normalize(vec, q), q)


def _normalized_vectors(d: int, q: int):
    # ordered by the position of the leading 1, then lexicographically
    for pivot in range(d):
        for tail in product(range(q), repeat=d - pivot - 1):
            yield (0,) * pivot + (1,) + tail


def enumerate_points(d: int, q: int) -> list[ProjectivePoint]:
    """All 1-dimensional subspaces of ``F_q^d``."""
    if d < 2:
        raise ValueError("need d >= 2")
    PrimeField(q)
    return [ProjectivePoint(v, q) for v in _normalized_vectors(d, q)]


def enumerate_hyperplanes(d: int, q: int) -> list[Hyperplane]:
    """All ``(d-1)``-dimensional subspaces of ``F_q^d``, by normal vector."""
    if d < 2:
        raise ValueError("need d >= 2")
    PrimeField(q)
    return [Hyperplane(v, q) for v in _normalized_vectors(d, q)]


def incident(p: ProjectivePoint, u: Hyperplane) -> bool:
    if p.q != u.q or len(p.coords) != len(u.normal):
        raise ValueError("point and hyperplane live in different spaces")
    return sum(a * b for a, b in zip(p.coords, u.normal)) % p.q == 0


def rank_mod(rows, q: int) -> int:
    """Rank of an integer matrix over ``F_q`` by Gaussian elimination."""
    mat = [[x % q for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][c]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][c], -1, q)
        mat[rank] = [x * inv % q for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][c]:
                f = mat[r][c]
                mat[r] = [(x - f * y) % q for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def det_mod(rows, q: int) -> int:
    """Determinant of a square matrix over ``F_q``."""
    mat = [[x % q for x in row] for row in rows]
    size = len(mat)
    det = 1
    for c in range(size):
        pivot = next((r for r in range(c, size) if mat[r][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = -det
        det = det * mat[c][c] % q
        inv = pow(mat[c][c], -1, q)
        for r in range(c + 1, size):
            if mat[r][c]:
                f = mat[r][c] * inv % q
                mat[r] = [(x - f * y) % q for x, y in zip(mat[r], mat[c])]
    return det % q


def moment_curve_arc(d: int, q: int) -> list[ProjectivePoint]:
    """``(1, t, ..., t^(d-1))`` for ``t`` in ``F_q`` plus ``(0, ..., 0, 1)``.

    Any ``d`` of these ``q + 1`` points are linearly independent.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    if q < d:
        raise ValueError(f"the moment-curve arc needs q >= d (got q={q}, d={d})")
    PrimeField(q)
    pts = [ProjectivePoint(tuple(pow(t, e, q) for e in range(d)), q) for t in range(q)]
    pts.append(ProjectivePoint((0,) * (d - 1) + (1,), q))
    return pts
