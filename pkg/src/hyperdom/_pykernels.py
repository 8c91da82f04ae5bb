"""Pure-Python versions of the hot kernels (reference + fallback).

``_kernels.pyx`` implements the same functions with identical semantics and
enumeration order; the test suite runs both against each other.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def _transpose(coverers: list[int], n: int) -> list[int]:
    covers = [0] * n
    for v, mask in enumerate(coverers):
        d = 0
        while mask:
            if mask & 1:
                covers[d] |= 1 << v
            mask >>= 1
            d += 1
    return covers


def first_satisfying(coverers, demand, waive, n, r, budget):
    """First ``r``-subset of ``range(n)`` (lexicographic) meeting every demand.

    Vertex ``v`` is satisfied by a chosen set ``C`` when
    ``|C & coverers[v]| >= demand[v]``, or, if ``waive`` is set, when
    ``v`` itself is in ``C``.

    Returns ``(combo or None, checked, complete)``; ``complete`` is false
    when ``budget`` subsets were examined before the sweep finished.
    """
    active = [v for v in range(n) if demand[v] > 0]
    active.sort(key=lambda v: coverers[v].bit_count())
    checked = 0
    if all(demand[v] <= 1 for v in active):
        covers = _transpose(coverers, n)
        target = 0
        for v in active:
            target |= 1 << v
        for combo in combinations(range(n), r):
            if checked >= budget:
                return None, checked, False
            checked += 1
            acc = 0
            for d in combo:
                acc |= covers[d]
            if acc & target == target:
                return combo, checked, True
        return None, checked, True

    rows = [(v, coverers[v], demand[v]) for v in active]
    for combo in combinations(range(n), r):
        if checked >= budget:
            return None, checked, False
        checked += 1
        chosen = 0
        for d in combo:
            chosen |= 1 << d
        for v, row, need in rows:
            if waive and chosen >> v & 1:
                continue
            if (chosen & row).bit_count() < need:
                break
        else:
            return combo, checked, True
    return None, checked, True


def canonical_form(masks, n, cells):
    """Lexicographically least sorted edge tuple over cell-respecting relabelings.

    ``cells`` is an ordered partition of ``range(n)``; cell ``c`` is mapped
    onto the consecutive labels that follow the earlier cells.
    """
    offsets = []
    start = 0
    for cell in cells:
        offsets.append(start)
        start += len(cell)
    best = None
    for choice in product(*(permutations(cell) for cell in cells)):
        label = [0] * n
        for off, perm in zip(offsets, choice):
            for pos, v in enumerate(perm):
                label[v] = off + pos
        relabeled = []
        for mask in masks:
            new = 0
            while mask:
                low = mask & -mask
                new |= 1 << label[low.bit_length() - 1]
                mask ^= low
            relabeled.append(new)
        relabeled.sort()
        cand = tuple(relabeled)
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()
