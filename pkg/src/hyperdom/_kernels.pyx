# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_pykernels``.

Vertex sets are packed into arrays of 64-bit words (row-major, ``W`` words
per row).  Semantics and enumeration order match the Python fallback.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef void _pack(object mask, uint64_t *row, int words):
    cdef int w
    for w in range(words):
        row[w] = <uint64_t>(mask & 0xFFFFFFFFFFFFFFFF)
        mask = mask >> 64


cdef inline bint _next_combination(int *c, int r, int n) nogil:
    cdef int i = r - 1
    while i >= 0 and c[i] == n - r + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    i += 1
    while i < r:
        c[i] = c[i - 1] + 1
        i += 1
    return True


def first_satisfying(coverers, demand, bint waive, int n, int r, long long budget):
    cdef int words = (n + 63) // 64 if n > 0 else 1
    cdef int nact = 0, v, w, d, i, cnt
    cdef bint simple = True, ok, done, out_of_budget = False
    cdef long long checked = 0
    cdef uint64_t x

    active = [v for v in range(n) if demand[v] > 0]
    active.sort(key=lambda v: int(coverers[v]).bit_count())
    nact = len(active)
    for v in active:
        if demand[v] > 1:
            simple = False

    if r > n:
        return None, 0, True

    cdef uint64_t *rows = <uint64_t *>malloc(max(nact, 1) * words * sizeof(uint64_t))
    cdef int *act = <int *>malloc(max(nact, 1) * sizeof(int))
    cdef int *need_of = <int *>malloc(max(nact, 1) * sizeof(int))
    cdef uint64_t *covers = <uint64_t *>malloc(max(n, 1) * words * sizeof(uint64_t))
    cdef uint64_t *target = <uint64_t *>malloc(words * sizeof(uint64_t))
    cdef uint64_t *acc = <uint64_t *>malloc(words * sizeof(uint64_t))
    cdef int *c = <int *>malloc(max(r, 1) * sizeof(int))
    try:
        memset(covers, 0, max(n, 1) * words * sizeof(uint64_t))
        memset(target, 0, words * sizeof(uint64_t))
        for i in range(nact):
            v = active[i]
            act[i] = v
            need_of[i] = demand[v]
            _pack(coverers[v], rows + i * words, words)
            target[v >> 6] |= (<uint64_t>1) << (v & 63)
            # transpose: chooser d covers v
            for w in range(words):
                x = rows[i * words + w]
                while x:
                    d = w * 64 + __builtin_ctzll(x)
                    covers[d * words + (v >> 6)] |= (<uint64_t>1) << (v & 63)
                    x &= x - 1

        for i in range(r):
            c[i] = i
        done = False
        with nogil:
            while True:
                if checked >= budget:
                    out_of_budget = True
                    break
                checked += 1
                memset(acc, 0, words * sizeof(uint64_t))
                if simple:
                    for i in range(r):
                        for w in range(words):
                            acc[w] |= covers[c[i] * words + w]
                    ok = True
                    for w in range(words):
                        if (acc[w] & target[w]) != target[w]:
                            ok = False
                            break
                else:
                    for i in range(r):
                        acc[c[i] >> 6] |= (<uint64_t>1) << (c[i] & 63)
                    ok = True
                    for i in range(nact):
                        v = act[i]
                        if waive and (acc[v >> 6] >> (v & 63)) & 1:
                            continue
                        cnt = 0
                        for w in range(words):
                            cnt += __builtin_popcountll(acc[w] & rows[i * words + w])
                        if cnt < need_of[i]:
                            ok = False
                            break
                if ok:
                    done = True
                    break
                if not _next_combination(c, r, n):
                    break
        if done:
            return tuple(c[i] for i in range(r)), checked, True
        return None, checked, not out_of_budget
    finally:
        free(rows)
        free(act)
        free(need_of)
        free(covers)
        free(target)
        free(acc)
        free(c)


cdef inline bint _next_permutation(int *a, int length) nogil:
    cdef int i = length - 2, j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        # reset to ascending order
        j = 0
        while j < length - 1 - j:
            tmp = a[j]
            a[j] = a[length - 1 - j]
            a[length - 1 - j] = tmp
            j += 1
        return False
    j = length - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]
    a[i] = a[j]
    a[j] = tmp
    i += 1
    j = length - 1
    while i < j:
        tmp = a[i]
        a[i] = a[j]
        a[j] = tmp
        i += 1
        j -= 1
    return True


def canonical_form(masks, int n, cells):
    if n > 64:
        raise ValueError("compiled canonical_form supports n <= 64")
    cdef int m = len(masks), ncell = len(cells)
    cdef int j, e, v, ci, pos
    cdef uint64_t x, y
    cdef bint better, started = False

    cdef uint64_t *edge = <uint64_t *>malloc(max(m, 1) * sizeof(uint64_t))
    cdef uint64_t *cur = <uint64_t *>malloc(max(m, 1) * sizeof(uint64_t))
    cdef uint64_t *best = <uint64_t *>malloc(max(m, 1) * sizeof(uint64_t))
    cdef int *perm = <int *>malloc(max(n, 1) * sizeof(int))
    cdef int *cstart = <int *>malloc((ncell + 1) * sizeof(int))
    cdef int label[64]
    try:
        for e in range(m):
            edge[e] = <uint64_t>masks[e]
        pos = 0
        for ci in range(ncell):
            cstart[ci] = pos
            for v in sorted(cells[ci]):
                perm[pos] = v
                pos += 1
        cstart[ncell] = pos

        with nogil:
            while True:
                for ci in range(ncell):
                    for pos in range(cstart[ci], cstart[ci + 1]):
                        label[perm[pos]] = pos
                for e in range(m):
                    x = edge[e]
                    y = 0
                    while x:
                        v = __builtin_ctzll(x)
                        y |= (<uint64_t>1) << label[v]
                        x &= x - 1
                    # insertion sort
                    j = e
                    while j > 0 and cur[j - 1] > y:
                        cur[j] = cur[j - 1]
                        j -= 1
                    cur[j] = y
                better = not started
                if started:
                    for e in range(m):
                        if cur[e] != best[e]:
                            better = cur[e] < best[e]
                            break
                if better:
                    memcpy(best, cur, max(m, 1) * sizeof(uint64_t))
                    started = True
                # odometer over the cells
                ci = 0
                while ci < ncell:
                    if _next_permutation(perm + cstart[ci], cstart[ci + 1] - cstart[ci]):
                        break
                    ci += 1
                if ci == ncell:
                    break
        return tuple(int(best[e]) for e in range(m))
    finally:
        free(edge)
        free(cur)
        free(best)
        free(perm)
        free(cstart)
