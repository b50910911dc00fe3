# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled connectivity kernels over word-packed vertex masks.

Adjacency is an (n, w) uint64 array: bit (v & 63) of row u, word (v >> 6) is
set iff uv is an edge.  Subsets use the same packing.  Semantics match
kwaycut._pure bit for bit; the pure module is the readable reference.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy, memset

import numpy as np

cdef extern from *:
    """
    #define kx_popcount(x) __builtin_popcountll((unsigned long long)(x))
    #define kx_ctz(x) __builtin_ctzll((unsigned long long)(x))
    """
    int kx_popcount(uint64_t x) nogil
    int kx_ctz(uint64_t x) nogil


cdef int _count(const uint64_t* adj, int nw, const uint64_t* alive,
                uint64_t* remaining, uint64_t* frontier,
                uint64_t* members, uint64_t* reach) nogil:
    cdef int count = 0
    cdef int w, w2, v
    cdef uint64_t bits, b
    cdef bint more
    memcpy(remaining, alive, nw * sizeof(uint64_t))
    while True:
        v = -1
        for w in range(nw):
            if remaining[w]:
                v = w
                break
        if v < 0:
            return count
        count += 1
        memset(members, 0, nw * sizeof(uint64_t))
        memset(frontier, 0, nw * sizeof(uint64_t))
        frontier[v] = remaining[v] & (~remaining[v] + 1)
        while True:
            memset(reach, 0, nw * sizeof(uint64_t))
            for w in range(nw):
                bits = frontier[w]
                if bits == 0:
                    continue
                members[w] |= bits
                while bits:
                    b = bits & (~bits + 1)
                    v = (w << 6) + kx_ctz(b)
                    for w2 in range(nw):
                        reach[w2] |= adj[v * nw + w2]
                    bits ^= b
            more = False
            for w in range(nw):
                frontier[w] = reach[w] & alive[w] & ~members[w]
                if frontier[w]:
                    more = True
            if not more:
                break
        for w in range(nw):
            remaining[w] &= ~members[w]


def count_components(uint64_t[:, ::1] adj, uint64_t[::1] alive):
    """Component count of the subgraph induced by the packed mask ``alive``."""
    cdef int n = adj.shape[0]
    cdef int nw = adj.shape[1]
    if n == 0:
        return 0
    scratch = np.empty(4 * nw, dtype=np.uint64)
    cdef uint64_t[::1] s = scratch
    return _count(&adj[0, 0], nw, &alive[0], &s[0], &s[nw], &s[2 * nw], &s[3 * nw])


def scan_max_components(uint64_t[:, ::1] adj, int n, int k):
    """Compiled twin of kwaycut._pure.scan_max_components.

    Returns (best_count, best_combo) where best_combo is a tuple of deleted
    vertex ids in ascending order.
    """
    cdef int nw = adj.shape[1]
    if n == 0:
        return 0, ()
    buf = np.zeros(6 * nw, dtype=np.uint64)
    cdef uint64_t[::1] s = buf
    cdef uint64_t* full = &s[0]
    cdef uint64_t* alive = &s[nw]
    cdef int i, j, t, cur, best_count
    for i in range(n):
        full[i >> 6] |= (<uint64_t>1) << (i & 63)
    best_count = _count(&adj[0, 0], nw, full, &s[2 * nw], &s[3 * nw], &s[4 * nw], &s[5 * nw])
    best_combo = ()
    cdef int kk = k if k < n else n
    if kk <= 0:
        return best_count, best_combo
    combo_arr = np.empty(kk, dtype=np.int32)
    cdef int[::1] c = combo_arr
    for j in range(1, kk + 1):
        for t in range(j):
            c[t] = t
        while True:
            memcpy(alive, full, nw * sizeof(uint64_t))
            for t in range(j):
                alive[c[t] >> 6] &= ~((<uint64_t>1) << (c[t] & 63))
            cur = _count(&adj[0, 0], nw, alive, &s[2 * nw], &s[3 * nw], &s[4 * nw], &s[5 * nw])
            if cur > best_count:
                best_count = cur
                best_combo = tuple(int(c[t]) for t in range(j))
            i = j - 1
            while i >= 0 and c[i] == n - j + i:
                i -= 1
            if i < 0:
                break
            c[i] += 1
            for t in range(i + 1, j):
                c[t] = c[t - 1] + 1
    return best_count, best_combo
