"""Pure-Python connectivity kernels over bitmask-encoded graphs.

A graph on n vertices is a list ``adj`` of n Python ints where bit v of
``adj[u]`` is set iff uv is an edge.  Vertex subsets are single ints.  These
functions mirror the compiled kernels in kwaycut._core exactly; tests pin the
two implementations against each other.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence


def count_components(adj: Sequence[int], alive: int) -> int:
    """Number of connected components of the subgraph induced by ``alive``."""
    count = 0
    remaining = alive
    while remaining:
        seed = remaining & -remaining
        members = 0
        frontier = seed
        while frontier:
            members |= frontier
            reach = 0
            f = frontier
            while f:
                b = f & -f
                reach |= adj[b.bit_length() - 1]
                f ^= b
            frontier = reach & alive & ~members
        remaining &= ~members
        count += 1
    return count


def component_labels(adj: Sequence[int], n: int, alive: int) -> list[int]:
    """Per-vertex component indices; -1 for vertices outside ``alive``.

    Components are numbered by the rank of their smallest vertex, so the
    labelling is deterministic.
    """
    labels = [-1] * n
    index = 0
    remaining = alive
    while remaining:
        seed = remaining & -remaining
        members = 0
        frontier = seed
        while frontier:
            members |= frontier
            reach = 0
            f = frontier
            while f:
                b = f & -f
                reach |= adj[b.bit_length() - 1]
                f ^= b
            frontier = reach & alive & ~members
        m = members
        while m:
            b = m & -m
            labels[b.bit_length() - 1] = index
            m ^= b
        remaining &= ~members
        index += 1
    return labels


def scan_max_components(adj: Sequence[int], n: int, k: int) -> tuple[int, tuple[int, ...]]:
    """Exhaustive best deletion set of size at most k maximizing components.

    Deletion sets are enumerated by cardinality, then lexicographically, and
    only strict improvements replace the incumbent, so the returned tuple is
    the canonical optimum: largest count, then fewest vertices, then the
    lexicographically smallest set.
    """
    full = (1 << n) - 1
    best_count = count_components(adj, full)
    best: tuple[int, ...] = ()
    for j in range(1, min(k, n) + 1):
        for combo in combinations(range(n), j):
            alive = full
            for v in combo:
                alive &= ~(1 << v)
            c = count_components(adj, alive)
            if c > best_count:
                best_count = c
                best = combo
    return best_count, best
