"""Undirected graphs with bitmask adjacency and component analyses."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from kwaycut import kernels
from kwaycut.errors import CapacityError, InputError

DEFAULT_EXHAUSTIVE_LIMIT = 24


def exhaustive_limit() -> int:
    """Vertex-count ceiling for exponential scans, overridable via env."""
    import os

    raw = os.environ.get("KWAYCUT_EXHAUSTIVE_LIMIT")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise InputError(f"bad KWAYCUT_EXHAUSTIVE_LIMIT: {raw!r}") from exc
    return DEFAULT_EXHAUSTIVE_LIMIT


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored normalized (u < v, sorted, no duplicates).  Each vertex
    carries a positive rational weight, 1 by default.  Instances are treated
    as immutable once constructed; derived structures (adjacency bitmasks,
    the packed array for the compiled kernel) are cached.
    """

    __slots__ = ("n", "edges", "weights", "_masks", "_packed")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        weights: Optional[Mapping[int, Fraction | int]] = None,
    ):
        if n < 0:
            raise InputError(f"vertex count must be >= 0, got {n}")
        self.n = n
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InputError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))

        w = [Fraction(1)] * n
        if weights:
            for v, value in weights.items():
                if not (0 <= v < n):
                    raise InputError(f"weight for unknown vertex {v}")
                frac = Fraction(value)
                if frac <= 0:
                    raise InputError(f"vertex weight must be positive, got {frac} at {v}")
                w[v] = frac
        self.weights: tuple[Fraction, ...] = tuple(w)

        masks = [0] * n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._masks: tuple[int, ...] = tuple(masks)
        self._packed = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._masks

    def packed_adjacency(self):
        """Cached (n, words) uint64 array for the compiled kernel."""
        if self._packed is None and self.n > 0:
            self._packed = kernels.pack_adjacency(self._masks, self.n)
        return self._packed

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return bool(self._masks[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self._masks[v]
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    def weight(self, v: int) -> Fraction:
        return self.weights[v]

    def total_weight(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in vertices), Fraction(0))

    def is_unit_weighted(self) -> bool:
        return all(w == 1 for w in self.weights)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return kernels.count_components(self._masks, self.n, self.full_mask()) <= 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.weights))


@dataclass(frozen=True)
class ComponentReport:
    """Components of a graph after deletions.

    labels[v] is the component index of v, or -1 for deleted vertices.
    Components are numbered by their smallest vertex, so labels and sizes
    are deterministic.  sizes[i] is the order of component i.
    """

    count: int
    sizes: tuple[int, ...]
    labels: tuple[int, ...]

    def pairwise_connectivity(self) -> int:
        return sum(s * (s - 1) // 2 for s in self.sizes)

    def count_at_most(self, c: int) -> int:
        """Number of components of order at most c."""
        return sum(1 for s in self.sizes if s <= c)


def _report_for_masks(masks, n: int, alive: int) -> ComponentReport:
    labels = kernels.component_labels(masks, n, alive)
    count = max(labels) + 1 if labels else 0
    sizes = [0] * count
    for lab in labels:
        if lab >= 0:
            sizes[lab] += 1
    return ComponentReport(count=count, sizes=tuple(sizes), labels=tuple(labels))


def components_after_vertex_deletion(g: Graph, deleted: Iterable[int]) -> ComponentReport:
    """Components of the induced subgraph on V minus the deleted set."""
    alive = g.full_mask()
    for v in deleted:
        if not (0 <= v < g.n):
            raise InputError(f"deleted vertex {v} out of range for n={g.n}")
        alive &= ~(1 << v)
    return _report_for_masks(g.adjacency_masks, g.n, alive)


def components_after_edge_deletion(g: Graph, deleted: Iterable[tuple[int, int]]) -> ComponentReport:
    """Components after removing edges; all vertices stay."""
    masks = list(g.adjacency_masks)
    present = set(g.edges)
    for u, v in deleted:
        e = (u, v) if u < v else (v, u)
        if e not in present:
            raise InputError(f"edge ({e[0]}, {e[1]}) not in graph")
        masks[e[0]] &= ~(1 << e[1])
        masks[e[1]] &= ~(1 << e[0])
    return _report_for_masks(masks, g.n, g.full_mask())


def component_count_after_deletion(g: Graph, deleted_mask: int) -> int:
    """Fast path used by solvers; deleted_mask is a vertex bitmask."""
    alive = g.full_mask() & ~deleted_mask
    return kernels.count_components(
        g.adjacency_masks, g.n, alive, packed=g.packed_adjacency()
    )


def pairwise_connectivity(g: Graph, deleted: Iterable[int]) -> int:
    """Sum over components of s*(s-1)/2 after deleting the given vertices."""
    return components_after_vertex_deletion(g, deleted).pairwise_connectivity()


def count_small_components(g: Graph, deleted: Iterable[int], c: int) -> int:
    """Components of order at most c after deleting the given vertices."""
    if c < 1:
        raise InputError(f"component size bound must be >= 1, got {c}")
    return components_after_vertex_deletion(g, deleted).count_at_most(c)


def is_bipartite(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two-coloring if one exists, else None.

    Deterministic: each component is rooted at its smallest vertex, which is
    colored into the first side.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for u in g.neighbors(v):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    side_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return side_a, side_b


def max_independent_set_size(g: Graph, limit: Optional[int] = None) -> int:
    """Independence number by branch and bound over bitmasks.

    Guarded by the exhaustive limit since the search is exponential.
    """
    cap = exhaustive_limit() if limit is None else limit
    if g.n > cap:
        raise CapacityError(
            f"independence number needs n <= {cap}, got n={g.n}"
        )
    masks = g.adjacency_masks
    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        if candidates == 0:
            if size > best:
                best = size
            return
        if size + candidates.bit_count() <= best:
            return
        # pivot on the candidate with most candidate-neighbors, lowest id on ties
        pivot = -1
        pivot_deg = -1
        scan = candidates
        while scan:
            low = scan & -scan
            v = low.bit_length() - 1
            deg = (masks[v] & candidates).bit_count()
            if deg > pivot_deg:
                pivot, pivot_deg = v, deg
            scan ^= low
        expand(candidates & ~masks[pivot] & ~(1 << pivot), size + 1)
        expand(candidates & ~(1 << pivot), size)

    expand(g.full_mask(), 0)
    return best
