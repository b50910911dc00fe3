"""Split and complete bipartite graphs: recognition and closed-form solvers.

On a split graph (clique plus independent set) every deletion leaves at most
one component with 2 or more vertices; the rest are singletons.  That shape
makes the maximum-components and minimum-pairwise-connectivity objectives
agree on at least one optimal set, and it collapses the search space to the
clique side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from kwaycut.errors import CapacityError, InputError
from kwaycut.graph import (
    Graph,
    components_after_vertex_deletion,
    exhaustive_limit,
    is_bipartite,
)
from kwaycut.solvers import VertexCutSolution, _pairwise_for, _sizes_after


@dataclass(frozen=True)
class SplitPartition:
    """Partition of a split graph: v1 independent, v2 a clique.

    v1_neighbors is N(V1), the set of clique vertices adjacent to the
    independent side.
    """

    v1: frozenset[int]
    v2: frozenset[int]
    v1_neighbors: frozenset[int]


def recognize_split(g: Graph) -> Optional[SplitPartition]:
    """Canonical split partition, or None.

    Uses the degree-sequence test: with degrees d_1 >= ... >= d_n and
    m = max{i : d_i >= i-1}, the graph is split iff
    sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.  The clique side is the m
    highest-degree vertices, ties broken by smallest id.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degrees = [g.degree(v) for v in order]
    m = 0
    for i in range(1, g.n + 1):
        if degrees[i - 1] >= i - 1:
            m = i
    if sum(degrees[:m]) != m * (m - 1) + sum(degrees[m:]):
        return None
    v2 = frozenset(order[:m])
    v1 = frozenset(order[m:])
    neighbors = frozenset(u for v in v1 for u in g.neighbors(v))
    return SplitPartition(v1=v1, v2=v2, v1_neighbors=neighbors)


def validate_split_partition(g: Graph, sp: SplitPartition) -> None:
    """Raise InputError unless sp is a correct split partition of g."""
    if sp.v1 & sp.v2:
        raise InputError("v1 and v2 overlap")
    if sp.v1 | sp.v2 != frozenset(range(g.n)):
        raise InputError("v1 and v2 do not cover the vertex set")
    for u, v in combinations(sorted(sp.v1), 2):
        if g.has_edge(u, v):
            raise InputError(f"v1 is not independent: edge ({u}, {v})")
    for u, v in combinations(sorted(sp.v2), 2):
        if not g.has_edge(u, v):
            raise InputError(f"v2 is not a clique: missing edge ({u}, {v})")
    expected = frozenset(u for v in sp.v1 for u in g.neighbors(v))
    if sp.v1_neighbors != expected:
        raise InputError("v1_neighbors does not match the actual neighborhood of v1")


def solve_split(g: Graph, sp: SplitPartition, k: int) -> VertexCutSolution:
    """Optimal deletion set on a split graph.

    With budget covering N(V1) the solution deletes N(V1), isolating all of
    V1, then spends leftover budget inside the remaining clique without ever
    emptying it (deleting the last clique vertex would lose a component, so
    that budget stays unused).  Otherwise the optimum is found by exact
    search over clique subsets only; deleting independent-side vertices
    never helps because they sit on the boundary of the single non-trivial
    component.
    """
    validate_split_partition(g, sp)
    if k < 0:
        raise InputError(f"budget must be >= 0, got {k}")

    if k >= len(sp.v1_neighbors):
        rest = sorted(sp.v2 - sp.v1_neighbors)
        extras = min(k - len(sp.v1_neighbors), max(len(rest) - 1, 0))
        chosen = tuple(sorted(sp.v1_neighbors) + rest[:extras])
        count = len(sp.v1) + (1 if rest else 0)
    else:
        masks = g.adjacency_masks
        full = g.full_mask()
        best_count = len(_sizes_after(masks, full))
        best: tuple[int, ...] = ()
        clique = sorted(sp.v2)
        for j in range(1, min(k, len(clique)) + 1):
            for combo in combinations(clique, j):
                alive = full
                for v in combo:
                    alive &= ~(1 << v)
                c = len(_sizes_after(masks, alive))
                if c > best_count:
                    best_count = c
                    best = combo
        chosen, count = best, best_count

    return VertexCutSolution(
        vertices=chosen,
        component_count=count,
        budget=k,
        optimal=True,
        weight_used=Fraction(len(chosen)),
        pairwise=_pairwise_for(g, chosen),
    )


@dataclass(frozen=True)
class ShapeReport:
    """Shape of the residual graph: singleton components plus at most one
    larger one when the split structure holds."""

    conforms: bool
    component_sizes: tuple[int, ...]
    singleton_count: int
    nontrivial_count: int
    nontrivial_has_clique_vertex: Optional[bool]


def residual_shape(g: Graph, sp: SplitPartition, s: Iterable[int]) -> ShapeReport:
    """Classify the components of g minus s against the split-graph shape."""
    validate_split_partition(g, sp)
    report = components_after_vertex_deletion(g, s)
    sizes = report.sizes
    nontrivial = [i for i, size in enumerate(sizes) if size >= 2]
    has_clique = None
    if len(nontrivial) == 1:
        idx = nontrivial[0]
        has_clique = any(
            report.labels[v] == idx for v in sp.v2
        )
    conforms = len(nontrivial) <= 1 and (has_clique is None or has_clique)
    return ShapeReport(
        conforms=conforms,
        component_sizes=sizes,
        singleton_count=sum(1 for size in sizes if size == 1),
        nontrivial_count=len(nontrivial),
        nontrivial_has_clique_vertex=has_clique,
    )


@dataclass(frozen=True)
class CnpEquivalenceReport:
    """Comparison of the full optimal-set families of the two objectives.

    kvcp_optima and cnp_optima are all budget-feasible sets attaining the
    best component count and the best (lowest) pairwise connectivity.  The
    two readings of "equivalent" are reported separately: shared_optimum is
    a set optimal for both (the existence reading), the every_* flags state
    whether one family is contained in the other (the universal reading).
    """

    budget: int
    kvcp_value: int
    cnp_value: int
    kvcp_optima: tuple[tuple[int, ...], ...]
    cnp_optima: tuple[tuple[int, ...], ...]
    shared_optimum: Optional[tuple[int, ...]]
    every_cnp_is_kvcp: bool
    every_kvcp_is_cnp: bool
    cnp_only_witness: Optional[tuple[int, ...]]
    kvcp_only_witness: Optional[tuple[int, ...]]

    @property
    def some_shared(self) -> bool:
        return self.shared_optimum is not None


def check_cnp_equivalence(
    g: Graph, sp: SplitPartition, k: int, limit: Optional[int] = None
) -> CnpEquivalenceReport:
    """Enumerate every deletion set within budget and compare the optimal
    families of the two objectives.  Exponential; capped by the exhaustive
    limit."""
    validate_split_partition(g, sp)
    if k < 0:
        raise InputError(f"budget must be >= 0, got {k}")
    cap = exhaustive_limit() if limit is None else limit
    if g.n > cap:
        raise CapacityError(f"equivalence check needs n <= {cap}, got {g.n}")

    masks = g.adjacency_masks
    full = g.full_mask()

    best_count = -1
    best_pairwise = None
    kvcp_sets: list[tuple[int, ...]] = []
    cnp_sets: list[tuple[int, ...]] = []
    for j in range(0, min(k, g.n) + 1):
        for combo in combinations(range(g.n), j):
            alive = full
            for v in combo:
                alive &= ~(1 << v)
            sizes = _sizes_after(masks, alive)
            count = len(sizes)
            pairwise = sum(s * (s - 1) // 2 for s in sizes)
            if count > best_count:
                best_count = count
                kvcp_sets = [combo]
            elif count == best_count:
                kvcp_sets.append(combo)
            if best_pairwise is None or pairwise < best_pairwise:
                best_pairwise = pairwise
                cnp_sets = [combo]
            elif pairwise == best_pairwise:
                cnp_sets.append(combo)

    kvcp_family = set(kvcp_sets)
    cnp_family = set(cnp_sets)
    shared = sorted(kvcp_family & cnp_family)
    cnp_only = sorted(cnp_family - kvcp_family)
    kvcp_only = sorted(kvcp_family - cnp_family)
    return CnpEquivalenceReport(
        budget=k,
        kvcp_value=best_count,
        cnp_value=best_pairwise if best_pairwise is not None else 0,
        kvcp_optima=tuple(sorted(kvcp_family)),
        cnp_optima=tuple(sorted(cnp_family)),
        shared_optimum=shared[0] if shared else None,
        every_cnp_is_kvcp=not cnp_only,
        every_kvcp_is_cnp=not kvcp_only,
        cnp_only_witness=cnp_only[0] if cnp_only else None,
        kvcp_only_witness=kvcp_only[0] if kvcp_only else None,
    )


def complete_bipartite_sides(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The two sides when g is complete bipartite (every cross pair
    adjacent), else None.  Edgeless graphs count as one empty side."""
    coloring = is_bipartite(g)
    if coloring is None:
        return None
    side_a, side_b = coloring
    if g.m != len(side_a) * len(side_b):
        return None
    return tuple(sorted(side_a)), tuple(sorted(side_b))


def solve_complete_bipartite(g: Graph, k: int) -> VertexCutSolution:
    """Closed-form optimum on a complete bipartite graph.

    When the smaller side fits the budget, delete it entirely; every vertex
    of the larger side becomes its own component and leftover budget stays
    unused (any further deletion removes a component).  Otherwise both sides
    keep a vertex after any deletion within budget, the residual graph stays
    connected, and deleting nothing is the canonical optimum.
    """
    if k < 0:
        raise InputError(f"budget must be >= 0, got {k}")
    sides = complete_bipartite_sides(g)
    if sides is None:
        raise InputError("graph is not complete bipartite")
    side_a, side_b = sides
    if len(side_a) != len(side_b):
        smaller, larger = sorted((side_a, side_b), key=len)
    else:
        # equal sizes: the side holding the smaller id is deleted
        smaller, larger = sorted((side_a, side_b), key=lambda s: s[:1])

    if len(smaller) <= k:
        chosen = smaller
        count = len(larger)
    else:
        chosen = ()
        count = 1
    return VertexCutSolution(
        vertices=tuple(chosen),
        component_count=count,
        budget=k,
        optimal=True,
        weight_used=Fraction(len(chosen)),
        pairwise=_pairwise_for(g, chosen),
    )
