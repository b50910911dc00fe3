"""Exact and heuristic solvers for vertex and edge deletion problems.

All exact solvers break ties the same way: largest (or smallest, when
minimizing) objective first, then fewest deletions, then the
lexicographically smallest deletion set.  Exhaustive methods are guarded by
a capacity limit because their cost is exponential.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from kwaycut import _pure, kernels
from kwaycut.errors import CapacityError, InputError
from kwaycut.graph import (
    Graph,
    component_count_after_deletion,
    exhaustive_limit,
    max_independent_set_size,
)


@dataclass(frozen=True)
class VertexCutSolution:
    """Deletion set, the component count it attains, and solver metadata.

    pairwise is the pairwise connectivity of the residual graph (number of
    vertex pairs still joined by a path); None when the solver did not
    compute it.
    """

    vertices: tuple[int, ...]
    component_count: int
    budget: int
    optimal: bool
    weight_used: Fraction = Fraction(0)
    pairwise: Optional[int] = None


@dataclass(frozen=True)
class EdgeCutSolution:
    edges: tuple[tuple[int, int], ...]
    component_count: int
    budget: int
    optimal: bool


@dataclass(frozen=True)
class CnpSolution:
    """Critical node solution: minimizes pairwise connectivity."""

    vertices: tuple[int, ...]
    pairwise_connectivity: int
    budget: int
    optimal: bool


@dataclass(frozen=True)
class SmallComponentsSolution:
    """Maximizes the number of components of order at most ``bound``."""

    vertices: tuple[int, ...]
    small_component_count: int
    bound: int
    budget: int
    optimal: bool


def _check_budget(k) -> None:
    if k < 0:
        raise InputError(f"budget must be >= 0, got {k}")


def _check_capacity(size: int, limit: Optional[int], what: str) -> None:
    cap = exhaustive_limit() if limit is None else limit
    if size > cap:
        raise CapacityError(f"{what} is exhaustive and needs size <= {cap}, got {size}")


def _pairwise_for(g: Graph, vertices) -> int:
    alive = g.full_mask()
    for v in vertices:
        alive &= ~(1 << v)
    return sum(s * (s - 1) // 2 for s in _sizes_after(g.adjacency_masks, alive))


def _sizes_after(masks, alive: int) -> list[int]:
    sizes = []
    remaining = alive
    while remaining:
        members = 0
        frontier = remaining & -remaining
        while frontier:
            members |= frontier
            reach = 0
            f = frontier
            while f:
                b = f & -f
                reach |= masks[b.bit_length() - 1]
                f ^= b
            frontier = reach & alive & ~members
        sizes.append(members.bit_count())
        remaining &= ~members
    return sizes


def brute_force_kvcp(g: Graph, k: int, limit: Optional[int] = None) -> VertexCutSolution:
    """Exhaustive maximum-components deletion set of size at most k.

    Vertex weights are ignored; the budget counts vertices.
    """
    _check_budget(k)
    _check_capacity(g.n, limit, "brute_force_kvcp")
    count, combo = kernels.scan_max_components(
        g.adjacency_masks, g.n, k, packed=g.packed_adjacency()
    )
    return VertexCutSolution(
        vertices=combo,
        component_count=count,
        budget=k,
        optimal=True,
        weight_used=Fraction(len(combo)),
        pairwise=_pairwise_for(g, combo),
    )


def brute_force_kvcp_weighted(
    g: Graph, budget, limit: Optional[int] = None
) -> VertexCutSolution:
    """Exhaustive weighted variant: total deleted weight must stay within budget.

    Weights and the budget are exact rationals, so feasibility never depends
    on floating point.  With unit weights and an integer budget this agrees
    with brute_force_kvcp.
    """
    budget = Fraction(budget)
    _check_budget(budget)
    _check_capacity(g.n, limit, "brute_force_kvcp_weighted")
    masks = g.adjacency_masks
    full = g.full_mask()
    weights = g.weights

    best_count = _pure.count_components(masks, full)
    best_key = (-best_count, 0, ())
    best_weight = Fraction(0)

    def walk(idx: int, combo: tuple[int, ...], wsum: Fraction, alive: int) -> None:
        nonlocal best_key, best_count, best_weight
        if combo:
            c = _pure.count_components(masks, alive)
            key = (-c, len(combo), combo)
            if key < best_key:
                best_key = key
                best_count = c
                best_weight = wsum
        for v in range(idx, g.n):
            w = wsum + weights[v]
            if w <= budget:
                walk(v + 1, combo + (v,), w, alive & ~(1 << v))

    walk(0, (), Fraction(0), full)
    return VertexCutSolution(
        vertices=best_key[2],
        component_count=best_count,
        budget=int(budget) if budget.denominator == 1 else budget,
        optimal=True,
        weight_used=best_weight,
        pairwise=_pairwise_for(g, best_key[2]),
    )


def brute_force_kcut(g: Graph, k: int, limit: Optional[int] = None) -> EdgeCutSolution:
    """Exhaustive best deletion of at most k edges maximizing components."""
    _check_budget(k)
    _check_capacity(g.m, limit, "brute_force_kcut")
    edges = g.edges
    base_masks = list(g.adjacency_masks)
    full = g.full_mask()
    best_count = _pure.count_components(base_masks, full)
    best: tuple[tuple[int, int], ...] = ()
    for j in range(1, min(k, g.m) + 1):
        for combo in combinations(range(g.m), j):
            masks = list(base_masks)
            for idx in combo:
                u, v = edges[idx]
                masks[u] &= ~(1 << v)
                masks[v] &= ~(1 << u)
            c = _pure.count_components(masks, full)
            if c > best_count:
                best_count = c
                best = tuple(edges[idx] for idx in combo)
    return EdgeCutSolution(edges=best, component_count=best_count, budget=k, optimal=True)


def brute_force_cnp(g: Graph, k: int, limit: Optional[int] = None) -> CnpSolution:
    """Exhaustive critical node problem: delete at most k vertices to
    minimize the number of still-connected vertex pairs."""
    _check_budget(k)
    _check_capacity(g.n, limit, "brute_force_cnp")
    masks = g.adjacency_masks
    full = g.full_mask()
    best_value = sum(s * (s - 1) // 2 for s in _sizes_after(masks, full))
    best: tuple[int, ...] = ()
    for j in range(1, min(k, g.n) + 1):
        for combo in combinations(range(g.n), j):
            alive = full
            for v in combo:
                alive &= ~(1 << v)
            value = sum(s * (s - 1) // 2 for s in _sizes_after(masks, alive))
            if value < best_value:
                best_value = value
                best = combo
    return CnpSolution(
        vertices=best, pairwise_connectivity=best_value, budget=k, optimal=True
    )


def brute_force_small_components(
    g: Graph, k: int, c: int, limit: Optional[int] = None
) -> SmallComponentsSolution:
    """Exhaustive maximization of the number of components of order <= c."""
    _check_budget(k)
    if c < 1:
        raise InputError(f"component size bound must be >= 1, got {c}")
    _check_capacity(g.n, limit, "brute_force_small_components")
    masks = g.adjacency_masks
    full = g.full_mask()
    best_value = sum(1 for s in _sizes_after(masks, full) if s <= c)
    best: tuple[int, ...] = ()
    for j in range(1, min(k, g.n) + 1):
        for combo in combinations(range(g.n), j):
            alive = full
            for v in combo:
                alive &= ~(1 << v)
            value = sum(1 for s in _sizes_after(masks, alive) if s <= c)
            if value > best_value:
                best_value = value
                best = combo
    return SmallComponentsSolution(
        vertices=best, small_component_count=best_value, bound=c, budget=k, optimal=True
    )


def branch_and_bound_kvcp(
    g: Graph,
    k: int,
    time_limit: Optional[float] = None,
    alpha_cap: bool = True,
) -> VertexCutSolution:
    """Exact maximum-components solver with pruning.

    The bound adds to the current count the k' largest values of
    residual_degree - 1 over the still-selectable vertices, which bounds the
    gain of any k' further deletions.  The independence number caps the
    objective globally and is used when the graph is small enough to afford
    it.  With a time limit the incumbent is returned and marked non-optimal
    on expiry.  Ties are not broken canonically; only the objective value is
    guaranteed, any optimal set may be returned.
    """
    _check_budget(k)
    masks = g.adjacency_masks
    n = g.n
    full = g.full_mask()
    k = min(k, n)

    baseline = _pure.count_components(masks, full)
    best_count = baseline
    best: tuple[int, ...] = ()

    alpha = None
    if alpha_cap and n <= exhaustive_limit():
        alpha = max_independent_set_size(g)

    deadline = time.monotonic() + time_limit if time_limit is not None else None
    timed_out = False
    nodes = 0

    def walk(idx: int, combo: tuple[int, ...], alive: int, count: int) -> None:
        nonlocal best_count, best, timed_out, nodes
        nodes += 1
        if deadline is not None and nodes % 512 == 0 and time.monotonic() > deadline:
            timed_out = True
        if timed_out:
            return
        if count > best_count:
            best_count = count
            best = combo
        if len(combo) == k or idx >= n:
            return
        if alpha is not None and best_count >= alpha:
            return
        room = k - len(combo)
        gains = []
        for v in range(idx, n):
            bit = 1 << v
            if alive & bit:
                d = (masks[v] & alive).bit_count()
                if d >= 2:
                    gains.append(d - 1)
        gains.sort(reverse=True)
        bound = count + sum(gains[:room])
        if alpha is not None:
            bound = min(bound, alpha)
        if bound <= best_count:
            return
        for v in range(idx, n):
            bit = 1 << v
            next_alive = alive & ~bit
            walk(v + 1, combo + (v,), next_alive, _pure.count_components(masks, next_alive))
            if timed_out:
                return

    walk(0, (), full, baseline)
    return VertexCutSolution(
        vertices=best,
        component_count=best_count,
        budget=k,
        optimal=not timed_out,
        weight_used=Fraction(len(best)),
        pairwise=_pairwise_for(g, best),
    )


def greedy_kvcp(g: Graph, k: int) -> VertexCutSolution:
    """Polynomial heuristic: repeatedly delete the vertex whose removal adds
    the most components, smallest id on ties, stopping when every remaining
    deletion would lose a component.  The result carries optimal=False even
    when it happens to be optimal."""
    _check_budget(k)
    deleted_mask = 0
    chosen: list[int] = []
    count = component_count_after_deletion(g, 0)
    for _ in range(min(k, g.n)):
        best_gain = None
        best_v = None
        alive = g.full_mask() & ~deleted_mask
        scan = alive
        while scan:
            low = scan & -scan
            v = low.bit_length() - 1
            c = component_count_after_deletion(g, deleted_mask | low)
            gain = c - count
            if best_gain is None or gain > best_gain:
                best_gain = gain
                best_v = v
            scan ^= low
        if best_v is None or best_gain < 0:
            break
        deleted_mask |= 1 << best_v
        chosen.append(best_v)
        count += best_gain
    return VertexCutSolution(
        vertices=tuple(chosen),
        component_count=count,
        budget=k,
        optimal=False,
        weight_used=Fraction(len(chosen)),
        pairwise=_pairwise_for(g, chosen),
    )
