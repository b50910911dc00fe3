"""Budget-preserving reduction from edge deletion to vertex deletion.

The transform subdivides every edge of the origin graph; the midpoint vertex
stands in for its edge, and deleting a midpoint has exactly the effect of
deleting the edge.  Protector structures attached to origin vertices of
degree at least 2 make every other deletion useless, so a vertex-deletion
budget k on the transformed graph buys no more components than an
edge-deletion budget k on the origin.  The transformed graph is bipartite:
origin vertices on one side, midpoints on the other, protectors split
between them.

Three protector variants are built by build_gadget:

- "braced" (default): each protected vertex v gets k+1 hubs, all adjacent to
  every midpoint at v, and k+1 ribs adjacent to v and to every hub.  A
  budget of k cannot sever a brace, so deleting anything outside the
  midpoint set never disconnects the graph and normalization never loses
  components.  All invariants hold.
- "chained": each protected vertex gets a path of k plain vertices, every
  link subdivided, with reinforcement links from the midpoints at v to the
  chain head (subdivided), from v back to later chain vertices (subdivided),
  and direct skip links along the chain.  Bipartite, and midpoint deletions
  still mirror edge deletions exactly, but the reinforcement vertices have
  degree 2, so small budgets can cut a chain loose; the dominance guarantee
  of normalize_to_midpoints does not hold for it.
- "bare": chains without subdivided reinforcement, the smallest variant kept
  for comparison.  Not bipartite in general and protectors are vacuous at
  k=1; build_gadget refuses it unless validate=False.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from kwaycut import _pure
from kwaycut.errors import CapacityError, GadgetConstructionError, InputError
from kwaycut.graph import (
    Graph,
    components_after_edge_deletion,
    is_bipartite,
)
from kwaycut.solvers import brute_force_kcut, brute_force_kvcp

VARIANTS = ("braced", "chained", "bare")


@dataclass(frozen=True)
class GadgetInstance:
    """A built reduction instance with its correspondence tables.

    midpoints lists the stand-in vertices in edge order; edge_of and
    midpoint_of translate between them and origin edges.  protectors_of maps
    each protected origin vertex to its protector ids, owner_of maps every
    protector back to its origin vertex.  predicted_vertices and
    predicted_edges come from the closed-form size formulas and are checked
    against the built graph.
    """

    origin: Graph
    graph: Graph
    budget: int
    variant: str
    midpoints: tuple[int, ...]
    edge_of: dict[int, tuple[int, int]]
    midpoint_of: dict[tuple[int, int], int]
    protectors_of: dict[int, tuple[int, ...]]
    owner_of: dict[int, int]
    predicted_vertices: int
    predicted_edges: int

    def midpoint_set(self) -> frozenset[int]:
        return frozenset(self.midpoints)

    def midpoints_at(self, v: int) -> tuple[int, ...]:
        """Midpoints of the origin edges incident to origin vertex v."""
        if not (0 <= v < self.origin.n):
            raise InputError(f"origin vertex {v} out of range")
        return tuple(
            self.midpoint_of[(v, u) if v < u else (u, v)] for u in self.origin.neighbors(v)
        )


def _protected_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) >= 2]


def build_gadget(g: Graph, k: int, variant: str = "braced", validate: bool = True) -> GadgetInstance:
    """Transform g into a bipartite vertex-deletion instance for budget k.

    With validate=True (the default) the structural invariants are checked
    and a GadgetConstructionError carrying every violation is raised if any
    fails; the "bare" variant fails them by design.
    """
    if k < 1:
        raise InputError(f"budget must be >= 1, got {k}")
    if variant not in VARIANTS:
        raise InputError(f"unknown variant {variant!r}, expected one of {VARIANTS}")

    n, m = g.n, g.m
    midpoint_of: dict[tuple[int, int], int] = {}
    edge_of: dict[int, tuple[int, int]] = {}
    edges: list[tuple[int, int]] = []
    for i, (u, v) in enumerate(g.edges):
        x = n + i
        midpoint_of[(u, v)] = x
        edge_of[x] = (u, v)
        edges.append((u, x))
        edges.append((x, v))

    protected = _protected_vertices(g)
    protectors_of: dict[int, tuple[int, ...]] = {}
    owner_of: dict[int, int] = {}
    next_id = n + m

    def incident_midpoints(v: int) -> list[int]:
        return [midpoint_of[(v, u) if v < u else (u, v)] for u in g.neighbors(v)]

    if variant == "braced":
        for v in protected:
            hubs = list(range(next_id, next_id + k + 1))
            ribs = list(range(next_id + k + 1, next_id + 2 * (k + 1)))
            next_id += 2 * (k + 1)
            mids = incident_midpoints(v)
            for h in hubs:
                for x in mids:
                    edges.append((h, x))
            for r in ribs:
                edges.append((v, r))
                for h in hubs:
                    edges.append((h, r))
            block = tuple(hubs + ribs)
            protectors_of[v] = block
            for p in block:
                owner_of[p] = v
        predicted_v = n + m + 2 * (k + 1) * len(protected)
        predicted_e = 2 * m + sum((k + 1) * (g.degree(v) + k + 2) for v in protected)

    elif variant == "chained":
        for v in protected:
            mains = list(range(next_id, next_id + k))
            next_id += k
            links = list(range(next_id, next_id + k))
            next_id += k
            deg = g.degree(v)
            heads = list(range(next_id, next_id + deg))
            next_id += deg
            backs = list(range(next_id, next_id + k - 1))
            next_id += k - 1

            # chain v - links[0] - mains[0] - links[1] - mains[1] - ...
            edges.append((v, links[0]))
            for i in range(k):
                edges.append((links[i], mains[i]))
                if i + 1 < k:
                    edges.append((mains[i], links[i + 1]))
            # every midpoint at v ties to the chain head through its own vertex
            for w, x in zip(heads, incident_midpoints(v)):
                edges.append((x, w))
                edges.append((w, links[0]))
            # subdivided back links from v to the first k-1 chain vertices
            for j, z in enumerate(backs):
                edges.append((v, z))
                edges.append((z, mains[j]))
            # direct skip links one step ahead along the chain
            for i in range(1, k):
                src = v if i == 1 else mains[i - 2]
                edges.append((src, links[i]))

            block = tuple(mains + links + heads + backs)
            protectors_of[v] = block
            for p in block:
                owner_of[p] = v
        predicted_v = n + m + sum(3 * k - 1 + g.degree(v) for v in protected)
        predicted_e = 2 * m + sum(5 * k - 3 + 2 * g.degree(v) for v in protected)

    else:  # bare
        for v in protected:
            if k < 2:
                protectors_of[v] = ()
                continue
            mains = list(range(next_id, next_id + k - 1))
            next_id += k - 1
            links = list(range(next_id, next_id + k - 1))
            next_id += k - 1

            edges.append((v, links[0]))
            for i in range(k - 1):
                edges.append((links[i], mains[i]))
                if i + 1 < k - 1:
                    edges.append((mains[i], links[i + 1]))
            # only the two smallest midpoints at v tie to the chain head
            for x in incident_midpoints(v)[:2]:
                edges.append((x, links[0]))
            for main in mains:
                edges.append((v, main))
            for i in range(1, k - 1):
                src = v if i == 1 else mains[i - 2]
                edges.append((src, links[i]))

            block = tuple(mains + links)
            protectors_of[v] = block
            for p in block:
                owner_of[p] = v
        extra = 0 if k < 2 else 4 * k - 3
        predicted_v = n + m + (0 if k < 2 else 2 * (k - 1)) * len(protected)
        predicted_e = 2 * m + extra * len(protected)

    gp = Graph(next_id, edges)
    gi = GadgetInstance(
        origin=g,
        graph=gp,
        budget=k,
        variant=variant,
        midpoints=tuple(range(n, n + m)),
        edge_of=edge_of,
        midpoint_of=midpoint_of,
        protectors_of=protectors_of,
        owner_of=owner_of,
        predicted_vertices=predicted_v,
        predicted_edges=predicted_e,
    )
    if validate:
        violations = check_gadget_invariants(gi)
        if violations:
            raise GadgetConstructionError(violations)
    return gi


def check_gadget_invariants(gi: GadgetInstance) -> tuple[str, ...]:
    """Structural checks on a built instance; returns violation messages.

    Checks bipartiteness, the midpoint/edge bijection, the size formulas,
    that each single midpoint deletion mirrors its edge deletion, and (for
    connected origins) that deleting origin vertices never disconnects the
    transformed graph.
    """
    bad: list[str] = []
    g, gp = gi.origin, gi.graph

    if is_bipartite(gp) is None:
        bad.append("graph is not bipartite")

    if len(gi.midpoints) != g.m:
        bad.append(f"midpoint count {len(gi.midpoints)} != origin edge count {g.m}")
    if set(gi.edge_of) != set(gi.midpoints) or set(gi.edge_of.values()) != set(g.edges):
        bad.append("midpoint/edge correspondence is not a bijection")
    elif any(gi.midpoint_of[e] != x for x, e in gi.edge_of.items()):
        bad.append("midpoint_of and edge_of disagree")

    if gp.n != gi.predicted_vertices:
        bad.append(f"vertex count {gp.n} != predicted {gi.predicted_vertices}")
    if gp.m != gi.predicted_edges:
        bad.append(f"edge count {gp.m} != predicted {gi.predicted_edges}")

    masks = gp.adjacency_masks
    full = gp.full_mask()
    base = _pure.count_components(masks, full)
    if base != _pure.count_components(g.adjacency_masks, g.full_mask()):
        bad.append("component count differs from origin before any deletion")
    for x in gi.midpoints:
        expect = components_after_edge_deletion(g, [gi.edge_of[x]]).count
        got = _pure.count_components(masks, full & ~(1 << x))
        if got != expect:
            bad.append(
                f"deleting midpoint of edge {gi.edge_of[x]} gives {got} components, expected {expect}"
            )
            break

    if g.n >= 2 and g.is_connected():
        for v in range(g.n):
            if _pure.count_components(masks, full & ~(1 << v)) != 1:
                bad.append(f"deleting origin vertex {v} disconnects the graph")
                break
        if g.m >= 1:
            alive = full
            for v in range(g.n):
                alive &= ~(1 << v)
            if _pure.count_components(masks, alive) != 1:
                bad.append("deleting all origin vertices disconnects the graph")

    return tuple(bad)


def map_edge_cut_to_vertex_cut(gi: GadgetInstance, edges: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Origin edges to their midpoint vertices; sorted, same cardinality."""
    out = []
    for u, v in edges:
        e = (u, v) if u < v else (v, u)
        x = gi.midpoint_of.get(e)
        if x is None:
            raise InputError(f"edge ({e[0]}, {e[1]}) not in origin graph")
        out.append(x)
    if len(set(out)) != len(out):
        raise InputError("duplicate edges in cut set")
    return tuple(sorted(out))


def map_vertex_cut_to_edge_cut(gi: GadgetInstance, vertices: Iterable[int]) -> tuple[tuple[int, int], ...]:
    """Midpoint vertices back to origin edges; rejects non-midpoints."""
    mids = gi.midpoint_set()
    out = []
    for x in vertices:
        if x not in mids:
            raise InputError(
                f"vertex {x} is not a midpoint; apply normalize_to_midpoints first"
            )
        out.append(gi.edge_of[x])
    if len(set(out)) != len(out):
        raise InputError("duplicate vertices in cut set")
    return tuple(sorted(out))


def normalize_to_midpoints(gi: GadgetInstance, s: Iterable[int]) -> tuple[int, ...]:
    """Rewrite a deletion set to use midpoints only.

    Each non-midpoint member is removed; if some free midpoint then strictly
    improves the component count, the best one is taken in its place
    (preferring midpoints at the removed vertex's owner, then smallest id).
    The result is within the midpoint set and no larger than the input.  For
    the braced variant the component count provably never decreases as long
    as the input is within budget; for the other variants the count is
    whatever the evaluations say.
    """
    gp = gi.graph
    masks = gp.adjacency_masks
    full = gp.full_mask()
    mids = gi.midpoint_set()

    current: set[int] = set()
    for v in s:
        if not (0 <= v < gp.n):
            raise InputError(f"vertex {v} out of range for transformed graph")
        current.add(v)

    def count(members: set[int]) -> int:
        alive = full
        for v in members:
            alive &= ~(1 << v)
        return _pure.count_components(masks, alive)

    for p in sorted(v for v in current if v not in mids):
        current.discard(p)
        base = count(current)
        owner = gi.owner_of.get(p, p if p < gi.origin.n else None)
        preferred = set(gi.midpoints_at(owner)) if owner is not None else set()
        best_key = None
        best_w = None
        for w in gi.midpoints:
            if w in current:
                continue
            c = count(current | {w})
            key = (-c, 0 if w in preferred else 1, w)
            if best_key is None or key < best_key:
                best_key = key
                best_w = w
        if best_w is not None and -best_key[0] > base:
            current.add(best_w)
    return tuple(sorted(current))


@dataclass(frozen=True)
class CutEquivalenceReport:
    """Dual brute-force comparison of the edge and vertex problems.

    best_edge_value is the optimum over edge deletions on the origin;
    best_vertex_value the optimum over midpoint deletions on the transformed
    graph, computed independently on the two structures.
    unrestricted_value additionally searches all vertices of the transformed
    graph when that search is affordable.  nonmidpoint_safe reports whether
    deletion sets avoiding midpoints (within budget) ever disconnected the
    graph; None when the origin is disconnected and the check is skipped.
    """

    variant: str
    budget: int
    best_edge_value: int
    best_edge_set: tuple[tuple[int, int], ...]
    best_vertex_value: int
    best_vertex_set: tuple[int, ...]
    unrestricted_value: Optional[int]
    violations: tuple[str, ...]
    nonmidpoint_safe: Optional[bool]
    witness: Optional[str]

    @property
    def equal(self) -> bool:
        return self.best_edge_value == self.best_vertex_value

    @property
    def ok(self) -> bool:
        return (
            self.equal
            and not self.violations
            and self.nonmidpoint_safe is not False
            and (self.unrestricted_value is None or self.unrestricted_value == self.best_vertex_value)
        )


def _best_over_midpoints(gi: GadgetInstance, k: int) -> tuple[int, tuple[int, ...]]:
    masks = gi.graph.adjacency_masks
    full = gi.graph.full_mask()
    best_count = _pure.count_components(masks, full)
    best: tuple[int, ...] = ()
    mids = gi.midpoints
    for j in range(1, min(k, len(mids)) + 1):
        for combo in combinations(mids, j):
            alive = full
            for x in combo:
                alive &= ~(1 << x)
            c = _pure.count_components(masks, alive)
            if c > best_count:
                best_count = c
                best = combo
    return best_count, best


def verify_cut_equivalence(
    g: Graph,
    k: int,
    variant: str = "braced",
    max_n: int = 6,
    max_m: int = 10,
    unrestricted_cap: int = 200000,
    nonmidpoint_samples: int = 64,
    seed: int = 0,
) -> CutEquivalenceReport:
    """Brute-force both sides of the reduction and report the comparison.

    Exponential in both directions, so the origin is capped at max_n
    vertices and max_m edges.  The unrestricted vertex search runs only when
    the number of candidate sets is within unrestricted_cap.  Non-midpoint
    deletion sets are checked exhaustively for sizes 1 and 2 and sampled
    (seeded) for larger sizes up to the budget.
    """
    if g.n > max_n or g.m > max_m:
        raise CapacityError(
            f"verification needs n <= {max_n} and m <= {max_m}, got n={g.n}, m={g.m}"
        )
    gi = build_gadget(g, k, variant=variant, validate=False)
    violations = check_gadget_invariants(gi)

    edge_sol = brute_force_kcut(g, k, limit=max(g.m, 1))
    vertex_value, vertex_set = _best_over_midpoints(gi, k)

    witness = None
    if edge_sol.component_count != vertex_value:
        witness = (
            f"edge optimum {edge_sol.component_count} != midpoint optimum {vertex_value}"
        )

    gp = gi.graph
    unrestricted = None
    total = sum(comb(gp.n, j) for j in range(0, min(k, gp.n) + 1))
    if total <= unrestricted_cap:
        unres = brute_force_kvcp(gp, k, limit=gp.n)
        unrestricted = unres.component_count
        if witness is None and unrestricted != vertex_value:
            witness = (
                f"unrestricted optimum {unrestricted} != midpoint optimum {vertex_value},"
                f" set {unres.vertices}"
            )

    safe: Optional[bool] = None
    if g.n >= 2 and g.is_connected():
        safe = True
        masks = gp.adjacency_masks
        full = gp.full_mask()
        others = [v for v in range(gp.n) if v not in gi.midpoint_set()]

        def connected_without(members: tuple[int, ...]) -> bool:
            alive = full
            for v in members:
                alive &= ~(1 << v)
            return _pure.count_components(masks, alive) == 1

        exhaustive_sizes = [j for j in (1, 2) if j <= k and comb(len(others), j) <= 20000]
        for j in exhaustive_sizes:
            for combo in combinations(others, j):
                if not connected_without(combo):
                    safe = False
                    if witness is None:
                        witness = f"non-midpoint set {combo} disconnects the graph"
                    break
            if safe is False:
                break
        if safe:
            rng = random.Random(seed)
            for j in range(1, k + 1):
                if j in exhaustive_sizes or j > len(others):
                    continue
                for _ in range(nonmidpoint_samples):
                    combo = tuple(sorted(rng.sample(others, j)))
                    if not connected_without(combo):
                        safe = False
                        if witness is None:
                            witness = f"non-midpoint set {combo} disconnects the graph"
                        break
                if safe is False:
                    break

    return CutEquivalenceReport(
        variant=variant,
        budget=k,
        best_edge_value=edge_sol.component_count,
        best_edge_set=edge_sol.edges,
        best_vertex_value=vertex_value,
        best_vertex_set=vertex_set,
        unrestricted_value=unrestricted,
        violations=violations,
        nonmidpoint_safe=safe,
        witness=witness,
    )
