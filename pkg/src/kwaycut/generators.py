"""Seeded instance generators.

Every random family draws from random.Random(seed) only, so a (kind,
params, seed) triple always produces the same graph on every platform.
"""

from __future__ import annotations

import random
from itertools import combinations

from kwaycut.errors import InputError
from kwaycut.graph import Graph


def _check_size(name: str, value: int) -> None:
    if value < 0:
        raise InputError(f"{name} must be >= 0, got {value}")


def _check_probability(p: float) -> None:
    if not (0.0 <= p <= 1.0):
        raise InputError(f"probability must be in [0, 1], got {p}")


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi graph: each pair becomes an edge with probability p."""
    _check_size("n", n)
    _check_probability(p)
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def connected_gnp(n: int, p: float, seed: int = 0, max_tries: int = 1000) -> Graph:
    """First connected gnp draw from the seeded stream; error if none found."""
    _check_size("n", n)
    _check_probability(p)
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = Graph(n, edges)
        if g.is_connected():
            return g
    raise InputError(
        f"no connected graph with n={n}, p={p} after {max_tries} draws; raise p"
    )


def bipartite(n1: int, n2: int, p: float, seed: int = 0) -> Graph:
    """Random bipartite graph: side one is 0..n1-1, side two follows."""
    _check_size("n1", n1)
    _check_size("n2", n2)
    _check_probability(p)
    rng = random.Random(seed)
    edges = [
        (u, n1 + w)
        for u in range(n1)
        for w in range(n2)
        if rng.random() < p
    ]
    return Graph(n1 + n2, edges)


def complete_bipartite(n1: int, n2: int) -> Graph:
    """K_{n1,n2}: side one is 0..n1-1, side two follows, all cross edges."""
    _check_size("n1", n1)
    _check_size("n2", n2)
    edges = [(u, n1 + w) for u in range(n1) for w in range(n2)]
    return Graph(n1 + n2, edges)


def split(n1: int, n2: int, p: float, seed: int = 0) -> Graph:
    """Random split graph: independent side 0..n1-1, clique n1..n1+n2-1.

    Clique edges are always present; each cross pair appears with
    probability p.
    """
    _check_size("n1", n1)
    _check_size("n2", n2)
    _check_probability(p)
    rng = random.Random(seed)
    edges = [(n1 + a, n1 + b) for a, b in combinations(range(n2), 2)]
    edges.extend(
        (u, n1 + w) for u in range(n1) for w in range(n2) if rng.random() < p
    )
    return Graph(n1 + n2, edges)


def path(n: int) -> Graph:
    _check_size("n", n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star on n vertices with hub 0; n=1 is a single vertex."""
    if n < 1:
        raise InputError(f"star needs n >= 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def generate(kind: str, seed: int = 0, **params) -> Graph:
    """Dispatch by kind name; see the individual generators for parameters.

    Kinds: gnp(n, p), bipartite(n1, n2, p), split(n1, n2, p),
    complete-bipartite(n1, n2), path(n), star(n), cycle(n).
    """
    kind = kind.replace("_", "-")
    makers = {
        "gnp": lambda: gnp(params.pop("n"), params.pop("p"), seed=seed),
        "bipartite": lambda: bipartite(params.pop("n1"), params.pop("n2"), params.pop("p"), seed=seed),
        "split": lambda: split(params.pop("n1"), params.pop("n2"), params.pop("p"), seed=seed),
        "complete-bipartite": lambda: complete_bipartite(params.pop("n1"), params.pop("n2")),
        "path": lambda: path(params.pop("n")),
        "star": lambda: star(params.pop("n")),
        "cycle": lambda: cycle(params.pop("n")),
    }
    maker = makers.get(kind)
    if maker is None:
        raise InputError(f"unknown generator kind {kind!r}")
    try:
        g = maker()
    except KeyError as exc:
        raise InputError(f"generator {kind!r} is missing parameter {exc.args[0]!r}") from None
    if params:
        raise InputError(f"unexpected parameters for {kind!r}: {sorted(params)}")
    return g
