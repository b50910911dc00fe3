"""Shared fixtures and independent oracles.

The oracles lean on networkx so the package's own connectivity code never
checks itself.  Witness files for failed sweeps land in tests/witnesses/.
"""

from __future__ import annotations

import itertools
import re
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

from kwaycut import Graph, emit_instance

WITNESS_DIR = Path(__file__).parent / "witnesses"


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_count_after_deletion(g: Graph, deleted) -> int:
    h = to_networkx(g)
    h.remove_nodes_from(deleted)
    return nx.number_connected_components(h)


def nx_count_after_edge_deletion(g: Graph, removed) -> int:
    h = to_networkx(g)
    h.remove_edges_from(removed)
    return nx.number_connected_components(h)


def oracle_best_vertex_cut(g: Graph, k: int) -> tuple[int, tuple[int, ...]]:
    """Exhaustive optimum with the canonical tie-break: best count, then
    fewest deletions, then lexicographically smallest set."""
    best = nx_count_after_deletion(g, ())
    best_set: tuple[int, ...] = ()
    for size in range(1, min(k, g.n) + 1):
        for combo in itertools.combinations(range(g.n), size):
            c = nx_count_after_deletion(g, combo)
            if c > best:
                best, best_set = c, combo
    return best, best_set


def oracle_best_edge_cut(g: Graph, k: int) -> int:
    best = nx_count_after_edge_deletion(g, ())
    for size in range(1, min(k, g.m) + 1):
        for combo in itertools.combinations(g.edges, size):
            best = max(best, nx_count_after_edge_deletion(g, combo))
    return best


def write_witness(name: str, g: Graph, details: dict) -> Path:
    WITNESS_DIR.mkdir(exist_ok=True)
    path = WITNESS_DIR / f"{name}.txt"
    lines = [f"# {key}: {value}" for key, value in details.items()]
    path.write_text(emit_instance(g) + "\n".join(lines) + "\n")
    return path


@pytest.fixture(scope="session")
def atlas_graphs() -> list[Graph]:
    """Every graph on 1..6 vertices, one per isomorphism class."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= 6:
            out.append(Graph(n, [tuple(sorted(e)) for e in h.edges()]))
    return out


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    else:
        edges = []
    return Graph(n, edges)


_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes: dict[str, str] = {}
    for key, word in (("passed", "PASS"), ("skipped", "SKIP"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            if _CRITERION.search(name) and outcomes.get(name) != "FAIL":
                outcomes[name] = word
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(outcomes, key=lambda s: int(_CRITERION.search(s).group(1))):
        terminalreporter.write_line(f"{name}: {outcomes[name]}")
