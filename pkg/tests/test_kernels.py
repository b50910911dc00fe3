"""The compiled and pure kernels must be interchangeable."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, nx_count_after_deletion
from kwaycut import Graph, kernels
from kwaycut import _pure

needs_core = pytest.mark.skipif(
    not kernels.compiled_available(), reason="extension not built"
)


def test_word_count():
    assert kernels.word_count(0) == 1
    assert kernels.word_count(1) == 1
    assert kernels.word_count(64) == 1
    assert kernels.word_count(65) == 2
    assert kernels.word_count(200) == 4


def test_pack_round_trip():
    masks = (0b0110, 0b1001, 0b0010, 0b0001)
    packed = kernels.pack_adjacency(masks, 4)
    assert packed.shape == (4, 1)
    for v in range(4):
        assert int(packed[v][0]) == masks[v]
    alive = kernels.pack_mask(0b1011, 4)
    assert int(alive[0]) == 0b1011


def test_pack_wide_masks():
    n = 130
    mask = (1 << 129) | (1 << 64) | 1
    row = kernels.pack_mask(mask, n)
    assert row.shape == (3,)
    assert int(row[0]) == 1 and int(row[1]) == 1 and int(row[2]) == 2


def test_pure_labels_are_canonical():
    g = Graph(6, [(0, 1), (2, 3), (4, 5)])
    labels = kernels.component_labels(g.adjacency_masks, 6, g.full_mask() & ~0b0100)
    assert labels == [0, 0, -1, 1, 2, 2]


@needs_core
class TestCompiledAgainstPure:
    def test_count_components(self):
        g = Graph(7, [(0, 1), (1, 2), (3, 4), (5, 6), (2, 3)])
        packed = g.packed_adjacency()
        for alive in range(1 << 7):
            expect = _pure.count_components(g.adjacency_masks, alive)
            got = kernels.count_components(g.adjacency_masks, 7, alive, packed=packed)
            assert got == expect

    def test_scan_identical_result(self):
        g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7), (2, 6)])
        packed = g.packed_adjacency()
        for k in range(0, 5):
            pure = _pure.scan_max_components(g.adjacency_masks, g.n, k)
            comp = kernels.scan_max_components(g.adjacency_masks, g.n, k, packed=packed)
            assert comp == pure

    @given(graphs(max_n=8), st.integers(0, 4))
    @settings(max_examples=100, deadline=None)
    def test_scan_agrees_on_random_graphs(self, g, k):
        pure = _pure.scan_max_components(g.adjacency_masks, g.n, k)
        comp = kernels.scan_max_components(g.adjacency_masks, g.n, k, packed=g.packed_adjacency())
        assert comp == pure

    @given(graphs(max_n=7), st.data())
    @settings(max_examples=100, deadline=None)
    def test_count_matches_networkx(self, g, data):
        deleted = data.draw(st.lists(st.integers(0, g.n - 1), unique=True))
        alive = g.full_mask()
        for v in deleted:
            alive &= ~(1 << v)
        got = kernels.count_components(g.adjacency_masks, g.n, alive, packed=g.packed_adjacency())
        assert got == nx_count_after_deletion(g, deleted)

    def test_multiword_graph(self):
        n = 70
        edges = [(i, i + 1) for i in range(n - 1)]
        g = Graph(n, edges)
        packed = g.packed_adjacency()
        alive = g.full_mask() & ~(1 << 64) & ~(1 << 5)
        assert kernels.count_components(g.adjacency_masks, n, alive, packed=packed) == 3
        assert _pure.count_components(g.adjacency_masks, alive) == 3


def test_benchmark_fields():
    g = Graph(12, [(i, (i + 1) % 12) for i in range(12)] + [(0, 6), (3, 9)])
    result = kernels.benchmark(g.adjacency_masks, g.n, 3, repeats=1)
    assert result["results_agree"] is True
    assert result["pure_seconds"] > 0
    if kernels.compiled_available():
        assert result["compiled_seconds"] > 0
        assert result["speedup"] == result["pure_seconds"] / result["compiled_seconds"]
    else:
        assert result["compiled_seconds"] is None


def test_env_forces_pure_backend():
    code = "from kwaycut import kernels; print(kernels.backend())"
    env = dict(os.environ, KWAYCUT_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "pure"


def test_scan_prefers_fewest_then_lexicographic():
    # deleting nothing already separates the two components; spending
    # budget cannot help, so the canonical answer is the empty set
    g = Graph(4, [(0, 1), (2, 3)])
    count, combo = kernels.scan_max_components(g.adjacency_masks, 4, 1)
    assert count == 2 and combo == ()
    # a star: every single deletion of the hub gives 3, and {0} is the
    # lexicographically first set of minimum size achieving it
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    count, combo = kernels.scan_max_components(star.adjacency_masks, 4, 2)
    assert count == 3 and combo == (0,)
