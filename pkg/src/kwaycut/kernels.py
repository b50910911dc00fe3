"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled module kwaycut._core is optional.  Selection happens at import
time; setting the environment variable KWAYCUT_PURE to a non-empty value
forces the pure implementation even when the extension is present.  Both
implementations are exposed for the benchmark and the equivalence tests.
"""

from __future__ import annotations

import os
import time
from typing import Sequence

from kwaycut import _pure

try:
    from kwaycut import _core
except ImportError:
    _core = None

_FORCED_PURE = bool(os.environ.get("KWAYCUT_PURE"))


def compiled_available() -> bool:
    return _core is not None


def backend() -> str:
    """Active kernel backend, either "compiled" or "pure"."""
    if _core is None or _FORCED_PURE:
        return "pure"
    return "compiled"


def word_count(n: int) -> int:
    return max((n + 63) // 64, 1)


def pack_adjacency(masks: Sequence[int], n: int):
    """Pack bitmask rows into an (n, words) uint64 array for the extension."""
    import numpy as np

    w = word_count(n)
    out = np.empty((n, w), dtype=np.uint64)
    for v in range(n):
        row = np.frombuffer(masks[v].to_bytes(w * 8, "little"), dtype="<u8")
        out[v] = row
    return out


def pack_mask(mask: int, n: int):
    import numpy as np

    w = word_count(n)
    return np.frombuffer(mask.to_bytes(w * 8, "little"), dtype="<u8").copy()


def count_components(masks: Sequence[int], n: int, alive: int, packed=None) -> int:
    """Component count after restricting to the ``alive`` vertex mask."""
    if packed is not None and backend() == "compiled":
        return _core.count_components(packed, pack_mask(alive, n))
    return _pure.count_components(masks, alive)


def component_labels(masks: Sequence[int], n: int, alive: int) -> list[int]:
    """Deterministic component labels; this path is not performance critical."""
    return _pure.component_labels(masks, n, alive)


def scan_max_components(
    masks: Sequence[int], n: int, k: int, packed=None
) -> tuple[int, tuple[int, ...]]:
    """Best deletion set of size <= k maximizing the component count."""
    if packed is not None and backend() == "compiled":
        count, combo = _core.scan_max_components(packed, n, k)
        return count, tuple(combo)
    return _pure.scan_max_components(masks, n, k)


def benchmark(masks: Sequence[int], n: int, k: int, repeats: int = 3) -> dict:
    """Time the exhaustive scan on both backends and check they agree.

    Returns a dict with per-backend wall times in seconds; the compiled
    entries are None when the extension is unavailable.
    """
    best_pure = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        pure_result = _pure.scan_max_components(masks, n, k)
        dt = time.perf_counter() - t0
        best_pure = dt if best_pure is None else min(best_pure, dt)

    compiled_time = None
    compiled_result = None
    if compiled_available():
        packed = pack_adjacency(masks, n)
        for _ in range(repeats):
            t0 = time.perf_counter()
            raw = _core.scan_max_components(packed, n, k)
            dt = time.perf_counter() - t0
            compiled_time = dt if compiled_time is None else min(compiled_time, dt)
        compiled_result = (raw[0], tuple(raw[1]))

    return {
        "n": n,
        "k": k,
        "repeats": repeats,
        "pure_seconds": best_pure,
        "compiled_seconds": compiled_time,
        "speedup": (best_pure / compiled_time) if compiled_time else None,
        "results_agree": compiled_result is None or compiled_result == pure_result,
        "active_backend": backend(),
    }
