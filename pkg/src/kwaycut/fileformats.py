"""Instance text format, DOT export, and solution records.

An instance file is line oriented:

    # optional comments anywhere
    n m
    u v        (one line per edge)
    w u value  (optional per-vertex weight, a positive rational)

The canonical form sorts edges ascending with u < v, then weight lines by
vertex, listing only weights different from 1, and ends with a newline.
Canonical text round-trips byte for byte.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from kwaycut.errors import ParseError
from kwaycut.graph import Graph


def parse_instance(text: str) -> Graph:
    """Parse instance text; errors carry the 1-based line number.

    Edge endpoints may appear in either order; the canonical form writes
    u < v.  Duplicate edges are rejected, as is an edge count that does not
    match the declared m.
    """
    header: Optional[tuple[int, int]] = None
    header_line = 0
    edges: list[tuple[int, int, int]] = []
    weights: dict[int, Fraction] = {}
    weight_lines: dict[int, int] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(line_no, f"expected header 'n m', got {raw!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(line_no, f"header values must be integers, got {raw!r}") from None
            if n < 0 or m < 0:
                raise ParseError(line_no, f"header values must be >= 0, got n={n} m={m}")
            header = (n, m)
            header_line = line_no
            continue

        n = header[0]
        if parts[0] == "w":
            if len(parts) != 3:
                raise ParseError(line_no, f"expected 'w vertex value', got {raw!r}")
            try:
                v = int(parts[1])
                value = Fraction(parts[2])
            except (ValueError, ZeroDivisionError):
                raise ParseError(line_no, f"bad weight line {raw!r}") from None
            if not (0 <= v < n):
                raise ParseError(line_no, f"weight vertex {v} out of range for n={n}")
            if value <= 0:
                raise ParseError(line_no, f"weight must be positive, got {value}")
            if v in weights:
                raise ParseError(line_no, f"duplicate weight for vertex {v}")
            weights[v] = value
            weight_lines[v] = line_no
            continue

        if len(parts) != 2:
            raise ParseError(line_no, f"expected edge 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"edge endpoints must be integers, got {raw!r}") from None
        if u == v:
            raise ParseError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"edge ({u}, {v}) out of range for n={n}")
        edges.append((min(u, v), max(u, v), line_no))

    if header is None:
        raise ParseError(1, "missing 'n m' header")

    n, m = header
    seen: dict[tuple[int, int], int] = {}
    for u, v, line_no in edges:
        if (u, v) in seen:
            message = f"duplicate edge ({u}, {v}), first seen on line {seen[(u, v)]}"
            if len(edges) != m:
                message += f"; {len(edges)} edge lines do not match declared m={m}"
            raise ParseError(line_no, message)
        seen[(u, v)] = line_no
    if len(edges) != m:
        raise ParseError(header_line, f"declared m={m} but found {len(edges)} edge lines")

    return Graph(n, [(u, v) for u, v, _ in edges], weights=weights or None)


def emit_instance(g: Graph) -> str:
    """Canonical instance text for g."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    lines.extend(
        f"w {v} {g.weights[v]}" for v in range(g.n) if g.weights[v] != 1
    )
    return "\n".join(lines) + "\n"


def instance_sha256(g: Graph) -> str:
    """Hash of the canonical text; identifies the instance in records."""
    return hashlib.sha256(emit_instance(g).encode()).hexdigest()


def emit_dot(g: Graph, highlight: Optional[Iterable[int]] = None) -> str:
    """DOT text for external renderers; highlighted vertices are filled."""
    marked = set(highlight or ())
    lines = ["graph g {"]
    for v in range(g.n):
        attr = " [style=filled]" if v in marked else ""
        lines.append(f"  {v}{attr};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SolutionRecord:
    """One machine-readable result line.

    budget and value are JSON-safe strings when fractional.  extra carries
    objective-specific numbers (pairwise connectivity, thresholds).
    """

    instance: str
    objective: str
    solver: str
    budget: object
    chosen: tuple
    value: int
    optimal: bool
    wall_time: float
    extra: dict = field(default_factory=dict)

    def as_json(self) -> str:
        payload = {
            "instance": self.instance,
            "objective": self.objective,
            "solver": self.solver,
            "budget": _json_safe(self.budget),
            "chosen": [list(x) if isinstance(x, tuple) else x for x in self.chosen],
            "value": self.value,
            "optimal": self.optimal,
            "wall_time": round(self.wall_time, 6),
        }
        payload.update({k: _json_safe(v) for k, v in sorted(self.extra.items())})
        return json.dumps(payload, sort_keys=True)


def _json_safe(value):
    if isinstance(value, Fraction):
        return str(value)
    return value
