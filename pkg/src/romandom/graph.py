"""Simple undirected graphs with dense 0-based vertex ids.

Graphs are immutable after construction and safe to share across workers.
All iteration over vertices and neighborhoods is in ascending id order so
that every algorithm in this package produces deterministic output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Raised when an edge-list input is malformed."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph: ``n`` vertices, set-valued adjacency.

    Invariants: adjacency is symmetric and irreflexive, all neighbor ids
    lie in ``[0, n)``.  Use :meth:`from_edges` rather than building the
    adjacency tuple by hand.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once, as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def validate(self) -> None:
        """Check symmetry, irreflexivity and id bounds; raise on violation."""
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for u in range(self.n):
            for v in self.adj[u]:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise ValueError(f"asymmetric edge ({u},{v})")


def closed_neighborhood(g: Graph, s: Iterable[int]) -> set[int]:
    """N[S]: the union of closed neighborhoods of the vertices in ``s``."""
    out: set[int] = set()
    for u in s:
        out.add(u)
        out |= g.adj[u]
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical edge-list format.

    First non-comment line is ``n m``, followed by ``m`` lines ``u v``.
    Lines starting with ``#`` and blank lines are ignored.  Duplicate
    edges collapse; self-loops and out-of-range ids are errors that name
    the offending line.
    """
    n = -1
    m = -1
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n < 0:
            if len(parts) != 2:
                raise GraphFormatError("expected header 'n m'", line_no)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError("non-integer header", line_no) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", line_no)
            continue
        if len(parts) != 2:
            raise GraphFormatError("expected edge 'u v'", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("non-integer vertex id", line_no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"id out of range in edge ({u},{v})", line_no)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line_no)
        edges.append((u, v))
    if n < 0:
        raise GraphFormatError("missing header line 'n m'")
    if len(edges) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    """Render ``g`` in the canonical edge-list format."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def gen_cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def gen_star(rays: int) -> Graph:
    """Star with ``rays`` leaves; the center gets id 0."""
    if rays < 1:
        raise ValueError("a star needs at least one ray")
    return Graph.from_edges(rays + 1, [(0, i) for i in range(1, rays + 1)])


def gen_null(n: int) -> Graph:
    """Edge-less graph of order ``n``."""
    return Graph.from_edges(n, [])


def gen_disjoint_union(parts: list[Graph]) -> Graph:
    """Disjoint union; part vertices are relabeled consecutively."""
    total = sum(p.n for p in parts)
    edges: list[tuple[int, int]] = []
    offset = 0
    for p in parts:
        edges.extend((u + offset, v + offset) for u, v in p.edges())
        offset += p.n
    return Graph.from_edges(total, edges)


def gen_c5_copies(c: int) -> Graph:
    """``c`` disjoint 5-cycles (order 5c); the worst-known lower-bound family."""
    if c < 1:
        raise ValueError("need at least one copy")
    return gen_disjoint_union([gen_cycle(5) for _ in range(c)])


def gen_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed seed."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)
