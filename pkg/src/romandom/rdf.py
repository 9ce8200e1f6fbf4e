"""Roman dominating functions: assignments, weights, and minimality checks.

An assignment is a total function V -> {0,1,2}, stored as a tuple indexed
by vertex id.  Its text form is a digit string, index i = vertex i.

Two minimality orders are supported: the standard pointwise lift of
0 < 1 < 2, and the "PO" lift of the partial order 0 < 1, 0 < 2 with 1
and 2 incomparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph

Assignment = tuple[int, ...]

# Condition names reported by the minimality checkers (and the CLI).
COND_NO_ONE_NEXT_TO_TWO = "N[V2]∩V1"
COND_PRIVACY = "privacy condition"
COND_MINIMAL_DS = "minimal dominating set"


def parse_assignment(text: str, n: int) -> Assignment:
    text = text.strip()
    if len(text) != n:
        raise ValueError(f"assignment length {len(text)} != graph order {n}")
    if any(c not in "012" for c in text):
        raise ValueError("assignment must be a string over {0,1,2}")
    return tuple(int(c) for c in text)


def format_assignment(f: Assignment) -> str:
    return "".join(str(v) for v in f)


@dataclass(frozen=True)
class LevelSets:
    """The partition of V by assignment value."""

    v0: frozenset[int]
    v1: frozenset[int]
    v2: frozenset[int]


def level_sets(f: Assignment) -> LevelSets:
    return LevelSets(
        frozenset(v for v, x in enumerate(f) if x == 0),
        frozenset(v for v, x in enumerate(f) if x == 1),
        frozenset(v for v, x in enumerate(f) if x == 2),
    )


def weight(f: Assignment) -> int:
    """|V1| + 2|V2|."""
    return sum(f)


def is_rdf(g: Graph, f: Assignment) -> bool:
    """True iff every 0-valued vertex has a neighbor valued 2."""
    return all(
        any(f[u] == 2 for u in g.adj[v])
        for v in range(g.n)
        if f[v] == 0
    )


def private_neighbors(g: Graph, d: Iterable[int], v: int) -> set[int]:
    """N[v] minus N[D \\ {v}]: vertices dominated only by v within d."""
    dset = set(d)
    if v not in dset:
        raise ValueError(f"vertex {v} is not a member of the dominating set")
    covered: set[int] = set()
    for u in dset:
        if u != v:
            covered.add(u)
            covered |= g.adj[u]
    return ({v} | set(g.adj[v])) - covered


def _induced_private(adj: tuple[frozenset[int], ...], keep: set[int],
                     v2: set[int], v: int) -> set[int]:
    # Private neighborhood of v wrt v2 inside the subgraph induced by keep.
    own = {v} | (adj[v] & keep)
    covered: set[int] = set()
    for u in v2:
        if u != v:
            covered.add(u)
            covered |= adj[u] & keep
    return own - covered


def minimality_report(g: Graph, f: Assignment) -> list[str]:
    """Failing conditions of the minimal-rdf characterization (empty = minimal).

    A total f is a minimal rdf iff, with G' the subgraph induced by V0 u V2:
    no 1-valued vertex touches N[V2]; every 2-vertex has a private neighbor
    in G' other than itself; and V2 is a minimal dominating set of G'.
    """
    ls = level_sets(f)
    failed: list[str] = []
    if any(f[u] == 1 for v in ls.v2 for u in g.adj[v]):
        failed.append(COND_NO_ONE_NEXT_TO_TWO)
    keep = set(ls.v0) | set(ls.v2)
    v2 = set(ls.v2)
    privs = {v: _induced_private(g.adj, keep, v2, v) for v in v2}
    if any(priv <= {v} for v, priv in privs.items()):
        failed.append(COND_PRIVACY)
    dominated = all(g.adj[w] & v2 for w in ls.v0)
    irredundant = all(privs[v] for v in v2)
    if not (dominated and irredundant):
        failed.append(COND_MINIMAL_DS)
    return failed


def is_minimal_rdf(g: Graph, f: Assignment) -> bool:
    return not minimality_report(g, f)


def po_minimality_report(g: Graph, f: Assignment) -> list[str]:
    """Failing conditions of the PO-minimal characterization (empty = minimal).

    PO-minimality drops the privacy condition: f is PO-minimal iff no
    1-valued vertex touches N[V2] and V2 is a minimal dominating set of
    the subgraph induced by V0 u V2.
    """
    ls = level_sets(f)
    failed: list[str] = []
    if any(f[u] == 1 for v in ls.v2 for u in g.adj[v]):
        failed.append(COND_NO_ONE_NEXT_TO_TWO)
    keep = set(ls.v0) | set(ls.v2)
    v2 = set(ls.v2)
    dominated = all(g.adj[w] & v2 for w in ls.v0)
    irredundant = all(_induced_private(g.adj, keep, v2, v) for v in v2)
    if not (dominated and irredundant):
        failed.append(COND_MINIMAL_DS)
    return failed


def is_po_minimal_rdf(g: Graph, f: Assignment) -> bool:
    return not po_minimality_report(g, f)


def leq_standard(f: Assignment, h: Assignment) -> bool:
    """Pointwise f <= h under 0 < 1 < 2."""
    if len(f) != len(h):
        raise ValueError("assignments have different lengths")
    return all(a <= b for a, b in zip(f, h))


def leq_po(f: Assignment, h: Assignment) -> bool:
    """Pointwise f <= h under 0 < 1, 0 < 2 with 1 and 2 incomparable."""
    if len(f) != len(h):
        raise ValueError("assignments have different lengths")
    return all(a == b or a == 0 for a, b in zip(f, h))
