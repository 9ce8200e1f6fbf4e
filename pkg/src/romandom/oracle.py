"""Definition-based brute force over all 3^n assignments.

This module is the ground truth for small instances.  It deliberately
uses nothing but the bare definitions: an assignment is kept iff it is
an rdf and no other rdf lies below it in the chosen order, decided by a
pairwise sweep over the full rdf list.  It never calls the
characterization-based checkers it is used to validate.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph
from .rdf import Assignment

DEFAULT_CAP = 12


class OracleCapExceeded(ValueError):
    """Refusal to brute-force a graph larger than the configured cap."""


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise OracleCapExceeded(
            f"brute force refused: n={n} exceeds cap={cap} (3^n assignments)"
        )


def _all_rdfs(g: Graph) -> list[tuple[Assignment, int, int]]:
    # Returns (assignment, ones-bitmask, twos-bitmask) for every rdf.
    adj_mask = [0] * g.n
    for u in range(g.n):
        for v in g.adj[u]:
            adj_mask[u] |= 1 << v
    out = []
    for f in product((0, 1, 2), repeat=g.n):
        ones = 0
        twos = 0
        for v, x in enumerate(f):
            if x == 1:
                ones |= 1 << v
            elif x == 2:
                twos |= 1 << v
        ok = True
        for v, x in enumerate(f):
            if x == 0 and not (adj_mask[v] & twos):
                ok = False
                break
        if ok:
            out.append((f, ones, twos))
    return out


def brute_minimal_rdfs(g: Graph, order: str = "standard",
                       cap: int = DEFAULT_CAP) -> list[Assignment]:
    """All minimal rdfs of ``g`` in the given order, sorted as digit strings.

    ``order`` is "standard" (0 < 1 < 2) or "po" (0 < 1, 0 < 2, with 1 and
    2 incomparable).
    """
    if order not in ("standard", "po"):
        raise ValueError(f"unknown order {order!r}")
    _check_cap(g.n, cap)
    rdfs = _all_rdfs(g)
    if not rdfs:
        return []
    ones = np.array([o for _, o, _ in rdfs], dtype=np.int64)
    twos = np.array([t for _, _, t in rdfs], dtype=np.int64)
    minimal: list[Assignment] = []
    for i in range(len(rdfs)):
        # g <= f: twos(g) within twos(f), and (standard) nonzeros within
        # nonzeros, or (po) ones within ones.
        below_twos = (twos & ~twos[i]) == 0
        if order == "standard":
            nz_i = ones[i] | twos[i]
            below = below_twos & (((ones | twos) & ~nz_i) == 0)
        else:
            below = below_twos & ((ones & ~ones[i]) == 0)
        # The only assignment counted that equals f is f itself.
        if int(below.sum()) == 1:
            minimal.append(rdfs[i][0])
    # product() already yields assignments in ascending digit-string order.
    return minimal


def brute_ext(g: Graph, f: Assignment, forbidden: Iterable[int] = (),
              order: str = "standard", cap: int = DEFAULT_CAP,
              minimal: Sequence[Assignment] | None = None) -> bool:
    """Is there a minimal rdf above ``f`` whose 2-set avoids ``forbidden``?

    "Above" means f <= g in the chosen order.  ``minimal`` may pass a
    precomputed result of :func:`brute_minimal_rdfs` for the same graph
    and order.
    """
    if minimal is None:
        minimal = brute_minimal_rdfs(g, order=order, cap=cap)
    forb = set(forbidden)
    for cand in minimal:
        if any(cand[v] == 2 for v in forb):
            continue
        if order == "standard":
            above = all(a <= b for a, b in zip(f, cand))
        else:
            above = all(a == b or a == 0 for a, b in zip(f, cand))
        if above:
            return True
    return False
