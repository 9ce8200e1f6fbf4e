"""Per-run counters shared by the enumerators."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class EnumStats:
    """Counters filled by an enumeration run.

    ``max_gap`` is the largest number of inner search nodes visited
    between two consecutive outputs (including before the first and after
    the last).  Only the enumerators that claim polynomial delay track it
    (refined, and the PO include/exclude search); the plain subset sweep
    reports its candidate-subset gap for information only and makes no
    delay promise.
    """

    solutions: int = 0
    tree_nodes: int = 0
    max_gap: int = 0
    wall_ms: int = 0
    phase_transitions: dict[str, int] = field(default_factory=dict)
    max_measure_ratio: float = 0.0

    def to_json(self) -> dict:
        return {
            "solutions": self.solutions,
            "tree_nodes": self.tree_nodes,
            "max_gap": self.max_gap,
            "wall_ms": self.wall_ms,
        }
