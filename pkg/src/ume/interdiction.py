"""Interdiction plans, efficiencies, and budgets.

A plan is a 0/1 sensor indicator r over directed (u, v) pairs together
with a per-edge detection probability d (the interdiction efficiency,
direction-specific: d[u, v] and d[v, u] are independent). A node-mode
plan is derived from a set Q of interdicted nodes by placing a sensor on
every out-edge of every node in Q.

A sensor with d = 0 is a no-op: it leaves the detection kernel r*d
unchanged, so ineligible edges are encoded by zero efficiency instead of
constraint bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import DimensionMismatchError, UnknownNodeError
from .graphs import DiGraph


@dataclass(frozen=True)
class EfficiencyMap:
    """Sparse edge -> detection probability map with a default value."""

    default: float = 0.0
    overrides: Mapping[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "overrides", dict(self.overrides))
        if not 0.0 <= self.default <= 1.0:
            raise ValueError(f"default efficiency {self.default} outside [0, 1]")
        for edge, value in self.overrides.items():
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"efficiency {value} at edge {edge} outside [0, 1]")

    def get(self, u, v):
        return self.overrides.get((u, v), self.default)


@dataclass(frozen=True)
class Budget:
    """Cardinality budget: number of interdicted nodes (unit="nodes") or
    sensor edges (unit="edges")."""

    limit: int
    unit: str

    def __post_init__(self):
        if self.limit < 0:
            raise ValueError(f"negative budget {self.limit}")
        if self.unit not in ("nodes", "edges"):
            raise ValueError(f"budget unit must be 'nodes' or 'edges', got {self.unit!r}")


@dataclass(frozen=True)
class InterdictionPlan:
    sensors: frozenset[tuple[int, int]]
    efficiency: EfficiencyMap
    mode: str = "edge"
    node_set: frozenset[int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "sensors", frozenset(self.sensors))
        if self.mode not in ("node", "edge"):
            raise ValueError(f"plan mode must be 'node' or 'edge', got {self.mode!r}")
        if self.mode == "node" and self.node_set is None:
            raise ValueError("node-mode plan requires node_set")
        if self.node_set is not None:
            object.__setattr__(self, "node_set", frozenset(self.node_set))

    @property
    def size(self):
        """Budget consumption: |Q| in node mode, the sensor count otherwise."""
        if self.mode == "node":
            return len(self.node_set)
        return len(self.sensors)

    def detection(self, u, v):
        """Probability that a passage over (u, v) is detected: r[u,v] * d[u,v]."""
        if (u, v) in self.sensors:
            return self.efficiency.get(u, v)
        return 0.0

    def detection_matrix(self, n):
        """Dense r*d over an n-node index space."""
        rd = np.zeros((n, n))
        for u, v in self.sensors:
            if u >= n or v >= n or u < 0 or v < 0:
                raise DimensionMismatchError(
                    f"sensor edge ({u}, {v}) outside node range 0..{n - 1}"
                )
            rd[u, v] = self.efficiency.get(u, v)
        return rd


def empty_plan(efficiency=None, mode="edge"):
    eff = efficiency if efficiency is not None else EfficiencyMap()
    node_set = frozenset() if mode == "node" else None
    return InterdictionPlan(frozenset(), eff, mode=mode, node_set=node_set)


def plan_from_nodes(g: DiGraph, nodes, efficiency: EfficiencyMap) -> InterdictionPlan:
    """Node-mode plan interdicting every out-edge of every node in ``nodes``."""
    q = set(nodes)
    for u in q:
        if not isinstance(u, int) or u < 0 or u >= g.node_count:
            raise UnknownNodeError(f"node {u!r} not in graph of {g.node_count} nodes")
    sensors = frozenset((u, v) for u in q for v in g.successors(u))
    return InterdictionPlan(sensors, efficiency, mode="node", node_set=frozenset(q))
