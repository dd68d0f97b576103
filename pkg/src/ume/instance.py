"""The solvable unit: graph + evaders + efficiencies + budget + mode."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .evaders import EvaderEnsemble, validate_chain, weighted_capture
from .graphs import DiGraph
from .interdiction import Budget, EfficiencyMap, InterdictionPlan, plan_from_nodes


@dataclass(frozen=True)
class UmeInstance:
    graph: DiGraph
    evaders: EvaderEnsemble
    efficiency: EfficiencyMap
    budget: Budget
    mode: str

    def __post_init__(self):
        if self.mode not in ("node", "edge"):
            raise ValueError(f"mode must be 'node' or 'edge', got {self.mode!r}")
        expected_unit = "nodes" if self.mode == "node" else "edges"
        if self.budget.unit != expected_unit:
            raise ValueError(
                f"{self.mode}-mode instance needs a budget in {expected_unit}, "
                f"got {self.budget.unit}"
            )
        if self.evaders.n != self.graph.node_count:
            raise ValueError(
                f"evaders over {self.evaders.n} nodes, graph has {self.graph.node_count}"
            )

    def validate(self):
        """Raise ValueError on the first structural defect: an invalid chain,
        or a transition not supported by a graph edge."""
        for k, chain in enumerate(self.evaders):
            report = validate_chain(chain)
            if not report.ok:
                raise ValueError(f"evader {k}: {report}")
            rows, cols = np.nonzero(chain.transition)
            for u, v in zip(rows, cols):
                if not self.graph.has_edge(int(u), int(v)):
                    raise ValueError(
                        f"evader {k}: transition ({u}, {v}) has no supporting graph edge"
                    )

    # -- plan helpers ------------------------------------------------------

    def node_plan(self, nodes) -> InterdictionPlan:
        return plan_from_nodes(self.graph, nodes, self.efficiency)

    def edge_plan(self, edges) -> InterdictionPlan:
        edges = frozenset(edges)
        for u, v in edges:
            if not self.graph.has_edge(u, v):
                raise ValueError(f"sensor edge ({u}, {v}) not in the instance graph")
        return InterdictionPlan(edges, self.efficiency, mode="edge")

    def empty_plan(self) -> InterdictionPlan:
        if self.mode == "node":
            return self.node_plan(())
        return self.edge_plan(())

    def objective(self, plan: InterdictionPlan) -> float:
        return weighted_capture(self.evaders, plan)
