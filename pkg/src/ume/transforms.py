"""Node <-> edge interdiction instance transforms.

The two interdiction flavors are interchangeable: subdividing every edge
turns an edge-budget instance into a node-budget one, and splitting every
node into an in/out pair joined by an internal edge goes the other way.
Both transforms preserve the optimal objective value at equal budgets,
which the test suite checks by exhaustive search on both sides.
"""

from __future__ import annotations

import numpy as np

from .errors import TransformError
from .evaders import EvaderChain, EvaderEnsemble
from .graphs import DiGraph
from .instance import UmeInstance
from .interdiction import Budget, EfficiencyMap


def edge_to_node_instance(inst: UmeInstance) -> UmeInstance:
    """Subdivide every edge (u, v) with a fresh midpoint node x.

    Evaders are rerouted u -> x -> v, the x-hop with probability 1.
    Interdicting x places the sensor on its single out-edge (x, v) with
    the original efficiency d[u, v], so a node choice is exactly an edge
    choice; original nodes get zero efficiency on all out-edges and are
    therefore no-ops.
    """
    if inst.mode != "edge":
        raise TransformError(f"expected an edge-mode instance, got mode {inst.mode!r}")
    g = inst.graph
    n = g.node_count
    edge_list = list(g.edges)
    mid = {e: n + i for i, e in enumerate(edge_list)}

    new_edges = []
    overrides = {}
    for (u, v), x in mid.items():
        new_edges.append((u, x, g.weight(u, v)))
        new_edges.append((x, v))
        overrides[(x, v)] = inst.efficiency.get(u, v)
    new_graph = DiGraph(n + len(edge_list), new_edges)
    new_eff = EfficiencyMap(default=0.0, overrides=overrides)

    chains = []
    for chain in inst.evaders:
        nn = new_graph.node_count
        a = np.zeros(nn)
        a[:n] = chain.source
        m = np.zeros((nn, nn))
        rows, cols = np.nonzero(chain.transition)
        for u, v in zip(rows.tolist(), cols.tolist()):
            x = mid.get((u, v))
            if x is None:
                raise TransformError(
                    f"transition ({u}, {v}) has no supporting graph edge to subdivide"
                )
            m[u, x] = chain.transition[u, v]
            m[x, v] = 1.0
        chains.append(EvaderChain(a, m, chain.target, chain.weight))

    return UmeInstance(
        graph=new_graph,
        evaders=EvaderEnsemble(chains),
        efficiency=new_eff,
        budget=Budget(inst.budget.limit, "nodes"),
        mode="node",
    )


def _uniform_out_efficiency(inst, u):
    """The single efficiency shared by u's out-edges, or 0.0 for sinks."""
    values = {inst.efficiency.get(u, v) for v in inst.graph.successors(u)}
    if not values:
        return 0.0
    if len(values) > 1:
        raise TransformError(
            f"node {u} has out-edges with mixed efficiencies {sorted(values)}; "
            "the internal-edge gadget carries a single detection probability "
            "per node"
        )
    return values.pop()


def node_to_edge_instance(inst: UmeInstance) -> UmeInstance:
    """Split every node u into u_in = u and u_out = n + u.

    In-edges keep entering u, out-edges leave n + u, and the internal edge
    (u, n + u) carries u's interdiction: it is the only sensor-eligible
    edge for u (everything else gets d = 0). Every transit through u
    crosses the internal edge exactly once, so a sensor there detects with
    the same probability as interdicting u. Requires each node's out-edges
    to share one efficiency value.
    """
    if inst.mode != "node":
        raise TransformError(f"expected a node-mode instance, got mode {inst.mode!r}")
    g = inst.graph
    n = g.node_count

    new_edges = []
    overrides = {}
    for u in range(n):
        new_edges.append((u, n + u))
        d_u = _uniform_out_efficiency(inst, u)
        if d_u > 0.0:
            overrides[(u, n + u)] = d_u
        for v in g.successors(u):
            new_edges.append((n + u, v, g.weight(u, v)))
    new_graph = DiGraph(2 * n, new_edges)
    new_eff = EfficiencyMap(default=0.0, overrides=overrides)

    chains = []
    for chain in inst.evaders:
        a = np.zeros(2 * n)
        a[:n] = chain.source
        m = np.zeros((2 * n, 2 * n))
        for u in range(n):
            if u != chain.target:
                m[u, n + u] = 1.0
        rows, cols = np.nonzero(chain.transition)
        for u, v in zip(rows.tolist(), cols.tolist()):
            m[n + u, v] = chain.transition[u, v]
        chains.append(EvaderChain(a, m, chain.target, chain.weight))

    return UmeInstance(
        graph=new_graph,
        evaders=EvaderEnsemble(chains),
        efficiency=new_eff,
        budget=Budget(inst.budget.limit, "edges"),
        mode="edge",
    )
