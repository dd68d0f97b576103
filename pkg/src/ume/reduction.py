"""Build a 2-evader node-interdiction instance from a Planar Vertex Cover
instance, so that perfect expected capture is achievable within the budget
exactly when the cover exists.

Construction, given an undirected planar graph and a proper 4-coloring:

* Add a fresh target node t; keep every original edge in both directions
  and add an edge (u, t) for every non-singleton u. All efficiencies are 1.
* Classify the non-singleton nodes by color into two source sets and two
  penultimate sets:

      S1 = {white, red}    P1 = {green, black}
      S2 = {white, green}  P2 = {red, black}

  Each color is one of the four intersections (white = S1&S2,
  green = S2&P1, red = S1&P2, black = P1&P2), i.e. the colors are the
  2-bit strings of (source?, penultimate?) per evader, and S_i and P_i
  are disjoint.
* Evader i starts uniformly over S_i, hops from a source u to each
  adjacent penultimate v with probability 1/z_u (z_u = number of adjacent
  penultimate nodes), and from every penultimate node to t with
  probability 1. A source with no adjacent penultimate keeps an all-zero
  row: that evader vanishes there, which still counts as captured-or-
  never-arrived. Paths have at most 2 hops before t, so each transition
  matrix is nilpotent with M^3 = 0.

Because the endpoints of every edge differ in at least one color bit,
every original edge is traversed by at least one evader, who then moves
straight to t; perfect capture therefore forces a vertex cover, and any
cover yields perfect capture.

Degenerate inputs: if every node is a singleton, both evaders become a
stationary point mass on the lowest-index node with a zero transition
matrix (a YES instance at any budget). If a coloring leaves some S_i
empty, that evader alone gets the same stationary treatment.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import four_color, verify_coloring
from .errors import ImproperColoringError, MissingColorError
from .evaders import EvaderChain, EvaderEnsemble
from .graphs import DiGraph, UndirectedGraph
from .instance import UmeInstance
from .interdiction import Budget, EfficiencyMap

SOURCE_COLORS = ({"white", "red"}, {"white", "green"})
PENULTIMATE_COLORS = ({"green", "black"}, {"red", "black"})


@dataclass(frozen=True)
class ReductionArtifacts:
    """Everything the construction produced, kept for audit."""

    coloring: tuple[str, ...]
    sources: tuple[frozenset[int], frozenset[int]]
    penultimates: tuple[frozenset[int], frozenset[int]]
    normalizers: tuple[dict, dict]
    instance: UmeInstance
    target: int
    original: UndirectedGraph
    budget: int

    @property
    def pathological(self):
        return self.original.edge_count == 0


def build_ume_graph(gprime: UndirectedGraph):
    """The derived directed graph and the index of the added target node.

    Every original edge appears in both directions; every non-singleton
    node gains an edge to the target. Returns (graph, target_index).
    """
    t = gprime.node_count
    edges = []
    for u, v in gprime.edges:
        edges.append((u, v))
        edges.append((v, u))
    for u in gprime.non_singletons():
        edges.append((u, t))
    return DiGraph(t + 1, edges), t


def _point_mass_chain(n, t, weight):
    # stationary evader on the lowest-index non-target node: never reaches t
    a = np.zeros(n)
    a[0] = 1.0
    return EvaderChain(a, np.zeros((n, n)), t, weight)


def build_evaders(gprime: UndirectedGraph, coloring, budget=0):
    """Construct the two evader chains from a proper coloring.

    Returns (ensemble, artifacts). Raises ImproperColoringError if the
    assignment is partial, uses unknown colors, or leaves a monochromatic
    edge.
    """
    if gprime.node_count == 0:
        raise ValueError("cannot build evaders over an empty graph")
    try:
        violations = verify_coloring(gprime, coloring)
    except MissingColorError as exc:
        raise ImproperColoringError(str(exc)) from exc
    if violations:
        raise ImproperColoringError(f"monochromatic edges: {violations}")

    graph, t = build_ume_graph(gprime)
    n = graph.node_count
    non_singletons = set(gprime.non_singletons())

    sources, penultimates, normalizers, chains = [], [], [], []
    for i in range(2):
        s_i = frozenset(u for u in non_singletons if coloring[u] in SOURCE_COLORS[i])
        p_i = frozenset(u for u in non_singletons if coloring[u] in PENULTIMATE_COLORS[i])
        sources.append(s_i)
        penultimates.append(p_i)

        if not s_i:
            normalizers.append({})
            chains.append(_point_mass_chain(n, t, 0.5))
            continue

        a = np.zeros(n)
        for u in s_i:
            a[u] = 1.0 / len(s_i)
        m = np.zeros((n, n))
        z = {}
        for u in s_i:
            hops = sorted(v for v in gprime.neighbors(u) if v in p_i)
            z[u] = len(hops)
            for v in hops:
                m[u, v] = 1.0 / z[u]
        for u in p_i:
            m[u, t] = 1.0
        normalizers.append(z)
        chains.append(EvaderChain(a, m, t, 0.5))

    ensemble = EvaderEnsemble(chains)
    instance = UmeInstance(
        graph=graph,
        evaders=ensemble,
        efficiency=EfficiencyMap(default=1.0),
        budget=Budget(budget, "nodes"),
        mode="node",
    )
    artifacts = ReductionArtifacts(
        coloring=tuple(coloring),
        sources=(sources[0], sources[1]),
        penultimates=(penultimates[0], penultimates[1]),
        normalizers=(normalizers[0], normalizers[1]),
        instance=instance,
        target=t,
        original=gprime,
        budget=budget,
    )
    return ensemble, artifacts


def reduce_pvc(gprime: UndirectedGraph, bprime: int, seed=0, time_budget=30.0) -> ReductionArtifacts:
    """Full pipeline: color, assemble the graph, build the evaders.

    The returned artifacts carry the solvable instance (``.instance``)
    with node budget set to ``bprime``, plus the coloring, node classes,
    and normalizers for audit.
    """
    if bprime < 0:
        raise ValueError(f"negative budget {bprime}")
    if gprime.node_count == 0:
        raise ValueError("cannot reduce an empty graph")
    coloring = four_color(gprime, time_budget=time_budget, seed=seed)
    _, artifacts = build_evaders(gprime, coloring, budget=bprime)
    return artifacts


def edge_traversal_report(artifacts: ReductionArtifacts):
    """For every original edge, which evaders (1-based) cross it with
    positive probability in either direction.

    On a non-degenerate construction every list is non-empty: the edge's
    endpoints differ in at least one color bit, so some evader sees one
    endpoint as its source and the other as its penultimate node.
    """
    report = {}
    for u, v in artifacts.original.edges:
        crossers = []
        for i, chain in enumerate(artifacts.instance.evaders):
            if chain.transition[u, v] > 0 or chain.transition[v, u] > 0:
                crossers.append(i + 1)
        report[(u, v)] = tuple(crossers)
    return report
