"""Random chain and instance generators for experiments and the test suite.

Everything here is seed-deterministic. Cyclic chains are built with a
per-node leak (vanish probability) so the passage system stays
nonsingular under any plan.
"""

from __future__ import annotations

import random

import numpy as np

from .evaders import EvaderChain, EvaderEnsemble
from .graphs import DiGraph
from .instance import UmeInstance
from .interdiction import Budget, EfficiencyMap, InterdictionPlan


def random_acyclic_chain(n, seed, max_out=3) -> EvaderChain:
    """Random DAG chain on nodes 0..n-1 with target n-1; transitions only go
    from lower to higher indices, so every trajectory halts within n-1 hops."""
    rng = random.Random(f"acyclic-{n}-{seed}")
    t = n - 1
    m = np.zeros((n, n))
    for u in range(n - 1):
        succ = list(range(u + 1, n))
        rng.shuffle(succ)
        succ = succ[: rng.randint(1, min(max_out, len(succ)))]
        weights = [rng.randint(1, 9) for _ in succ]
        # leave leak mass on some rows so vanishing paths occur too
        denom = sum(weights) + (rng.randint(0, 6) if rng.random() < 0.5 else 0)
        for v, w in zip(succ, weights):
            m[u, v] = w / denom
    sources = rng.sample(range(n - 1), k=rng.randint(1, max(1, n // 2)))
    a = np.zeros(n)
    for u in sources:
        a[u] = 1.0
    a /= a.sum()
    return EvaderChain(a, m, t)


def random_cyclic_chain(n, seed, self_chance=0.35, skip_chance=0.2) -> EvaderChain:
    """Ring-shaped chain with occasional self-loops and skips, per-node hops
    to the target, and a leak everywhere, so cycles exist but mass drains
    fast enough for deep trajectory enumeration."""
    rng = random.Random(f"cyclic-{n}-{seed}")
    t = n - 1
    m = np.zeros((n, n))
    for u in range(n - 1):
        onward = (u + 1) % (n - 1)  # ring over the non-target nodes
        if rng.random() < self_chance:
            m[u, u] += rng.uniform(0.1, 0.3)
        m[u, onward] += rng.uniform(0.2, 0.45)
        m[u, t] += rng.uniform(0.25, 0.45)
        if n > 3 and rng.random() < skip_chance:
            other = (u + 2) % (n - 1)
            if other != u:
                m[u, other] += rng.uniform(0.05, 0.15)
        # rescale so the row leaks: vanish probability in [0.05, 0.3]
        m[u] *= rng.uniform(0.7, 0.95) / m[u].sum()
    a = np.zeros(n)
    a[rng.randrange(n - 1)] = 1.0
    return EvaderChain(a, m, t)


def random_plan_for_chain(chain, seed, sensor_chance=0.5,
                          efficiencies=(0.25, 0.5, 0.75, 1.0)) -> InterdictionPlan:
    """Sensors on a random subset of the chain's positive transitions with
    random efficiencies."""
    rng = random.Random(f"plan-{seed}")
    rows, cols = np.nonzero(chain.transition)
    sensors = set()
    overrides = {}
    for u, v in zip(rows.tolist(), cols.tolist()):
        if rng.random() < sensor_chance:
            sensors.add((u, v))
            overrides[(u, v)] = rng.choice(list(efficiencies))
    return InterdictionPlan(frozenset(sensors), EfficiencyMap(0.0, overrides), mode="edge")


def random_node_instance(n, seed, evader_count=2) -> UmeInstance:
    """Random node-mode instance: a connected-ish random digraph with a
    shared absorbing target, per-node-uniform efficiencies, and evaders
    whose transitions live on the graph's edges."""
    rng = random.Random(f"instance-{n}-{seed}")
    t = n - 1
    edges = set()
    for u in range(n - 1):
        choices = [v for v in range(n) if v != u]
        for v in rng.sample(choices, k=rng.randint(1, min(3, len(choices)))):
            edges.add((u, v))
        edges.add((u, t))
    graph = DiGraph(n, sorted(edges))

    overrides = {}
    for u in range(n - 1):
        d_u = rng.choice([0.5, 0.75, 1.0])
        for v in graph.successors(u):
            overrides[(u, v)] = d_u
    eff = EfficiencyMap(0.0, overrides)

    chains = []
    for k in range(evader_count):
        m = np.zeros((n, n))
        for u in range(n - 1):
            succ = list(graph.successors(u))
            weights = [rng.randint(0, 4) for _ in succ]
            if sum(weights) == 0:
                weights[rng.randrange(len(succ))] = 1
            denom = sum(weights) + rng.randint(0, 3)
            for v, w in zip(succ, weights):
                if w:
                    m[u, v] = w / denom
        a = np.zeros(n)
        for u in rng.sample(range(n - 1), k=rng.randint(1, n - 1)):
            a[u] = 1.0
        a /= a.sum()
        chains.append(EvaderChain(a, m, t, 1.0 / evader_count))

    return UmeInstance(
        graph=graph,
        evaders=EvaderEnsemble(chains),
        efficiency=eff,
        budget=Budget(0, "nodes"),
        mode="node",
    )


def random_edge_instance(n, seed, evader_count=2) -> UmeInstance:
    """Random edge-mode instance with per-edge (direction-specific)
    efficiencies."""
    node_inst = random_node_instance(n, seed, evader_count)
    rng = random.Random(f"edge-eff-{n}-{seed}")
    overrides = {
        (u, v): rng.choice([0.25, 0.5, 0.75, 1.0]) for u, v in node_inst.graph.edges
    }
    return UmeInstance(
        graph=node_inst.graph,
        evaders=node_inst.evaders,
        efficiency=EfficiencyMap(0.0, overrides),
        budget=Budget(0, "edges"),
        mode="edge",
    )
