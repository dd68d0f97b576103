"""Independent brute-force references.

These deliberately avoid the linear-algebra evaluation path: the
trajectory oracle multiplies per-path probabilities in pure Python, the
Monte Carlo oracle simulates walks, and the vertex-cover search is a
plain branch and bound. A bug in one route cannot silently agree with a
bug in another.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

import numpy as np

from .errors import InstanceTooLargeError, PathExplosionError
from .evaders import EvaderChain
from .graphs import UndirectedGraph
from .instance import UmeInstance
from .interdiction import Budget, InterdictionPlan
from .reduction import reduce_pvc
from .solvers import decide_perfect


def oracle_capture_paths(chain: EvaderChain, plan: InterdictionPlan, max_hops: int,
                         branch_cap=500_000):
    """Capture probability by explicit trajectory enumeration.

    Walks every positive-probability trajectory of at most ``max_hops``
    steps, accumulating for each arrival at the target the path
    probability times the product of per-edge undetected factors
    (1 - r*d). Returns (J, truncated) where ``truncated`` is the
    undetected probability mass still in flight at the horizon - an upper
    bound on how far J can move with a longer horizon, and exactly 0 for
    acyclic chains once max_hops covers the longest path.

    Raises PathExplosionError after ``branch_cap`` path extensions.
    """
    if max_hops < 1:
        raise ValueError(f"max_hops must be >= 1, got {max_hops}")
    n = chain.n
    t = chain.target
    trans = chain.transition.tolist()
    rd = plan.detection_matrix(n).tolist()

    reach_undetected = 0.0
    truncated = 0.0
    expansions = 0
    source = chain.source.tolist()
    # (node, path probability, undetected factor, hops used)
    stack = [(u, p, 1.0, 0) for u, p in enumerate(source) if p > 0.0]
    while stack:
        u, prob, undet, hops = stack.pop()
        if u == t:
            reach_undetected += prob * undet
            continue
        if hops == max_hops:
            truncated += prob * undet
            continue
        row = trans[u]
        for v in range(n):
            p_uv = row[v]
            if p_uv <= 0.0:
                continue
            expansions += 1
            if expansions > branch_cap:
                raise PathExplosionError(
                    f"more than {branch_cap} path extensions; the chain is too "
                    "branchy for enumeration at this horizon"
                )
            stack.append((v, prob * p_uv, undet * (1.0 - rd[u][v]), hops + 1))
    return 1.0 - reach_undetected, truncated


def oracle_capture_mc(chain: EvaderChain, plan: InterdictionPlan, samples: int,
                      seed: int, max_steps=100_000):
    """Monte Carlo estimate of the capture probability and its standard error.

    Simulates ``samples`` trajectories: each step draws the next node from
    the current transition row (vanishing on the row's missing mass), then
    an independent detection with probability r*d on the traversed edge.
    A trajectory counts toward capture unless it reaches the target
    undetected; vanished walkers therefore count as captured, matching the
    closed-form semantics. Deterministic for a fixed seed.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    n = chain.n
    t = chain.target
    rng = np.random.default_rng(seed)
    row_cum = np.cumsum(chain.transition, axis=1)
    rd = plan.detection_matrix(n)

    src_cum = np.cumsum(chain.source)
    pos = np.searchsorted(src_cum, rng.random(samples), side="right")
    pos = np.minimum(pos, n - 1).astype(np.int64)

    reached_undetected = pos == t
    active = ~reached_undetected
    steps = 0
    while active.any() and steps < max_steps:
        steps += 1
        cur = pos[active]
        draw = rng.random(cur.shape[0])
        cums = row_cum[cur]
        nxt = (draw[:, None] >= cums).sum(axis=1)
        vanished = nxt >= n  # no remaining row mass: evader disappears
        nxt_clipped = np.minimum(nxt, n - 1)
        det_prob = rd[cur, nxt_clipped]
        detected = (~vanished) & (rng.random(cur.shape[0]) < det_prob)
        arrived = (~vanished) & (~detected) & (nxt_clipped == t)

        idx = np.flatnonzero(active)
        reached_undetected[idx[arrived]] = True
        still = (~vanished) & (~detected) & (~arrived)
        pos[idx[still]] = nxt_clipped[still]
        keep = np.zeros_like(active)
        keep[idx[still]] = True
        active = keep

    estimate = 1.0 - float(reached_undetected.mean())
    se = float(np.sqrt(estimate * (1.0 - estimate) / samples))
    return estimate, se


def _greedy_matching_bound(edges, covered):
    """Size of a maximal matching among uncovered edges: a cover lower bound."""
    used = set()
    size = 0
    for u, v in edges:
        if u in covered or v in covered or u in used or v in used:
            continue
        used.add(u)
        used.add(v)
        size += 1
    return size


def min_vertex_cover(g: UndirectedGraph, cap=20):
    """Minimum vertex cover size and one witness, by branch and bound.

    Branches on an endpoint of the first uncovered edge; prunes with a
    maximal-matching lower bound. Exact but exponential, so inputs are
    capped at ``cap`` nodes (InstanceTooLargeError beyond).
    """
    if g.node_count > cap:
        raise InstanceTooLargeError(
            f"{g.node_count} nodes exceed the exact-search cap of {cap}"
        )
    edges = list(g.edges)

    # greedy 2-approximation seeds the incumbent
    incumbent = set()
    for u, v in edges:
        if u not in incumbent and v not in incumbent:
            incumbent.update((u, v))
    best = [len(incumbent), frozenset(incumbent)]

    def branch(covered):
        uncovered = [(u, v) for u, v in edges if u not in covered and v not in covered]
        if not uncovered:
            if len(covered) < best[0]:
                best[0] = len(covered)
                best[1] = frozenset(covered)
            return
        if len(covered) + _greedy_matching_bound(uncovered, ()) >= best[0]:
            return
        u, v = uncovered[0]
        branch(covered | {u})
        branch(covered | {v})

    branch(frozenset())
    return best[0], best[1]


@dataclass(frozen=True)
class BudgetRow:
    budget: int
    pvc_yes: bool
    ume_yes: bool
    ume_witness: tuple[int, ...] | None

    @property
    def agree(self):
        return self.pvc_yes == self.ume_yes


@dataclass(frozen=True)
class VerificationReport:
    graph_id: str
    min_cover_size: int
    cover_witness: tuple[int, ...]
    rows: tuple[BudgetRow, ...]
    elapsed: float

    @property
    def passes(self):
        return all(row.agree for row in self.rows)


def verify_reduction(gprime: UndirectedGraph, budgets, tol=1e-9, seed=0,
                     graph_id="") -> VerificationReport:
    """Check, budget by budget, that the vertex-cover answer matches the
    perfect-interdiction answer on the constructed 2-evader instance."""
    start = time.monotonic()
    cover_size, witness = min_vertex_cover(gprime)
    artifacts = reduce_pvc(gprime, 0, seed=seed)
    rows = []
    for b in budgets:
        pvc_yes = cover_size <= b
        budgeted = _with_budget(artifacts.instance, b)
        ume_yes, plan = decide_perfect(budgeted, tol=tol)
        ume_witness = tuple(sorted(plan.node_set)) if ume_yes else None
        rows.append(BudgetRow(b, pvc_yes, ume_yes, ume_witness))
    return VerificationReport(
        graph_id=graph_id,
        min_cover_size=cover_size,
        cover_witness=tuple(sorted(witness)),
        rows=tuple(rows),
        elapsed=time.monotonic() - start,
    )


def _with_budget(inst: UmeInstance, limit: int) -> UmeInstance:
    return replace(inst, budget=Budget(limit, inst.budget.unit))
