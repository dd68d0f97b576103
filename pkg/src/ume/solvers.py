"""Budget-constrained maximization of the expected capture probability,
and the perfect-interdiction decision problem.

Both solvers enumerate candidate sites explicitly; at desk scale (a few
hundred nodes, budgets of a handful) this beats cleverness. Candidates
are pruned to sites whose interdiction can actually change the
objective: a node is a candidate only if some out-edge carries positive
evader traffic and positive efficiency (in particular the evaders'
killing targets are never candidates, since their transition rows are
zero), and an edge only if its efficiency is positive. Pruned sites are
provably no-ops, so optima are unaffected.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import SearchSpaceError
from .instance import UmeInstance
from .interdiction import InterdictionPlan

DEFAULT_SUBSET_CAP = 10_000_000
MARGINAL_GAIN_FLOOR = 1e-12


@dataclass
class SolveResult:
    plan: InterdictionPlan
    value: float
    method: str
    evaluations: int
    elapsed: float


def candidate_sites(inst: UmeInstance):
    """Interdiction sites that can change the objective, sorted."""
    g = inst.graph
    if inst.mode == "node":
        sites = []
        for u in range(g.node_count):
            for v in g.successors(u):
                if inst.efficiency.get(u, v) <= 0.0:
                    continue
                if any(chain.transition[u, v] > 0 for chain in inst.evaders):
                    sites.append(u)
                    break
        return sites
    return [
        (u, v)
        for (u, v) in g.edges
        if inst.efficiency.get(u, v) > 0.0
        and any(chain.transition[u, v] > 0 for chain in inst.evaders)
    ]


def _plan_for(inst, subset):
    if inst.mode == "node":
        return inst.node_plan(subset)
    return inst.edge_plan(subset)


def _subset_count(m, budget):
    return sum(comb(m, k) for k in range(min(budget, m) + 1))


def _check_cap(m, budget, cap):
    total = _subset_count(m, budget)
    if total > cap:
        raise SearchSpaceError(
            f"{total} candidate subsets exceed the cap of {cap}; "
            "raise subset_cap explicitly to force the search"
        )


def solve_exact(inst: UmeInstance, subset_cap=DEFAULT_SUBSET_CAP, workers=1) -> SolveResult:
    """Globally optimal plan over all candidate subsets within budget.

    Ties are broken toward the lexicographically smallest sorted subset,
    independent of evaluation order, so parallel runs reproduce the
    sequential answer.
    """
    start = time.monotonic()
    sites = candidate_sites(inst)
    budget = inst.budget.limit
    _check_cap(len(sites), budget, subset_cap)

    def subsets():
        for k in range(min(budget, len(sites)) + 1):
            yield from combinations(sites, k)

    def evaluate(subset):
        return inst.objective(_plan_for(inst, subset)), subset

    best_value, best_subset = None, None
    evaluations = 0

    def consider(value, subset):
        nonlocal best_value, best_subset
        if (
            best_value is None
            or value > best_value
            or (value == best_value and tuple(sorted(subset)) < tuple(sorted(best_subset)))
        ):
            best_value, best_subset = value, subset

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for value, subset in pool.map(evaluate, subsets(), chunksize=64):
                evaluations += 1
                consider(value, subset)
    else:
        for subset in subsets():
            evaluations += 1
            consider(*evaluate(subset))

    return SolveResult(
        plan=_plan_for(inst, best_subset),
        value=best_value,
        method="exact",
        evaluations=evaluations,
        elapsed=time.monotonic() - start,
    )


def solve_greedy(inst: UmeInstance) -> SolveResult:
    """Add the site with the largest marginal gain until the budget runs out
    or no site gains more than 1e-12; ties go to the lowest-indexed site."""
    start = time.monotonic()
    sites = candidate_sites(inst)
    budget = inst.budget.limit
    chosen = []
    evaluations = 1
    current = inst.objective(_plan_for(inst, chosen))
    while len(chosen) < budget:
        best_site, best_value = None, None
        for site in sites:
            if site in chosen:
                continue
            value = inst.objective(_plan_for(inst, chosen + [site]))
            evaluations += 1
            if best_value is None or value > best_value:
                best_site, best_value = site, value
        if best_site is None or best_value - current <= MARGINAL_GAIN_FLOOR:
            break
        chosen.append(best_site)
        current = best_value
    chosen.sort()
    return SolveResult(
        plan=_plan_for(inst, chosen),
        value=current,
        method="greedy",
        evaluations=evaluations,
        elapsed=time.monotonic() - start,
    )


def decide_perfect(inst: UmeInstance, tol=1e-9, subset_cap=DEFAULT_SUBSET_CAP):
    """Is expected capture 1 achievable within the budget?

    Returns (True, witness_plan) or (False, None). A plan counts as
    perfect when its objective reaches 1 - tol; the reduction's path
    probabilities are rationals with denominators bounded by degree
    products, so at desk scale true values are either 1 or separated from
    1 by far more than the default 1e-9.

    Subsets are tried smallest-first in lexicographic order and the first
    witness wins, so the result is deterministic.
    """
    sites = candidate_sites(inst)
    budget = inst.budget.limit
    _check_cap(len(sites), budget, subset_cap)
    for k in range(min(budget, len(sites)) + 1):
        for subset in combinations(sites, k):
            plan = _plan_for(inst, subset)
            if inst.objective(plan) >= 1.0 - tol:
                return True, plan
    return False, None
