"""Command-line entry point.

Subcommands wrap the library one-to-one: ``color``, ``reduce``, ``eval``,
``solve``, ``decide``, ``verify``, ``simulate``. Exit codes: 0 success
(and YES decisions), 1 clean NO decision, 2 errors. All outputs are
deterministic given the same inputs and seeds.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import serialize
from .coloring import four_color
from .errors import UmeError
from .evaders import capture_probability
from .graphs import load_graph
from .instance import UmeInstance
from .interdiction import Budget
from .oracles import oracle_capture_mc, verify_reduction
from .reduction import reduce_pvc
from .solvers import decide_perfect, solve_exact, solve_greedy


def _write_or_print(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _with_budget(inst: UmeInstance, limit) -> UmeInstance:
    if limit is None:
        return inst
    return replace(inst, budget=Budget(int(limit), inst.budget.unit))


def _load_plan(inst, path):
    if path is None:
        return inst.empty_plan()
    return serialize.document_to_plan(serialize.load_json(path), inst)


def cmd_color(args):
    g = load_graph(args.graph)
    colors = four_color(g, time_budget=args.time_budget, seed=args.seed)
    text = "".join(f"{u} {c}\n" for u, c in enumerate(colors))
    _write_or_print(text, args.output)
    return 0


def cmd_reduce(args):
    g = load_graph(args.graph)
    artifacts = reduce_pvc(g, args.budget, seed=args.seed, time_budget=args.time_budget)
    _write_or_print(
        serialize.dumps_canonical(serialize.instance_to_document(artifacts.instance)),
        args.output,
    )
    if args.artifacts:
        serialize.dump_json(serialize.artifacts_to_document(artifacts), args.artifacts)
    return 0


def cmd_eval(args):
    inst = serialize.load_instance(args.instance)
    plan = _load_plan(inst, args.plan)
    for k, chain in enumerate(inst.evaders, start=1):
        print(f"J[{k}] {capture_probability(chain, plan):.12f}")
    print(f"J_expected {inst.objective(plan):.12f}")
    return 0


def cmd_solve(args):
    inst = _with_budget(serialize.load_instance(args.instance), args.budget)
    solver = solve_exact if args.method == "exact" else solve_greedy
    if args.method == "exact":
        result = solver(inst, workers=args.threads)
    else:
        result = solver(inst)
    print(f"method {result.method}")
    print(f"value {result.value:.12f}")
    print(f"evaluations {result.evaluations}")
    sites = sorted(result.plan.node_set) if inst.mode == "node" else sorted(result.plan.sensors)
    print(f"sites {sites}")
    print(f"elapsed {result.elapsed:.3f}s", file=sys.stderr)
    if args.output:
        serialize.dump_json(serialize.plan_to_document(result.plan), args.output)
    return 0


def cmd_decide(args):
    inst = _with_budget(serialize.load_instance(args.instance), args.budget)
    yes, witness = decide_perfect(inst, tol=args.tol)
    if yes:
        print("YES")
        if args.output:
            serialize.dump_json(serialize.plan_to_document(witness), args.output)
        return 0
    print("NO")
    return 1


def cmd_verify(args):
    g = load_graph(args.graph)
    lo, hi = args.budgets
    report = verify_reduction(
        g, range(lo, hi + 1), tol=args.tol, seed=args.seed, graph_id=args.graph
    )
    header = f"{'budget':>6}  {'cover':>5}  {'capture=1':>9}  agree"
    lines = [header]
    for row in report.rows:
        lines.append(
            f"{row.budget:>6}  {'YES' if row.pvc_yes else 'NO':>5}  "
            f"{'YES' if row.ume_yes else 'NO':>9}  {'ok' if row.agree else 'MISMATCH'}"
        )
    lines.append(f"min cover size {report.min_cover_size}, witness {list(report.cover_witness)}")
    lines.append("PASS" if report.passes else "FAIL")
    print("\n".join(lines))
    print(f"elapsed {report.elapsed:.3f}s", file=sys.stderr)
    if args.output:
        serialize.dump_json(serialize.report_to_document(report), args.output)
    return 0


def cmd_simulate(args):
    inst = serialize.load_instance(args.instance)
    plan = _load_plan(inst, args.plan)
    total, var = 0.0, 0.0
    for k, chain in enumerate(inst.evaders, start=1):
        est, se = oracle_capture_mc(chain, plan, args.samples, args.seed + k - 1)
        print(f"J[{k}] {est:.12f} se {se:.12f}")
        total += chain.weight * est
        var += (chain.weight * se) ** 2
    print(f"J_expected {total:.12f} se {var ** 0.5:.12f}")
    return 0


def _budget_range(text):
    lo, _, hi = text.partition("..")
    return int(lo), int(hi if hi else lo)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ume",
        description="Sensor placement against unreactive Markovian evaders",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="4-color an undirected graph (edge-list file)")
    p.add_argument("graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--time-budget", type=float, default=30.0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("reduce", help="build the 2-evader instance from a vertex-cover input")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--time-budget", type=float, default=30.0)
    p.add_argument("-o", "--output")
    p.add_argument("--artifacts")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("eval", help="evaluate capture probabilities for a plan")
    p.add_argument("instance")
    p.add_argument("--plan")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("solve", help="maximize expected capture within the budget")
    p.add_argument("instance")
    p.add_argument("--method", choices=("exact", "greedy"), default="exact")
    p.add_argument("--budget", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decide", help="is perfect expected capture achievable?")
    p.add_argument("instance")
    p.add_argument("--budget", type=int)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="vertex-cover vs interdiction decision sweep")
    p.add_argument("graph")
    p.add_argument("--budgets", type=_budget_range, required=True, metavar="LO..HI")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="Monte Carlo estimate of the objective")
    p.add_argument("instance")
    p.add_argument("--plan")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UmeError as exc:
        print(f"error [{exc.component}]: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error [input]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
