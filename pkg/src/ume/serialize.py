"""JSON document formats: instances, plans, reduction artifacts, reports.

Documents are canonical so identical inputs serialize to identical
bytes: sparse entries are sorted by index, dictionary keys are sorted,
and probabilities are carried as shortest round-trip decimal strings
(at most 17 significant digits), so load(dump(x)) is value-identical.
"""

from __future__ import annotations

import json

import numpy as np

from .evaders import EvaderChain, EvaderEnsemble, validate_chain
from .graphs import DiGraph, UndirectedGraph
from .instance import UmeInstance
from .interdiction import Budget, EfficiencyMap, InterdictionPlan
from .oracles import VerificationReport
from .reduction import ReductionArtifacts, edge_traversal_report

INSTANCE_VERSION = "ume-instance/1"
PLAN_VERSION = "ume-plan/1"
ARTIFACTS_VERSION = "ume-artifacts/1"
REPORT_VERSION = "ume-report/1"


def _prob(x: float) -> str:
    return repr(float(x))


def _graph_doc(g: DiGraph) -> dict:
    edges = []
    for u, v in g.edges:
        w = g.weight(u, v)
        edges.append([u, v] if w == 1.0 else [u, v, w])
    return {"node_count": g.node_count, "edges": edges}


def _graph_from_doc(doc) -> DiGraph:
    return DiGraph(doc["node_count"], [tuple(e) for e in doc["edges"]])


def _efficiency_doc(eff: EfficiencyMap) -> dict:
    overrides = [[u, v, _prob(d)] for (u, v), d in sorted(eff.overrides.items())]
    return {"default": _prob(eff.default), "overrides": overrides}


def _efficiency_from_doc(doc) -> EfficiencyMap:
    overrides = {(u, v): float(d) for u, v, d in doc.get("overrides", [])}
    return EfficiencyMap(default=float(doc.get("default", 0.0)), overrides=overrides)


def _chain_doc(chain: EvaderChain) -> dict:
    source = [[int(i), _prob(p)] for i, p in enumerate(chain.source) if p != 0.0]
    transition = []
    for u in range(chain.n):
        row = [[int(v), _prob(p)] for v, p in enumerate(chain.transition[u]) if p != 0.0]
        if row:
            transition.append([u, row])
    return {
        "weight": _prob(chain.weight),
        "target": chain.target,
        "source": source,
        "transition": transition,
    }


def _chain_from_doc(doc, n) -> EvaderChain:
    a = np.zeros(n)
    for i, p in doc["source"]:
        a[i] = float(p)
    m = np.zeros((n, n))
    for u, row in doc["transition"]:
        for v, p in row:
            m[u][v] = float(p)
    return EvaderChain(a, m, int(doc["target"]), float(doc["weight"]))


def instance_to_document(inst: UmeInstance) -> dict:
    return {
        "version": INSTANCE_VERSION,
        "mode": inst.mode,
        "budget": {"limit": inst.budget.limit, "unit": inst.budget.unit},
        "graph": _graph_doc(inst.graph),
        "efficiencies": _efficiency_doc(inst.efficiency),
        "evaders": [_chain_doc(c) for c in inst.evaders],
    }


def document_to_instance(doc: dict) -> UmeInstance:
    version = doc.get("version")
    if version != INSTANCE_VERSION:
        raise ValueError(f"unsupported instance version {version!r}")
    graph = _graph_from_doc(doc["graph"])
    n = graph.node_count
    chains = [_chain_from_doc(c, n) for c in doc["evaders"]]
    for k, chain in enumerate(chains):
        report = validate_chain(chain)
        if not report.ok:
            raise ValueError(f"evader {k}: {report}")
    budget = Budget(int(doc["budget"]["limit"]), doc["budget"]["unit"])
    inst = UmeInstance(
        graph=graph,
        evaders=EvaderEnsemble(chains),
        efficiency=_efficiency_from_doc(doc.get("efficiencies", {})),
        budget=budget,
        mode=doc["mode"],
    )
    inst.validate()
    return inst


def plan_to_document(plan: InterdictionPlan) -> dict:
    doc = {"version": PLAN_VERSION, "mode": plan.mode}
    if plan.mode == "node":
        doc["nodes"] = sorted(plan.node_set)
    else:
        doc["sensors"] = [list(e) for e in sorted(plan.sensors)]
    return doc


def document_to_plan(doc: dict, inst: UmeInstance) -> InterdictionPlan:
    """Materialize a plan document against an instance (the instance supplies
    efficiencies unless the document overrides them)."""
    version = doc.get("version")
    if version != PLAN_VERSION:
        raise ValueError(f"unsupported plan version {version!r}")
    eff = inst.efficiency
    if "efficiencies" in doc:
        eff = _efficiency_from_doc(doc["efficiencies"])
    if doc["mode"] == "node":
        from .interdiction import plan_from_nodes

        return plan_from_nodes(inst.graph, doc["nodes"], eff)
    sensors = frozenset((u, v) for u, v in doc["sensors"])
    for u, v in sensors:
        if not inst.graph.has_edge(u, v):
            raise ValueError(f"sensor edge ({u}, {v}) not in the instance graph")
    return InterdictionPlan(sensors, eff, mode="edge")


def artifacts_to_document(artifacts: ReductionArtifacts) -> dict:
    traversal = edge_traversal_report(artifacts)
    und = artifacts.original
    return {
        "version": ARTIFACTS_VERSION,
        "original": {"node_count": und.node_count, "edges": [list(e) for e in und.edges]},
        "budget": artifacts.budget,
        "target": artifacts.target,
        "pathological": artifacts.pathological,
        "coloring": list(artifacts.coloring),
        "sources": [sorted(s) for s in artifacts.sources],
        "penultimates": [sorted(p) for p in artifacts.penultimates],
        "normalizers": [
            [[u, z] for u, z in sorted(zmap.items())] for zmap in artifacts.normalizers
        ],
        "edge_traversal": [[u, v, list(evs)] for (u, v), evs in sorted(traversal.items())],
    }


def report_to_document(report: VerificationReport) -> dict:
    # timing stays out of the document so reruns are byte-identical
    return {
        "version": REPORT_VERSION,
        "graph_id": report.graph_id,
        "min_cover_size": report.min_cover_size,
        "cover_witness": list(report.cover_witness),
        "rows": [
            {
                "budget": row.budget,
                "pvc": row.pvc_yes,
                "ume": row.ume_yes,
                "agree": row.agree,
                "ume_witness": list(row.ume_witness) if row.ume_witness is not None else None,
            }
            for row in report.rows
        ],
        "pass": report.passes,
    }


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, separators=(",", ": ")) + "\n"


def dump_json(doc: dict, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(doc))


def load_json(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_instance(inst: UmeInstance, path):
    dump_json(instance_to_document(inst), path)


def load_instance(path) -> UmeInstance:
    return document_to_instance(load_json(path))
