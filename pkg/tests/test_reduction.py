"""The vertex-cover-to-interdiction construction, checked against the
worked 3-clique example and the construction's own structural guarantees."""

import numpy as np
import pytest

from ume.errors import ImproperColoringError
from ume.evaders import validate_chain
from ume.graphs import UndirectedGraph, complete_graph, edgeless_graph, star_graph
from ume.interdiction import EfficiencyMap, InterdictionPlan
from ume.reduction import (
    build_evaders,
    build_ume_graph,
    edge_traversal_report,
    reduce_pvc,
)


def k3():
    return complete_graph(3)


def brute_force_three_hop_weighted_capture(instance, node_set):
    """Independent objective check: enumerate every <= 3-hop trajectory of
    each evader, multiplying per-edge survival factors (1 - r*d) along the
    way. Pure Python, no linear algebra."""
    plan_edges = {
        (u, v) for u in node_set for v in instance.graph.successors(u)
    }
    total = 0.0
    for chain in instance.evaders:
        reach_undetected = 0.0
        stack = [(u, p, 1.0) for u, p in enumerate(chain.source) if p > 0]
        for _ in range(3):
            nxt = []
            for u, p, undet in stack:
                if u == chain.target:
                    reach_undetected += p * undet
                    continue
                for v in range(chain.n):
                    q = chain.transition[u, v]
                    if q > 0:
                        factor = 1.0 - (1.0 if (u, v) in plan_edges else 0.0)
                        nxt.append((v, p * q, undet * factor))
            stack = nxt
        for u, p, undet in stack:
            if u == chain.target:
                reach_undetected += p * undet
        total += chain.weight * (1.0 - reach_undetected)
    return total


def test_build_ume_graph_k3():
    g, t = build_ume_graph(k3())
    assert t == 3
    assert g.node_count == 4
    directed_original = {(u, v) for u, v in g.edges if v != t}
    to_target = {(u, v) for u, v in g.edges if v == t}
    assert len(directed_original) == 6
    assert to_target == {(0, t), (1, t), (2, t)}
    assert g.out_degree(t) == 0


def test_build_ume_graph_all_singletons():
    g, t = build_ume_graph(edgeless_graph(3))
    assert g.node_count == 4
    assert g.edge_count == 0


def test_k3_worked_example():
    # the fixed coloring (white, red, green) pins every matrix entry
    ensemble, art = build_evaders(k3(), ["white", "red", "green"])
    assert art.sources == (frozenset({0, 1}), frozenset({0, 2}))
    assert art.penultimates == (frozenset({2}), frozenset({1}))
    t = art.target
    m1, m2 = ensemble[0].transition, ensemble[1].transition
    assert m1[0, 2] == 1.0 and m1[1, 2] == 1.0 and m1[2, t] == 1.0
    assert np.count_nonzero(m1) == 3
    assert m2[0, 1] == 1.0 and m2[2, 1] == 1.0 and m2[1, t] == 1.0
    assert np.count_nonzero(m2) == 3
    assert art.normalizers[0] == {0: 1, 1: 1}
    assert art.normalizers[1] == {0: 1, 2: 1}
    for chain in ensemble:
        assert validate_chain(chain).ok


def test_k3_cover_yields_perfect_capture():
    _, art = build_evaders(k3(), ["white", "red", "green"], budget=2)
    inst = art.instance
    value = inst.objective(inst.node_plan({1, 2}))
    oracle = brute_force_three_hop_weighted_capture(inst, {1, 2})
    assert oracle == pytest.approx(1.0, abs=1e-12)
    assert value == pytest.approx(oracle, abs=1e-12)


def test_k3_noncover_leaks():
    _, art = build_evaders(k3(), ["white", "red", "green"], budget=1)
    inst = art.instance
    for q in ({0}, {1}, {2}):
        value = inst.objective(inst.node_plan(q))
        oracle = brute_force_three_hop_weighted_capture(inst, q)
        assert value == pytest.approx(oracle, abs=1e-12)
        assert value < 1.0 - 1e-3


def test_k3_traversal_report():
    _, art = build_evaders(k3(), ["white", "red", "green"])
    report = edge_traversal_report(art)
    assert report == {(0, 1): (2,), (0, 2): (1,), (1, 2): (1, 2)}


def test_improper_coloring_rejected():
    with pytest.raises(ImproperColoringError):
        build_evaders(k3(), ["white", "white", "green"])
    with pytest.raises(ImproperColoringError):
        build_evaders(k3(), ["white", "red"])


def test_star_case_evader_one_stranded():
    # white leaves around a red center: center is in S1 and P2, leaves in
    # S1 and S2; evader 1 finds no penultimate nodes and never reaches t,
    # evader 2 crosses every edge via the center
    g = star_graph(4)
    coloring = ["red"] + ["white"] * 4
    ensemble, art = build_evaders(g, coloring)
    assert art.penultimates[0] == frozenset()
    ev1, ev2 = ensemble[0], ensemble[1]
    assert not ev1.transition.any()
    from ume.evaders import capture_probability
    from ume.interdiction import empty_plan

    assert capture_probability(ev1, empty_plan()) == 1.0
    report = edge_traversal_report(art)
    assert all(evs == (2,) for evs in report.values())


def test_bidirectional_edge_traversal():
    # a red-green edge is crossed both ways: red is evader 1's source and
    # evader 2's penultimate node, green the reverse
    g = UndirectedGraph(2, [(0, 1)])
    ensemble, art = build_evaders(g, ["red", "green"])
    m1, m2 = ensemble[0].transition, ensemble[1].transition
    assert m1[0, 1] == 1.0  # evader 1: 0 -> 1 -> t
    assert m2[1, 0] == 1.0  # evader 2: 1 -> 0 -> t
    report = edge_traversal_report(art)
    assert report[(0, 1)] == (1, 2)


def test_one_sided_edge_traversal():
    # a white-red edge belongs to evader 2 alone: white is the only source
    # with a penultimate neighbor
    g = UndirectedGraph(2, [(0, 1)])
    ensemble, art = build_evaders(g, ["white", "red"])
    assert not ensemble[0].transition.any()  # P1 is empty
    assert ensemble[1].transition[0, 1] == 1.0
    assert edge_traversal_report(art)[(0, 1)] == (2,)


def test_pathological_all_singletons():
    ensemble, art = build_evaders(edgeless_graph(3), ["white"] * 3, budget=0)
    assert art.pathological
    for chain in ensemble:
        assert chain.source[0] == 1.0
        assert not chain.transition.any()
        assert validate_chain(chain).ok
    assert edge_traversal_report(art) == {}


def test_reduce_pvc_retains_artifacts(suite_graphs):
    g = suite_graphs["tri10"]
    art = reduce_pvc(g, 3)
    assert art.budget == 3
    assert art.instance.budget.limit == 3
    assert art.instance.mode == "node"
    assert art.target == g.node_count
    art.instance.validate()


def test_reduce_pvc_rejects_bad_input():
    with pytest.raises(ValueError):
        reduce_pvc(k3(), -1)
    with pytest.raises(ValueError):
        reduce_pvc(UndirectedGraph(0, []), 0)


# --- construction invariants over the whole suite ---------------------------


def test_observation_partition_and_disjointness(suite_reductions):
    for name, art in suite_reductions.items():
        s1, s2 = art.sources
        p1, p2 = art.penultimates
        non_singletons = set(art.original.non_singletons())
        assert p1 & s1 == frozenset(), name
        assert p2 & s2 == frozenset(), name
        classes = {
            "white": s1 & s2,
            "green": s2 & p1,
            "red": s1 & p2,
            "black": p1 & p2,
        }
        seen = set()
        for color, members in classes.items():
            assert not (seen & members), name
            seen |= members
            for u in members:
                assert art.coloring[u] == color, name
        assert seen == non_singletons, name


def test_observation_target_pruning(suite_reductions):
    import random

    for name, art in suite_reductions.items():
        inst = art.instance
        rng = random.Random(f"prune-{name}")
        nodes = list(range(art.original.node_count))
        for _ in range(3):
            q = set(rng.sample(nodes, k=min(2, len(nodes))))
            with_t = inst.objective(inst.node_plan(q | {art.target}))
            without_t = inst.objective(inst.node_plan(q))
            assert abs(with_t - without_t) <= 1e-12, name


def test_every_edge_travelled_and_nilpotency(suite_reductions):
    for name, art in suite_reductions.items():
        report = edge_traversal_report(art)
        assert set(report) == set(art.original.edges), name
        for edge, evs in report.items():
            assert evs, (name, edge)
        for chain in art.instance.evaders:
            cubed = np.linalg.matrix_power(chain.transition, 3)
            assert not cubed.any(), name


def test_cover_always_perfect(suite_reductions):
    from ume.oracles import min_vertex_cover

    for name, art in suite_reductions.items():
        _, cover = min_vertex_cover(art.original)
        inst = art.instance
        value = inst.objective(inst.node_plan(cover))
        assert value == pytest.approx(1.0, abs=1e-12), name


def test_empty_si_falls_back_to_stationary_evader():
    # a proper green/black coloring leaves S1 empty; evader 1 must become a
    # stationary point mass so the ensemble stays well-formed and the claim
    # only depends on evader 2
    g = UndirectedGraph(2, [(0, 1)])
    ensemble, art = build_evaders(g, ["green", "black"])
    assert art.sources[0] == frozenset()
    ev1 = ensemble[0]
    assert ev1.source[0] == 1.0 and not ev1.transition.any()
    report = edge_traversal_report(art)
    assert set(report[(0, 1)]) == {2}
