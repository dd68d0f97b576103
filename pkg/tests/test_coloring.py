import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ume.coloring import COLOR_NAMES, four_color, verify_coloring
from ume.errors import ColoringTimeoutError, MissingColorError
from ume.graphs import (
    UndirectedGraph,
    complete_graph,
    random_planar_graph,
    random_planar_triangulation,
    star_graph,
)


def test_star_uses_two_colors():
    g = star_graph(5)
    f = four_color(g)
    assert len(set(f)) == 2
    assert all(f[leaf] != f[0] for leaf in range(1, 6))


def test_k4_needs_all_four():
    f = four_color(complete_graph(4))
    assert sorted(f) == sorted(COLOR_NAMES)


def test_triangulation_30_under_five_seconds():
    g = random_planar_triangulation(30, 3042)
    start = time.monotonic()
    f = four_color(g)
    assert time.monotonic() - start < 5.0
    assert verify_coloring(g, f) == []
    assert len(set(f)) <= 4


def test_verify_proper_k3():
    g = complete_graph(3)
    assert verify_coloring(g, ["white", "red", "green"]) == []


def test_verify_flags_monochromatic_edge():
    g = complete_graph(3)
    assert verify_coloring(g, ["white", "white", "green"]) == [(0, 1)]


def test_verify_rejects_partial_assignment():
    g = complete_graph(3)
    with pytest.raises(MissingColorError):
        verify_coloring(g, ["white", "red"])
    with pytest.raises(MissingColorError):
        verify_coloring(g, ["white", "red", None])


def test_singletons_are_white():
    g = UndirectedGraph(4, [(0, 1)])
    f = four_color(g)
    assert f[2] == "white" and f[3] == "white"


def test_determinism_per_seed():
    g = random_planar_triangulation(25, 11)
    assert four_color(g, seed=3) == four_color(g, seed=3)


def test_non_four_colorable_raises():
    with pytest.raises(ColoringTimeoutError):
        four_color(complete_graph(5), time_budget=5.0)


def test_suite_graphs_color_properly(suite_graphs):
    for name, g in suite_graphs.items():
        f = four_color(g)
        assert verify_coloring(g, f) == [], name
        assert len(set(f)) <= 4, name


@given(st.integers(min_value=3, max_value=40), st.integers(min_value=0, max_value=10_000))
@settings(max_examples=40)
def test_random_planar_always_proper(n, seed):
    g = random_planar_graph(n, seed, keep=0.8)
    f = four_color(g)
    assert verify_coloring(g, f) == []
    assert set(f) <= set(COLOR_NAMES)
