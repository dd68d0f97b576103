import pathlib
import sys

import pytest
from hypothesis import HealthCheck, settings

SRC = pathlib.Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

settings.register_profile(
    "ume", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("ume")

FIXTURES = pathlib.Path(__file__).resolve().parent / "fixtures" / "planar"

#: graphs in the cover-vs-interdiction verification sweep (n <= 12)
HEADLINE_SUITE = [
    "singles3",
    "single_edge",
    "k3",
    "k4",
    "path5",
    "star5",
    "wheel5",
    "cycle6",
    "wheel6",
    "fan8",
    "grid3x3",
    "tri10",
    "thin12",
    "grid3x4",
]

#: every committed planar graph (adds the larger coloring-only members)
FULL_SUITE = HEADLINE_SUITE + ["grid4x5", "tri20", "tri30"]


def fixture_path(name):
    return FIXTURES / f"{name}.txt"


@pytest.fixture(scope="session")
def suite_graphs():
    from ume.graphs import load_graph

    return {name: load_graph(fixture_path(name)) for name in FULL_SUITE}


@pytest.fixture(scope="session")
def headline_graphs(suite_graphs):
    return {name: suite_graphs[name] for name in HEADLINE_SUITE}


@pytest.fixture(scope="session")
def suite_reductions(headline_graphs):
    """Reduction artifacts for every headline graph, built once."""
    from ume.reduction import reduce_pvc

    return {name: reduce_pvc(g, 0) for name, g in headline_graphs.items()}
