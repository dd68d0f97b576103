"""Regenerate the committed planar graph suite under tests/fixtures/planar/.

The suite drives the coloring checks and the cover-vs-interdiction
verification sweep. Seeds are fixed here so reruns are byte-identical;
regenerate only when deliberately changing the suite.
"""

import pathlib
import sys

SRC = pathlib.Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC))

from ume.graphs import (  # noqa: E402
    complete_graph,
    cycle_graph,
    edgeless_graph,
    fan_graph,
    format_edge_list,
    grid_graph,
    path_graph,
    random_planar_graph,
    random_planar_triangulation,
    star_graph,
    wheel_graph,
)

SUITE = {
    # headline sweep members (n <= 12)
    "singles3": edgeless_graph(3),
    "single_edge": path_graph(2),
    "k3": complete_graph(3),
    "k4": complete_graph(4),
    "path5": path_graph(5),
    "star5": star_graph(5),
    "wheel5": wheel_graph(5),
    "cycle6": cycle_graph(6),
    "wheel6": wheel_graph(6),
    "fan8": fan_graph(8),
    "grid3x3": grid_graph(3, 3),
    "tri10": random_planar_triangulation(10, 1042),
    "thin12": random_planar_graph(12, 77, keep=0.6),
    "grid3x4": grid_graph(3, 4),
    # coloring-only members (n up to 30)
    "grid4x5": grid_graph(4, 5),
    "tri20": random_planar_triangulation(20, 2042),
    "tri30": random_planar_triangulation(30, 3042),
}


def main():
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "planar"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, g in SUITE.items():
        path = out_dir / f"{name}.txt"
        path.write_text(format_edge_list(g), encoding="utf-8")
        print(f"{path.name:16s} n={g.node_count:3d} m={g.edge_count:3d}")


if __name__ == "__main__":
    main()
