"""Graph containers, constructors, and edge-list file I/O.

Nodes are dense integer indices 0..n-1 everywhere; labels, when present,
are cosmetic. Both graph classes are immutable after construction and
safe to share across threads.

Edge-list text format: first non-comment line is the node count, then one
``u v [weight]`` line per edge. ``#`` starts a comment (whole line or
trailing). Weights are kept for directed graphs and ignored for
undirected ones.
"""

from __future__ import annotations

import random

from .errors import (
    DanglingEndpointError,
    DuplicateEdgeError,
    GraphFormatError,
    SelfLoopError,
)


def _check_endpoint(node, node_count, line=None):
    if not isinstance(node, int) or isinstance(node, bool):
        raise GraphFormatError(f"node index must be an integer, got {node!r}", line)
    if node < 0 or node >= node_count:
        raise DanglingEndpointError(
            f"edge endpoint {node} outside node range 0..{node_count - 1}", line
        )


class UndirectedGraph:
    """Simple undirected graph: no self-loops, no parallel edges."""

    def __init__(self, node_count, edges=(), node_labels=None):
        if node_count < 0:
            raise GraphFormatError(f"negative node count {node_count}")
        self.node_count = int(node_count)
        self.node_labels = dict(node_labels) if node_labels else {}
        seen = set()
        adj = [[] for _ in range(self.node_count)]
        for e in edges:
            u, v = e
            _check_endpoint(u, self.node_count)
            _check_endpoint(v, self.node_count)
            if u == v:
                raise SelfLoopError(f"self-loop ({u}, {u}) not allowed")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge {{{key[0]}, {key[1]}}}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self._edges = tuple(sorted(seen))
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @property
    def edges(self):
        """Edges as sorted (u, v) pairs with u < v."""
        return self._edges

    @property
    def edge_count(self):
        return len(self._edges)

    def neighbors(self, u):
        return self._adj[u]

    def degree(self, u):
        return len(self._adj[u])

    def has_edge(self, u, v):
        key = (u, v) if u < v else (v, u)
        return key in self._edge_set

    @property
    def _edge_set(self):
        es = getattr(self, "_edge_set_cache", None)
        if es is None:
            es = frozenset(self._edges)
            self._edge_set_cache = es
        return es

    def non_singletons(self):
        return tuple(u for u in range(self.node_count) if self.degree(u) > 0)

    def __eq__(self, other):
        return (
            isinstance(other, UndirectedGraph)
            and self.node_count == other.node_count
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self.node_count, self._edges))

    def __repr__(self):
        return f"UndirectedGraph(n={self.node_count}, m={len(self._edges)})"


class DiGraph:
    """Directed graph with optional non-negative edge weights (default 1.0)."""

    def __init__(self, node_count, edges=(), node_labels=None):
        if node_count < 0:
            raise GraphFormatError(f"negative node count {node_count}")
        self.node_count = int(node_count)
        self.node_labels = dict(node_labels) if node_labels else {}
        weights = {}
        succ = [[] for _ in range(self.node_count)]
        for e in edges:
            if len(e) == 3:
                u, v, w = e
                w = float(w)
                if w < 0:
                    raise GraphFormatError(f"negative weight {w} on edge ({u}, {v})")
            else:
                u, v = e
                w = 1.0
            _check_endpoint(u, self.node_count)
            _check_endpoint(v, self.node_count)
            if u == v:
                raise SelfLoopError(f"self-loop ({u}, {u}) not allowed")
            if (u, v) in weights:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            weights[(u, v)] = w
            succ[u].append(v)
        self._weights = weights
        self._edges = tuple(sorted(weights))
        self._succ = tuple(tuple(sorted(vs)) for vs in succ)

    @property
    def edges(self):
        """Directed edges as sorted (u, v) pairs."""
        return self._edges

    @property
    def edge_count(self):
        return len(self._edges)

    def successors(self, u):
        return self._succ[u]

    def out_degree(self, u):
        return len(self._succ[u])

    def has_edge(self, u, v):
        return (u, v) in self._weights

    def weight(self, u, v):
        return self._weights[(u, v)]

    def __eq__(self, other):
        return (
            isinstance(other, DiGraph)
            and self.node_count == other.node_count
            and self._weights == other._weights
        )

    def __hash__(self):
        return hash((self.node_count, self._edges))

    def __repr__(self):
        return f"DiGraph(n={self.node_count}, m={len(self._edges)})"


def to_directed(g: UndirectedGraph) -> DiGraph:
    """Replace every undirected edge {u, v} with the pair (u, v), (v, u)."""
    edges = []
    for u, v in g.edges:
        edges.append((u, v))
        edges.append((v, u))
    return DiGraph(g.node_count, edges, node_labels=g.node_labels)


# ---------------------------------------------------------------------------
# edge-list text format


def parse_edge_list(text, directed=False):
    """Parse edge-list text into a graph.

    Raises GraphFormatError (or a subclass) with the offending 1-based line
    number on malformed input.
    """
    node_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if node_count is None:
            if len(fields) != 1:
                raise GraphFormatError("expected a single node count", lineno)
            try:
                node_count = int(fields[0])
            except ValueError:
                raise GraphFormatError(f"bad node count {fields[0]!r}", lineno) from None
            if node_count < 0:
                raise GraphFormatError(f"negative node count {node_count}", lineno)
            continue
        if len(fields) not in (2, 3):
            raise GraphFormatError(f"expected 'u v [weight]', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"bad endpoints in {line!r}", lineno) from None
        w = None
        if len(fields) == 3:
            try:
                w = float(fields[2])
            except ValueError:
                raise GraphFormatError(f"bad weight {fields[2]!r}", lineno) from None
        edges.append((lineno, u, v, w))
    if node_count is None:
        raise GraphFormatError("empty input: missing node count line")

    # Re-validate edge by edge so errors carry their line number.
    seen = set()
    cooked = []
    for lineno, u, v, w in edges:
        _check_endpoint(u, node_count, lineno)
        _check_endpoint(v, node_count, lineno)
        if u == v:
            raise SelfLoopError(f"self-loop ({u}, {u}) not allowed", lineno)
        key = (u, v) if directed or u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        cooked.append((u, v) if w is None else (u, v, w))
    if directed:
        return DiGraph(node_count, cooked)
    return UndirectedGraph(node_count, [(e[0], e[1]) for e in cooked])


def format_edge_list(g) -> str:
    lines = [str(g.node_count)]
    if isinstance(g, DiGraph):
        for u, v in g.edges:
            w = g.weight(u, v)
            lines.append(f"{u} {v}" if w == 1.0 else f"{u} {v} {w!r}")
    else:
        for u, v in g.edges:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def write_graph(g, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def load_graph(path, format="edge-list", directed=False):
    """Load a graph from ``path``.

    format="edge-list" parses the text format above (undirected unless
    ``directed``); format="instance-json" returns the directed graph embedded
    in an instance document.
    """
    if format == "edge-list":
        with open(path, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read(), directed=directed)
    if format == "instance-json":
        from .serialize import load_instance

        return load_instance(path).graph
    raise GraphFormatError(f"unknown graph format {format!r}")


# ---------------------------------------------------------------------------
# constructors used by the test suite and the fixture generator


def complete_graph(n):
    return UndirectedGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n):
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    edges = [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        edges.append((0, n - 1))
    return UndirectedGraph(n, edges)


def star_graph(leaves):
    """Hub node 0 joined to ``leaves`` leaf nodes."""
    return UndirectedGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel_graph(rim):
    """Hub node 0 plus a ``rim``-cycle, every rim node joined to the hub."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i + 1) for i in range(1, rim)]
    edges.append((1, rim))
    return UndirectedGraph(rim + 1, edges)


def grid_graph(rows, cols):
    def idx(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return UndirectedGraph(rows * cols, edges)


def fan_graph(n):
    """Outerplanar fan: a path 1..n-1 with every path node joined to node 0."""
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1)]
    return UndirectedGraph(n, edges)


def edgeless_graph(n):
    return UndirectedGraph(n, [])


def random_planar_triangulation(n, seed) -> UndirectedGraph:
    """Random maximal planar graph with 3n-6 edges (for n >= 3).

    Grown incrementally: start from a triangle and repeatedly drop a new
    node into a uniformly chosen triangular face, joining it to the face's
    corners. Deterministic for a fixed seed.
    """
    if n <= 0:
        return UndirectedGraph(max(n, 0), [])
    if n == 1:
        return UndirectedGraph(1, [])
    if n == 2:
        return UndirectedGraph(2, [(0, 1)])
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    faces = [(0, 1, 2)]
    for k in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces.pop(i)
        edges += [(a, k), (b, k), (c, k)]
        faces += [(a, b, k), (b, c, k), (a, c, k)]
    return UndirectedGraph(n, edges)


def random_planar_graph(n, seed, keep=0.7) -> UndirectedGraph:
    """Random planar graph: a triangulation with each edge kept independently
    with probability ``keep``. Subgraphs of planar graphs stay planar; nodes
    may end up as singletons."""
    tri = random_planar_triangulation(n, seed)
    rng = random.Random(f"thin-{seed}")
    return UndirectedGraph(n, [e for e in tri.edges if rng.random() < keep])
