"""Loopless multigraphs with individually addressable parallel edges.

Vertices are the integers ``1..n``. Every edge carries an id that is stable
under deletion; contraction produces a new graph with freshly numbered edges
and reports the correspondence in a :class:`ContractionMap`.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError, ParseError

Edge = tuple[int, int, int]  # (edge id, u, v)


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"a graph needs at least one vertex, got n={self.n}")
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        seen = set()
        for eid, u, v in self.edges:
            if eid in seen:
                raise InputError(f"duplicate edge id {eid}")
            seen.add(eid)
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InputError(f"edge {eid} has endpoint outside 1..{self.n}")
            if u == v:
                raise InputError(f"edge {eid} is a loop at vertex {u}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "MultiGraph":
        """Build a graph numbering edges 1, 2, ... in the order given."""
        return cls(n, tuple((i, u, v) for i, (u, v) in enumerate(pairs, start=1)))

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(sorted(eid for eid, _, _ in self.edges))

    @cached_property
    def _endpoints(self) -> dict[int, tuple[int, int]]:
        return {eid: (u, v) for eid, u, v in self.edges}

    def endpoints(self, eid: int) -> tuple[int, int]:
        """Endpoints of an edge, smaller vertex first."""
        try:
            u, v = self._endpoints[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid}") from None
        return (u, v) if u < v else (v, u)

    def has_edge(self, eid: int) -> bool:
        return eid in self._endpoints

    @cached_property
    def _multiplicities(self) -> Counter:
        return Counter((min(u, v), max(u, v)) for _, u, v in self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            raise InputError("multiplicity is defined for distinct vertices only")
        for x in (u, v):
            if not 1 <= x <= self.n:
                raise InputError(f"vertex {x} outside 1..{self.n}")
        return self._multiplicities[(min(u, v), max(u, v))]

    def parallel_class(self, eid: int) -> tuple[int, ...]:
        """Ids of all edges sharing the endpoints of ``eid`` (itself included)."""
        a, b = self.endpoints(eid)
        return tuple(f for f in self.edge_ids if self.endpoints(f) == (a, b))

    @cached_property
    def adjacency(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """vertex -> sorted tuple of (edge id, other endpoint)."""
        adj: dict[int, list[tuple[int, int]]] = {x: [] for x in self.vertices}
        for eid, u, v in self.edges:
            adj[u].append((eid, v))
            adj[v].append((eid, u))
        return {x: tuple(sorted(lst)) for x, lst in adj.items()}

    def degree(self, x: int) -> int:
        """Degree counting parallel edges."""
        return len(self.adjacency[x])

    def neighbors(self, x: int) -> set[int]:
        return {y for _, y in self.adjacency[x]}

    @property
    def is_simple(self) -> bool:
        return all(c == 1 for c in self._multiplicities.values())

    def __str__(self) -> str:
        body = ", ".join(f"{eid}:{u}-{v}" for eid, u, v in self.edges)
        return f"MultiGraph(n={self.n}; {body})"


@dataclass(frozen=True)
class ContractionMap:
    """Bookkeeping for ``contract_edge``.

    ``vertex_map`` sends every old vertex to its new id (both endpoints of the
    contracted edge go to ``merged``). ``edge_map`` sends each surviving old
    edge id to its new id; edges parallel to the contracted one have no image.
    """

    merged: int
    vertex_map: dict[int, int] = field(hash=False)
    edge_map: dict[int, int] = field(hash=False)


def delete_edge(g: MultiGraph, eid: int) -> MultiGraph:
    if not g.has_edge(eid):
        raise InputError(f"unknown edge id {eid}")
    return MultiGraph(g.n, tuple(e for e in g.edges if e[0] != eid))


def delete_edges(g: MultiGraph, eids: Iterable[int]) -> MultiGraph:
    drop = set(eids)
    for eid in drop:
        if not g.has_edge(eid):
            raise InputError(f"unknown edge id {eid}")
    return MultiGraph(g.n, tuple(e for e in g.edges if e[0] not in drop))


def contract_edge(g: MultiGraph, eid: int) -> tuple[MultiGraph, ContractionMap]:
    """Contract ``eid``; loops created by the identification are dropped.

    The merged vertex takes the smaller endpoint id, vertices above the larger
    endpoint shift down by one, and surviving edges are renumbered 1, 2, ...
    in order of their old ids.
    """
    a, b = g.endpoints(eid)

    def new_id(x: int) -> int:
        if x == b:
            return a
        return x - 1 if x > b else x

    vertex_map = {x: new_id(x) for x in g.vertices}
    edge_map: dict[int, int] = {}
    new_edges = []
    for old_id, u, v in sorted(g.edges):
        if {u, v} == {a, b}:
            continue
        nid = len(new_edges) + 1
        edge_map[old_id] = nid
        new_edges.append((nid, new_id(u), new_id(v)))
    return MultiGraph(g.n - 1, tuple(new_edges)), ContractionMap(a, vertex_map, edge_map)


def underlying_graph(g: MultiGraph) -> MultiGraph:
    """Simple graph keeping the lowest-id edge of each parallel class."""
    kept = {}
    for eid, u, v in sorted(g.edges):
        kept.setdefault((min(u, v), max(u, v)), (eid, u, v))
    return MultiGraph(g.n, tuple(sorted(kept.values())))


def induced_subgraph(g: MultiGraph, keep: Sequence[int]) -> tuple[MultiGraph, dict[int, int]]:
    """Subgraph on ``keep`` with vertices renumbered 1..len(keep) in sorted order.

    Edge ids are preserved. Returns the graph and the old -> new vertex map.
    """
    order = sorted(set(keep))
    if not order:
        raise InputError("cannot induce on an empty vertex set")
    relabel = {x: i for i, x in enumerate(order, start=1)}
    edges = tuple(
        (eid, relabel[u], relabel[v]) for eid, u, v in g.edges if u in relabel and v in relabel
    )
    return MultiGraph(len(order), edges), relabel


def delete_vertex(g: MultiGraph, x: int) -> MultiGraph:
    if g.n == 1:
        raise InputError("cannot delete the only vertex")
    return induced_subgraph(g, [y for y in g.vertices if y != x])[0]


# -- structural queries ---------------------------------------------------


def components(g: MultiGraph) -> list[list[int]]:
    """Vertex sets of connected components, each sorted, ordered by least vertex."""
    seen: set[int] = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = []
        queue = deque([s])
        seen.add(s)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for _, y in g.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: MultiGraph) -> bool:
    return len(components(g)) == 1


def cyclomatic_number(g: MultiGraph) -> int:
    return g.num_edges - g.n + len(components(g))


def spanning_tree(g: MultiGraph) -> frozenset[int]:
    """Edge ids of the spanning forest picked greedily by increasing edge id."""
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = []
    for eid, u, v in sorted(g.edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            tree.append(eid)
    return frozenset(tree)


def is_spanning_forest(g: MultiGraph, tree: Iterable[int]) -> bool:
    tree = set(tree)
    if not all(g.has_edge(e) for e in tree):
        return False
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for eid in tree:
        u, v = g.endpoints(eid)
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return len(tree) == g.n - len(components(g))


def dfs_order(g: MultiGraph, root: int = 1) -> list[int]:
    """Preorder of a depth-first search from ``root``; other components follow."""
    seen: set[int] = set()
    order = []
    for start in [root] + [x for x in g.vertices if x != root]:
        if start in seen:
            continue
        stack = [start]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            order.append(x)
            for _, y in reversed(g.adjacency[x]):
                if y not in seen:
                    stack.append(y)
    return order


def girth(g: MultiGraph) -> float:
    """Shortest cycle length; a parallel pair counts as a 2-cycle. ``inf`` if acyclic."""
    if not g.is_simple:
        return 2
    best = float("inf")
    # BFS from every vertex; an edge closing back into the BFS tree gives a cycle
    # through the root of length dist[x] + dist[y] + 1, and the minimum is exact.
    for s in g.vertices:
        dist = {s: 0}
        via = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for eid, y in g.adjacency[x]:
                if eid == via[x]:
                    continue
                if y not in dist:
                    dist[y] = dist[x] + 1
                    via[y] = eid
                    queue.append(y)
                else:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def pendant_vertices(g: MultiGraph) -> set[int]:
    """Vertices with exactly one neighbor (any number of parallel edges to it)."""
    return {x for x in g.vertices if len(g.neighbors(x)) == 1}


def is_tree(g: MultiGraph) -> bool:
    return g.num_edges == g.n - 1 and is_connected(g)


def classify(g: MultiGraph) -> str:
    """One of ``tree``, ``cycle``, ``unicyclic-simple``, ``fat-tree``, ``other``.

    ``cycle`` means a simple cycle on at least 3 vertices; the 2-cycle is a fat tree.
    """
    if not is_connected(g):
        return "other"
    if is_tree(g):
        return "tree"
    if is_tree(underlying_graph(g)):
        return "fat-tree"
    if g.is_simple and g.num_edges == g.n:
        if all(g.degree(x) == 2 for x in g.vertices):
            return "cycle"
        return "unicyclic-simple"
    return "other"


def cycle_length(g: MultiGraph) -> int:
    """Length of the unique cycle of a connected unicyclic graph."""
    if not (is_connected(g) and g.num_edges == g.n):
        raise InputError("graph is not connected and unicyclic")
    h = g
    while True:
        leaves = [x for x in h.vertices if h.degree(x) == 1]
        if not leaves:
            return h.n
        h = delete_vertex(h, leaves[0])


def ordering_degrees(g: MultiGraph, order: Sequence[int]) -> tuple[list[int], int]:
    """Back-degrees ``d_i`` of each vertex toward earlier vertices, and their max."""
    order = list(order)
    if sorted(order) != list(g.vertices):
        raise InputError(f"ordering {order} is not a permutation of 1..{g.n}")
    position = {x: i for i, x in enumerate(order)}
    d = [0] * g.n
    for _, u, v in g.edges:
        later = u if position[u] > position[v] else v
        d[position[later]] += 1
    return d, max(d)


# -- text format ------------------------------------------------------------


def format_graph(g: MultiGraph) -> str:
    """Serialize in the ``v <n>`` / ``e <u> <v>`` line format, edges by id."""
    lines = [f"v {g.n}"]
    lines.extend(f"e {u} {v}" for _, u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> MultiGraph:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "v" or len(parts) != 2:
                raise ParseError("expected 'v <n>' header", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be at least 1", lineno)
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError(f"expected 'e <u> <v>', got {line!r}", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"bad endpoints in {line!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"endpoint out of range 1..{n}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        pairs.append((u, v))
    if n is None:
        raise ParseError("missing 'v <n>' header")
    return MultiGraph.from_pairs(n, pairs)
