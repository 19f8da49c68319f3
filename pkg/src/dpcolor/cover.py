"""Full m-fold covers stored as one permutation per graph edge.

A cover of ``G`` keeps, for every edge ``e`` with endpoints ``a < b``, a
permutation ``perm`` of ``range(m)`` meaning cover vertex ``(a, j)`` is matched
to ``(b, perm[j])``. Indices are 0-based in memory and 1-based in the text
format. The cliques inside each list are implicit.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from itertools import islice, permutations, product
from typing import Iterator, Mapping, Sequence

from .errors import InputError, ParseError, ResourceLimitError
from .multigraph import (
    MultiGraph,
    contract_edge,
    components,
    delete_edge,
    is_spanning_forest,
    spanning_tree,
    underlying_graph,
)

Perm = tuple[int, ...]


@dataclass(frozen=True)
class Limits:
    """Caps on exhaustive work; exceeding one raises before any work is done."""

    max_covers: int = 10**7
    max_leaves: int = 10**7

    def __post_init__(self):
        if self.max_covers < 1 or self.max_leaves < 1:
            raise InputError("limits must be at least 1")


DEFAULT_LIMITS = Limits()


def identity(m: int) -> Perm:
    return tuple(range(m))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def compose(p: Perm, q: Perm) -> Perm:
    """``p after q``: j -> p[q[j]]."""
    return tuple(p[j] for j in q)


@dataclass(frozen=True, eq=True)
class Cover:
    graph: MultiGraph
    m: int
    perms: Mapping[int, Perm]

    def __post_init__(self):
        if self.m < 1:
            raise InputError("fold size m must be at least 1")
        perms = {eid: tuple(p) for eid, p in self.perms.items()}
        if set(perms) != set(self.graph.edge_ids):
            missing = set(self.graph.edge_ids) - set(perms)
            extra = set(perms) - set(self.graph.edge_ids)
            raise InputError(f"cover/graph edge mismatch: missing {sorted(missing)}, extra {sorted(extra)}")
        target = list(range(self.m))
        for eid, p in perms.items():
            if sorted(p) != target:
                raise InputError(f"edge {eid}: {p} is not a permutation of {self.m} indices")
        object.__setattr__(self, "perms", perms)

    def map_between(self, eid: int, src: int, dst: int) -> Perm:
        """The matching of ``eid`` read as a map from L(src) indices to L(dst) indices."""
        a, b = self.graph.endpoints(eid)
        if (src, dst) == (a, b):
            return self.perms[eid]
        if (src, dst) == (b, a):
            return inverse(self.perms[eid])
        raise InputError(f"edge {eid} does not join {src} and {dst}")

    def __str__(self) -> str:
        return format_cover(self).strip().replace("\n", "; ")


def _oriented(src: int, dst: int, mp: Perm) -> Perm:
    return mp if src < dst else inverse(mp)


# -- constructions ------------------------------------------------------------


def canonical_cover(g: MultiGraph, m: int) -> Cover:
    return Cover(g, m, {eid: identity(m) for eid in g.edge_ids})


def cycle_order(g: MultiGraph) -> tuple[list[int], list[int]]:
    """For a cycle graph: vertices v_1..v_n in cyclic order from vertex 1, and
    the edge ids in traversal order (the last one closes v_n back to v_1)."""
    if g.n < 2 or g.num_edges != g.n or any(g.degree(x) != 2 for x in g.vertices):
        raise InputError("graph is not a cycle")
    verts = [1]
    used: list[int] = []
    x = 1
    for _ in range(g.n):
        eid, y = next((eid, y) for eid, y in g.adjacency[x] if eid not in used)
        used.append(eid)
        verts.append(y)
        x = y
    if verts[-1] != 1 or len(set(verts[:-1])) != g.n:
        raise InputError("graph is not a single cycle")
    return verts[:-1], used


def twister(g: MultiGraph, m: int) -> Cover:
    """Identity on the path v_1..v_n, cyclic shift on the closing edge:
    (v_n, l) is matched to (v_1, l+1) and (v_n, m) to (v_1, 1)."""
    verts, edge_seq = cycle_order(g)
    perms = {eid: identity(m) for eid in edge_seq[:-1]}
    shift = tuple((j + 1) % m for j in range(m))  # L(v_n) -> L(v_1)
    perms[edge_seq[-1]] = _oriented(verts[-1], verts[0], shift)
    return Cover(g, m, perms)


def lift_to_multigraph(base: Cover, g: MultiGraph) -> Cover:
    """Extend a cover of the underlying graph of ``g`` to ``g``: every parallel
    edge copies the permutation of its class representative."""
    u = underlying_graph(g)
    if base.graph != u:
        raise InputError("base cover is not a cover of the underlying graph")
    rep = {u.endpoints(eid): base.perms[eid] for eid in u.edge_ids}
    return Cover(g, base.m, {eid: rep[g.endpoints(eid)] for eid in g.edge_ids})


def random_cover(g: MultiGraph, m: int, seed=None) -> Cover:
    rng = random.Random(seed)
    perms = {}
    for eid in g.edge_ids:
        p = list(range(m))
        rng.shuffle(p)
        perms[eid] = tuple(p)
    return Cover(g, m, perms)


# -- surgery ------------------------------------------------------------------


def cover_delete(h: Cover, eid: int) -> Cover:
    g2 = delete_edge(h.graph, eid)
    return Cover(g2, h.m, {f: p for f, p in h.perms.items() if f != eid})


def cover_contract(h: Cover, eid: int) -> Cover:
    """Contract the matching of ``eid``.

    With ``a < b`` the endpoints, the merged vertex keeps the indexing of
    L(a), and an index j of L(b) becomes the index of its partner in L(a).
    Matchings parallel to ``eid`` disappear with their edges.
    """
    g = h.graph
    a, b = g.endpoints(eid)
    b_to_a = inverse(h.perms[eid])
    g2, cmap = contract_edge(g, eid)
    vmap = cmap.vertex_map
    perms = {}
    for old, new in cmap.edge_map.items():
        p, q = g.endpoints(old)
        mp = h.perms[old]  # L(p) -> L(q)
        if q == b:
            mp = compose(b_to_a, mp)
        elif p == b:
            mp = compose(mp, h.perms[eid])  # L(a) -> L(b) -> L(q)
        perms[new] = _oriented(vmap[p], vmap[q], mp)
    return Cover(g2, h.m, perms)


def twin_condition(h: Cover, eid: int) -> bool:
    """True when no other edge parallel to ``eid`` shares a matched pair with it."""
    sigma = h.perms[eid]
    for f in h.graph.parallel_class(eid):
        if f != eid and any(x == y for x, y in zip(h.perms[f], sigma)):
            return False
    return True


def relabel(h: Cover, r: Mapping[int, Perm]) -> Cover:
    """Rename each list: old index j of L(x) becomes ``r[x][j]``."""
    missing = [x for x in h.graph.vertices if x not in r]
    if missing:
        raise InputError(f"relabeling misses vertices {missing}")
    perms = {}
    for eid in h.graph.edge_ids:
        a, b = h.graph.endpoints(eid)
        perms[eid] = compose(r[b], compose(h.perms[eid], inverse(tuple(r[a]))))
    return Cover(h.graph, h.m, perms)


def normalizing_relabeling(h: Cover, tree) -> dict[int, Perm]:
    """Relabeling that turns every permutation on the spanning forest ``tree``
    into the identity; roots (least vertex per component) are left fixed."""
    g = h.graph
    tree = frozenset(tree)
    if not is_spanning_forest(g, tree):
        raise InputError("edge set is not a spanning tree (forest) of the graph")
    r: dict[int, Perm] = {}
    for comp in components(g):
        root = comp[0]
        r[root] = identity(h.m)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for fid, y in g.adjacency[x]:
                if fid in tree and y not in r:
                    # want r[y] o tau o r[x]^-1 = id, with tau: L(x) -> L(y)
                    r[y] = compose(r[x], inverse(h.map_between(fid, x, y)))
                    queue.append(y)
    return r


def normalize(h: Cover, tree=None) -> Cover:
    if tree is None:
        tree = spanning_tree(h.graph)
    return relabel(h, normalizing_relabeling(h, tree))


# -- enumeration ----------------------------------------------------------------


def _check_covers(required: int, limits: Limits):
    if required > limits.max_covers:
        raise ResourceLimitError("max_covers", required, limits.max_covers)


def count_full_covers(g: MultiGraph, m: int) -> int:
    """Size of the normalized search space, (m!)^c."""
    free = g.num_edges - len(spanning_tree(g))
    return math.factorial(m) ** free


def enumerate_full_covers(
    g: MultiGraph, m: int, limits: Limits = DEFAULT_LIMITS, start: int = 0, stop: int | None = None
) -> Iterator[Cover]:
    """Covers that are the identity on the greedy spanning forest, with every
    combination of permutations on the remaining edges.

    Order: the lowest free edge id is the most significant position, and
    permutations are taken in lexicographic order. ``start``/``stop`` select a
    rank range so the stream can be split into shards.
    """
    if m < 1:
        raise InputError("fold size m must be at least 1")
    _check_covers(count_full_covers(g, m), limits)
    tree = spanning_tree(g)
    free = [eid for eid in g.edge_ids if eid not in tree]
    base = {eid: identity(m) for eid in tree}
    all_perms = list(permutations(range(m)))
    for combo in islice(product(all_perms, repeat=len(free)), start, stop):
        perms = dict(base)
        perms.update(zip(free, combo))
        yield Cover(g, m, perms)


def enumerate_raw_covers(g: MultiGraph, m: int, limits: Limits = DEFAULT_LIMITS) -> Iterator[Cover]:
    """Every assignment of permutations to every edge, (m!)^|E| covers."""
    _check_covers(math.factorial(m) ** g.num_edges, limits)
    all_perms = list(permutations(range(m)))
    for combo in product(all_perms, repeat=g.num_edges):
        yield Cover(g, m, dict(zip(g.edge_ids, combo)))


# -- text formats ---------------------------------------------------------------


def format_cover(h: Cover) -> str:
    lines = [f"cover m={h.m}"]
    for eid in h.graph.edge_ids:
        lines.append(f"p {eid} " + " ".join(str(j + 1) for j in h.perms[eid]))
    return "\n".join(lines) + "\n"


def parse_cover(text: str, g: MultiGraph) -> Cover:
    m = None
    perms: dict[int, Perm] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if m is None:
            if len(parts) != 2 or parts[0] != "cover" or not parts[1].startswith("m="):
                raise ParseError("expected 'cover m=<m>' header", lineno)
            try:
                m = int(parts[1][2:])
            except ValueError:
                raise ParseError(f"bad fold size {parts[1]!r}", lineno) from None
            if m < 1:
                raise ParseError("fold size must be at least 1", lineno)
            continue
        if parts[0] != "p" or len(parts) != m + 2:
            raise ParseError(f"expected 'p <edge-id>' followed by {m} values", lineno)
        try:
            eid, *vals = (int(x) for x in parts[1:])
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        if eid in perms:
            raise ParseError(f"edge {eid} listed twice", lineno)
        if sorted(vals) != list(range(1, m + 1)):
            raise ParseError(f"edge {eid}: not a permutation of 1..{m}", lineno)
        perms[eid] = tuple(j - 1 for j in vals)
    if m is None:
        raise ParseError("missing 'cover m=<m>' header")
    return Cover(g, m, perms)


def cover_graph(h: Cover) -> MultiGraph:
    """Materialize the cover graph H: vertex (x, j) becomes (x-1)*m + j + 1.

    Debug export only; cliques come first, then matchings by edge id.
    """
    m = h.m
    pairs = []

    def node(x, j):
        return (x - 1) * m + j + 1

    for x in h.graph.vertices:
        pairs += [(node(x, i), node(x, j)) for i in range(m) for j in range(i + 1, m)]
    for eid in h.graph.edge_ids:
        a, b = h.graph.endpoints(eid)
        pairs += [(node(a, j), node(b, h.perms[eid][j])) for j in range(m)]
    return MultiGraph.from_pairs(h.graph.n * m, pairs)


def as_perm(seq: Sequence[int]) -> Perm:
    """Convert a 1-based permutation (as written in cover files) to 0-based."""
    return tuple(j - 1 for j in seq)
