"""Named small graphs, multigraph isomorphism and the enumeration catalog."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product

from .errors import InputError
from .multigraph import MultiGraph, is_connected


def path(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> MultiGraph:
    """C_n with edges (1,2), ..., (n-1,n), (n,1); C_2 is a doubled edge."""
    if n < 2:
        raise InputError("cycles need at least 2 vertices")
    return MultiGraph.from_pairs(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, combinations(range(1, n + 1), 2))


def star(leaves: int, multiplicities=None) -> MultiGraph:
    """Star with center 1; ``multiplicities[i]`` copies of the edge to leaf ``i+2``."""
    mult = multiplicities or [1] * leaves
    if len(mult) != leaves:
        raise InputError("one multiplicity per leaf")
    pairs = [(1, i + 2) for i, k in enumerate(mult) for _ in range(k)]
    return MultiGraph.from_pairs(leaves + 1, pairs)


def fat_edge(k: int) -> MultiGraph:
    """Two vertices joined by ``k`` parallel edges."""
    return MultiGraph.from_pairs(2, [(1, 2)] * k)


def diamond() -> MultiGraph:
    """K_4 minus an edge; the shared edge of the two triangles is edge 3 = (2,3)."""
    return MultiGraph.from_pairs(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


def with_pendant(g: MultiGraph, at: int, k: int = 1) -> MultiGraph:
    """Attach a new vertex ``n+1`` to ``at`` by ``k`` parallel edges."""
    start = max(g.edge_ids, default=0) + 1
    extra = tuple((start + i, at, g.n + 1) for i in range(k))
    return MultiGraph(g.n + 1, g.edges + extra)


def fat_even_cycle(k: int, l: int) -> MultiGraph:
    """Underlying C_{2k+2}; the closing edge (2k+2, 1) has multiplicity ``l``."""
    n = 2 * k + 2
    return MultiGraph.from_pairs(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)] * l)


def glued_cycles(a: int, b: int) -> MultiGraph:
    """C_a and C_b sharing vertex 1 (a 2-cycle is a doubled edge)."""
    if a < 2 or b < 2:
        raise InputError("cycle lengths must be at least 2")
    first = list(range(1, a + 1))
    second = [1] + list(range(a + 1, a + b))
    pairs = []
    for cyc in (first, second):
        pairs += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    return MultiGraph.from_pairs(a + b - 1, pairs)


def cycles_sharing_edge(a: int, b: int) -> MultiGraph:
    """C_a and C_b (a, b >= 3) sharing exactly the edge (1, 2), which gets id 1."""
    if a < 3 or b < 3:
        raise InputError("cycle lengths must be at least 3")
    n = a + b - 2
    first = [2] + list(range(3, a + 1)) + [1]
    second = [2] + list(range(a + 1, n + 1)) + [1]
    pairs = [(1, 2)]
    for seq in (first, second):
        pairs += [(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]
    return MultiGraph.from_pairs(n, pairs)


def petersen() -> MultiGraph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return MultiGraph.from_pairs(10, outer + spokes + inner)


# -- isomorphism ------------------------------------------------------------


def _matrix(g: MultiGraph) -> list[list[int]]:
    mat = [[0] * g.n for _ in range(g.n)]
    for _, u, v in g.edges:
        mat[u - 1][v - 1] += 1
        mat[v - 1][u - 1] += 1
    return mat


def _degree_blocks(mat: list[list[int]]) -> list[list[int]]:
    by_degree: dict[int, list[int]] = {}
    for x, row in enumerate(mat):
        by_degree.setdefault(sum(row), []).append(x)
    return [by_degree[d] for d in sorted(by_degree, reverse=True)]


def canonical_form(g: MultiGraph) -> tuple:
    """Lexicographically largest upper-triangle multiplicity vector over all
    vertex orderings that list vertices by non-increasing degree.

    Brute force within equal-degree blocks; fine for the n <= 7 catalogs.
    """
    mat = _matrix(g)
    n = g.n
    pairs = list(combinations(range(n), 2))
    best = None
    blocks = _degree_blocks(mat)
    for choice in product(*(permutations(b) for b in blocks)):
        perm = [x for block in choice for x in block]
        code = tuple(mat[perm[i]][perm[j]] for i, j in pairs)
        if best is None or code > best:
            best = code
    return (n, best)


def from_canonical_form(form: tuple) -> MultiGraph:
    n, code = form
    pairs = []
    for (i, j), k in zip(combinations(range(1, n + 1), 2), code):
        pairs += [(i, j)] * k
    return MultiGraph.from_pairs(n, pairs)


def is_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    """Backtracking search for a multiplicity-preserving vertex bijection."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    a, b = _matrix(g), _matrix(h)
    sig_a = [sorted(row) for row in a]
    sig_b = [sorted(row) for row in b]
    if sorted(map(tuple, sig_a)) != sorted(map(tuple, sig_b)):
        return False
    n = g.n
    order = sorted(range(n), key=lambda x: -sum(a[x]))
    image = [-1] * n
    used = [False] * n

    def extend(depth):
        if depth == n:
            return True
        x = order[depth]
        for y in range(n):
            if used[y] or sig_a[x] != sig_b[y]:
                continue
            if all(a[x][order[i]] == b[y][image[order[i]]] for i in range(depth)):
                image[x] = y
                used[y] = True
                if extend(depth + 1):
                    return True
                used[y] = False
        return False

    return extend(0)


# -- catalog ----------------------------------------------------------------


@lru_cache(maxsize=None)
def multigraph_catalog(max_n: int, max_edges: int, connected: bool = True) -> tuple[MultiGraph, ...]:
    """All multigraphs with 1..max_n vertices and at most ``max_edges`` edges,
    one per isomorphism class, in canonical-form order within each (n, |E|)."""
    out = []
    for n in range(1, max_n + 1):
        slots = list(combinations(range(n), 2))
        forms = set()
        for total in range(0, max_edges + 1):
            found = set()
            for picks in combinations_with_replacement(range(len(slots)), total):
                code = [0] * len(slots)
                for s in picks:
                    code[s] += 1
                g = from_canonical_form((n, tuple(code)))
                if connected and not is_connected(g):
                    continue
                found.add(canonical_form(g))
            forms |= found
            out.extend(from_canonical_form(f) for f in sorted(found, reverse=True))
    return tuple(out)


@lru_cache(maxsize=None)
def simple_graph_catalog(max_n: int, connected: bool = True) -> tuple[MultiGraph, ...]:
    """Simple graphs on 1..max_n vertices up to isomorphism.

    Built by vertex augmentation: every graph on n vertices is a graph on n-1
    vertices plus one vertex with some neighborhood. Connectivity filtering
    happens after augmentation so disconnected intermediates are still extended.
    """
    levels = {1: {canonical_form(MultiGraph(1))}}
    for n in range(2, max_n + 1):
        nxt = set()
        for form in levels[n - 1]:
            base = from_canonical_form(form)
            pairs = [(u, v) for _, u, v in base.edges]
            for mask in product((0, 1), repeat=n - 1):
                extra = [(i + 1, n) for i in range(n - 1) if mask[i]]
                nxt.add(canonical_form(MultiGraph.from_pairs(n, pairs + extra)))
        levels[n] = nxt
    out = []
    for n in range(1, max_n + 1):
        graphs = [from_canonical_form(f) for f in sorted(levels[n], reverse=True)]
        out.extend(g for g in graphs if not connected or is_connected(g))
    return tuple(out)


def graph_label(g: MultiGraph) -> str:
    """Short stable identifier, e.g. ``n3:12,12,23``."""
    body = ",".join(f"{min(u, v)}{max(u, v)}" if g.n < 10 else f"{u}-{v}" for _, u, v in sorted(g.edges))
    return f"n{g.n}:{body}"
