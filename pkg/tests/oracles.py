"""Independent brute-force references for the test suite.

Nothing here imports the package: graphs are (n, [(u, v), ...]) and a cover is
a list of 0-based permutations aligned with the pair list, each mapping the
smaller endpoint's list to the larger one's.
"""

from itertools import permutations, product


def count_transversals(n, pairs, m, perms):
    total = 0
    for col in product(range(m), repeat=n):
        ok = True
        for (u, v), p in zip(pairs, perms):
            a, b = min(u, v), max(u, v)
            if p[col[a - 1]] == col[b - 1]:
                ok = False
                break
        total += ok
    return total


def raw_extremes(n, pairs, m):
    """(min, max) coloring count over every per-edge permutation assignment."""
    all_perms = list(permutations(range(m)))
    values = [count_transversals(n, pairs, m, ps) for ps in product(all_perms, repeat=len(pairs))]
    return min(values), max(values)


def proper_colorings(n, pairs, m):
    return sum(all(c[u - 1] != c[v - 1] for u, v in pairs) for c in product(range(m), repeat=n))


def pairs_of(g):
    """Pair list aligned with increasing edge id."""
    return [g.endpoints(eid) for eid in g.edge_ids]


def perms_of(h):
    return [h.perms[eid] for eid in h.graph.edge_ids]


def count_identified(n, pairs, m, perms, k):
    """Colorings that avoid every edge not parallel to edge ``k`` and place the
    endpoints of edge ``k`` on a matched pair: the colorings of H . e, counted
    on the original vertex set."""
    a0, b0 = sorted(pairs[k])
    total = 0
    for col in product(range(m), repeat=n):
        if perms[k][col[a0 - 1]] != col[b0 - 1]:
            continue
        ok = True
        for (u, v), p in zip(pairs, perms):
            a, b = min(u, v), max(u, v)
            if (a, b) == (a0, b0):
                continue
            if p[col[a - 1]] == col[b - 1]:
                ok = False
                break
        total += ok
    return total
