"""Counting H-colorings and the exhaustive DP color functions."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .cover import DEFAULT_LIMITS, Cover, Limits, count_full_covers, enumerate_full_covers, format_cover
from .errors import InputError, ResourceLimitError
from .formulas import chromatic_polynomial
from .multigraph import (
    MultiGraph,
    components,
    dfs_order,
    format_graph,
    induced_subgraph,
    is_connected,
    ordering_degrees,
)


def count_colorings(h: Cover) -> int:
    """Number of H-colorings, by backtracking in DFS order from vertex 1.

    Each vertex sees only the matchings to vertices placed before it, so the
    forbidden indices are known when it is reached.
    """
    g, m = h.graph, h.m
    order = dfs_order(g)
    pos = {x: i for i, x in enumerate(order)}
    n = g.n
    # back[i]: list of (earlier position, map from that vertex's index to the
    # index it forbids at position i)
    back: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(n)]
    for eid in g.edge_ids:
        a, b = g.endpoints(eid)
        if pos[a] < pos[b]:
            back[pos[b]].append((pos[a], h.perms[eid]))
        else:
            back[pos[a]].append((pos[b], h.map_between(eid, b, a)))
    chosen = [0] * n
    last = n - 1

    def extend(i: int) -> int:
        forbidden = {mp[chosen[j]] for j, mp in back[i]}
        if i == last:
            return m - len(forbidden)
        total = 0
        for c in range(m):
            if c not in forbidden:
                chosen[i] = c
                total += extend(i + 1)
        return total

    return extend(0)


def count_colorings_oracle(h: Cover, limits: Limits = DEFAULT_LIMITS) -> int:
    """Same count by scanning all m^n index vectors against the explicit set of
    cover edges across lists. Slow on purpose; shares no code with the above."""
    g, m = h.graph, h.m
    leaves = m**g.n
    if leaves > limits.max_leaves:
        raise ResourceLimitError("max_leaves", leaves, limits.max_leaves)
    conflicts = set()
    for eid in g.edge_ids:
        a, b = g.endpoints(eid)
        for j, k in enumerate(h.perms[eid]):
            conflicts.add((a, j, b, k))
    total = 0
    for choice in product(range(m), repeat=g.n):
        ok = True
        for a in range(1, g.n + 1):
            for b in range(a + 1, g.n + 1):
                if (a, choice[a - 1], b, choice[b - 1]) in conflicts:
                    ok = False
                    break
            if not ok:
                break
        total += ok
    return total


class Extremum(NamedTuple):
    value: int
    witness: Cover


def _scan(g: MultiGraph, m: int, limits: Limits, better) -> Extremum:
    if not is_connected(g):
        raise InputError(
            "graph is disconnected; compute each component and multiply the values"
        )
    best = None
    for h in enumerate_full_covers(g, m, limits):
        c = count_colorings(h)
        if best is None or better(c, best.value):
            best = Extremum(c, h)
    return best


def dp_color_function(g: MultiGraph, m: int, limits: Limits = DEFAULT_LIMITS) -> Extremum:
    """Minimum coloring count over all full m-fold covers, with the first
    minimizing cover in enumeration order."""
    return _scan(g, m, limits, lambda new, old: new < old)


def dual_dp_color_function(g: MultiGraph, m: int, limits: Limits = DEFAULT_LIMITS) -> Extremum:
    """Maximum coloring count over all full m-fold covers."""
    return _scan(g, m, limits, lambda new, old: new > old)


def color_function_value(g: MultiGraph, m: int, which: str = "dp", limits: Limits = DEFAULT_LIMITS) -> int:
    """P_DP (``which='dp'``) or P*_DP (``'dual'``) of a possibly disconnected
    graph, as the product over components."""
    fn = {"dp": dp_color_function, "dual": dual_dp_color_function}[which]
    total = 1
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        total *= fn(sub, m, limits).value
    return total


def proper_colorings_brute(g: MultiGraph, m: int) -> int:
    """Proper m-colorings by plain enumeration (test-scale ground truth)."""
    pairs = [(u - 1, v - 1) for _, u, v in g.edges]
    return sum(all(c[u] != c[v] for u, v in pairs) for c in product(range(m), repeat=g.n))


class OrderingBound(NamedTuple):
    value: int
    applicable: bool


def ordering_lower_bound(g: MultiGraph, order: Sequence[int], m: int) -> OrderingBound:
    """prod(m - d_i) over back-degrees of ``order``; a lower bound on P_DP(G, m)
    once m >= max d_i. Below that the bound says nothing and 0 is returned."""
    d, top = ordering_degrees(g, order)
    if m < top:
        return OrderingBound(0, False)
    return OrderingBound(math.prod(m - di for di in d), True)


# -- tables -------------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    m: int
    p_dp: int
    chromatic: int
    p_dp_dual: int
    min_witness: Cover = field(repr=False)
    max_witness: Cover = field(repr=False)


class SandwichViolation(AssertionError):
    pass


@dataclass
class ColorFunctionTable:
    graph: MultiGraph
    rows: list[TableRow] = field(default_factory=list)

    def add(self, row: TableRow):
        if not row.p_dp <= row.chromatic <= row.p_dp_dual:
            raise SandwichViolation(
                f"m={row.m}: expected p_dp <= p <= p_dual, got {row.p_dp}, {row.chromatic}, {row.p_dp_dual}"
            )
        self.rows.append(row)

    def to_tsv(self) -> str:
        lines = ["m\tp_dp\tp\tp_dual"]
        lines += [f"{r.m}\t{r.p_dp}\t{r.chromatic}\t{r.p_dp_dual}" for r in self.rows]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "graph": format_graph(self.graph),
            "rows": [
                {
                    "m": r.m,
                    "p_dp": r.p_dp,
                    "p": r.chromatic,
                    "p_dual": r.p_dp_dual,
                    "min_witness": format_cover(r.min_witness),
                    "max_witness": format_cover(r.max_witness),
                }
                for r in self.rows
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def color_function_table(g: MultiGraph, ms: Iterable[int], limits: Limits = DEFAULT_LIMITS) -> ColorFunctionTable:
    ms = list(ms)
    # refuse up front rather than emitting a partial table
    for m in ms:
        need = count_full_covers(g, m)
        if need > limits.max_covers:
            raise ResourceLimitError("max_covers", need, limits.max_covers)
    poly = chromatic_polynomial(g)
    table = ColorFunctionTable(g)
    for m in ms:
        lo = dp_color_function(g, m, limits)
        hi = dual_dp_color_function(g, m, limits)
        table.add(TableRow(m, lo.value, poly(m), hi.value, lo.witness, hi.witness))
    return table
