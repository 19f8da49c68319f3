"""Chromatic polynomials and closed-form DP color functions of graph families.

Every family formula carries the smallest ``m`` for which it is proved;
evaluating below that raises instead of extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import graphs
from .errors import InputError
from .multigraph import (
    MultiGraph,
    classify,
    components,
    contract_edge,
    cycle_length,
    delete_edge,
    delete_vertex,
    dfs_order,
    induced_subgraph,
    is_connected,
    ordering_degrees,
    pendant_vertices,
    spanning_tree,
    underlying_graph,
)
from .polynomial import M, IntPolynomial

ONE = IntPolynomial.constant(1)

# -- chromatic polynomial ---------------------------------------------------------


def _memo_key(g: MultiGraph) -> tuple:
    """Edge set after a deterministic degree-driven relabeling.

    Not a canonical form (isomorphic graphs may get different keys), but
    equal keys always mean isomorphic graphs, which is all a memo needs.
    """
    deg = {x: g.degree(x) for x in g.vertices}
    score = {x: (deg[x], sorted(deg[y] for _, y in g.adjacency[x])) for x in g.vertices}
    order = sorted(g.vertices, key=lambda x: (score[x], x), reverse=True)
    new = {x: i for i, x in enumerate(order, start=1)}
    return (g.n, tuple(sorted((min(new[u], new[v]), max(new[u], new[v])) for _, u, v in g.edges)))


@lru_cache(maxsize=None)
def _chromatic_from_key(key: tuple) -> IntPolynomial:
    n, pairs = key
    g = MultiGraph.from_pairs(n, pairs)
    tree = spanning_tree(g)
    if len(tree) == g.num_edges:
        c = n - len(tree)  # number of components of a forest
        return M**c * (M - 1) ** (n - c)
    # a non-forest edge lies on a cycle
    e = min(eid for eid in g.edge_ids if eid not in tree)
    deleted = delete_edge(g, e)
    contracted = underlying_graph(contract_edge(g, e)[0])
    return _chromatic(deleted) - _chromatic(contracted)


def _chromatic(g: MultiGraph) -> IntPolynomial:
    return _chromatic_from_key(_memo_key(g))


def chromatic_polynomial(g: MultiGraph) -> IntPolynomial:
    """P(G, m) by deletion-contraction. Parallel edges are dropped first since
    they do not change which colorings are proper."""
    return _chromatic(underlying_graph(g))


# -- family formulas ------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyFormula:
    family: str
    gives: tuple[str, ...]  # subset of ("dp", "p", "dual")
    poly: IntPolynomial
    min_m: int
    expression: str
    params: dict = field(default_factory=dict, compare=False)

    def __call__(self, m: int) -> int:
        if m < self.min_m:
            raise InputError(f"{self.family} formula is only valid for m >= {self.min_m}, got m={m}")
        return self.poly(m)

    evaluate = __call__

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({args})" if args else self.family


def _pw(base: str, e: int) -> str:
    return "1" if e == 0 else base if e == 1 else f"{base}^{e}"


def _diff(e1: int, e2: int, sign: str) -> str:
    """``(m-1)^e1 -/+ (m-1)^e2`` as text."""
    return f"{_pw('(m-1)', e1)} {sign} {_pw('(m-1)', e2)}"


def tree_formula(n: int) -> FamilyFormula:
    if n < 1:
        raise InputError("a tree has at least one vertex")
    return FamilyFormula(
        "tree", ("dp", "p", "dual"), M * (M - 1) ** (n - 1), 1, f"m{_pw('(m-1)', n - 1)}" if n > 1 else "m", {"n": n}
    )


def complete_p(n: int) -> FamilyFormula:
    poly = ONE
    for i in range(n):
        poly = poly * (M - i)
    expr = "m" + "".join(f"(m-{i})" for i in range(1, n))
    return FamilyFormula("complete", ("p",), poly, 1, expr, {"n": n})


def _check_cycle(n: int):
    if n < 2:
        raise InputError("cycles need n >= 2")


def cycle_p(n: int) -> FamilyFormula:
    _check_cycle(n)
    sign = "+" if n % 2 == 0 else "-"
    return FamilyFormula("cycle", ("p",), (M - 1) ** n + (-1) ** n * (M - 1), 1, _diff(n, 1, sign), {"n": n})


def cycle_dp(n: int) -> FamilyFormula:
    _check_cycle(n)
    if n % 2 == 0:
        return FamilyFormula("even-cycle", ("dp",), (M - 1) ** n - 1, 2, _diff(n, 0, "-"), {"n": n})
    return FamilyFormula("odd-cycle", ("dp", "p"), cycle_p(n).poly, 2, _diff(n, 1, "-"), {"n": n})


def cycle_dual(n: int) -> FamilyFormula:
    _check_cycle(n)
    if n % 2 == 0:
        return FamilyFormula("even-cycle", ("dual", "p"), cycle_p(n).poly, 2, _diff(n, 1, "+"), {"n": n})
    return FamilyFormula("odd-cycle", ("dual",), (M - 1) ** n + 1, 2, _diff(n, 0, "+"), {"n": n})


def _check_unicyclic(n: int, length: int):
    if not 3 <= length <= n:
        raise InputError(f"need 3 <= cycle length <= n, got cycle {length}, n {n}")


def unicyclic_dp(n: int, length: int) -> FamilyFormula:
    _check_unicyclic(n, length)
    k = length // 2
    gives = ("dp",) if length % 2 == 0 else ("dp", "p")
    poly = (M - 1) ** n - (M - 1) ** (n - 2 * k)
    return FamilyFormula("unicyclic", gives, poly, 2, _diff(n, n - 2 * k, "-"), {"n": n, "cycle": length})


def unicyclic_dual(n: int, length: int) -> FamilyFormula:
    _check_unicyclic(n, length)
    k = length // 2
    if length % 2 == 0:
        e, gives = n - 2 * k + 1, ("dual", "p")
    else:
        e, gives = n - 2 * k - 1, ("dual",)
    poly = (M - 1) ** n + (M - 1) ** e
    return FamilyFormula("unicyclic", gives, poly, 2, _diff(n, e, "+"), {"n": n, "cycle": length})


def fat_tree_dp(d) -> FamilyFormula:
    """prod(m - d_i) for back-degrees ``d`` of an ordering of a fat tree in
    which each vertex has at most one earlier neighbor; valid for m >= max d."""
    d = list(d)
    if not d or d[0] != 0 or any(x < 1 for x in d[1:]):
        raise InputError(f"{d} is not a back-degree sequence of a fat tree ordering")
    poly = ONE
    for x in d:
        poly = poly * (M - x)
    expr = "".join("m" if x == 0 else f"(m-{x})" for x in d)
    return FamilyFormula("fat-tree", ("dp",), poly, max(max(d), 1), expr, {"d": tuple(d)})


def pendant_step(inner, k: int, which: str):
    """Effect of a pendant vertex joined by ``k`` parallel edges: multiply by
    (m - k) for P_DP (needs m >= k) or by (m - 1) for P*_DP."""
    if k < 1:
        raise InputError("pendant multiplicity must be at least 1")
    if which not in ("dp", "dual"):
        raise InputError(f"which must be 'dp' or 'dual', got {which!r}")
    factor = M - k if which == "dp" else M - 1
    if isinstance(inner, IntPolynomial):
        return factor * inner
    label = f"(m-{k if which == 'dp' else 1})"
    return FamilyFormula(
        "pendant",
        (which,),
        factor * inner.poly,
        max(inner.min_m, k) if which == "dp" else inner.min_m,
        f"{label}[{inner.expression}]",
        {"k": k, "inner": inner.describe()},
    )


def fat_even_cycle_dp(k: int, l: int) -> FamilyFormula:
    if k < 1 or l < 1:
        raise InputError("need k, l >= 1")
    poly = (M - 1) ** (2 * k + 1) * (M - l) - l
    return FamilyFormula(
        "fat-even-cycle", ("dp",), poly, l + 1, f"{_pw('(m-1)', 2 * k + 1)}(m-{l}) - {l}", {"k": k, "l": l}
    )


def _glue_quotient(k: int, l: int) -> IntPolynomial:
    return (((M - 1) ** (2 * k) - 1) * ((M - 1) ** (2 * l) - 1)).exact_div(M)


def glued_even_cycles_dp(k: int, l: int) -> FamilyFormula:
    if k < 1 or l < 1:
        raise InputError("need k, l >= 1")
    expr = f"({_diff(2 * k, 0, '-')})({_diff(2 * l, 0, '-')})/m"
    return FamilyFormula("glued-even-cycles", ("dp",), _glue_quotient(k, l), 2, expr, {"k": k, "l": l})


def twin_odd_cycles_dual(k: int, l: int) -> FamilyFormula:
    if k < 1 or l < 1:
        raise InputError("need k, l >= 1")
    poly = (M - 1) ** (2 * k + 2 * l) + (M - 1) - _glue_quotient(k, l)
    expr = f"{_pw('(m-1)', 2 * k + 2 * l)} + (m-1) - ({_diff(2 * k, 0, '-')})({_diff(2 * l, 0, '-')})/m"
    return FamilyFormula("twin-odd-cycles", ("dual",), poly, 2, expr, {"k": k, "l": l})


# -- dispatcher -----------------------------------------------------------------------


def _fat_even_cycle_params(g: MultiGraph):
    u = underlying_graph(g)
    if classify(u) != "cycle" or u.n % 2:
        return None
    counts = sorted(g.multiplicity(*u.endpoints(e)) for e in u.edge_ids)
    if counts[-1] >= 2 and all(c == 1 for c in counts[:-1]):
        return (u.n - 2) // 2, counts[-1]
    return None


def _glued_params(g: MultiGraph):
    if g.num_edges != g.n + 1 or (g.n + 1) % 2:
        return None
    half = (g.n + 1) // 2  # k + l
    for k in range(1, half // 2 + 1):
        if graphs.is_isomorphic(g, graphs.glued_cycles(2 * k, 2 * (half - k))):
            return k, half - k
    return None


def _twin_odd_params(g: MultiGraph):
    if not g.is_simple or g.num_edges != g.n + 1 or g.n % 2:
        return None
    half = g.n // 2  # k + l
    for k in range(1, half // 2 + 1):
        if graphs.is_isomorphic(g, graphs.cycles_sharing_edge(2 * k + 1, 2 * (half - k) + 1)):
            return k, half - k
    return None


def _combine_components(parts: list[FamilyFormula], which: str) -> FamilyFormula:
    poly = ONE
    for p in parts:
        poly = poly * p.poly
    return FamilyFormula(
        "components",
        (which,),
        poly,
        max(p.min_m for p in parts),
        " * ".join(f"[{p.expression}]" for p in parts),
        {"parts": tuple(p.describe() for p in parts)},
    )


def auto_formula(g: MultiGraph, which: str = "dp") -> FamilyFormula | None:
    """Closed form for P_DP (``which='dp'``) or P*_DP (``'dual'``) when ``g``
    belongs to a family with a proved formula, else ``None``.

    P*_DP of a multigraph equals that of its underlying graph, so the dual
    case always works on the underlying graph.
    """
    if which not in ("dp", "dual"):
        raise InputError(f"which must be 'dp' or 'dual', got {which!r}")
    if which == "dual":
        g = underlying_graph(g)
    if not is_connected(g):
        parts = []
        for comp in components(g):
            f = auto_formula(induced_subgraph(g, comp)[0], which)
            if f is None:
                return None
            parts.append(f)
        return _combine_components(parts, which)

    kind = classify(g)
    if kind == "tree":
        return tree_formula(g.n)
    if kind == "fat-tree":
        d, _ = ordering_degrees(g, dfs_order(g))
        return fat_tree_dp(d)
    if kind == "cycle":
        return cycle_dp(g.n) if which == "dp" else cycle_dual(g.n)
    if kind == "unicyclic-simple":
        fn = unicyclic_dp if which == "dp" else unicyclic_dual
        return fn(g.n, cycle_length(g))
    if which == "dp":
        params = _fat_even_cycle_params(g)
        if params:
            return fat_even_cycle_dp(*params)
        params = _glued_params(g)
        if params:
            return glued_even_cycles_dp(*params)
    else:
        params = _twin_odd_params(g)
        if params:
            return twin_odd_cycles_dual(*params)
    pendants = sorted(pendant_vertices(g))
    if pendants and g.n > 2:
        v = pendants[0]
        (u,) = g.neighbors(v)
        inner = auto_formula(delete_vertex(g, v), which)
        if inner is not None:
            return pendant_step(inner, g.multiplicity(u, v), which)
    return None


def family_graph(family: str, **params) -> MultiGraph:
    """A representative graph for a family tag (used by tests and scripts)."""
    builders = {
        "tree": lambda n: graphs.path(n),
        "even-cycle": lambda n: graphs.cycle(n),
        "odd-cycle": lambda n: graphs.cycle(n),
        "fat-even-cycle": lambda k, l: graphs.fat_even_cycle(k, l),
        "glued-even-cycles": lambda k, l: graphs.glued_cycles(2 * k, 2 * l),
        "twin-odd-cycles": lambda k, l: graphs.cycles_sharing_edge(2 * k + 1, 2 * l + 1),
        "complete": lambda n: graphs.complete(n),
    }
    try:
        return builders[family](**params)
    except KeyError:
        raise InputError(f"no representative graph for family {family!r}") from None
