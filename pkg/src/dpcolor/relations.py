"""Checks of the cover-level deletion-contraction inequality, the color-function
bounds it implies, and finite-m gap tables.

Everything here is evidence at finite m. Tightness flags mean "equal at the m
values computed", never "equal for infinitely many m".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .counting import color_function_value, count_colorings
from .cover import DEFAULT_LIMITS, Cover, Limits, cover_contract, cover_delete, enumerate_full_covers, twin_condition
from .errors import InputError
from .formulas import auto_formula, chromatic_polynomial
from .graphs import graph_label, multigraph_catalog
from .multigraph import MultiGraph, contract_edge, delete_edge, girth, ordering_degrees
from .polynomial import M, IntPolynomial


@dataclass(frozen=True)
class DCReport:
    lhs: int
    deleted: int
    contracted: int
    equality_condition: bool

    @property
    def inequality_holds(self) -> bool:
        return self.lhs >= self.deleted - self.contracted

    @property
    def equality_holds(self) -> bool:
        return self.lhs == self.deleted - self.contracted

    @property
    def consistent(self) -> bool:
        """Inequality holds, and the twin condition forces equality."""
        return self.inequality_holds and (self.equality_holds or not self.equality_condition)

    def __str__(self) -> str:
        rel = "=" if self.equality_holds else ">" if self.inequality_holds else "<"
        return (
            f"lhs={self.lhs} deleted={self.deleted} contracted={self.contracted}\n"
            f"{self.lhs} {rel} {self.deleted} - {self.contracted}\n"
            f"condition={str(self.equality_condition).lower()} "
            f"inequality={str(self.inequality_holds).lower()} "
            f"equality={str(self.equality_holds).lower()}"
        )


def dc_check_cover(h: Cover, eid: int) -> DCReport:
    """Count colorings of H, H - e and H . e for one cover and edge."""
    if not h.graph.has_edge(eid):
        raise InputError(f"unknown edge id {eid}")
    return DCReport(
        lhs=count_colorings(h),
        deleted=count_colorings(cover_delete(h, eid)),
        contracted=count_colorings(cover_contract(h, eid)),
        equality_condition=twin_condition(h, eid),
    )


@dataclass(frozen=True)
class BoundsReport:
    m: int
    multiplicity: int
    p_dp: int
    p_dual: int
    deleted_dp: int
    deleted_dual: int
    contracted_dp: int
    contracted_dual: int

    @property
    def lower_bound(self) -> int:
        return self.deleted_dp - self.contracted_dual

    @property
    def lower_holds(self) -> bool:
        return self.lower_bound <= self.p_dp

    @property
    def lower_tight(self) -> bool:
        return self.lower_bound == self.p_dp

    @property
    def upper_applicable(self) -> bool:
        # parallel edges break the upper bound (the 2-cycle is a counterexample)
        return self.multiplicity == 1

    @property
    def upper_bound(self) -> int:
        return self.deleted_dual - self.contracted_dp

    @property
    def upper_holds(self) -> bool | None:
        return self.p_dual <= self.upper_bound if self.upper_applicable else None

    @property
    def upper_tight(self) -> bool | None:
        return self.p_dual == self.upper_bound if self.upper_applicable else None

    def __str__(self) -> str:
        lines = [
            f"m={self.m} multiplicity={self.multiplicity}",
            f"P_DP(G)={self.p_dp} P*_DP(G)={self.p_dual}",
            f"P_DP(G-e)={self.deleted_dp} P*_DP(G-e)={self.deleted_dual}",
            f"P_DP(G.e)={self.contracted_dp} P*_DP(G.e)={self.contracted_dual}",
            f"lower: {self.deleted_dp} - {self.contracted_dual} = {self.lower_bound} <= {self.p_dp}: "
            f"{'holds' if self.lower_holds else 'FAILS'}{', tight at this m' if self.lower_tight else ''}",
        ]
        if self.upper_applicable:
            lines.append(
                f"upper: {self.p_dual} <= {self.deleted_dual} - {self.contracted_dp} = {self.upper_bound}: "
                f"{'holds' if self.upper_holds else 'FAILS'}{', tight at this m' if self.upper_tight else ''}"
            )
        else:
            lines.append(f"upper: inapplicable (edge has multiplicity {self.multiplicity})")
        return "\n".join(lines)


def dc_bounds_check(g: MultiGraph, eid: int, m: int, limits: Limits = DEFAULT_LIMITS) -> BoundsReport:
    """Exhaustive values of both color functions on G, G - e and G . e.

    G - e may be disconnected (e a bridge); its values are products over
    components.
    """
    a, b = g.endpoints(eid)
    deleted = delete_edge(g, eid)
    contracted, _ = contract_edge(g, eid)

    def both(x):
        return color_function_value(x, m, "dp", limits), color_function_value(x, m, "dual", limits)

    p_dp, p_dual = both(g)
    d_dp, d_dual = both(deleted)
    c_dp, c_dual = both(contracted)
    return BoundsReport(m, g.multiplicity(a, b), p_dp, p_dual, d_dp, d_dual, c_dp, c_dual)


# -- sweep ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepCase:
    graph_id: str
    m: int
    edge: int
    cover_rank: int
    report: DCReport

    def tsv(self) -> str:
        r = self.report
        return "\t".join(
            str(x)
            for x in (
                self.graph_id,
                self.m,
                self.edge,
                self.cover_rank,
                r.lhs,
                r.deleted,
                r.contracted,
                int(r.equality_condition),
                int(r.equality_holds),
            )
        )


SWEEP_HEADER = "graph\tm\tedge\tcover_rank\tlhs\tdeleted\tcontracted\tcondition\tequality"


def sweep_cases(
    graphs_: Iterable[MultiGraph], ms: Sequence[int], limits: Limits = DEFAULT_LIMITS
) -> Iterator[SweepCase]:
    """Every (graph, m, normalized cover, edge) combination, in a fixed order."""
    for g in graphs_:
        gid = graph_label(g)
        for m in ms:
            for rank, h in enumerate(enumerate_full_covers(g, m, limits)):
                for eid in g.edge_ids:
                    yield SweepCase(gid, m, eid, rank, dc_check_cover(h, eid))


@dataclass
class SweepSummary:
    cases: int = 0
    inequality_failures: int = 0
    condition_true: int = 0
    condition_equality_failures: int = 0
    strict_witnesses: int = 0  # condition false and equality fails
    first_strict: SweepCase | None = None

    def add(self, case: SweepCase):
        r = case.report
        self.cases += 1
        if not r.inequality_holds:
            self.inequality_failures += 1
        if r.equality_condition:
            self.condition_true += 1
            if not r.equality_holds:
                self.condition_equality_failures += 1
        elif not r.equality_holds:
            self.strict_witnesses += 1
            if self.first_strict is None:
                self.first_strict = case

    @property
    def ok(self) -> bool:
        return self.inequality_failures == 0 and self.condition_equality_failures == 0

    def __str__(self) -> str:
        return (
            f"cases={self.cases} inequality_failures={self.inequality_failures} "
            f"condition_true={self.condition_true} "
            f"condition_equality_failures={self.condition_equality_failures} "
            f"strict_witnesses={self.strict_witnesses}"
        )


def run_sweep(max_n: int = 4, max_edges: int = 6, ms: Sequence[int] = (2, 3), limits: Limits = DEFAULT_LIMITS, sink=None):
    """Sweep the connected multigraph catalog; optionally stream TSV lines to ``sink``."""
    summary = SweepSummary()
    catalog = [g for g in multigraph_catalog(max_n, max_edges) if g.num_edges]
    if sink is not None:
        sink(SWEEP_HEADER)
    for case in sweep_cases(catalog, ms, limits):
        summary.add(case)
        if sink is not None:
            sink(case.tsv())
    return summary


# -- gaps -----------------------------------------------------------------------------


@dataclass(frozen=True)
class GapRow:
    m: int
    p_dp: int
    chromatic: int
    p_dual: int

    @property
    def gap_dp(self) -> int:
        return self.chromatic - self.p_dp

    @property
    def gap_dual(self) -> int:
        return self.p_dual - self.chromatic


def _value(g, m, which, method, limits):
    if method in ("auto", "formula"):
        f = auto_formula(g, which)
        if f is not None and m >= f.min_m:
            return f(m)
        if method == "formula":
            raise InputError(f"no closed form for {which} of this graph at m={m}")
    return color_function_value(g, m, which, limits)


def gap_table(g: MultiGraph, ms: Iterable[int], method: str = "auto", limits: Limits = DEFAULT_LIMITS) -> list[GapRow]:
    """Rows of P - P_DP and P*_DP - P. ``method`` is ``auto`` (closed form when
    one applies, else exhaustive), ``formula`` or ``exhaustive``."""
    if method not in ("auto", "formula", "exhaustive"):
        raise InputError(f"unknown method {method!r}")
    poly = chromatic_polynomial(g)
    rows = []
    for m in ms:
        row = GapRow(m, _value(g, m, "dp", method, limits), poly(m), _value(g, m, "dual", method, limits))
        if row.gap_dp < 0 or row.gap_dual < 0:
            raise AssertionError(f"negative gap at m={m}: {row}")
        rows.append(row)
    return rows


@dataclass(frozen=True)
class GapDegree:
    poly: IntPolynomial | None
    degree: int | None  # None for the zero polynomial
    exact: bool
    source: str

    def degree_text(self) -> str:
        return "zero" if self.degree is None else str(self.degree)


def ordering_polynomial(g: MultiGraph, order: Sequence[int]) -> IntPolynomial:
    d, _ = ordering_degrees(g, order)
    poly = IntPolynomial.constant(1)
    for x in d:
        poly = poly * (M - x)
    return poly


def finite_difference_degree(values: Sequence[int]) -> int | None:
    """Smallest k with constant k-th differences (``None`` if all zero).

    Only an estimate: a table of values fixes a polynomial's degree only if
    the function is already known to be a polynomial of lower degree than
    the number of points.
    """
    row = list(values)
    if not any(row):
        return None
    k = 0
    while len(row) > 1 and len(set(row)) > 1:
        row = [b - a for a, b in zip(row, row[1:])]
        k += 1
    return k


def degree_gap_check(
    g: MultiGraph,
    which: str = "dp",
    order: Sequence[int] | None = None,
    ms: Sequence[int] | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> GapDegree | None:
    """Degree of P - P_DP (``dp``) or P*_DP - P (``dual``).

    Uses the closed form when the family is recognized. For ``dp`` an
    ordering may be given instead, in which case P - prod(m - d_i), an upper
    bound on the gap, is returned. With ``ms`` the last resort is a finite
    difference estimate from exhaustive values, flagged ``exact=False``.
    """
    poly = chromatic_polynomial(g)
    f = auto_formula(g, which)
    if f is not None:
        gap = poly - f.poly if which == "dp" else f.poly - poly
        return GapDegree(gap, gap.degree, True, f"closed form {f.describe()}")
    if which == "dp" and order is not None:
        gap = poly - ordering_polynomial(g, order)
        return GapDegree(gap, gap.degree, True, "ordering bound")
    if ms:
        gaps = [r.gap_dp if which == "dp" else r.gap_dual for r in gap_table(g, ms, "exhaustive", limits)]
        return GapDegree(None, finite_difference_degree(gaps), False, f"finite differences over m={list(ms)}")
    return None


def girth_degree_targets(g: MultiGraph) -> dict:
    """Exponent bounds on the gaps predicted by the asymptotic statements.

    ``easy``: P - P_DP has degree <= n - 1 for every multigraph. For a simple
    graph of girth gi, with odd g the largest admissible value:
    ``general`` = n - g where g <= gi, and ``dual`` = n - g + 1 where g <= gi + 1.
    """
    n = g.n
    gi = girth(g)
    out = {"n": n, "girth": gi, "easy": n - 1}
    if g.is_simple and gi != float("inf"):
        g_general = gi if gi % 2 else gi - 1
        g_dual = gi if gi % 2 else gi + 1
        if g_general >= 3:
            out["general"] = n - g_general
        if g_dual >= 3:
            out["dual"] = n - g_dual + 1
    return out
