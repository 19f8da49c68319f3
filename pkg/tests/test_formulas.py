import pytest
from hypothesis import given, settings

from conftest import multigraphs
from oracles import pairs_of, proper_colorings
from dpcolor.counting import color_function_value, dp_color_function, dual_dp_color_function
from dpcolor.errors import InputError
from dpcolor.formulas import (
    auto_formula,
    chromatic_polynomial,
    complete_p,
    cycle_dp,
    cycle_dual,
    cycle_p,
    family_graph,
    fat_even_cycle_dp,
    fat_tree_dp,
    glued_even_cycles_dp,
    pendant_step,
    tree_formula,
    twin_odd_cycles_dual,
    unicyclic_dp,
    unicyclic_dual,
)
from dpcolor.graphs import (
    complete,
    cycle,
    cycles_sharing_edge,
    diamond,
    fat_edge,
    fat_even_cycle,
    glued_cycles,
    multigraph_catalog,
    path,
    petersen,
    star,
    with_pendant,
)
from dpcolor.multigraph import MultiGraph, contract_edge, delete_edge, underlying_graph
from dpcolor.polynomial import M, IntPolynomial


def test_chromatic_examples():
    assert chromatic_polynomial(complete(3)) == M**3 - 3 * M**2 + 2 * M
    assert chromatic_polynomial(cycle(4)) == (M - 1) ** 4 + (M - 1)
    assert str(chromatic_polynomial(cycle(4))) == "m^4 - 4m^3 + 6m^2 - 3m"
    assert chromatic_polynomial(cycle(2)) == M**2 - M
    assert chromatic_polynomial(MultiGraph(1)) == M
    assert chromatic_polynomial(MultiGraph(3)) == M**3
    for n in range(1, 7):
        assert chromatic_polynomial(complete(n)) == complete_p(n).poly


def test_petersen_chromatic():
    p = chromatic_polynomial(petersen())
    assert p.degree == 10
    assert p(3) == proper_colorings(10, pairs_of(petersen()), 3) == 120


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=6, max_edges=10, simple=True))
def test_deletion_contraction_identity(g):
    p = chromatic_polynomial(g)
    assert p.degree == g.n
    for eid in g.edge_ids:
        assert p == chromatic_polynomial(delete_edge(g, eid)) - chromatic_polynomial(contract_edge(g, eid)[0])


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_n=5, max_edges=7))
def test_chromatic_ground_truth_and_multiplicity(g):
    p = chromatic_polynomial(g)
    assert p == chromatic_polynomial(underlying_graph(g))
    for m in range(0, 5):
        assert p(m) == proper_colorings(g.n, pairs_of(g), m)


def test_family_examples():
    assert cycle_dp(4)(2) == 0
    assert cycle_dual(5)(3) == 33
    assert tree_formula(1).poly == M
    assert unicyclic_dp(4, 3)(3) == 12
    assert unicyclic_dp(4, 4).poly == cycle_dp(4).poly
    assert unicyclic_dp(4, 4)(3) == 15
    assert fat_tree_dp([0, 2])(3) == 3
    assert fat_tree_dp([0, 2])(2) == 0
    assert fat_tree_dp([0, 1, 1, 1]).poly == tree_formula(4).poly
    assert pendant_step(cycle_dp(3), 1, "dp")(3) == 12
    assert pendant_step(cycle_dual(3), 1, "dual")(3) == 18
    assert pendant_step(tree_formula(3), 1, "dp").poly == tree_formula(4).poly
    assert pendant_step(M, 2, "dp") == (M - 2) * M
    assert fat_even_cycle_dp(1, 2)(3) == 6
    assert fat_even_cycle_dp(1, 1).poly == cycle_dp(4).poly
    assert glued_even_cycles_dp(1, 1)(3) == 3
    assert glued_even_cycles_dp(1, 2)(2) == 0
    assert twin_odd_cycles_dual(1, 1)(3) == 15
    assert twin_odd_cycles_dual(1, 1)(2) == 2


def test_cycle_formulas_consistent_with_chromatic():
    for n in range(2, 9):
        p = chromatic_polynomial(cycle(n))
        assert cycle_p(n).poly == p
        assert (cycle_dp(n).poly == p) == (n % 2 == 1)
        assert (cycle_dual(n).poly == p) == (n % 2 == 0)


def test_validity_ranges():
    with pytest.raises(InputError):
        fat_even_cycle_dp(1, 2)(2)
    with pytest.raises(InputError):
        fat_tree_dp([0, 3])(2)
    with pytest.raises(InputError):
        cycle_dp(4)(1)
    with pytest.raises(InputError):
        pendant_step(tree_formula(2), 3, "dp")(2)
    assert pendant_step(tree_formula(2), 3, "dual")(2) == 2


def test_parameter_errors():
    for bad in (lambda: cycle_p(1), lambda: unicyclic_dp(3, 4), lambda: unicyclic_dual(5, 2), lambda: fat_tree_dp([1, 1]),
                lambda: fat_tree_dp([0, 0]), lambda: pendant_step(M, 0, "dp"), lambda: pendant_step(M, 1, "both"),
                lambda: fat_even_cycle_dp(0, 1), lambda: glued_even_cycles_dp(1, 0), lambda: twin_odd_cycles_dual(0, 0),
                lambda: tree_formula(0), lambda: auto_formula(path(2), "p"), lambda: family_graph("nope")):
        with pytest.raises(InputError):
            bad()


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("l", [1, 2, 3])
def test_glue_quotient_is_exact(k, l):
    q, r = (((M - 1) ** (2 * k) - 1) * ((M - 1) ** (2 * l) - 1)).divmod(M)
    assert r.is_zero
    assert glued_even_cycles_dp(k, l).poly == q


def test_auto_formula_examples():
    f = auto_formula(path(4), "dp")
    assert f.family == "tree" and f.poly == tree_formula(4).poly
    tp = with_pendant(cycle(3), 1)
    f = auto_formula(tp, "dp")
    assert f.expression == "(m-1)^4 - (m-1)^2" and f.min_m == 2
    assert f.poly == pendant_step(cycle_dp(3), 1, "dp").poly
    assert auto_formula(tp, "dual").poly == pendant_step(cycle_dual(3), 1, "dual").poly
    assert auto_formula(petersen(), "dp") is None
    assert auto_formula(petersen(), "dual") is None
    assert auto_formula(complete(4), "dp") is None


def test_auto_formula_recognizes_families():
    assert auto_formula(fat_even_cycle(1, 2), "dp").family == "fat-even-cycle"
    assert auto_formula(glued_cycles(2, 4), "dp").params == {"k": 1, "l": 2}
    assert auto_formula(cycles_sharing_edge(5, 3), "dual").params == {"k": 1, "l": 2}
    assert auto_formula(diamond(), "dual").family == "twin-odd-cycles"
    assert auto_formula(star(3, [1, 2, 3]), "dp").family == "fat-tree"
    assert auto_formula(with_pendant(glued_cycles(2, 4), 3, 2), "dp").family == "pendant"
    assert auto_formula(glued_cycles(2, 2), "dp").poly == glued_even_cycles_dp(1, 1).poly
    for family, params in [("tree", {"n": 3}), ("even-cycle", {"n": 6}), ("glued-even-cycles", {"k": 1, "l": 1})]:
        assert auto_formula(family_graph(family, **params), "dp") is not None


def _check_against_search(g, which, top_m=3):
    f = auto_formula(g, which)
    if f is None:
        return 0
    checked = 0
    for m in range(f.min_m, top_m + 1):
        assert f(m) == color_function_value(g, m, which), (g, which, m, f.describe())
        checked += 1
    return checked


def test_every_closed_form_on_the_catalog_matches_search():
    checked = 0
    for g in multigraph_catalog(4, 6, connected=False):
        for which in ("dp", "dual"):
            checked += _check_against_search(g, which)
    assert checked > 100


@pytest.mark.parametrize(
    "g",
    [fat_even_cycle(1, 2), glued_cycles(2, 2), glued_cycles(2, 4), diamond(), cycles_sharing_edge(3, 5),
     with_pendant(cycle(4), 1), with_pendant(cycle(5), 2), star(3, [1, 2, 3]), fat_edge(3)],
    ids=["fateven-1-2", "glue-1-1", "glue-1-2", "diamond", "twinodd-1-2", "C4+pendant", "C5+pendant", "fatstar", "fat3"],
)
def test_named_family_members_match_search(g):
    assert _check_against_search(g, "dp") + _check_against_search(g, "dual") > 0


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_n=4, max_edges=5, connected=True))
def test_dual_depends_only_on_underlying_graph(g):
    u = underlying_graph(g)
    for m in (2, 3):
        assert dual_dp_color_function(g, m).value == dual_dp_color_function(u, m).value
        assert dp_color_function(g, m).value <= dp_color_function(u, m).value


def test_describe_and_expression():
    f = glued_even_cycles_dp(1, 1)
    assert f.describe() == "glued-even-cycles(k=1, l=1)"
    assert f.expression == "((m-1)^2 - 1)((m-1)^2 - 1)/m"
    assert isinstance(f.poly, IntPolynomial)
