from collections import Counter
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import covers, multigraphs, relabelings
from oracles import count_identified, count_transversals, pairs_of, perms_of, raw_extremes
from dpcolor.counting import count_colorings
from dpcolor.cover import (
    Cover,
    Limits,
    as_perm,
    canonical_cover,
    count_full_covers,
    cover_contract,
    cover_delete,
    cover_graph,
    enumerate_full_covers,
    enumerate_raw_covers,
    format_cover,
    identity,
    lift_to_multigraph,
    normalize,
    normalizing_relabeling,
    parse_cover,
    random_cover,
    relabel,
    spanning_tree,
    twin_condition,
    twister,
)
from dpcolor.errors import InputError, ParseError, ResourceLimitError
from dpcolor.graphs import complete, cycle, diamond, fat_edge, multigraph_catalog, path
from dpcolor.multigraph import MultiGraph, contract_edge, delete_edge, is_connected, underlying_graph


def both_identity_c2(m):
    return Cover(cycle(2), m, {1: identity(m), 2: identity(m)})


def test_cover_validation():
    with pytest.raises(InputError):
        Cover(path(2), 2, {})
    with pytest.raises(InputError):
        Cover(path(2), 2, {1: (0, 0)})
    with pytest.raises(InputError):
        Cover(path(2), 0, {1: ()})


def test_canonical_examples():
    assert count_colorings(canonical_cover(complete(2), 3)) == 6
    assert count_colorings(canonical_cover(cycle(4), 2)) == 2
    for n in range(1, 6):
        assert count_colorings(canonical_cover(path(n), 2)) == 2


@pytest.mark.parametrize("n, m, expected", [(4, 2, 0), (5, 3, 33), (3, 3, 9)])
def test_twister_examples(n, m, expected):
    assert count_colorings(twister(cycle(n), m)) == expected


def test_twister_closing_edge_is_a_shift():
    h = twister(cycle(4), 3)
    assert [h.perms[e] for e in (1, 2, 3)] == [identity(3)] * 3
    # closing edge (4, 1): (v_4, l) meets (v_1, l+1); stored from L(1) to L(4)
    assert h.map_between(4, 4, 1) == (1, 2, 0)
    assert h.perms[4] == (2, 0, 1)
    with pytest.raises(InputError):
        twister(path(3), 3)


@pytest.mark.parametrize("n", range(2, 8))
@pytest.mark.parametrize("m", [2, 3, 4])
def test_twister_counts(n, m):
    sign = -1 if n % 2 == 0 else 1
    assert count_colorings(twister(cycle(n), m)) == (m - 1) ** n + sign


def test_lift_examples():
    c2 = lift_to_multigraph(canonical_cover(complete(2), 3), cycle(2))
    assert count_colorings(c2) == 6
    fat = MultiGraph.from_pairs(3, [(1, 2), (1, 2), (2, 3), (2, 3), (1, 3), (1, 3)])
    base = twister(underlying_graph(fat), 3)
    lifted = lift_to_multigraph(base, fat)
    assert count_colorings(lifted) == count_colorings(base) == 9
    simple = random_cover(diamond(), 3, seed=5)
    assert lift_to_multigraph(simple, diamond()) == simple
    with pytest.raises(InputError):
        lift_to_multigraph(canonical_cover(path(3), 2), cycle(2))


def test_delete_examples():
    h = cover_delete(twister(cycle(4), 2), 4)
    assert h.perms == canonical_cover(h.graph, 2).perms
    assert count_colorings(h) == 2
    assert count_colorings(cover_delete(canonical_cover(complete(3), 3), 2)) == 12
    assert count_colorings(cover_delete(canonical_cover(cycle(2), 3), 1)) == 6
    with pytest.raises(InputError):
        cover_delete(canonical_cover(path(3), 2), 5)


def test_contract_examples():
    h = cover_contract(canonical_cover(complete(3), 3), 1)
    assert h.graph.multiplicity(1, 2) == 2
    assert h.perms == {1: identity(3), 2: identity(3)}
    # equality case of the cover relation: 6 = 12 - 6
    assert count_colorings(h) == 6
    t = twister(cycle(4), 3)
    for eid in (1, 2, 3):
        assert count_colorings(cover_contract(t, eid)) == 9
    k1 = cover_contract(both_identity_c2(3), 1)
    assert k1.graph.n == 1 and count_colorings(k1) == 3
    with pytest.raises(InputError):
        cover_contract(t, 7)


def test_contract_composes_matching_on_the_merged_vertex():
    # path 1-2-3 with edge (1,2) carrying a shift: contracting it must transport
    # the L(2) side of edge (2,3) back to L(1) indexing
    g = path(3)
    h = Cover(g, 3, {1: (1, 2, 0), 2: (2, 1, 0)})
    c = cover_contract(h, 1)
    # L(1) index j is glued to L(2) index sigma(j); then edge 2 maps it on
    assert c.perms[1] == tuple(h.perms[2][h.perms[1][j]] for j in range(3))


def test_twin_condition_examples():
    for eid in diamond().edge_ids:
        assert twin_condition(random_cover(diamond(), 3, seed=eid), eid)
    assert not twin_condition(both_identity_c2(3), 1)
    assert twin_condition(Cover(cycle(2), 2, {1: (0, 1), 2: (1, 0)}), 1)
    # a transposition shares a matched pair with the identity
    assert not twin_condition(Cover(cycle(2), 3, {1: (0, 1, 2), 2: (1, 0, 2)}), 2)


def test_relabel_examples():
    h = twister(cycle(5), 3)
    assert relabel(h, {x: identity(3) for x in range(1, 6)}) == h
    back = {x: identity(3) for x in range(1, 5)}
    back[5] = (1, 2, 0)  # r o shift o r^-1 with r = shift cancels it
    moved = relabel(h, back)
    assert moved.map_between(5, 5, 1) == identity(3)
    assert moved != h and count_colorings(moved) == count_colorings(h) == 33
    k2 = canonical_cover(complete(2), 4)
    assert count_colorings(relabel(k2, {1: (3, 1, 0, 2), 2: (0, 2, 3, 1)})) == 12
    with pytest.raises(InputError):
        relabel(k2, {1: identity(4)})


def test_normalize_examples():
    for seed in range(5):
        t = normalize(random_cover(path(5), 3, seed=seed))
        assert t == canonical_cover(path(5), 3)
    tw = twister(cycle(4), 2)
    assert normalize(tw, {1, 2, 3}) == tw
    h = random_cover(cycle(3), 3, seed=11)
    norm = normalize(h, {1, 3})
    assert norm.perms[1] == norm.perms[3] == identity(3)
    assert count_colorings(norm) == count_colorings(h)
    with pytest.raises(InputError):
        normalize(h, {1})
    with pytest.raises(InputError):
        normalize(h, {1, 2, 3})


def test_enumeration_sizes():
    for g in (path(4), MultiGraph.from_pairs(4, [(1, 2), (1, 3), (1, 4)])):
        assert [c.perms for c in enumerate_full_covers(g, 3)] == [canonical_cover(g, 3).perms]
    assert len(list(enumerate_full_covers(cycle(4), 3))) == 6
    assert len(list(enumerate_full_covers(diamond(), 2))) == 4
    assert count_full_covers(fat_edge(3), 3) == 36


def test_enumeration_is_deterministic_and_distinct():
    covers_ = list(enumerate_full_covers(diamond(), 3))
    assert covers_ == list(enumerate_full_covers(diamond(), 3))
    assert len({tuple(sorted(h.perms.items())) for h in covers_}) == 36
    tree = spanning_tree(diamond())
    assert all(h.perms[e] == identity(3) for h in covers_ for e in tree)
    shards = [list(enumerate_full_covers(diamond(), 3, start=s, stop=s + 10)) for s in range(0, 36, 10)]
    assert [h for shard in shards for h in shard] == covers_


def test_enumeration_limits_fail_fast():
    with pytest.raises(ResourceLimitError) as info:
        next(enumerate_full_covers(complete(4), 4, Limits(max_covers=100)))
    assert info.value.limit_name == "max_covers"
    with pytest.raises(ResourceLimitError):
        next(enumerate_raw_covers(cycle(3), 3, Limits(max_covers=100)))


def test_random_cover_seeding_and_uniformity():
    assert random_cover(diamond(), 4, seed=7) == random_cover(diamond(), 4, seed=7)
    seen = Counter(random_cover(complete(2), 2, seed=s).perms[1] for s in range(1000))
    assert set(seen) == {(0, 1), (1, 0)}
    assert min(seen.values()) >= 400


def test_cover_text_examples():
    h = twister(cycle(3), 3)
    text = format_cover(h)
    assert text.splitlines()[0] == "cover m=3"
    assert parse_cover(text, cycle(3)) == h
    assert parse_cover("# comment\ncover m=2\np 1 2 1\n", path(2)).perms[1] == (1, 0)
    for bad, line in [
        ("p 1 1 2\n", 1),
        ("cover m=2\np 1 1 1\n", 2),
        ("cover m=2\np 1 1\n", 2),
        ("cover m=2\np 1 1 2\np 1 2 1\n", 3),
        ("cover m=x\n", 1),
    ]:
        with pytest.raises(ParseError) as info:
            parse_cover(bad, path(2))
        assert info.value.line == line
    with pytest.raises(InputError):
        parse_cover("cover m=2\np 9 1 2\n", path(2))
    assert as_perm([2, 3, 1]) == (1, 2, 0)


# -- properties ----------------------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(covers(max_n=5, max_edges=6))
def test_text_round_trip(h):
    text = format_cover(h)
    assert format_cover(parse_cover(text, h.graph)) == text
    assert parse_cover(text, h.graph) == h


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_relabel_invariance(data):
    h = data.draw(covers(max_n=4, max_edges=5))
    r = data.draw(relabelings(h.graph, h.m))
    assert count_colorings(relabel(h, r)) == count_colorings(h)


@settings(max_examples=150, deadline=None)
@given(covers(max_n=5, max_edges=6))
def test_normalization_soundness(h):
    tree = spanning_tree(h.graph)
    n = normalize(h, tree)
    assert all(n.perms[e] == identity(h.m) for e in tree)
    assert count_colorings(n) == count_colorings(h)
    assert normalize(n, tree) == n
    r = normalizing_relabeling(h, tree)
    assert relabel(h, r) == n


@settings(max_examples=150, deadline=None)
@given(covers(max_n=4, max_edges=5))
def test_surgery_commutes_with_graph_operations(h):
    for eid in h.graph.edge_ids:
        d = cover_delete(h, eid)
        assert d.graph == delete_edge(h.graph, eid)
        assert all(d.perms[f] == h.perms[f] for f in d.graph.edge_ids)
        c = cover_contract(h, eid)
        g2, cmap = contract_edge(h.graph, eid)
        assert c.graph == g2
        assert set(c.perms) == set(cmap.edge_map.values())


@settings(max_examples=150, deadline=None)
@given(covers(max_n=4, max_edges=5))
def test_contraction_counts_identified_colorings(h):
    pairs, perms = pairs_of(h.graph), perms_of(h)
    for k, eid in enumerate(h.graph.edge_ids):
        assert count_colorings(cover_contract(h, eid)) == count_identified(h.graph.n, pairs, h.m, perms, k)


@settings(max_examples=60, deadline=None)
@given(covers(max_n=3, max_edges=3, max_m=3))
def test_cover_graph_independent_transversals(h):
    big = cover_graph(h)
    m = h.m
    lists = [range((x - 1) * m + 1, x * m + 1) for x in h.graph.vertices]
    independent = 0
    for pick in product(*lists):
        if all(big.multiplicity(a, b) == 0 for a, b in combinations(pick, 2)):
            independent += 1
    assert independent == count_colorings(h)
    assert big.num_edges == h.graph.n * m * (m - 1) // 2 + h.graph.num_edges * m


SMALL = [g for g in multigraph_catalog(4, 4) if g.num_edges]


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}e{g.num_edges}_{'_'.join(f'{u}{v}' for _, u, v in g.edges)}")
@pytest.mark.parametrize("m", [2, 3])
def test_normalized_extremes_match_raw_space(g, m):
    values = [count_colorings(h) for h in enumerate_full_covers(g, m)]
    assert (min(values), max(values)) == raw_extremes(g.n, pairs_of(g), m)


def test_raw_enumerator_covers_everything():
    g = fat_edge(2)
    raw = list(enumerate_raw_covers(g, 3))
    assert len(raw) == 36 and len({tuple(sorted(h.perms.items())) for h in raw}) == 36
    assert all(is_connected(h.graph) for h in raw)
    assert all(count_colorings(h) == count_transversals(2, [(1, 2)] * 2, 3, perms_of(h)) for h in raw)
