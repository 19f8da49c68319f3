from itertools import combinations

from hypothesis import strategies as st

from dpcolor.cover import Cover
from dpcolor.multigraph import MultiGraph, is_connected


@st.composite
def multigraphs(draw, min_n=1, max_n=4, max_edges=5, connected=False, simple=False):
    n = draw(st.integers(min_n, max_n))
    slots = list(combinations(range(1, n + 1), 2))
    if not slots:
        return MultiGraph(n)
    if simple:
        pairs = draw(st.lists(st.sampled_from(slots), max_size=min(max_edges, len(slots)), unique=True))
    else:
        pairs = draw(st.lists(st.sampled_from(slots), max_size=max_edges))
    g = MultiGraph.from_pairs(n, pairs)
    if connected:
        # splice in a path so the graph is connected without discarding draws
        extra = [(i, i + 1) for i in range(1, n) if not is_connected(g)]
        g = MultiGraph.from_pairs(n, pairs + extra) if extra else g
    return g


@st.composite
def covers(draw, max_n=4, max_edges=5, max_m=3, connected=False, graph=None):
    g = graph if graph is not None else draw(multigraphs(max_n=max_n, max_edges=max_edges, connected=connected))
    m = draw(st.integers(1, max_m))
    perms = {eid: tuple(draw(st.permutations(range(m)))) for eid in g.edge_ids}
    return Cover(g, m, perms)


@st.composite
def relabelings(draw, g, m):
    return {x: tuple(draw(st.permutations(range(m)))) for x in g.vertices}


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion that ran."""
    import re

    from test_acceptance import TITLES

    outcome = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            match = re.search(r"test_acceptance\.py::test_criterion_(\d+)_", getattr(rep, "nodeid", ""))
            if match and (rep.when == "call" or status != "passed"):
                n = int(match.group(1))
                ok = status == "passed"
                outcome[n] = outcome.get(n, True) and ok
    if not outcome:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(outcome):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if outcome[n] else 'FAIL'}  {TITLES[n]}")
