import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from succulent import fixtures
from succulent.errors import InfeasibleSeparator, InputError
from succulent.graph import Graph, boundary, canon, components, disjoint_path_count, star_complement


def path3():
    return Graph(edges=[("a", "b"), ("b", "c")])


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    vs = [f"x{i}" for i in range(n)]
    pairs = list(itertools.combinations(vs, 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph(vs, chosen)


def test_components_path():
    assert components(path3(), {"b"}) == [frozenset("a"), frozenset("c")]


def test_components_connected_identity():
    g = path3()
    assert components(g) == [frozenset("abc")]


def test_components_empty_graph():
    assert components(Graph()) == []


def test_components_f1_corner_side():
    g, spec = fixtures.wheel4()
    comps = components(g, {"v1", "u", "v3"})
    assert len(comps) == 2
    holders = sorted(sorted(n for n, vs in spec.ends if vs <= c) for c in comps)
    assert holders == [["B1", "B4"], ["B2", "B3"]]


def test_boundary_cases():
    g = path3()
    assert boundary(g, g.vertices) == frozenset()
    assert boundary(g, {"a"}) == {"b"}
    assert star_complement(g, g.vertices) == frozenset()
    assert star_complement(g, {"a"}) == {"c"}


def test_boundary_f1_component_is_whole_cut():
    g, spec = fixtures.wheel4()
    cut = {"v1", "u", "v3"}
    comp = next(c for c in components(g, cut) if spec.terminals("B2") <= c)
    assert boundary(g, comp) == cut
    other = next(c for c in components(g, cut) if c != comp)
    assert star_complement(g, comp) == other


def test_disjoint_paths_examples():
    k, sep = disjoint_path_count(fixtures.c4(), {"w1"}, {"w3"})
    assert (k, sep) == (2, frozenset({"w2", "w4"}))
    k, sep = disjoint_path_count(path3(), {"a"}, {"c"})
    assert (k, sep) == (1, frozenset({"b"}))


def test_disjoint_paths_f1_markers():
    from succulent.ends import attach_markers

    g, spec = fixtures.wheel4()
    ag = attach_markers(g, spec)
    k, sep = disjoint_path_count(ag.graph, {"ω:B1"}, {"ω:B3"}, forbidden=ag.marker_set)
    assert k == 3 and len(sep) == 3 and "u" in sep


def test_disjoint_paths_adjacent_is_infeasible():
    with pytest.raises(InfeasibleSeparator):
        disjoint_path_count(path3(), {"a"}, {"b"})


def test_vertex_names_are_tokens():
    with pytest.raises(InputError):
        Graph().add_vertex("has space")


def test_multigraph_counts():
    g = Graph()
    g.add_edge("a", "b", 2)
    assert g.multiplicity("a", "b") == 2 and g.degree("a") == 2 and not g.is_simple()
    assert g.multiplicity("a", "zz") == 0


@given(small_graphs(), st.data())
def test_components_partition_property(g, data):
    removed = set(data.draw(st.lists(st.sampled_from(list(g.vertices)), unique=True)))
    comps = components(g, removed)
    seen = [v for c in comps for v in c]
    assert sorted(seen) == sorted(set(g.vertices) - removed)
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    h = g.to_networkx().subgraph(set(g.vertices) - removed)
    assert {frozenset(c) for c in nx.connected_components(h)} == set(comps)


@given(small_graphs(), st.data())
def test_boundary_star_partition_property(g, data):
    c = set(data.draw(st.lists(st.sampled_from(list(g.vertices)), unique=True)))
    b, s = boundary(g, c), star_complement(g, c)
    assert not (b & c) and not (s & c) and not (b & s)
    assert b | s | c == set(g.vertices)


@given(small_graphs(max_n=8))
def test_menger_matches_brute_force(g):
    vs = g.vertices
    x, y = vs[0], vs[-1]
    if g.multiplicity(x, y):
        return
    k, sep = disjoint_path_count(g, {x}, {y})
    interior = [v for v in vs if v not in (x, y)]
    nxg = g.to_networkx()
    best = None
    for r in range(len(interior) + 1):
        for cut in itertools.combinations(interior, r):
            h = nxg.subgraph(set(vs) - set(cut))
            if not nx.has_path(h, x, y):
                best = r
                break
        if best is not None:
            break
    assert k == best
    assert len(sep) == k
    assert not nx.has_path(nxg.subgraph(set(vs) - sep), x, y)


def test_canon_sorted_unique():
    assert canon(["b", "a", "b"]) == ("a", "b")
