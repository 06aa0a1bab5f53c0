import itertools

import pytest

from succulent import analyze, fixtures
from succulent.ends import (
    EndSpec,
    attach_markers,
    detect_inseparable_sets,
    end_partition,
    is_end_cut,
    make_partition,
    reduce_slices,
)
from succulent.errors import MarkerInCut, OverlappingEnds, TooLarge, UnknownTerminalVertex
from succulent.graph import Graph
from succulent.oracle import brute_mincuts


def clique(names):
    return Graph(names, itertools.combinations(names, 2))


def test_marker_degrees():
    g, spec = fixtures.series3()
    ag = attach_markers(g, spec)
    assert sorted(ag.graph.degree(m) for m in ag.marker_set) == [2, 2, 2]
    g, spec = fixtures.wheel4()
    ag = attach_markers(g, spec)
    assert [ag.graph.degree(ag.markers[e]) for e in ag.end_names] == [4, 4, 4, 4]
    assert ag.markers["B1"] == "ω:B1"


def test_marker_sees_whole_clique():
    g = clique(["p", "q", "r"])
    g.add_edge("r", "s")
    ag = attach_markers(g, EndSpec.from_dict({"K": {"p", "q", "r"}, "S": {"s"}}))
    assert ag.graph.neighbors("ω:K") == {"p", "q", "r"}


def test_spec_validation():
    g = Graph(edges=[("a", "b")])
    with pytest.raises(OverlappingEnds):
        attach_markers(g, EndSpec.from_dict({"A": {"a"}, "B": {"a", "b"}}))
    with pytest.raises(UnknownTerminalVertex):
        attach_markers(g, EndSpec.from_dict({"A": {"a"}, "B": {"zz"}}))
    with pytest.raises(OverlappingEnds):
        attach_markers(g, EndSpec.from_dict({"A": {"a"}}))


def test_end_partition_examples():
    g, spec = fixtures.series3()
    ag = attach_markers(g, spec)
    assert end_partition(ag, set()) == (("B1", "B2", "B3"),)
    assert end_partition(ag, {"a"}) == (("B1",), ("B2", "B3"))
    g, spec = fixtures.wheel4()
    ag = attach_markers(g, spec)
    assert end_partition(ag, {"v1", "u", "v3"}) == (("B1", "B4"), ("B2", "B3"))


def test_is_end_cut_examples():
    g, spec = fixtures.series3()
    ag = attach_markers(g, spec)
    assert is_end_cut(ag, {"a"})
    # the marker of B1 keeps b12, which stays attached to a
    assert not is_end_cut(ag, {"b11"})
    g, spec = fixtures.wheel4()
    ag = attach_markers(g, spec)
    assert not is_end_cut(ag, {"v1", "v2", "v3"})
    with pytest.raises(MarkerInCut):
        is_end_cut(ag, {"ω:B1"})


def test_partition_canonical():
    assert make_partition([["c", "a"], ["b"]]) == (("a", "c"), ("b",))


def test_no_slices_is_identity(f1):
    red, rep = reduce_slices(f1.original, [c.vertices for c in f1.cuts])
    assert rep.empty and red is f1.original
    assert f1.slices.empty


def test_pendant_slice_is_removed():
    g, spec = fixtures.wheel4()
    for v in ("v1", "u", "v3"):
        g.add_edge("p", v)
    a = analyze(g, spec)
    assert a.slices.slices == [(frozenset({"p"}), frozenset({"v1", "u", "v3"}))]
    assert a.slices.added_edges == [("u", "v1"), ("u", "v3"), ("v1", "v3")]
    assert "p" not in a.reduced.graph
    # p joins v1 to v3, so the opposite cut {v2,u,v4} is gone in both graphs
    k, brute = brute_mincuts(a.original)
    assert k == a.kappa == 3
    assert {end_partition(a.original, c) for c in brute} == {c.partition for c in a.classes}
    assert len(a.classes) == 5
    red2, rep2 = reduce_slices(a.reduced, [c.vertices for c in a.cuts])
    assert rep2.empty
    assert a.verify().ok


def test_inseparable_clique():
    assert detect_inseparable_sets(clique(["a", "b", "c"]), 2) == [frozenset("abc")]


def test_inseparable_two_cliques():
    g = clique(list("abcd"))
    for x, y in itertools.combinations("cefg", 2):
        g.add_edge(x, y)
    assert detect_inseparable_sets(g, 1) == [frozenset("abcd"), frozenset("cefg")]


def test_inseparable_series3_edges():
    g, _ = fixtures.series3()
    found = detect_inseparable_sets(g, 1)
    # with kappa 1 every edge is a maximal inseparable pair, nothing larger
    assert {frozenset((u, v)) for u, v, _ in g.edges()} == set(found)


def test_inseparable_budget():
    g, _ = fixtures.wheel4()
    with pytest.raises(TooLarge):
        detect_inseparable_sets(g, 3)
