import pytest
from hypothesis import given, settings, strategies as st

from succulent import analyze, fixtures
from succulent.errors import AxiomViolation
from succulent.graph import components
from succulent.oracle import PROFILES, random_instance
from succulent.succulent import (
    add_edge,
    check_pretree_axioms,
    check_shape,
    collapse_variant,
    degenerate_ring,
    drop_anchor,
    enumerate_anchor_cuts,
    maximal_stars,
    verify_theorem,
)


def labels(a, idxs):
    return sorted(a.pretree.elements[i].label for i in idxs)


def test_pretree_examples(f1, f2, analysed):
    assert [e.label for e in f2.pretree.elements] == ["t0", "t1"]
    assert f2.pretree.between == set()
    assert [e.label for e in f1.pretree.elements] == ["h0"] and f1.pretree.between == set()
    chain = analysed("chain4")
    # the middle cut vertex class lies between the outer two
    assert {(x, y, z) for x, y, z in chain.pretree.between} == {(0, 1, 2), (2, 1, 0)}


def test_stars_and_tree(f1, f2, analysed):
    assert [labels(f2, s) for s in maximal_stars(f2.pretree)] == [["t0", "t1"]]
    assert len(f2.tree.to_networkx()) == 3
    chain = analysed("chain4")
    assert [labels(chain, s) for s in chain.tree.stars] == [["t0", "t1"], ["t1", "t2"]]
    t = chain.tree.to_networkx()
    assert len(t) == 5 and max(d for _, d in t.degree()) == 2
    assert [labels(f1, s) for s in f1.tree.stars] == [["h0"]] and len(f1.tree.edges) == 1


def test_pretree_axioms_reject():
    with pytest.raises(AxiomViolation):
        check_pretree_axioms(3, {(0, 0, 1)})
    with pytest.raises(AxiomViolation):
        check_pretree_axioms(3, {(0, 1, 2)})


def test_degenerate_ring_three_blocks():
    r = degenerate_ring("t9", (("B1",), ("B2",), ("B3",)), 9)
    assert len(r.cycle) == 2 and len(r.anchors) == 3
    cuts = r.anchor_cuts()
    assert list(cuts) == [(("ring:t9:anc:0",), ("ring:t9:anc:1",), ("ring:t9:anc:2",))]
    assert list(cuts.values()) == [[tuple(r.cycle)]]


def test_degenerate_ring_two_blocks(f2):
    el = f2.pretree.elements[0]
    assert sorted(sorted(b) for *_, b in el.ring.anchors) == [["B1"], ["B2", "B3"]]
    assert len(el.ring.anchor_cuts()) == 1


def test_f2_succulent(f2):
    s = f2.succulent
    assert len(set(s.f.values())) == 3
    assert s.appendages == {"app:B2": "ring:t0:anc:1"}
    assert s.graph.multiplicity("app:B2", "ring:t0:anc:1") == 2
    # the second ring's first anchor was glued onto the first ring's middle anchor
    assert s.names["ring:t1:anc:0"] == "ring:t0:anc:1"
    assert len(enumerate_anchor_cuts(s)) == 2
    assert sorted(s.g) == [0, 1]
    assert verify_theorem(f2.end_names, f2.classes, s).ok


def test_f1_succulent(f1):
    s = f1.succulent
    h = f1.hashes[0]
    ring = h.ring
    assert not s.appendages and len(s.graph) == 8
    for i in range(1, 5):
        prev = f"v{(i - 2) % 4 + 1}"
        ends = {ring.half_vertex[h.halves.index(frozenset([prev]))],
                ring.half_vertex[h.halves.index(frozenset([f"v{i}"]))]}
        assert s.graph.neighbors(s.f[f"B{i}"]) == ends
    assert len(enumerate_anchor_cuts(s)) == 6
    rep = verify_theorem(f1.end_names, f1.classes, s)
    assert rep.ok and rep.anchor_classes == 6


def test_single_articulation():
    from succulent.ends import EndSpec
    from succulent.graph import Graph

    g = Graph(edges=[("p1", "p2"), ("p2", "c"), ("c", "q1"), ("q1", "q2")])
    a = analyze(g, EndSpec.from_dict({"P": {"p1", "p2"}, "Q": {"q1", "q2"}}))
    s = a.succulent
    assert len(a.pretree.elements) == 1 and len(s.anchors) == 2
    assert set(s.f.values()) == set(s.anchors) and list(s.g) == [0]
    assert a.verify().ok


def test_negative_controls(f1, f2):
    for a in (f1, f2):
        s = a.succulent
        assert not verify_theorem(a.end_names, a.classes, drop_anchor(s, s.f[a.end_names[0]])).ok
        cut = s.g[0]
        comps = [c & s.anchors for c in components(s.graph, cut)]
        u, v = min(comps[0]), min(comps[1])
        assert not verify_theorem(a.end_names, a.classes, add_edge(s, u, v)).ok


def test_collapse_variant(f1, f2, analysed):
    v = collapse_variant(f2.succulent)
    assert v.f["B2"] == "ring:t0:anc:1" and not v.appendages
    assert verify_theorem(f2.end_names, f2.classes, v).ok
    same = collapse_variant(f1.succulent)
    assert same.graph == f1.succulent.graph and same.f == f1.succulent.f
    chain = analysed("chain4")
    v = collapse_variant(chain.succulent)
    assert not v.appendages
    assert not any(x in v.anchors and y in v.anchors for x, y, _ in v.graph.edges())
    assert verify_theorem(chain.end_names, chain.classes, v).ok


def test_shared_corner_gluing(analysed):
    a = analysed("twin-wheels")
    s = a.succulent
    assert len(a.hashes) == 2 and a.tree.stars == [(0, 1)]
    # the two rings share an edge and each loses the anchor facing the other
    glued = {k for k, v in s.names.items() if k != v and ":cyc:" in k}
    assert len(glued) == 2
    assert "ring:h0:anc:3" not in s.names and "ring:h1:anc:0" not in s.names
    assert a.verify().ok


@pytest.mark.parametrize("name", sorted(fixtures.VERTEX_FIXTURES))
def test_every_fixture_verifies(analysed, name):
    a = analysed(name)
    assert a.verify().ok
    assert check_shape(a.succulent) == []
    v = collapse_variant(a.succulent)
    assert verify_theorem(a.end_names, a.classes, v).ok


@settings(max_examples=20)
@given(st.integers(0, 10_000), st.sampled_from(PROFILES))
def test_theorem_on_random_instances(seed, profile):
    a = analyze(*random_instance(seed, profile))
    rep = a.verify()
    assert rep.ok, rep.failures
    assert rep.anchor_classes == len(a.classes)
    image = set(a.succulent.f.values())
    for x in a.succulent.anchors:
        if a.succulent.graph.degree(x) <= 2:
            assert x in image
