import itertools

import pytest
from hypothesis import given, settings, strategies as st

from succulent import analyze
from succulent.errors import NotDividing
from succulent.mincuts import make_cut
from succulent.oracle import PROFILES, random_instance
from succulent.relations import crosses, crossing_graph, cuts_cross, divides, is_nested


def cls_of(a, *vs):
    return next(c for c in a.classes if c.rep.vertices == frozenset(vs))


def test_nested_examples(f1):
    ag = f1.reduced
    k = make_cut(ag, {"v4", "u", "v1"})
    assert is_nested(k, k)
    assert is_nested(k, make_cut(ag, {"v1", "u", "v2"}))
    assert not is_nested(make_cut(ag, {"v1", "u", "v3"}), make_cut(ag, {"v2", "u", "v4"}))


def test_crosses_examples(f1):
    a13, a24 = cls_of(f1, "v1", "u", "v3"), cls_of(f1, "v2", "u", "v4")
    assert not crosses(a13, a13)
    assert crosses(a13, a24) and crosses(a24, a13)
    assert not crosses(cls_of(f1, "v4", "u", "v1"), a13)
    assert crossing_graph(f1.classes).edges == [tuple(sorted((a13.id, a24.id)))]


def test_divides_examples(f2):
    pa, pb = f2.classes[0].partition, f2.classes[1].partition
    assert pa == (("B1",), ("B2", "B3"))
    assert divides(pb, pa)[0] == 1
    assert divides(pa, pb)[0] == 0


def test_divides_own_corner(f1):
    h = f1.hashes[0]
    corner = f1.classes[h.corner_ids[0]]
    # a corner cut splits the coarse partition into one block versus the rest
    with pytest.raises(NotDividing):
        divides(f1.classes[h.member_ids[0]].partition, h.coarse_partition)
    assert corner.partition != h.coarse_partition


@settings(max_examples=20)
@given(st.integers(0, 10_000), st.sampled_from(PROFILES))
def test_crossing_and_nesting_exclusive(seed, profile):
    a = analyze(*random_instance(seed, profile))
    cuts = a.cuts
    for k, l in itertools.combinations(cuts, 2):
        cx = cuts_cross(k, l)
        assert cx == crosses(a.index.class_of(k), a.index.class_of(l))
        if cx:
            assert not is_nested(k, l)
            assert k.total_components == l.total_components == 2
    for i, j in crossing_graph(a.classes).edges:
        assert a.classes[i].is_B and a.classes[j].is_B
