import pytest
from hypothesis import given, settings, strategies as st

from succulent import fixtures
from succulent.ends import EndSpec, attach_markers
from succulent.errors import BudgetExceeded
from succulent.graph import Graph
from succulent.mincuts import check_full_boundaries, enumerate_mincuts, group_into_classes, kappa
from succulent.oracle import PROFILES, brute_mincuts, random_instance


def cutsets(cuts):
    return sorted(sorted(c.vertices) for c in cuts)


def blob_c_blob():
    g = Graph(edges=[("p1", "p2"), ("p2", "c"), ("c", "q1"), ("q1", "q2")])
    return g, EndSpec.from_dict({"P": {"p1", "p2"}, "Q": {"q1", "q2"}})


def test_kappa_examples():
    for make, k in [(fixtures.series3, 1), (fixtures.wheel4, 3), (blob_c_blob, 1)]:
        assert kappa(attach_markers(*make())) == k


def test_f2_cuts():
    ag = attach_markers(*fixtures.series3())
    cuts = enumerate_mincuts(ag, 1)
    assert cutsets(cuts) == [["a"], ["b"], ["b12"], ["b21"], ["b22"], ["b31"]]
    classes = group_into_classes(cuts)
    assert [c.partition for c in classes] == [(("B1",), ("B2", "B3")), (("B1", "B2"), ("B3",))]
    assert all(c.is_A and c.is_B for c in classes)


def test_f1_cuts():
    ag = attach_markers(*fixtures.wheel4())
    cuts = enumerate_mincuts(ag, 3)
    want = sorted(sorted({"u", f"v{i}", f"v{j}"}) for i in range(1, 5) for j in range(i + 1, 5))
    assert cutsets(cuts) == want
    classes = group_into_classes(cuts)
    assert len(classes) == 6 and all(len(c.members) == 1 for c in classes)
    # the two opposite pairs cross each other, so they are B but not A
    flags = {tuple(sorted(c.rep.vertices)): (c.is_A, c.is_B) for c in classes}
    assert flags[("u", "v1", "v3")] == (False, True)
    assert flags[("u", "v1", "v2")] == (True, True)


def test_blob_c_blob():
    ag = attach_markers(*blob_c_blob())
    assert cutsets(enumerate_mincuts(ag, 1)) == [["c"], ["p2"], ["q1"]]
    assert len(group_into_classes(enumerate_mincuts(ag, 1))) == 1


def test_budget():
    ag = attach_markers(*fixtures.wheel4())
    with pytest.raises(BudgetExceeded):
        enumerate_mincuts(ag, 3, budget=100)


def test_strategies_agree_on_fixtures():
    for name, make in fixtures.VERTEX_FIXTURES.items():
        ag = attach_markers(*make())
        k = kappa(ag)
        assert cutsets(enumerate_mincuts(ag, k)) == cutsets(enumerate_mincuts(ag, k, "paths")), name


@settings(max_examples=25)
@given(st.integers(0, 10_000), st.sampled_from(PROFILES))
def test_enumeration_matches_brute_force(seed, profile):
    ag = attach_markers(*random_instance(seed, profile))
    k = kappa(ag)
    cuts = enumerate_mincuts(ag, k)
    kb, brute = brute_mincuts(ag)
    assert kb == k
    assert {c.vertices for c in cuts} == set(brute)
    assert cutsets(enumerate_mincuts(ag, k, "paths")) == cutsets(cuts)
    assert not check_full_boundaries(ag, cuts)
    for c in group_into_classes(cuts):
        assert c.is_A or c.is_B
        for m in c.members:
            assert len(m.vertices) == k and m.component_count >= 2
