import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from succulent import analyze, fixtures
from succulent.ends import EndSpec, attach_markers
from succulent.errors import BudgetExceeded
from succulent.graph import Graph
from succulent.oracle import (
    PROFILES,
    automorphism_check,
    brute_mincuts,
    isomorphisms,
    lemma_suite,
    negative_controls,
    random_instance,
    run_batch,
    verify_instance,
)


def test_brute_f1_f2():
    k, cuts = brute_mincuts(attach_markers(*fixtures.wheel4()))
    assert (k, len(cuts)) == (3, 6)
    k, cuts = brute_mincuts(attach_markers(*fixtures.series3()))
    assert (k, len(cuts)) == (1, 6)


def test_brute_never_returns_empty_cut():
    for make in fixtures.VERTEX_FIXTURES.values():
        k, cuts = brute_mincuts(attach_markers(*make()))
        assert k >= 1 and all(cuts)


def test_brute_budget():
    with pytest.raises(BudgetExceeded):
        brute_mincuts(attach_markers(*fixtures.wheel4()), budget=50)


def test_lemma_suite_fixtures(f1, f2):
    r1 = lemma_suite(f1)
    assert r1.ok and r1.checked["four equal quarters"] > 0 and r1.checked["separation axioms"] == 1
    r2 = lemma_suite(f2)
    assert r2.ok and r2.checked.get("four equal quarters", 0) == 0


@pytest.mark.parametrize("profile", PROFILES)
def test_generator_contract(profile):
    for seed in range(25):
        g, spec = random_instance(seed, profile)
        assert random_instance(seed, profile) == (g, spec)
        assert g.is_connected()
        assert 2 <= len(spec.ends) <= 5
        terminals = set().union(*(vs for _, vs in spec.ends))
        assert len(set(g.vertices) - terminals) <= 12
        for _, vs in spec.ends:
            assert all(g.multiplicity(x, y) == 1 for x, y in itertools.combinations(sorted(vs), 2))


def test_generator_shapes():
    a = analyze(*random_instance(0, "blob-ring"))
    assert len(a.hashes) == 1  # a ring of blobs, like the wheel
    a = analyze(*random_instance(1, "blob-tree"))
    assert not a.hashes  # blobs in a tree never produce crossings
    with pytest.raises(ValueError):
        random_instance(0, "nope")


def test_automorphisms_f1(f1):
    rot = {"B1": "B2", "B2": "B3", "B3": "B4", "B4": "B1"}
    ok, res = automorphism_check(f1, [rot])
    assert ok and res == [(rot, True, True)]
    ok, res = automorphism_check(f1)
    assert ok and sum(1 for r in res if r[1]) == 8


def test_automorphisms_f2(f2):
    refl = {"B1": "B3", "B2": "B2", "B3": "B1"}
    ok, res = automorphism_check(f2, [refl])
    assert ok and res[0][1] and res[0][2]


def test_asymmetric_instance_is_vacuous():
    g = Graph(edges=[("a1", "a2"), ("a2", "c"), ("c", "b1"), ("b1", "b2"), ("b2", "b3"), ("b1", "b3")])
    a = analyze(g, EndSpec.from_dict({"A": {"a1", "a2"}, "B": {"b1", "b2", "b3"}}))
    ok, res = automorphism_check(a)
    assert ok and [r[1] for r in res] == [True, False]


@settings(max_examples=30)
@given(st.integers(0, 10_000), st.integers(4, 9), st.floats(0.2, 0.8))
def test_isomorphism_search_finds_relabelings(seed, n, p):
    rng = random.Random(seed)
    vs = [f"x{i}" for i in range(n)]
    adj = {v: {} for v in vs}
    for x, y in itertools.combinations(vs, 2):
        if rng.random() < p:
            m = rng.choice([1, 1, 2])
            adj[x][y] = adj[y][x] = m
    perm = dict(zip(vs, rng.sample(vs, n)))
    adj2 = {perm[v]: {perm[w]: m for w, m in nb.items()} for v, nb in adj.items()}
    lab = {v: 0 for v in vs}
    phi = next(isomorphisms(adj, lab, adj2, lab))
    assert all(adj2[phi[v]].get(phi[w], 0) == m for v, nb in adj.items() for w, m in nb.items())
    # one extra edge breaks it
    missing = [(x, y) for x, y in itertools.combinations(vs, 2) if y not in adj2[x]]
    if missing:
        x, y = missing[0]
        adj3 = {v: dict(nb) for v, nb in adj2.items()}
        adj3[x][y] = adj3[y][x] = 1
        assert next(isomorphisms(adj, lab, adj3, lab), None) is None


def test_negative_controls_reject(f1, f2):
    for a in (f1, f2):
        res = negative_controls(a)
        assert len(res) == 2 and all(rejected for _, rejected in res)


def test_verify_instance_and_batch():
    r = verify_instance(*fixtures.wheel4(), name="F1", mutate=True, automorphisms=True)
    assert r.ok and r.kappa == 3 and r.classes == 6
    names = [c for c, _, _ in r.lines]
    assert "mincuts match brute force" in names and "automorphisms lift" in names
    batch = run_batch(8, seed=3)
    assert len(batch) == 8 and all(b.ok for b in batch)
    assert any("negative control" in c for c, _, _ in batch[0].lines)


def test_ring_pair_profile_has_two_crossing_systems():
    # two #-classes need at least six ends, outside the main generator bounds
    for seed in range(6):
        g, spec = random_instance(seed, "ring-pair")
        r = verify_instance(g, spec, name=f"ring-pair:{seed}")
        assert r.ok, r.lines
        assert r.hashes == 2 and r.ends == 7
