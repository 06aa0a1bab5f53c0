"""Independent checks: brute-force mincuts, lemma-level assertions, random
instances and automorphism equivariance.

Nothing here reuses the bitmask enumeration or the flow code of the main
pipeline, so a bug there cannot hide itself.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import networkx as nx

from .ends import EndSpec, make_partition, split
from .errors import BudgetExceeded, SucculentError
from .graph import Graph, boundary, canon
from .mincuts import enumerate_mincuts, make_cut
from .relations import cuts_cross, is_nested
from .crossing import check_separation_axioms
from .succulent import anchor_partition, check_pretree_axioms

PROFILES = ("blob-ring", "blob-tree", "hybrid", "erdos-with-blobs")
# outside the 2-5 end bound: two crossing systems need at least six ends
EXTRA_PROFILES = ("ring-pair",)


# brute force


def _plain_components(adj: dict, removed: set) -> list[set]:
    """Depth-first search over adjacency sets, visiting vertices in reverse order."""
    seen = set(removed)
    out = []
    for v in sorted(adj, reverse=True):
        if v in seen:
            continue
        comp = {v}
        seen.add(v)
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        out.append(comp)
    return out


def brute_mincuts(ag, budget: int = 3_000_000) -> tuple[int, list[frozenset]]:
    """Smallest end cuts by trying every vertex set in order of size.

    Returns ``(kappa, cuts)``.  Markers are never tried.
    """
    adj = {v: set(ag.graph.neighbors(v)) for v in ag.graph.vertices}
    markers = set(ag.marker_end)
    pool = sorted((v for v in adj if v not in markers), reverse=True)
    spent = 0
    for k in range(len(pool) + 1):
        spent += math.comb(len(pool), k)
        if spent > budget:
            raise BudgetExceeded(f"brute force over {len(pool)} vertices exceeds {budget}")
        found = []
        for cut in itertools.combinations(pool, k):
            comps = _plain_components(adj, set(cut))
            if sum(1 for c in comps if c & markers) >= 2:
                found.append(frozenset(cut))
        if found:
            return k, sorted(found, key=canon)
    raise SucculentError("no end cut exists")


def brute_edge_end_cuts(g: Graph, spec: EndSpec) -> tuple[int, dict]:
    """Smallest edge sets separating two terminal sets, grouped by end partition."""
    edges = [(u, v) for u, v, _ in g.edges()]
    owner = {v: name for name, vs in spec.ends for v in vs}
    for k in range(1, len(edges) + 1):
        found: dict = {}
        for sub in itertools.combinations(edges, k):
            h = nx.Graph()
            h.add_nodes_from(g.vertices)
            h.add_edges_from(e for e in edges if e not in sub)
            part = make_partition(
                {owner[v] for v in comp if v in owner} for comp in nx.connected_components(h)
            )
            if len(part) >= 2:
                found.setdefault(part, []).append(frozenset(sub))
        if found:
            return k, found
    raise SucculentError("graph has no edge cut separating ends")


# lemma suite


@dataclass
class LemmaReport:
    checked: dict = field(default_factory=dict)  # lemma name -> instances checked
    failures: list = field(default_factory=list)  # (lemma name, witness)

    def tick(self, name: str, n: int = 1) -> None:
        self.checked[name] = self.checked.get(name, 0) + n

    def fail(self, name: str, witness) -> None:
        self.failures.append((name, witness))

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "LemmaReport") -> None:
        for k, v in other.checked.items():
            self.tick(k, v)
        self.failures.extend(other.failures)


def _star(ag, comp):
    return frozenset(ag.graph.vertices) - comp - boundary(ag.graph, comp)


def lemma_suite(a) -> LemmaReport:
    """Run every lemma-level check on a finished :class:`Analysis`."""
    rep = LemmaReport()
    _slice_checks(a, rep)
    _cut_pair_checks(a, rep)
    _triple_checks(a, rep)
    _hash_checks(a, rep)
    _pretree_checks(a, rep)
    return rep


def _slice_checks(a, rep):
    ag = a.original
    k, cuts = brute_mincuts(ag)
    slices = [s for s, _ in a.slices.slices]
    for i, s in enumerate(slices):
        rep.tick("slices disjoint from mincuts")
        if any(s & c for c in cuts):
            rep.fail("slices disjoint from mincuts", canon(s))
        for t in slices[i + 1:]:
            rep.tick("slices pairwise disjoint")
            if s & t:
                rep.fail("slices pairwise disjoint", (canon(s), canon(t)))
        bd = boundary(ag.base, s)
        for c in cuts:
            rep.tick("slice boundary never separated")
            rest = bd - c
            sides = {i for i, (comp, _) in enumerate(split(ag, c)) if comp & rest}
            if len(sides) > 1:
                rep.fail("slice boundary never separated", (canon(s), canon(c)))
    rep.tick("reduced graph is a fixed point")
    k2, cuts2 = brute_mincuts(a.reduced)
    if k2 != a.kappa or any(not ends for c in cuts2 for _, ends in split(a.reduced, c)):
        rep.fail("reduced graph is a fixed point", k2)
    rep.tick("reduction keeps the end partitions")
    before = sorted({make_cut(ag, c).partition for c in cuts})
    after = sorted({c.partition for c in a.cuts})
    if before != after or k != a.kappa:
        rep.fail("reduction keeps the end partitions", (before, after))


def _cut_pair_checks(a, rep):
    ag = a.reduced
    cuts = a.cuts
    markers = ag.marker_set
    for c in cuts:
        rep.tick("A/B dichotomy")
        nested_all = all(is_nested(c, d) for d in cuts if d is not c)
        if not (nested_all or len(c.parts) == 2):
            rep.fail("A/B dichotomy", c.key)
        rep.tick("components see the whole cut")
        for comp, _ in c.parts:
            if boundary(ag.graph, comp) != c.vertices:
                rep.fail("components see the whole cut", c.key)
    for k, l in itertools.combinations(cuts, 2):
        for (c, _), (d, _) in itertools.product(k.parts, l.parts):
            cs, ds = _star(ag, c), _star(ag, d)
            rep.tick("proper side contains the rest of the other cut")
            rest = cs & l.vertices
            if rest and not any(rest <= comp for comp, _ in k.parts):
                rep.fail("proper side contains the rest of the other cut", (k.key, l.key))
            if (c & d & markers) and (cs & ds & markers):
                rep.tick("corner boundaries are mincuts")
                bd = boundary(ag.graph, c & d)
                expect = (c & l.vertices) | (k.vertices & l.vertices) | (k.vertices & d)
                if len(bd) != a.kappa or bd != expect:
                    rep.fail("corner boundaries are mincuts", (k.key, l.key))
                if len(c & l.vertices) != len(k.vertices & ds) or len(d & k.vertices) != len(l.vertices & cs):
                    rep.fail("crossing cardinalities", (k.key, l.key))
                rep.tick("crossing cardinalities")
        if cuts_cross(k, l):
            rep.tick("crossing cuts have two components")
            if len(k.parts) != 2 or len(l.parts) != 2:
                rep.fail("crossing cuts have two components", (k.key, l.key))
                continue
            rep.tick("four equal quarters")
            sizes = {len(l.vertices & c) for c, _ in k.parts} | {len(k.vertices & d) for d, _ in l.parts}
            if len(sizes) != 1:
                rep.fail("four equal quarters", (k.key, l.key))


def _triple_checks(a, rep):
    markers = a.reduced.marker_set
    cross = {}
    cuts = [c for c in a.cuts if len(c.parts) == 2]
    for k, l in itertools.combinations(cuts, 2):
        if cuts_cross(k, l):
            cross.setdefault(id(k), []).append(l)
            cross.setdefault(id(l), []).append(k)
    for l in cuts:
        for k, m in itertools.combinations(cross.get(id(l), []), 2):
            rep.tick("no tetrahedral end arrangement")
            full = set()
            for x, y, z in itertools.product(range(2), repeat=3):
                if k.parts[x][0] & l.parts[y][0] & m.parts[z][0] & markers:
                    full.add((x, y, z))
            even = {t for t in itertools.product(range(2), repeat=3) if sum(t) % 2 == 0}
            odd = set(itertools.product(range(2), repeat=3)) - even
            if even <= full or odd <= full:
                rep.fail("no tetrahedral end arrangement", (k.key, l.key, m.key))


def _hash_checks(a, rep):
    idx = a.index
    for h in a.hashes:
        members = [c for cid in h.member_ids for c in a.classes[cid].members]
        rep.tick("centre invariance")
        centres = {k.vertices & l.vertices for k, l in itertools.combinations(members, 2) if cuts_cross(k, l)}
        if centres != {h.centre}:
            rep.fail("centre invariance", [canon(c) for c in centres])
        rep.tick("crossing diameter at most two")
        ms = set(h.member_ids)
        for x, y in itertools.combinations(h.member_ids, 2):
            nx_ = set(idx.crossing_ids(x)) & ms
            if y not in nx_ and not (nx_ & set(idx.crossing_ids(y))):
                rep.fail("crossing diameter at most two", (x, y))
        for cid in h.corner_ids:
            rep.tick("corner cuts are isolated")
            if idx.crossing_ids(cid):
                rep.fail("corner cuts are isolated", cid)
        rep.tick("separation axioms")
        try:
            check_separation_axioms(range(len(h.q_classes)), h.relation)
        except SucculentError as e:
            rep.fail("separation axioms", str(e))
        rep.tick("at most four equivalence classes per quasi-class")
        for q in h.q_classes:
            if sum(1 for e in h.eq_classes if set(e) <= set(q)) > 4:
                rep.fail("at most four equivalence classes per quasi-class", q)
        _half_checks(a, h, members, rep)


def _half_checks(a, h, members, rep):
    by_set = {c.vertices: c for c in a.cuts}
    u = h.centre

    def combo(i, j):
        s = h.halves[i] | u | h.halves[j]
        return by_set.get(s) if len(s) == a.kappa else None

    q_of = {i: h.q_of(i) for i in range(len(h.halves))}
    for i, j in itertools.combinations(range(len(h.halves)), 2):
        rep.tick("halves forming a cut are not quasi-equivalent")
        if combo(i, j) is not None and q_of[i] == q_of[j]:
            rep.fail("halves forming a cut are not quasi-equivalent", (i, j))
    for k in members:
        k1, k2 = h.decompositions[k.key]
        others = [i for i in range(len(h.halves)) if q_of[i] not in (q_of[k1], q_of[k2])]
        for i in others:
            rep.tick("completion property")
            if not any(combo(i, j) is not None and cuts_cross(combo(i, j), k) for j in range(len(h.halves))):
                rep.fail("completion property", (k.key, i))
        for i, j in itertools.combinations(others, 2):
            rep.tick("half-cut dichotomy")
            c = combo(i, j)
            crossing = c is not None and cuts_cross(c, k)
            together = any((h.halves[i] | h.halves[j]) <= comp for comp, _ in k.parts)
            if not (crossing or together):
                rep.fail("half-cut dichotomy", (k.key, i, j))


def _pretree_checks(a, rep):
    rep.tick("pretree axioms")
    try:
        check_pretree_axioms(len(a.pretree.elements), a.pretree.between)
    except SucculentError as e:
        rep.fail("pretree axioms", str(e))
    rep.tick("structure tree is a tree")
    if not nx.is_tree(a.tree.to_networkx()):
        rep.fail("structure tree is a tree", a.tree.edges)


# random instances


def _clique(g: Graph, vs):
    for v in vs:
        g.add_vertex(v)
    for x, y in itertools.combinations(vs, 2):
        g.add_edge(x, y)


def _blobs(rng, g, ends, count, start=0, lo=1, hi=3):
    out = []
    for i in range(start, start + count):
        vs = [f"b{i}_{j}" for j in range(rng.randint(lo, hi))]
        _clique(g, vs)
        ends[f"E{i}"] = set(vs)
        out.append(vs)
    return out


def _join(rng, g, sep, blob, full=False):
    for s in sep:
        targets = blob if full else rng.sample(blob, rng.randint(1, len(blob)))
        for t in targets:
            g.add_edge(s, t)


def _ring(rng, g, slots, width, hubs, fresh):
    """Join consecutive slots (lists of blobs) by connectors, plus hub vertices."""
    n = len(slots)
    for i in range(n):
        left, right = slots[i], slots[(i + 1) % n]
        if width == 1 and rng.random() < 0.25:
            # connector stretched into a two-vertex path
            a, b = fresh(), fresh()
            g.add_edge(a, b)
            for blob in left:
                _join(rng, g, [a], blob, full=True)
            for blob in right:
                _join(rng, g, [b], blob, full=True)
            continue
        sep = [fresh() for _ in range(width)]
        for blob in left:
            _join(rng, g, sep, blob, full=rng.random() < 0.85)
        for blob in right:
            _join(rng, g, sep, blob, full=rng.random() < 0.85)
    for _ in range(hubs):
        h = fresh()
        for slot in slots:
            for b in slot:
                _join(rng, g, [h], b, full=True)


def random_instance(seed: int, profile: str = "blob-ring") -> tuple[Graph, EndSpec]:
    """Deterministic small instance with planted clique ends."""
    if profile not in PROFILES + EXTRA_PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    rng = random.Random(f"{profile}:{seed}")
    g = Graph()
    ends: dict = {}
    core = 0

    def fresh():
        nonlocal core
        core += 1
        return f"c{core}"

    if profile in ("blob-ring", "hybrid", "ring-pair"):
        n = rng.randint(3, 5) if profile == "blob-ring" else 4
        width = rng.choice([1, 1, 2]) if profile == "blob-ring" else 1
        hubs = 0 if width == 2 else rng.choice([0, 1, 1, 2] if profile == "blob-ring" else [0, 1])
        if width == 2:
            n = min(n, 4)
        # blobs larger than the ring separators, so cutting a whole blob never wins
        sepsize = 2 * width + hubs
        blobs = _blobs(rng, g, ends, n, lo=sepsize + 1, hi=sepsize + 1)
        slots = [[b] for b in blobs]
        if profile == "blob-ring" and width == 1 and n <= 4 and rng.random() < 0.4:
            i = rng.randrange(n)
            slots[i].append(_blobs(rng, g, ends, 1, start=n, lo=sepsize + 1, hi=sepsize + 1)[0])
        _ring(rng, g, slots, width, hubs, fresh)
        if profile != "blob-ring":
            host = rng.choice(blobs)
            sep = [fresh() for _ in range(sepsize)]
            _join(rng, g, sep, host, full=True)
            if profile == "ring-pair":
                # a second ring whose missing slot is the separator
                more = _blobs(rng, g, ends, 3, start=len(ends), lo=sepsize + 1, hi=sepsize + 1)
                _ring(rng, g, [[sep]] + [[b] for b in more], width, hubs, fresh)
            else:
                b = _blobs(rng, g, ends, 1, start=len(ends), lo=sepsize + 1, hi=sepsize + 1)[0]
                _join(rng, g, sep, b, full=rng.random() < 0.5)
    elif profile == "blob-tree":
        n = rng.randint(2, 5)
        blobs = _blobs(rng, g, ends, n)
        for i in range(1, n):
            parent = blobs[rng.randrange(i)]
            sep = [fresh() for _ in range(rng.randint(1, 2))]
            _join(rng, g, sep, parent)
            _join(rng, g, sep, blobs[i])
    else:
        m = rng.randint(4, 9)
        cs = [fresh() for _ in range(m)]
        for v in cs:
            g.add_vertex(v)
        for x, y in itertools.combinations(cs, 2):
            if rng.random() < 0.35:
                g.add_edge(x, y)
        for x, y in zip(cs, cs[1:]):
            if not nx.has_path(g.to_networkx(), x, y):
                g.add_edge(x, y)
        blobs = _blobs(rng, g, ends, rng.randint(2, 5))
        for b in blobs:
            _join(rng, g, rng.sample(cs, rng.randint(1, 3)), b)
    assert g.is_connected()
    return g, EndSpec.from_dict(ends)


# automorphisms


def _refine(adj: dict, colour: dict) -> dict:
    """Stable colour refinement; colours stay comparable across a disjoint union."""
    n_cls = len(set(colour.values()))
    while True:
        sig = {
            v: (colour[v], tuple(sorted((colour[w], m) for w, m in adj[v].items())))
            for v in adj
        }
        ids = {x: i for i, x in enumerate(sorted(set(sig.values())))}
        colour = {v: ids[sig[v]] for v in adj}
        if len(ids) == n_cls:
            return colour
        n_cls = len(ids)


def isomorphisms(adj1: dict, lab1: dict, adj2: dict, lab2: dict, limit: int = 10_000):
    """Label-preserving isomorphisms between two small multigraphs.

    ``adj`` maps a vertex to ``{neighbour: multiplicity}``.  Individualise
    one vertex at a time and refine; each leaf is checked edge by edge.
    Raises :class:`BudgetExceeded` after ``limit`` search nodes.
    """
    if len(adj1) != len(adj2):
        return
    adj = {(0, v): {(0, w): m for w, m in nb.items()} for v, nb in adj1.items()}
    adj.update({(1, v): {(1, w): m for w, m in nb.items()} for v, nb in adj2.items()})
    labels = sorted({repr(x) for x in lab1.values()} | {repr(x) for x in lab2.values()})
    li = {x: i for i, x in enumerate(labels)}
    colour = {(0, v): li[repr(lab1[v])] for v in adj1}
    colour.update({(1, v): li[repr(lab2[v])] for v in adj2})
    budget = [limit]

    def rec(col):
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("automorphism search budget exhausted")
        col = _refine(adj, col)
        cells: dict = {}
        for (side, v), c in col.items():
            cells.setdefault(c, ([], []))[side].append(v)
        if any(len(a) != len(b) for a, b in cells.values()):
            return
        open_cells = [c for c, (a, _) in cells.items() if len(a) > 1]
        if not open_cells:
            phi = {a[0]: b[0] for a, b in cells.values()}
            if all(adj2[phi[v]].get(phi[w], 0) == m for v, nb in adj1.items() for w, m in nb.items()):
                yield phi
            return
        c = min(open_cells, key=lambda c: (len(cells[c][0]), c))
        xs, ys = cells[c]
        x = min(xs)
        fresh = max(col.values()) + 1
        for y in sorted(ys):
            nxt = dict(col)
            nxt[(0, x)] = nxt[(1, y)] = fresh
            yield from rec(nxt)

    yield from rec(colour)


def _adjacency(g: Graph) -> dict:
    return {v: {w: g.multiplicity(v, w) for w in g.neighbors(v)} for v in g.vertices}


def _end_automorphism(a, perm: dict):
    """A graph automorphism moving each end ``e`` onto ``perm[e]``, or ``None``."""
    ag = a.original
    adj = _adjacency(ag.graph)
    lab1 = {v: ag.marker_end.get(v) for v in adj}
    lab2 = {v: None for v in adj}
    for e in ag.end_names:
        lab2[ag.markers[perm[e]]] = e
    return next(isomorphisms(adj, lab1, adj, lab2), None)


def automorphism_check(a, perms=None, limit: int = 720) -> tuple[bool, list]:
    """Every end permutation realised by a graph automorphism lifts to the succulent.

    ``perms`` defaults to all permutations of the ends (at most ``limit``).
    Returns ``(ok, [(perm, realised, lifted), ...])``.
    """
    names = list(a.end_names)
    if perms is None:
        if math.factorial(len(names)) > limit:
            raise BudgetExceeded(f"{len(names)} ends give too many permutations")
        perms = [dict(zip(names, p)) for p in itertools.permutations(names)]
    s = a.succulent
    by_part = {c.partition: c.id for c in a.classes}
    results = []
    ok = True
    for perm in perms:
        sigma = _end_automorphism(a, perm)
        if sigma is None:
            results.append((perm, False, None))
            continue
        cls_perm = {}
        for c in a.classes:
            image = make_partition([[perm[e] for e in b] for b in c.partition])
            if image not in by_part:
                ok = False
                results.append((perm, True, False))
                break
            cls_perm[c.id] = by_part[image]
        else:
            lifted = _lift(s, perm, cls_perm)
            ok = ok and lifted
            results.append((perm, True, lifted))
    return ok, results


def _lift(s, perm, cls_perm) -> bool:
    """Is there a succulent automorphism moving f(e) to f(perm[e]) and g(c) to g(perm c)?"""
    inv_f: dict = {}
    for e, x in s.f.items():
        inv_f.setdefault(x, []).append(e)

    def labels(rename):
        out = {}
        for v in s.graph.vertices:
            if v in inv_f:
                out[v] = tuple(sorted(rename(e) for e in inv_f[v]))
            else:
                out[v] = "anchor" if v in s.anchors else "plain"
        return out

    adj = _adjacency(s.graph)
    for tau in isomorphisms(adj, labels(lambda e: perm[e]), adj, labels(lambda e: e)):
        if all(
            anchor_partition(s.graph, s.anchors, frozenset(tau[v] for v in cut))
            == anchor_partition(s.graph, s.anchors, s.g[cls_perm[cid]])
            for cid, cut in s.g.items()
        ):
            return True
    return False


# whole-instance verification


def negative_controls(a) -> list[tuple[str, bool]]:
    """Mutate the succulent twice and report whether verification rejects each copy."""
    from .graph import components
    from .succulent import add_edge, drop_anchor, verify_theorem

    s = a.succulent
    out = []
    victim = s.f[a.end_names[0]]
    bad = verify_theorem(a.end_names, a.classes, drop_anchor(s, victim))
    out.append((f"drop anchor {victim}", not bad.ok))
    for c in a.classes:
        comps = [cc & s.anchors for cc in components(s.graph, s.g[c.id])]
        comps = [cc for cc in comps if cc]
        if len(comps) >= 2:
            u, v = min(comps[0]), min(comps[1])
            bad = verify_theorem(a.end_names, a.classes, add_edge(s, u, v))
            out.append((f"add edge {u}-{v}", not bad.ok))
            break
    return out


@dataclass
class InstanceResult:
    name: str
    ok: bool
    lines: list  # (check, passed, detail)
    vertices: int = 0
    ends: int = 0
    kappa: int = 0
    classes: int = 0
    hashes: int = 0


def verify_instance(g: Graph, spec: EndSpec, name: str = "", mutate: bool = False,
                    automorphisms: bool = False, budget: int | None = None) -> InstanceResult:
    """Pipeline, brute force, lemma suite and theorem check on one instance."""
    from .analysis import analyze
    from .succulent import collapse_variant, verify_theorem

    kw = {} if budget is None else {"budget": budget}
    a = analyze(g, spec, **kw)
    lines = []
    k, brute = brute_mincuts(a.original, **kw)
    mine = enumerate_mincuts(a.original, a.kappa, **kw)
    same = k == a.kappa and set(brute) == {c.vertices for c in mine}
    if a.slices.slices:
        k2, brute2 = brute_mincuts(a.reduced, **kw)
        same = same and k2 == a.kappa and set(brute2) == {c.vertices for c in a.cuts}
    lines.append(("mincuts match brute force", same, f"kappa={k} cuts={len(brute)}"))
    lem = lemma_suite(a)
    detail = "; ".join(f"{n}: {w!r}" for n, w in lem.failures[:3])
    lines.append(("lemma suite", lem.ok, detail or f"{sum(lem.checked.values())} checks"))
    th = a.verify()
    lines.append(("theorem", th.ok, "; ".join(th.failures[:3]) or f"{th.anchor_classes} anchor-cut classes"))
    try:
        var = collapse_variant(a.succulent)
        vth = verify_theorem(a.end_names, a.classes, var)
        lines.append(("collapsed variant", vth.ok, "; ".join(vth.failures[:3])))
    except SucculentError as e:
        lines.append(("collapsed variant", False, str(e)))
    if mutate:
        for what, rejected in negative_controls(a):
            lines.append((f"negative control: {what}", rejected, "rejected" if rejected else "accepted"))
    if automorphisms:
        try:
            ok, res = automorphism_check(a)
            lines.append(("automorphisms lift", ok, f"{sum(1 for r in res if r[1])} realised"))
        except BudgetExceeded as e:
            lines.append(("automorphisms lift", True, f"skipped: {e}"))
    return InstanceResult(
        name, all(p for _, p, _ in lines), lines,
        vertices=len(g), ends=len(spec.ends), kappa=a.kappa,
        classes=len(a.classes), hashes=len(a.hashes),
    )


def _batch_job(args):
    seed, profile, mutate = args
    g, spec = random_instance(seed, profile)
    try:
        return verify_instance(g, spec, f"{profile}:{seed}", mutate=mutate)
    except SucculentError as e:
        return InstanceResult(f"{profile}:{seed}", False, [("pipeline", False, f"{type(e).__name__}: {e}")])


def run_batch(n: int, seed: int = 0, jobs: int = 1, profiles=PROFILES, control_every: int = 20) -> list[InstanceResult]:
    """Verify ``n`` random instances, cycling through ``profiles``.

    Every ``control_every``-th instance also runs the negative controls.
    """
    work = [
        (seed + i // len(profiles), profiles[i % len(profiles)], control_every > 0 and i % control_every == 0)
        for i in range(n)
    ]
    if jobs <= 1:
        return [_batch_job(w) for w in work]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_batch_job, work, chunksize=4))
