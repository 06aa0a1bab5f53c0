"""Crossing systems of mincut classes (#-classes) and the rings that encode them.

Inside one #-class every member cut splits as ``half | centre | half``.
Half-cuts are grouped into quasi-equivalence classes, which carry a cyclic
separation relation; the resulting cyclic order, with anchors for the ends
between neighbouring classes, is the ring.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ends import AugmentedGraph, make_partition
from .errors import (
    AxiomViolation,
    CentreMismatch,
    CornerNotIsolated,
    CorrespondenceFailure,
    EmbeddingFailed,
    NotTransitive,
    StructureError,
    UnequalHalves,
)
from .graph import Graph, canon, components
from .mincuts import Cut, CutClass
from .relations import CrossingGraph, crosses, cuts_cross


@dataclass
class CutIndex:
    """Lookup tables over the complete mincut list of one augmented graph."""

    ag: AugmentedGraph
    kappa: int
    cuts: list
    classes: list
    crossing: CrossingGraph
    by_set: dict = field(default_factory=dict)
    class_by_partition: dict = field(default_factory=dict)

    def __post_init__(self):
        self.by_set = {c.vertices: c for c in self.cuts}
        self.class_by_partition = {c.partition: c.id for c in self.classes}

    @property
    def ends(self) -> frozenset:
        return frozenset(self.ag.end_names)

    def class_of(self, cut: Cut) -> CutClass:
        return self.classes[self.class_by_partition[cut.partition]]

    def crossing_ids(self, cid: int) -> list[int]:
        return self.crossing.neighbours(cid)


@dataclass
class Ring:
    """Cycle of vertices with anchor triangles on some of its edges.

    ``anchors`` holds ``(u, v, anchor, block)`` with ``(u, v)`` the cycle edge
    and ``block`` the set of ends the anchor stands for.  A degenerate ring
    has a two-vertex ``cycle`` (a segment).
    """

    label: str
    cycle: list
    anchors: list
    degenerate: bool = False
    cut_for_class: dict = field(default_factory=dict)  # class id -> (u, v)
    half_vertex: dict = field(default_factory=dict)  # half index -> cycle vertex

    @property
    def anchor_names(self) -> list[str]:
        return [a for _, _, a, _ in self.anchors]

    def block_of(self, anchor: str) -> frozenset:
        for _, _, a, b in self.anchors:
            if a == anchor:
                return b
        raise KeyError(anchor)

    def cycle_edges(self) -> list[tuple[str, str]]:
        n = len(self.cycle)
        if n == 2:
            return [(self.cycle[0], self.cycle[1])]
        return [(self.cycle[i], self.cycle[(i + 1) % n]) for i in range(n)]

    def graph(self, thickened: bool = False) -> Graph:
        g = Graph(self.cycle)
        for u, v in self.cycle_edges():
            g.add_edge(u, v)
        for u, v, a, _ in self.anchors:
            if thickened:
                tri = [f"{a}#{i}" for i in range(3)]
                for x, y in itertools.combinations(tri, 2):
                    g.add_edge(x, y)
                for x in tri:
                    g.add_edge(x, u)
                    g.add_edge(x, v)
            else:
                g.add_edge(a, u)
                g.add_edge(a, v)
        return g

    def anchor_cuts(self) -> dict:
        """Anchor partition -> cycle-vertex pairs realising it (anchors uncuttable)."""
        g = self.graph()
        anchors = set(self.anchor_names)
        for v in self.cycle:
            if sum(1 for c in components(g, {v}) if c & anchors) > 1:
                raise CorrespondenceFailure(f"{self.label}: single vertex {v} splits anchors")
        out: dict = {}
        for u, v in itertools.combinations(self.cycle, 2):
            groups = [tuple(sorted(c & anchors)) for c in components(g, {u, v}) if c & anchors]
            if len(groups) >= 2:
                out.setdefault(tuple(sorted(groups)), []).append((u, v))
        return out

    def end_partition_of(self, anchor_groups) -> tuple:
        return make_partition(
            frozenset().union(*(self.block_of(a) for a in grp)) for grp in anchor_groups
        )


@dataclass
class HashClass:
    id: int
    member_ids: list
    centre: frozenset = frozenset()
    halves: list = field(default_factory=list)
    q_classes: list = field(default_factory=list)  # lists of half indices
    eq_classes: list = field(default_factory=list)  # lists of half indices
    relation: set = field(default_factory=set)  # 4-tuples of q-class ids
    cyclic_order: list = field(default_factory=list)
    corner_ids: list = field(default_factory=list)
    coarse_blocks: list = field(default_factory=list)  # per cyclic edge
    fine_blocks: list = field(default_factory=list)  # per cyclic edge, list of blocks
    edge_partitions: list = field(default_factory=list)  # per cyclic edge, realised partitions
    decompositions: dict = field(default_factory=dict)  # member cut key -> (half i, half j)
    ring: Ring | None = None

    @property
    def label(self) -> str:
        return f"h{self.id}"

    @property
    def fine_partition(self):
        return make_partition(b for blocks in self.fine_blocks for b in blocks)

    @property
    def coarse_partition(self):
        return make_partition(self.coarse_blocks)

    def q_of(self, half: int) -> int:
        for q, members in enumerate(self.q_classes):
            if half in members:
                return q
        raise KeyError(half)


def hash_classes(cg: CrossingGraph) -> tuple[list[list[int]], list[int]]:
    """Connected components of the crossing graph: #-classes and isolated ids."""
    parent = {n: n for n in cg.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in cg.edges:
        parent[find(a)] = find(b)
    groups: dict = {}
    for n in cg.nodes:
        groups.setdefault(find(n), []).append(n)
    hashes = sorted((sorted(g) for g in groups.values() if len(g) >= 2), key=lambda g: g[0])
    isolated = sorted(g[0] for g in groups.values() if len(g) == 1)
    return hashes, isolated


def _member_cuts(idx: CutIndex, member_ids) -> list[Cut]:
    return [c for cid in member_ids for c in idx.classes[cid].members]


def centre(idx: CutIndex, member_ids) -> frozenset:
    """Common intersection of every crossing pair of member cuts."""
    found = set()
    for a, b in itertools.combinations(member_ids, 2):
        if crosses(idx.classes[a], idx.classes[b]):
            for k in idx.classes[a].members:
                for l in idx.classes[b].members:
                    if not cuts_cross(k, l):
                        raise StructureError(f"{k} and {l} do not cross although their classes do")
                    found.add(k.vertices & l.vertices)
    if len(found) != 1:
        raise CentreMismatch(f"centres {[canon(u) for u in found]}")
    return found.pop()


def half_cut_decompose(k: Cut, l: Cut, u: frozenset) -> tuple[frozenset, frozenset]:
    """Split ``k`` minus the centre by the two components of a crossing cut ``l``."""
    if not cuts_cross(k, l):
        raise StructureError(f"{k} does not cross {l}")
    if len(l.parts) != 2:
        raise StructureError(f"{l} is not a B-cut")
    rest = k.vertices - u
    k1 = rest & l.parts[0][0]
    k2 = rest & l.parts[1][0]
    if k1 | k2 != rest or len(k1) != len(k2):
        raise UnequalHalves(f"{k} against {l}: {canon(k1)} / {canon(k2)}")
    return tuple(sorted((k1, k2), key=canon))


def _crossing_diameter(idx: CutIndex, member_ids) -> None:
    ms = set(member_ids)
    for a, b in itertools.combinations(member_ids, 2):
        na = set(idx.crossing_ids(a)) & ms
        if b in na:
            continue
        if not (na & set(idx.crossing_ids(b))):
            raise StructureError(f"classes {a},{b} are more than two crossings apart")


def _circle_separates(pos, a, b, c, d) -> bool:
    """On a circle, ``a`` and ``c`` separate ``b`` from ``d``."""
    lo, hi = sorted((pos[a], pos[c]))
    return (lo < pos[b] < hi) != (lo < pos[d] < hi)


def check_separation_axioms(z, rel) -> None:
    z = list(z)
    if any(len(set(t)) != 4 for t in rel):
        raise AxiomViolation(1)
    if not rel:
        raise AxiomViolation(2)
    for a, b, c, d in rel:
        if (b, c, d, a) not in rel:
            raise AxiomViolation(3, f"{(a, b, c, d)}")
        if (a, b, d, c) in rel:
            raise AxiomViolation(4, f"{(a, b, c, d)}")
    if not any((d, c, b, a) in rel for a, b, c, d in rel):
        raise AxiomViolation(5)
    for a, b, c, d in rel:
        for x in z:
            if x in (a, b, c, d):
                continue
            if (a, x, c, d) not in rel and (a, b, c, x) not in rel:
                raise AxiomViolation(6, f"{(a, b, c, d)} with {x}")


def cyclic_order_from_relation(z, rel) -> list:
    """Place the elements on a circle by repeated insertion between adjacent pairs."""
    z = sorted(z)
    start = min(rel)
    circle = list(start)
    for x in z:
        if x in circle:
            continue
        placed = list(circle)
        pair = None
        for a, b in itertools.combinations(placed, 2):
            others = [c for c in placed if c not in (a, b)]
            if all((a, x, b, c) in rel for c in others) or all((b, x, a, c) in rel for c in others):
                if pair is not None:
                    raise EmbeddingFailed(f"{x} has several adjacent pairs")
                pair = (a, b)
        if pair is None:
            raise EmbeddingFailed(f"no adjacent pair for {x}")
        ia, ib = circle.index(pair[0]), circle.index(pair[1])
        n = len(circle)
        if (ia + 1) % n == ib:
            circle.insert(ia + 1, x)
        elif (ib + 1) % n == ia:
            circle.insert(ib + 1, x)
        else:
            raise EmbeddingFailed(f"neighbours {pair} of {x} are not adjacent on the circle")
    pos = {v: i for i, v in enumerate(circle)}
    for t in itertools.permutations(z, 4):
        if (t in rel) != _circle_separates(pos, *t):
            raise EmbeddingFailed(f"circle disagrees with relation at {t}")
    return canonical_rotation(circle)


def canonical_rotation(circle: list) -> list:
    n = len(circle)
    i = circle.index(min(circle))
    rot = circle[i:] + circle[:i]
    if n > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return rot


def analyse_hash_class(idx: CutIndex, hid: int, member_ids: list[int]) -> HashClass:
    """Run the whole #-class pipeline and build the ring; every lemma is asserted."""
    h = HashClass(hid, sorted(member_ids))
    _crossing_diameter(idx, h.member_ids)
    u = centre(idx, h.member_ids)
    h.centre = u
    members = _member_cuts(idx, h.member_ids)
    member_set = set(h.member_ids)

    # half-cuts, independent of the crossing cut used
    halves: set = set()
    decomp = {}
    for k in members:
        kc = idx.class_of(k)
        seen = set()
        for lid in idx.crossing_ids(kc.id):
            if lid not in member_set:
                continue
            for l in idx.classes[lid].members:
                seen.add(half_cut_decompose(k, l, u))
        if len(seen) != 1:
            raise StructureError(f"{k} has crossing-dependent half-cuts {seen}")
        pair = seen.pop()
        decomp[k.key] = pair
        halves.update(pair)
    h.halves = sorted(halves, key=canon)
    hi = {s: i for i, s in enumerate(h.halves)}
    h.decompositions = {key: (hi[a], hi[b]) for key, (a, b) in decomp.items()}
    n = len(h.halves)

    combo_cache: dict = {}

    def combo(i, j):
        key = (min(i, j), max(i, j))
        if key not in combo_cache:
            s = h.halves[i] | u | h.halves[j]
            combo_cache[key] = idx.by_set.get(s) if len(s) == idx.kappa else None
        return combo_cache[key]

    # quasi-equivalence, computed pairwise then checked for transitivity
    qe = [[i == j for j in range(n)] for i in range(n)]
    for k in range(n):
        by_part: dict = {}
        for i in range(n):
            c = combo(i, k)
            if c is not None:
                by_part.setdefault(c.partition, []).append(i)
        for group in by_part.values():
            for i, j in itertools.combinations(group, 2):
                qe[i][j] = qe[j][i] = True
    for i, j, k in itertools.permutations(range(n), 3):
        if qe[i][j] and qe[j][k] and not qe[i][k]:
            raise NotTransitive(f"halves {i},{j},{k}")
    for i, j in itertools.combinations(range(n), 2):
        if combo(i, j) is not None and qe[i][j]:
            raise StructureError(f"halves {i},{j} form a cut but are quasi-equivalent")
    qcls: list = []
    for i in range(n):
        for grp in qcls:
            if qe[i][grp[0]]:
                grp.append(i)
                break
        else:
            qcls.append([i])
    h.q_classes = qcls
    m = len(qcls)
    if m < 4:
        raise StructureError(f"{h.label} has only {m} quasi-equivalence classes")

    # equivalence of half-cuts
    sig = {i: tuple(None if combo(i, k) is None else combo(i, k).partition for k in range(n)) for i in range(n)}
    eqc: list = []
    for grp in qcls:
        by_sig: dict = {}
        for i in grp:
            by_sig.setdefault(sig[i], []).append(i)
        if len(by_sig) > 4:
            raise StructureError(f"{h.label}: {len(by_sig)} equivalence classes in one quasi-class")
        eqc.extend(sorted(by_sig.values()))
    h.eq_classes = sorted(eqc)

    # separation relation on quasi-classes
    def relation(reps):
        rel = set()
        for a, b, c, d in itertools.permutations(range(m), 4):
            ac, bd = combo(reps[a], reps[c]), combo(reps[b], reps[d])
            if ac is not None and bd is not None and crosses(idx.class_of(ac), idx.class_of(bd)):
                rel.add((a, b, c, d))
        return rel

    rel = relation([g[0] for g in qcls])
    if any(len(g) > 1 for g in qcls):
        if relation([g[1] if len(g) > 1 else g[0] for g in qcls]) != rel:
            raise StructureError(f"{h.label}: separation relation depends on representatives")
    check_separation_axioms(range(m), rel)
    h.relation = rel
    order = cyclic_order_from_relation(range(m), rel)
    h.cyclic_order = order
    pos = {q: p for p, q in enumerate(order)}

    # members versus corners
    q_of = {i: q for q, grp in enumerate(qcls) for i in grp}
    corners = set()
    for i, j in itertools.combinations(range(n), 2):
        c = combo(i, j)
        if c is None:
            continue
        d = (pos[q_of[i]] - pos[q_of[j]]) % m
        cid = idx.class_of(c).id
        if d in (1, m - 1):
            if cid in member_set:
                raise StructureError(f"{c} from adjacent quasi-classes lies in {h.label}")
            corners.add(cid)
        elif cid not in member_set:
            raise StructureError(f"{c} from separated quasi-classes is not in {h.label}")
    for cid in corners:
        if idx.crossing_ids(cid):
            raise CornerNotIsolated(f"corner class {cid} crosses {idx.crossing_ids(cid)}")
    h.corner_ids = sorted(corners)

    # coarse and fine blocks between neighbouring quasi-classes
    ends = idx.ends
    tright: dict = {}
    tleft: dict = {}
    for k in range(m):
        za, zb = order[k], order[(k + 1) % m]
        combos = [(i, j, combo(i, j)) for i in qcls[za] for j in qcls[zb] if combo(i, j) is not None]
        if not combos:
            raise CorrespondenceFailure(f"{h.label}: no corner between quasi-classes {za},{zb}")
        cut = combos[0][2]
        large = None
        for q in order:
            if q in (za, zb):
                continue
            for i in qcls[q]:
                hv = h.halves[i]
                if hv & cut.vertices:
                    continue
                for comp, e in cut.parts:
                    if hv <= comp:
                        if large is not None and large != frozenset(e):
                            raise StructureError(f"{h.label}: halves on both sides of corner {cut}")
                        large = frozenset(e)
        if large is None:
            raise StructureError(f"{h.label}: cannot locate the large side of {cut}")
        block = ends - large
        parts = sorted({c.partition for _, _, c in combos}, key=lambda p: (-len(p), p))
        pmax = parts[0]
        coarse = make_partition([block, large])
        if len(parts) > 2 or (len(parts) == 2 and parts[1] != coarse):
            raise CorrespondenceFailure(f"{h.label}: corners {parts} between {za},{zb}")
        if tuple(sorted(large)) not in pmax:
            raise CorrespondenceFailure(f"{h.label}: corner {pmax} does not keep the large side whole")
        h.coarse_blocks.append(block)
        h.fine_blocks.append(sorted((frozenset(b) for b in pmax if frozenset(b) != large), key=sorted))
        h.edge_partitions.append(parts)
        for i, j, c in combos:
            if c.partition == pmax:
                tright[(k, i)] = "f"
                tleft[(k, j)] = "f"
            else:
                tright.setdefault((k, i), "c")
                tleft.setdefault((k, j), "c")
        if len(parts) == 2:
            for i, j, c in combos:
                if (c.partition == pmax) != (tright[(k, i)] == "f" and tleft[(k, j)] == "f"):
                    raise CorrespondenceFailure(f"{h.label}: corner type of halves {i},{j} not a product")
    covered = [e for b in h.coarse_blocks for e in b]
    if len(covered) != len(set(covered)) or set(covered) != ends:
        raise StructureError(f"{h.label}: coarse blocks do not partition the ends")

    h.ring = build_ring(h, tleft, tright)
    ring_correspondence(idx, h)
    return h


def _positions(h: HashClass, p: int, tleft, tright):
    """Place the halves of the quasi-class at cyclic position ``p`` on a short path."""
    m = len(h.cyclic_order)
    q = h.cyclic_order[p]
    left_multi = len(h.fine_blocks[(p - 1) % m]) >= 2
    right_multi = len(h.fine_blocks[p]) >= 2
    for length in (1, 2, 3):
        placed = {}
        for i in h.q_classes[q]:
            lt = tleft.get(((p - 1) % m, i)) if left_multi else None
            rt = tright.get((p, i)) if right_multi else None
            ok = [
                x
                for x in range(length)
                if (lt != "f" or x == 0)
                and (lt != "c" or x > 0)
                and (rt != "f" or x == length - 1)
                and (rt != "c" or x < length - 1)
            ]
            if not ok:
                break
            placed[i] = ok[0]
        else:
            return length, placed
    raise CorrespondenceFailure(f"{h.label}: cannot place halves of quasi-class {q} on the ring")


def build_ring(h: HashClass, tleft=None, tright=None) -> Ring:
    tleft = tleft or {}
    tright = tright or {}
    m = len(h.cyclic_order)
    cycle: list = []
    first_last = []
    half_vertex = {}
    for p in range(m):
        length, placed = _positions(h, p, tleft, tright)
        names = [f"ring:{h.label}:cyc:{len(cycle) + x}" for x in range(length)]
        cycle.extend(names)
        first_last.append((names[0], names[-1]))
        for i, x in placed.items():
            half_vertex[i] = names[x]
    anchors = []
    for k in range(m):
        u = first_last[k][1]
        v = first_last[(k + 1) % m][0]
        for b in h.fine_blocks[k]:
            anchors.append((u, v, f"ring:{h.label}:anc:{len(anchors)}", b))
    return Ring(h.label, cycle, anchors, half_vertex=half_vertex)


def ring_correspondence(idx: CutIndex, h: HashClass) -> dict:
    """Match ring anchor-cut classes with member and corner classes, one to one."""
    ring = h.ring
    ring_classes: dict = {}
    for groups, pairs in ring.anchor_cuts().items():
        part = ring.end_partition_of(groups)
        if part in ring_classes:
            raise CorrespondenceFailure(f"{h.label}: two anchor partitions give {part}")
        ring_classes[part] = min(pairs, key=lambda uv: (ring.cycle.index(uv[0]), ring.cycle.index(uv[1])))
    wanted = {idx.classes[c].partition: c for c in h.member_ids + h.corner_ids}
    if set(ring_classes) != set(wanted):
        missing = sorted(set(wanted) - set(ring_classes))
        extra = sorted(set(ring_classes) - set(wanted))
        raise CorrespondenceFailure(f"{h.label}: ring lacks {missing}, ring adds {extra}")
    ring.cut_for_class = {wanted[p]: uv for p, uv in ring_classes.items()}
    return dict(ring.cut_for_class)


ring_cut_correspondence = ring_correspondence


# queries on a finished #-class


def is_mincut_combination(idx: CutIndex, h: HashClass, i: int, j: int) -> bool:
    """Is ``half_i | U | half_j`` one of the enumerated mincuts?"""
    if i == j:
        return False
    s = h.halves[i] | h.centre | h.halves[j]
    return len(s) == idx.kappa and s in idx.by_set


def quasi_equivalence(h: HashClass) -> list[list[frozenset]]:
    return [[h.halves[i] for i in grp] for grp in h.q_classes]


def separation_relation(h: HashClass) -> set:
    return set(h.relation)


def cyclic_order(h: HashClass) -> list[list[frozenset]]:
    """Quasi-classes around the circle, each given by its half-cuts."""
    return [[h.halves[i] for i in h.q_classes[q]] for q in h.cyclic_order]


def corner_cuts(h: HashClass) -> list[int]:
    return list(h.corner_ids)


def fine_and_coarse_partitions(h: HashClass) -> tuple:
    return h.fine_partition, h.coarse_partition
