"""Pretree of #-classes and totally isolated classes, its structure tree, and
the succulent obtained by gluing the rings along that tree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

import networkx as nx

from .crossing import HashClass, Ring
from .errors import (
    AxiomViolation,
    FMapIncomplete,
    GMapNotBijective,
    NotASucculent,
    NotATree,
    NotDividing,
    StructureError,
)
from .graph import Graph, canon, components
from .relations import divides


@dataclass
class PretreeElement:
    kind: str  # "hash" or "isolated"
    label: str
    coarse: tuple  # EndPartition
    member_partitions: list  # partitions of the cuts the element consists of
    payload: int  # hash class index or cut class id
    ring: Ring | None = None
    fine_blocks: list = field(default_factory=list)

    def block_index(self, other: "PretreeElement") -> int:
        """Index of the coarse block of ``self`` divided by the cuts of ``other``."""
        found = set()
        for p in other.member_partitions:
            try:
                found.add(divides(p, self.coarse)[0])
            except NotDividing:
                continue
        if len(found) != 1:
            raise StructureError(f"{other.label} divides blocks {sorted(found)} of {self.label}")
        return found.pop()


@dataclass
class Pretree:
    elements: list
    between: set  # (x, y, z) index triples: y between x and z

    def adjacent(self, x: int, z: int) -> bool:
        return x != z and not any((x, y, z) in self.between for y in range(len(self.elements)))


@dataclass
class StructureTree:
    elements: list  # element labels
    stars: list  # sorted tuples of element indices
    edges: list  # (element index, star index)

    def to_networkx(self):
        t = nx.Graph()
        t.add_nodes_from(("e", i) for i in range(len(self.elements)))
        t.add_nodes_from(("s", j) for j in range(len(self.stars)))
        t.add_edges_from((("e", i), ("s", j)) for i, j in self.edges)
        return t


@dataclass
class Succulent:
    graph: Graph
    anchors: frozenset
    f: dict  # end name -> anchor
    g: dict  # cut class id -> frozenset of two vertices
    endsets: dict  # anchor -> frozenset of ends it stands for
    cycles: list  # constituent cycles as vertex tuples
    appendages: dict = field(default_factory=dict)  # appendage anchor -> anchor it hangs on
    class_partitions: dict = field(default_factory=dict)  # cut class id -> end partition
    names: dict = field(default_factory=dict)  # ring vertex or kept anchor -> succulent vertex

    def anchor_partition(self, cut) -> tuple:
        return anchor_partition(self.graph, self.anchors, cut)


def anchor_partition(graph: Graph, anchors, cut) -> tuple:
    groups = [canon(c & anchors) for c in components(graph, cut) if c & anchors]
    return tuple(sorted(groups))


# pretree


def build_elements(hashes: list[HashClass], classes, totally_isolated) -> list[PretreeElement]:
    out = []
    for h in hashes:
        out.append(
            PretreeElement(
                "hash",
                h.label,
                h.coarse_partition,
                [classes[c].partition for c in h.member_ids],
                h.id,
                h.ring,
                [b for blocks in h.fine_blocks for b in blocks],
            )
        )
    for cid in totally_isolated:
        part = classes[cid].partition
        out.append(
            PretreeElement(
                "isolated", f"t{cid}", part, [part], cid,
                degenerate_ring(f"t{cid}", part, cid),
                [frozenset(b) for b in part],
            )
        )
    return out


def build_pretree(elements: list[PretreeElement]) -> Pretree:
    n = len(elements)
    blk = {}
    for y in range(n):
        for x in range(n):
            if x != y:
                blk[(y, x)] = elements[y].block_index(elements[x])
    between = {
        (x, y, z)
        for x, y, z in itertools.permutations(range(n), 3)
        if blk[(y, x)] != blk[(y, z)]
    }
    check_pretree_axioms(n, between)
    return Pretree(elements, between)


def check_pretree_axioms(n: int, between) -> None:
    for x, y, z in between:
        if len({x, y, z}) != 3:
            raise AxiomViolation(1, f"{(x, y, z)}")
        if (z, y, x) not in between:
            raise AxiomViolation(2, f"{(x, y, z)}")
        if (y, x, z) in between:
            raise AxiomViolation(3, f"{(x, y, z)}")
        for w in range(n):
            if w in (x, y, z):
                continue
            if (x, y, w) not in between and (z, y, w) not in between:
                raise AxiomViolation(4, f"{(x, y, z)} with {w}")


def maximal_stars(pt: Pretree) -> list[tuple]:
    adj = nx.Graph()
    adj.add_nodes_from(range(len(pt.elements)))
    for x, z in itertools.combinations(range(len(pt.elements)), 2):
        if pt.adjacent(x, z):
            adj.add_edge(x, z)
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(adj))


def pretree_to_tree(pt: Pretree, stars: list[tuple]) -> StructureTree:
    edges = sorted((i, j) for j, s in enumerate(stars) for i in s)
    t = StructureTree([e.label for e in pt.elements], stars, edges)
    if not nx.is_tree(t.to_networkx()):
        raise NotATree("element/star incidence graph is not a tree")
    return t


def degenerate_ring(label: str, partition, cid: int | None = None) -> Ring:
    """Segment of two vertices with one anchor triangle per partition block."""
    s0, s1 = f"ring:{label}:cyc:0", f"ring:{label}:cyc:1"
    anchors = [(s0, s1, f"ring:{label}:anc:{i}", frozenset(b)) for i, b in enumerate(partition)]
    ring = Ring(label, [s0, s1], anchors, degenerate=True)
    if cid is not None:
        ring.cut_for_class = {cid: (s0, s1)}
    return ring


# gluing


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            lo, hi = sorted((ra, rb))
            self.parent[hi] = lo


def assemble_succulent(pt: Pretree, tree: StructureTree, hashes: list[HashClass], classes) -> Succulent:
    elems = pt.elements
    ends = frozenset(e for b in classes[0].partition for e in b)
    uf = _UnionFind()
    deleted: set = set()
    block = {}
    for el in elems:
        for _, _, a, b in el.ring.anchors:
            block[a] = b

    # (1) elements sharing a corner class are glued along that corner's ring edge
    corner_owner: dict = {}
    for el in elems:
        if el.kind == "hash":
            for cid in hashes[el.payload].corner_ids:
                corner_owner.setdefault(cid, []).append((el, el.ring.cut_for_class[cid]))
    shared_port: dict = {}  # (x label, y label) -> deleted anchor of x facing y
    for cid, owners in sorted(corner_owner.items()):
        if len(owners) < 2:
            continue
        for el, (u, v) in owners:
            cyc = el.ring.cycle
            if (cyc.index(v) - cyc.index(u)) % len(cyc) not in (1, len(cyc) - 1):
                raise NotASucculent(f"corner {cid} of {el.label} is not a ring edge")
        _, (u0, v0) = owners[0]
        for _, (u, v) in owners[1:]:
            uf.union(u0, u)
            uf.union(v0, v)
        large = {el.label: ends - _edge_block(el, uv) for el, uv in owners}
        kept = []
        for el, uv in owners:
            for a in _edge_anchors(el.ring, *uv):
                facing = [o for o, _ in owners if o is not el and block[a] <= large[o.label]]
                if facing:
                    deleted.add(a)
                    for o in facing:
                        shared_port[(el.label, o.label)] = a
                else:
                    kept.append(a)
        by_block: dict = {}
        for a in kept:
            by_block.setdefault(block[a], []).append(a)
        for grp in by_block.values():
            for a in grp[1:]:
                uf.union(grp[0], a)

    # (2) other neighbours in the tree meet at a shared anchor
    def port(x: PretreeElement, y: PretreeElement):
        if (x.label, y.label) in shared_port:
            return shared_port[(x.label, y.label)]
        hits = [
            a
            for _, _, a, s in x.ring.anchors
            for _, _, _, t in y.ring.anchors
            if s | t == ends
        ]
        if len(hits) != 1:
            raise NotASucculent(f"{len(hits)} ports between {x.label} and {y.label}")
        return hits[0]

    n = len(elems)
    ports = {(x, y): port(elems[x], elems[y]) for x, y in itertools.permutations(range(n), 2)}
    for star in tree.stars:
        for x, y in itertools.combinations(star, 2):
            if (elems[x].label, elems[y].label) in shared_port:
                continue
            # a third element telling x and y apart means they do not touch
            if any(ports[(z, x)] != ports[(z, y)] for z in range(n) if z not in (x, y)):
                continue
            uf.union(ports[(x, y)], ports[(y, x)])

    # (3) assemble the graph
    gr = Graph()
    cycles = []
    for el in elems:
        ring = el.ring
        cyc = tuple(uf.find(v) for v in ring.cycle)
        for v in cyc:
            gr.add_vertex(v)
        if not ring.degenerate:
            cycles.append(cyc)
        for u, v in ring.cycle_edges():
            a, b = uf.find(u), uf.find(v)
            if gr.multiplicity(a, b) == 0:
                gr.add_edge(a, b)
        for u, v, a, _ in ring.anchors:
            if a in deleted:
                continue
            ra, ru, rv = uf.find(a), uf.find(u), uf.find(v)
            for w in (ru, rv):
                if gr.multiplicity(ra, w) == 0:
                    gr.add_edge(ra, w)
            cycles.append((ra, ru, rv))
    members: dict = {}
    for a in block:
        if a not in deleted:
            members.setdefault(uf.find(a), []).append(a)
    anchors = frozenset(members)
    endsets = {r: frozenset.intersection(*(block[a] for a in grp)) for r, grp in members.items()}

    # (5) f, with double-edge appendages where no end vertex fits
    groups: dict = {}
    for e in sorted(ends):
        sig = tuple(next(i for i, b in enumerate(c.partition) if e in b) for c in classes)
        groups.setdefault(sig, []).append(e)
    f, appendages = {}, {}
    for grp in sorted(groups.values()):
        gs = frozenset(grp)
        exact = [a for a in sorted(anchors) if endsets[a] == gs and gr.degree(a) <= 2]
        if exact:
            target = exact[0]
        else:
            hosts = sorted((len(endsets[a]), a) for a in anchors if gs <= endsets[a])
            if not hosts:
                raise FMapIncomplete(f"no anchor contains ends {sorted(gs)}")
            host = hosts[0][1]
            target = f"app:{grp[0]}"
            gr.add_edge(target, host, 2)
            appendages[target] = host
            endsets[target] = gs
            cycles.append((target, host))
        for e in grp:
            f[e] = target
    anchors = anchors | frozenset(appendages)

    # (6) g
    g = {}
    for el in elems:
        for cid, (u, v) in el.ring.cut_for_class.items():
            cut = frozenset((uf.find(u), uf.find(v)))
            if cid in g and g[cid] != cut:
                raise GMapNotBijective(f"class {cid} maps to {canon(g[cid])} and {canon(cut)}")
            g[cid] = cut
    missing = [c.id for c in classes if c.id not in g]
    if missing:
        raise GMapNotBijective(f"classes {missing} have no image")
    names = {}
    for el in elems:
        for v in el.ring.cycle + [a for a in el.ring.anchor_names if a not in deleted]:
            names[v] = uf.find(v)
    return Succulent(
        gr, anchors, f, g, endsets, sorted(set(cycles)), appendages,
        {c.id: c.partition for c in classes}, names,
    )


def _edge_block(el: PretreeElement, uv) -> frozenset:
    """Coarse block of a hash element sitting at ring edge ``uv``."""
    blocks = [b for x, y, _, b in el.ring.anchors if {x, y} == set(uv)]
    if not blocks:
        raise NotASucculent(f"edge {uv} of {el.label} carries no anchors")
    return frozenset().union(*blocks)


def _edge_anchors(ring: Ring, u, v) -> list[str]:
    return [a for x, y, a, _ in ring.anchors if {x, y} == {u, v}]


# checking the result


def enumerate_anchor_cuts(s: Succulent) -> dict:
    """Minimum-size anchor-free vertex sets separating anchors, by anchor partition."""
    free = [v for v in s.graph.vertices if v not in s.anchors]
    for k in range(1, len(free) + 1):
        found: dict = {}
        for cut in itertools.combinations(free, k):
            part = s.anchor_partition(cut)
            if len(part) >= 2:
                found.setdefault(part, []).append(frozenset(cut))
        if found:
            return found
    return {}


def check_shape(s: Succulent) -> list[str]:
    """Cycles meet in at most a vertex or an edge and are arranged like a tree."""
    bad = []
    gr = s.graph
    cycles = [tuple(c) for c in s.cycles]

    def cyc_edges(c):
        if len(c) == 2:
            return {frozenset(c)}
        return {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}

    ce = [cyc_edges(c) for c in cycles]
    for c, es in zip(cycles, ce):
        for e in es:
            a, b = tuple(e)
            if gr.multiplicity(a, b) < (2 if len(c) == 2 else 1):
                bad.append(f"cycle {c} uses a missing edge {a}-{b}")
    for i, j in itertools.combinations(range(len(cycles)), 2):
        common = set(cycles[i]) & set(cycles[j])
        if len(common) > 2 or (len(common) == 2 and frozenset(common) not in ce[i] & ce[j]):
            bad.append(f"cycles {cycles[i]} and {cycles[j]} meet in {sorted(common)}")
    covered = set().union(*ce) if ce else set()
    for u, v, m in gr.edges():
        if frozenset((u, v)) not in covered:
            bad.append(f"edge {u}-{v} lies on no cycle")
        if m > 2 or (m == 2 and (u, v) not in {tuple(sorted(c)) for c in cycles if len(c) == 2}):
            bad.append(f"unexpected parallel edges {u}-{v}")
    simple = nx.Graph()
    simple.add_nodes_from(gr.vertices)
    simple.add_edges_from((u, v) for u, v, _ in gr.edges())
    for blk in nx.biconnected_components(simple):
        inside = [i for i, c in enumerate(cycles) if set(c) <= blk and len(c) > 2]
        if len(blk) == 2:
            continue
        inc = nx.Graph()
        inc.add_nodes_from(("c", i) for i in inside)
        for i, j in itertools.combinations(inside, 2):
            for e in ce[i] & ce[j]:
                inc.add_edge(("c", i), ("e", e))
                inc.add_edge(("c", j), ("e", e))
        if inc.number_of_nodes() == 0 or not nx.is_tree(inc):
            bad.append(f"cycles of block {sorted(blk)} do not form a tree")
    return bad


@dataclass
class TheoremReport:
    failures: list = field(default_factory=list)
    anchor_classes: int = 0
    checked_pairs: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_theorem(end_names, classes, s: Succulent) -> TheoremReport:
    """Check the succulent against the cut classes of the graph, exhaustively."""
    rep = TheoremReport()
    fail = rep.failures.append
    gr, anchors = s.graph, s.anchors
    for a, b, _ in gr.edges():
        if a in anchors and b in anchors and gr.degree(a) > 2 and gr.degree(b) > 2:
            fail(f"adjacent anchors {a},{b} neither an end vertex")
    for v in gr.vertices:
        if v not in anchors and not (gr.neighbors(v) & anchors):
            fail(f"non-anchor {v} has no anchor neighbour")
    found = enumerate_anchor_cuts(s)
    rep.anchor_classes = len(found)
    size = len(next(iter(next(iter(found.values()))))) if found else None
    images: dict = {}
    for c in classes:
        cut = s.g.get(c.id)
        if cut is None:
            fail(f"class {c.id} has no image")
            continue
        if cut & anchors or not cut <= set(gr.vertices):
            fail(f"image of class {c.id} is not an anchor-free vertex set")
            continue
        part = s.anchor_partition(cut)
        if len(cut) != size or part not in found:
            fail(f"image {canon(cut)} of class {c.id} is not a minimum anchor cut")
        if part in images:
            fail(f"classes {images[part]} and {c.id} share the image partition")
        images[part] = c.id
    if found and set(images) != set(found):
        fail(f"{len(set(found) - set(images))} anchor-cut classes have no preimage")
    for e in end_names:
        if s.f.get(e) not in anchors:
            fail(f"end {e} is not mapped to an anchor")
    if rep.failures:
        return rep
    for c in classes:
        comp = {}
        for i, cc in enumerate(components(gr, s.g[c.id])):
            for v in cc:
                comp[v] = i
        for e1, e2 in itertools.combinations(end_names, 2):
            rep.checked_pairs += 1
            apart = not any(e1 in b and e2 in b for b in c.partition)
            if apart != (comp[s.f[e1]] != comp[s.f[e2]]):
                fail(f"class {c.id} and ends {e1},{e2}: separation not preserved")
    image = set(s.f.values())
    for a in sorted(anchors):
        if gr.degree(a) <= 2 and a not in image:
            fail(f"end vertex {a} is not the image of an end")
    rep.failures.extend(check_shape(s))
    return rep


def collapse_variant(s: Succulent) -> Succulent:
    """Fold every double-edge appendage into the anchor it hangs on."""
    gr = s.graph.copy()
    for app in s.appendages:
        gr.remove_vertex(app)
    f = {e: s.appendages.get(a, a) for e, a in s.f.items()}
    anchors = s.anchors - frozenset(s.appendages)
    for a, b, _ in gr.edges():
        if a in anchors and b in anchors:
            raise NotASucculent(f"anchors {a},{b} adjacent after collapsing")
    endsets = {a: es for a, es in s.endsets.items() if a in anchors}
    cycles = [c for c in s.cycles if not set(c) & set(s.appendages)]
    return replace(s, graph=gr, anchors=anchors, f=f, endsets=endsets, cycles=cycles, appendages={})


def drop_anchor(s: Succulent, anchor: str) -> Succulent:
    """Mutation for negative controls: delete one anchor vertex."""
    gr = s.graph.copy()
    gr.remove_vertex(anchor)
    return replace(
        s, graph=gr, anchors=s.anchors - {anchor},
        f={e: a for e, a in s.f.items() if a != anchor},
        cycles=[c for c in s.cycles if anchor not in c],
    )


def add_edge(s: Succulent, u: str, v: str) -> Succulent:
    """Mutation for negative controls: add one edge."""
    gr = s.graph.copy()
    gr.add_edge(u, v)
    return replace(s, graph=gr)
