"""Minimum edge cuts through the vertex machinery.

Subdividing every edge and blowing each original vertex up into an
``(n+1)``-clique turns minimum edge cuts into minimum vertex cuts made of
subdivision vertices only.  The succulent of that graph has plain rings,
which collapse to the cycles of a cactus.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .analysis import Analysis, analyze
from .ends import EndSpec, MARKER_PREFIX, attach_markers, make_partition
from .errors import InputError, NonEdgeCutArtifact, NotConnected
from .graph import Graph, components, disjoint_path_count
from .succulent import collapse_variant

EDGE_SEP = "~"
CLIQUE_SEP = "#"


def edge_vertex(u: str, v: str) -> str:
    a, b = sorted((u, v))
    return f"{a}{EDGE_SEP}{b}"


def barycentric_subdivide(g: Graph) -> Graph:
    """Insert one vertex ``u~v`` on every edge ``uv``."""
    if not g.is_simple():
        raise InputError("barycentric subdivision needs a simple graph")
    for v in g.vertices:
        if EDGE_SEP in v or CLIQUE_SEP in v:
            raise InputError(f"vertex name {v!r} uses a reserved character")
    b = Graph(g.vertices)
    for u, v, _ in g.edges():
        w = edge_vertex(u, v)
        b.add_edge(u, w)
        b.add_edge(w, v)
    return b


def clique_names(v: str, n: int) -> list[str]:
    return [f"{v}{CLIQUE_SEP}{i}" for i in range(n + 1)]


def thicken(g: Graph, originals, n: int) -> Graph:
    """Replace each original vertex by an ``(n+1)``-clique joined to its old neighbours."""
    if n < 1:
        raise ValueError("n must be >= 1")
    originals = set(originals)
    out = Graph(v for v in g.vertices if v not in originals)
    for v in sorted(originals):
        vs = clique_names(v, n)
        for x in vs:
            out.add_vertex(x)
        for x, y in itertools.combinations(vs, 2):
            out.add_edge(x, y)
    for u, v, _ in g.edges():
        us = clique_names(u, n) if u in originals else [u]
        ws = clique_names(v, n) if v in originals else [v]
        for x in us:
            for y in ws:
                out.add_edge(x, y)
    return out


def min_edge_end_cut(g: Graph, spec: EndSpec) -> int:
    """Fewest edges separating two of the terminal sets (flow on the subdivision)."""
    b = barycentric_subdivide(g)
    ag = attach_markers(b, spec)
    originals = frozenset(g.vertices)
    best = None
    for x, y in itertools.combinations(ag.end_names, 2):
        k, _ = disjoint_path_count(
            ag.graph, {ag.markers[x]}, {ag.markers[y]}, forbidden=originals | ag.marker_set
        )
        best = k if best is None else min(best, k)
    return best


@dataclass
class Cactus:
    graph: Graph  # multigraph; a 2-cycle is a doubled edge
    f: dict  # end name -> cactus vertex
    g: dict  # cut class id -> frozenset of edge labels
    edges: list  # (u, v, label) with one entry per edge
    class_partitions: dict = field(default_factory=dict)
    analysis: Analysis | None = None

    def cut_partition(self, labels) -> tuple:
        """End partition left by deleting the edges with the given labels."""
        h = Graph(self.graph.vertices)
        for u, v, lab in self.edges:
            if lab not in labels:
                h.add_edge(u, v)
        blocks = []
        for comp in components(h):
            blocks.append([e for e, a in self.f.items() if a in comp])
        return make_partition(blocks)

    def is_cactus(self) -> bool:
        """Connected, and every edge lies on at most one cycle."""
        import networkx as nx

        if not self.graph.is_connected():
            return False
        simple = nx.Graph((u, v) for u, v, _ in self.graph.edges())
        simple.add_nodes_from(self.graph.vertices)
        for blk in nx.biconnected_component_edges(simple):
            verts = {x for e in blk for x in e}
            mult = [self.graph.multiplicity(u, v) for u, v in blk]
            if len(blk) == 1:
                if mult[0] > 2:
                    return False
            elif len(blk) != len(verts) or any(m != 1 for m in mult):
                return False
        return True


def _spec_on_thickened(spec: EndSpec, n: int) -> EndSpec:
    return EndSpec(
        tuple((name, frozenset(x for v in vs for x in clique_names(v, n))) for name, vs in spec.ends)
    )


def _check_edge_shape(a: Analysis, n: int) -> None:
    if a.kappa != n:
        raise NonEdgeCutArtifact(f"vertex connectivity {a.kappa} differs from edge cut size {n}")
    for c in a.cuts:
        if any(EDGE_SEP not in v for v in c.vertices):
            raise NonEdgeCutArtifact(f"{c} contains a clique vertex")
        if len(c.parts) != 2:
            raise NonEdgeCutArtifact(f"{c} leaves {len(c.parts)} components")
    for h in a.hashes:
        if h.centre:
            raise NonEdgeCutArtifact(f"{h.label} has a non-empty centre")
        if len(h.eq_classes) != len(h.q_classes):
            raise NonEdgeCutArtifact(f"{h.label}: quasi-equivalence is coarser than equivalence")


def collapse_to_cactus(a: Analysis) -> Cactus:
    """Rings become cycles on their anchors; degenerate rings become bridges or 2-cycles."""
    s = collapse_variant(a.succulent)
    names = s.names
    edges = []
    g = {}
    for el in a.pretree.elements:
        ring = el.ring
        if any(anc not in names for anc in ring.anchor_names):
            raise NonEdgeCutArtifact(f"{el.label}: anchors were merged away at a shared corner")
        if ring.degenerate:
            if len(ring.anchors) != 2:
                raise NonEdgeCutArtifact(f"{el.label} splits into {len(ring.anchors)} parts")
            (x, y) = (names[ring.anchors[0][2]], names[ring.anchors[1][2]])
            labs = [f"{el.label}:{i}" for i in range(1 if a.kappa == 1 else 2)]
            for lab in labs:
                edges.append((x, y, lab))
            g[el.payload] = frozenset(labs)
            continue
        by_edge: dict = {}
        for u, v, anc, _ in ring.anchors:
            by_edge.setdefault((u, v), []).append(names[anc])
        if any(len(v) != 1 for v in by_edge.values()) or len(by_edge) != len(ring.cycle):
            raise NonEdgeCutArtifact(f"{el.label}: ring edges do not carry one anchor each")
        cyc = ring.cycle
        m = len(cyc)
        for i in range(m):
            # cycle vertex i sits between the anchors of its two ring edges
            prev = by_edge[(cyc[i - 1], cyc[i])][0]
            nxt = by_edge[(cyc[i], cyc[(i + 1) % m])][0]
            edges.append((prev, nxt, names[cyc[i]]))
        for cid, (u, v) in ring.cut_for_class.items():
            g[cid] = frozenset((names[u], names[v]))
    edges, g = _normalise(s, edges, g)
    rename = _readable_names(s.f, {x for e in edges for x in e[:2]})
    edges = sorted((*sorted((rename[u], rename[v])), lab) for u, v, lab in edges)
    gr = Graph(sorted(set(rename.values())))
    for u, v, _ in edges:
        gr.add_edge(u, v)
    f = {e: rename[x] for e, x in s.f.items()}
    return Cactus(gr, f, g, edges, dict(s.class_partitions), a)


def _readable_names(f: dict, nodes) -> dict:
    """Cactus vertices named after the ends they carry; the rest numbered."""
    carried: dict = {}
    for e, x in f.items():
        carried.setdefault(x, []).append(e)
    rename = {x: "+".join(sorted(es)) for x, es in carried.items()}
    empty = sorted(set(nodes) - set(carried))
    for i, x in enumerate(empty):
        rename[x] = f"empty{i}"
    return rename


def _normalise(s, edges, g):
    """An end-free vertex carrying exactly three 2-cycles becomes a triangle."""
    image = set(s.f.values())
    changed = True
    while changed:
        changed = False
        inc: dict = {}
        for i, (u, v, lab) in enumerate(edges):
            inc.setdefault(u, []).append(i)
            inc.setdefault(v, []).append(i)
        for x in sorted(inc):
            if x in image or len(inc[x]) != 6:
                continue
            others = {}
            for i in inc[x]:
                u, v, lab = edges[i]
                others.setdefault(v if u == x else u, []).append(i)
            if len(others) != 3 or any(len(ix) != 2 for ix in others.values()):
                continue
            nbrs = sorted(others)
            # the 2-cycle toward a neighbour becomes the triangle edges leaving that neighbour
            relabel = {}
            new = []
            for y, z in itertools.combinations(nbrs, 2):
                lab = f"tri:{x}:{y}:{z}"
                new.append((y, z, lab))
            for cid, labs in list(g.items()):
                hit = [y for y in nbrs if labs == frozenset(edges[i][2] for i in others[y])]
                if hit:
                    y = hit[0]
                    g[cid] = frozenset(lab for a_, b_, lab in new if y in (a_, b_))
            drop = set(inc[x])
            edges = [e for i, e in enumerate(edges) if i not in drop] + new
            changed = True
            break
    return edges, g


def edge_end_pipeline(g: Graph, spec: EndSpec, budget: int | None = None) -> Cactus:
    """Cactus of the minimum edge cuts separating the declared ends."""
    if not g.is_connected():
        raise NotConnected("graph not connected")
    spec.validate(g)
    n = min_edge_end_cut(g, spec)
    star = thicken(barycentric_subdivide(g), g.vertices, n)
    kw = {} if budget is None else {"budget": budget}
    a = analyze(star, _spec_on_thickened(spec, n), **kw)
    _check_edge_shape(a, n)
    return collapse_to_cactus(a)


def finite_edge_pipeline(g: Graph, budget: int | None = None) -> Cactus:
    """Cactus of all minimum edge cuts: every vertex is treated as an end."""
    if len(g) < 2:
        raise InputError("need at least two vertices")
    for v in g.vertices:
        if v.startswith(MARKER_PREFIX):
            raise InputError(f"vertex name {v!r} uses the marker prefix")
    spec = EndSpec(tuple((v, frozenset([v])) for v in g.vertices))
    return edge_end_pipeline(g, spec, budget)
