"""Ends of a finite graph, modelled by terminal sets with uncuttable markers.

Each end gets one fresh marker vertex adjacent to its whole terminal set.
Cuts may never contain a marker, so a marker behaves like an infinite chain
of large cliques hanging off the terminal set: no small cut can split it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    MarkerInCut,
    OverlappingEnds,
    StructureError,
    TooLarge,
    UnknownTerminalVertex,
)
from .graph import Graph, boundary, canon, components, disjoint_path_count

MARKER_PREFIX = "ω:"

EndPartition = tuple  # tuple of sorted tuples of end names, ordered by first element


def make_partition(blocks) -> EndPartition:
    """Canonical form of a partition given as any iterable of blocks."""
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


def block_of(partition: EndPartition, end: str) -> int:
    for i, b in enumerate(partition):
        if end in b:
            return i
    raise KeyError(end)


@dataclass(frozen=True)
class EndSpec:
    """Named terminal sets standing for the ends of the graph."""

    ends: tuple  # ((name, frozenset of vertices), ...)

    @classmethod
    def from_dict(cls, d) -> "EndSpec":
        return cls(tuple((name, frozenset(vs)) for name, vs in d.items()))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.ends)

    def terminals(self, name: str) -> frozenset:
        return dict(self.ends)[name]

    def validate(self, g: Graph) -> None:
        if len(self.ends) < 2:
            raise OverlappingEnds("at least two ends are required")
        names = self.names
        if len(set(names)) != len(names):
            raise OverlappingEnds("duplicate end name")
        seen: dict[str, str] = {}
        for name, vs in self.ends:
            if not vs:
                raise OverlappingEnds(f"end {name} has an empty terminal set")
            for v in sorted(vs):
                if v not in g:
                    raise UnknownTerminalVertex(f"end {name}: unknown vertex {v}")
                if v in seen:
                    raise OverlappingEnds(f"vertex {v} belongs to ends {seen[v]} and {name}")
                seen[v] = name


@dataclass
class AugmentedGraph:
    base: Graph
    spec: EndSpec
    graph: Graph
    markers: dict  # end name -> marker vertex
    marker_end: dict = field(default_factory=dict)  # marker vertex -> end name

    @property
    def end_names(self) -> tuple[str, ...]:
        return tuple(sorted(self.markers))

    @property
    def marker_set(self) -> frozenset:
        return frozenset(self.marker_end)

    @property
    def cuttable(self) -> tuple[str, ...]:
        """Vertices allowed in cuts: every base vertex."""
        return self.base.vertices


def attach_markers(g: Graph, spec: EndSpec) -> AugmentedGraph:
    spec.validate(g)
    aug = g.copy()
    markers, marker_end = {}, {}
    for name, vs in spec.ends:
        m = MARKER_PREFIX + name
        if m in g:
            raise OverlappingEnds(f"marker name {m} collides with a graph vertex")
        for v in sorted(vs):
            aug.add_edge(m, v)
        markers[name] = m
        marker_end[m] = name
    return AugmentedGraph(g, spec, aug, markers, marker_end)


def split(ag: AugmentedGraph, cut) -> list[tuple[frozenset, tuple]]:
    """Components of the augmented graph minus ``cut`` with the ends each holds."""
    cut = frozenset(cut)
    if cut & ag.marker_set:
        raise MarkerInCut(f"cut contains markers {canon(cut & ag.marker_set)}")
    out = []
    for comp in components(ag.graph, cut):
        ends = tuple(sorted(ag.marker_end[m] for m in comp & ag.marker_set))
        out.append((comp, ends))
    return out


def end_partition(ag: AugmentedGraph, cut) -> EndPartition:
    return make_partition(e for _, e in split(ag, cut))


def is_end_cut(ag: AugmentedGraph, cut) -> bool:
    return len(end_partition(ag, cut)) >= 2


@dataclass
class SliceReport:
    slices: list  # [(slice vertex set, generating cut)]
    added_edges: list  # [(u, v)]

    @property
    def empty(self) -> bool:
        return not self.slices


def find_slices(ag: AugmentedGraph, mincuts) -> list[tuple[frozenset, frozenset]]:
    """Marker-free components of every mincut, each with its first generating cut."""
    found: dict[frozenset, frozenset] = {}
    for cut in mincuts:
        for comp, ends in split(ag, cut):
            if not ends and comp not in found:
                found[comp] = frozenset(cut)
    return sorted(found.items(), key=lambda kv: canon(kv[0]))


def reduce_slices(ag: AugmentedGraph, mincuts) -> tuple[AugmentedGraph, SliceReport]:
    """Delete every slice and make each slice boundary a clique."""
    mincuts = [frozenset(c) for c in mincuts]
    slices = find_slices(ag, mincuts)
    for i, (s, _) in enumerate(slices):
        for t, _ in slices[i + 1:]:
            if s & t:
                raise StructureError(f"slices {canon(s)} and {canon(t)} overlap")
        for cut in mincuts:
            if s & cut:
                raise StructureError(f"slice {canon(s)} meets mincut {canon(cut)}")
    if not slices:
        return ag, SliceReport([], [])
    doomed = frozenset().union(*(s for s, _ in slices))
    g = ag.base.induced(set(ag.base.vertices) - doomed)
    added = []
    for s, _ in slices:
        bd = canon(boundary(ag.base, s))
        for u, v in itertools.combinations(bd, 2):
            if g.multiplicity(u, v) == 0:
                g.add_edge(u, v)
                added.append((u, v))
    return attach_markers(g, ag.spec), SliceReport(slices, sorted(set(added)))


def detect_inseparable_sets(g: Graph, kappa: int, budget: int = 16) -> list[frozenset]:
    """Maximal sets of at least ``kappa + 1`` vertices no ``kappa`` vertices can split.

    The pairwise test uses the flow primitive; every returned set is then
    confirmed by trying all vertex sets of size at most ``kappa``.
    """
    import networkx as nx

    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    if len(g) > budget:
        raise TooLarge(f"{len(g)} vertices exceeds the inseparability budget {budget}")
    pairs = nx.Graph()
    pairs.add_nodes_from(g.vertices)
    for u, v in itertools.combinations(g.vertices, 2):
        if g.multiplicity(u, v) or disjoint_path_count(g, {u}, {v})[0] > kappa:
            pairs.add_edge(u, v)
    found = []
    for clique in nx.find_cliques(pairs):
        j = frozenset(clique)
        if len(j) >= kappa + 1:
            found.append(j)
    verts = g.vertices
    for j in found:
        for k in range(kappa + 1):
            for cut in itertools.combinations(verts, k):
                rest = j - set(cut)
                if rest and sum(1 for c in components(g, cut) if c & rest) > 1:
                    raise StructureError(f"{canon(j)} split by {cut}")
    return sorted(found, key=canon)
