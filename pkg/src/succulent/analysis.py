"""End-to-end vertex pipeline: mincuts, crossing structure, pretree, succulent."""
from __future__ import annotations

from dataclasses import dataclass, field

from .crossing import CutIndex, HashClass, analyse_hash_class, hash_classes
from .ends import AugmentedGraph, EndSpec, SliceReport, attach_markers, reduce_slices
from .errors import NotConnected, StructureError
from .graph import Graph
from .mincuts import DEFAULT_BUDGET, enumerate_mincuts, group_into_classes, kappa
from .relations import CrossingGraph, crossing_graph
from .succulent import (
    Pretree,
    StructureTree,
    Succulent,
    TheoremReport,
    assemble_succulent,
    build_elements,
    build_pretree,
    maximal_stars,
    pretree_to_tree,
    verify_theorem,
)


@dataclass
class Analysis:
    graph: Graph
    spec: EndSpec
    original: AugmentedGraph
    reduced: AugmentedGraph
    slices: SliceReport
    kappa: int
    cuts: list
    classes: list
    crossing: CrossingGraph
    hashes: list = field(default_factory=list)
    isolated: list = field(default_factory=list)
    totally_isolated: list = field(default_factory=list)
    pretree: Pretree | None = None
    tree: StructureTree | None = None
    succulent: Succulent | None = None

    @property
    def index(self) -> CutIndex:
        return CutIndex(self.reduced, self.kappa, self.cuts, self.classes, self.crossing)

    @property
    def end_names(self) -> tuple[str, ...]:
        return self.reduced.end_names

    def verify(self) -> TheoremReport:
        return verify_theorem(self.end_names, self.classes, self.succulent)


def mincut_stage(g: Graph, spec: EndSpec, budget: int = DEFAULT_BUDGET, strategy: str = "exhaustive"):
    """Augment, compute the mincuts, remove slices and recompute on the reduced graph."""
    if not g.is_connected():
        raise NotConnected("graph not connected")
    ag = attach_markers(g, spec)
    k = kappa(ag)
    cuts = enumerate_mincuts(ag, k, strategy, budget)
    red, report = reduce_slices(ag, [c.vertices for c in cuts])
    if not report.empty:
        cuts = enumerate_mincuts(red, k, strategy, budget)
        again, rep2 = reduce_slices(red, [c.vertices for c in cuts])
        if not rep2.empty:
            raise StructureError("slice reduction is not a fixed point")
        if kappa(red) != k:
            raise StructureError("slice reduction changed the connectivity")
    return ag, red, report, k, cuts


def analyze(g: Graph, spec: EndSpec, budget: int = DEFAULT_BUDGET, strategy: str = "exhaustive") -> Analysis:
    ag, red, report, k, cuts = mincut_stage(g, spec, budget, strategy)
    classes = group_into_classes(cuts)
    cg = crossing_graph(classes)
    a = Analysis(g, spec, ag, red, report, k, cuts, classes, cg)
    groups, a.isolated = hash_classes(cg)
    idx = a.index
    a.hashes = [analyse_hash_class(idx, i, m) for i, m in enumerate(groups)]
    corners = {c for h in a.hashes for c in h.corner_ids}
    a.totally_isolated = [c for c in a.isolated if c not in corners]
    elems = build_elements(a.hashes, classes, a.totally_isolated)
    a.pretree = build_pretree(elems)
    a.tree = pretree_to_tree(a.pretree, maximal_stars(a.pretree))
    a.succulent = assemble_succulent(a.pretree, a.tree, a.hashes, classes)
    return a
