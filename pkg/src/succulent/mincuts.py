"""Minimum end cuts: their size, complete enumeration, and equivalence classes."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .ends import AugmentedGraph, EndPartition, make_partition, split
from .errors import BudgetExceeded, StructureError
from .graph import boundary, canon, disjoint_path_count, iter_bits

DEFAULT_BUDGET = 2_000_000


@dataclass(eq=False)
class Cut:
    vertices: frozenset
    partition: EndPartition
    parts: tuple  # ((component, ends), ...) in canonical component order
    is_A: bool | None = None
    is_B: bool | None = None

    @property
    def component_count(self) -> int:
        """Number of components holding at least one end."""
        return len(self.partition)

    @property
    def total_components(self) -> int:
        return len(self.parts)

    @property
    def key(self) -> tuple[str, ...]:
        return canon(self.vertices)

    def component_of_end(self, end: str) -> frozenset:
        for comp, ends in self.parts:
            if end in ends:
                return comp
        raise KeyError(end)

    def __repr__(self) -> str:
        return f"Cut({'/'.join(self.key)})"


@dataclass(eq=False)
class CutClass:
    id: int
    partition: EndPartition
    members: list = field(default_factory=list)
    is_A: bool = False
    is_B: bool = False

    @property
    def rep(self) -> Cut:
        return self.members[0]

    def __repr__(self) -> str:
        return f"CutClass({self.id}, {self.partition})"


def make_cut(ag: AugmentedGraph, vertices) -> Cut:
    vertices = frozenset(vertices)
    parts = tuple(split(ag, vertices))
    return Cut(vertices, make_partition(e for _, e in parts), parts)


def kappa(ag: AugmentedGraph) -> int:
    """Minimum size of a vertex set separating some pair of markers."""
    best = None
    names = ag.end_names
    for a, b in itertools.combinations(names, 2):
        n, _ = disjoint_path_count(
            ag.graph, {ag.markers[a]}, {ag.markers[b]}, forbidden=ag.marker_set
        )
        best = n if best is None else min(best, n)
    if best is None:
        raise StructureError("need at least two ends")
    return best


def _exhaustive(ag: AugmentedGraph, k: int) -> list[frozenset]:
    bi = ag.graph.bits()
    mmask = bi.mask(ag.marker_set)
    first = mmask & -mmask
    adj = bi.adj
    idx = [bi.index[v] for v in ag.cuttable]
    found = []
    for combo in itertools.combinations(idx, k):
        cm = 0
        for i in combo:
            cm |= 1 << i
        allowed = bi.full & ~cm
        # flood from one marker; an end cut leaves some marker unreached
        comp = first
        frontier = first
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            nxt &= allowed & ~comp
            comp |= nxt
            frontier = nxt
            if comp & mmask == mmask:
                break
        if comp & mmask != mmask:
            found.append(bi.unmask(cm))
    return found


def _path_branching(ag: AugmentedGraph, k: int) -> list[frozenset]:
    """Branch on the vertices of a marker-to-marker path (finiteness induction)."""
    bi = ag.graph.bits()
    mmask = bi.mask(ag.marker_set)
    cuttable = bi.mask(ag.cuttable)
    found: set[int] = set()

    def path(src: int, dst: int, removed: int) -> list[int] | None:
        allowed = bi.full & ~removed
        parent = {src: None}
        frontier = [src]
        while frontier:
            nxt = []
            for a in frontier:
                for b in iter_bits(bi.adj[a] & allowed):
                    if b not in parent:
                        parent[b] = a
                        if b == dst:
                            out = []
                            while b is not None:
                                out.append(b)
                                b = parent[b]
                            return out
                        nxt.append(b)
            frontier = nxt
        return None

    for a, b in itertools.combinations(sorted(ag.marker_set), 2):
        src, dst = bi.index[a], bi.index[b]
        seen: set[int] = set()
        stack = [0]
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            p = path(src, dst, s)
            if p is None:
                if bin(s).count("1") == k:
                    found.add(s)
                continue
            if bin(s).count("1") == k:
                continue
            for v in p[1:-1]:
                if (cuttable >> v) & 1:
                    stack.append(s | (1 << v))
        del seen
    assert not any(f & mmask for f in found)
    return [bi.unmask(m) for m in found]


def enumerate_mincuts(
    ag: AugmentedGraph, k: int, strategy: str = "exhaustive", budget: int = DEFAULT_BUDGET
) -> list[Cut]:
    """All end cuts of size ``k``, canonically ordered.

    ``strategy`` is ``"exhaustive"`` (every ``k``-subset) or ``"paths"``
    (recursive branching along marker-to-marker paths).
    """
    n = len(ag.cuttable)
    if strategy == "exhaustive":
        if math.comb(n, k) > budget:
            raise BudgetExceeded(f"C({n},{k}) subsets exceeds budget {budget}")
        sets = _exhaustive(ag, k)
    elif strategy == "paths":
        sets = _path_branching(ag, k)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    cuts = [make_cut(ag, s) for s in sets]
    cuts.sort(key=lambda c: c.key)
    return cuts


def group_into_classes(cuts: list[Cut]) -> list[CutClass]:
    """Group cuts by end partition and set the A/B flags.

    A cut is an A-cut when nested with every other mincut and a B-cut when it
    leaves exactly two components; every cut must be one or the other.
    """
    from .relations import is_nested

    for c in cuts:
        c.is_B = c.total_components == 2
        c.is_A = all(is_nested(c, d) for d in cuts if d is not c)
        if not (c.is_A or c.is_B):
            raise StructureError(f"{c} is neither an A-cut nor a B-cut")
    by_part: dict = {}
    for c in cuts:
        by_part.setdefault(c.partition, []).append(c)
    classes = []
    for i, part in enumerate(sorted(by_part)):
        members = sorted(by_part[part], key=lambda c: c.key)
        classes.append(
            CutClass(
                i,
                part,
                members,
                is_A=all(c.is_A for c in members),
                is_B=all(c.is_B for c in members),
            )
        )
    return classes


def check_full_boundaries(ag: AugmentedGraph, cuts: list[Cut]) -> list[str]:
    """Every component of a mincut is adjacent to the whole cut."""
    bad = []
    for c in cuts:
        for comp, _ in c.parts:
            if boundary(ag.graph, comp) != c.vertices:
                bad.append(f"{c}: component {canon(comp)} misses part of the cut")
    return bad
