"""Pairwise relations between cuts and cut classes."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotDividing, StructureError


def is_nested(k, l) -> bool:
    """Some component of one cut lies inside some component of the other."""
    for e, _ in k.parts:
        for f, _ in l.parts:
            if e <= f or f <= e:
                return True
    return False


def partitions_cross(p, q) -> bool:
    """Two blocks of each partition meet in all four combinations."""
    hits = [[bool(set(a) & set(b)) for b in q] for a in p]
    for i1, i2 in itertools.combinations(range(len(p)), 2):
        for j1, j2 in itertools.combinations(range(len(q)), 2):
            if hits[i1][j1] and hits[i1][j2] and hits[i2][j1] and hits[i2][j2]:
                return True
    return False


def crosses(a, b) -> bool:
    """Crossing of two cut classes, decided on their end partitions."""
    if a is b or a.partition == b.partition:
        return False
    return partitions_cross(a.partition, b.partition)


def cuts_cross(k, l) -> bool:
    """Component-level crossing: each pair of sides shares an end."""
    return partitions_cross(k.partition, l.partition)


def divides(x_partition, partition):
    """Index of the block of ``partition`` divided by a cut (or class) with ``x_partition``.

    Returns ``(index, direction)`` where ``direction`` is ``"into"`` when all
    other blocks of ``partition`` lie inside one block of ``x_partition`` and
    ``"within"`` when all but one block of ``x_partition`` lie inside the
    divided block.  Raises :class:`NotDividing` when neither holds.
    """
    xs = [frozenset(b) for b in x_partition]
    qs = [frozenset(b) for b in partition]
    hits = []
    for i, qi in enumerate(qs):
        others = frozenset().union(*(q for j, q in enumerate(qs) if j != i))
        if any(others <= x for x in xs):
            hits.append((i, "into"))
            continue
        for j in range(len(xs)):
            rest = frozenset().union(*(x for t, x in enumerate(xs) if t != j))
            if rest <= qi:
                hits.append((i, "within"))
                break
    idx = {i for i, _ in hits}
    if not idx:
        raise NotDividing(f"{x_partition} does not divide any block of {partition}")
    if len(idx) > 1:
        raise StructureError(f"{x_partition} divides several blocks of {partition}")
    return hits[0]


@dataclass
class CrossingGraph:
    nodes: list  # class ids
    edges: list  # sorted (i, j), i < j

    def neighbours(self, i: int) -> list[int]:
        return sorted({b for a, b in self.edges if a == i} | {a for a, b in self.edges if b == i})


def crossing_graph(classes) -> CrossingGraph:
    edges = []
    for a, b in itertools.combinations(classes, 2):
        if crosses(a, b):
            if not (a.is_B and b.is_B):
                raise StructureError(f"crossing classes {a.id},{b.id} are not both B-classes")
            if len(a.partition) != 2 or len(b.partition) != 2:
                raise StructureError(f"crossing classes {a.id},{b.id} do not have two blocks")
            edges.append((a.id, b.id))
    return CrossingGraph([c.id for c in classes], sorted(edges))
