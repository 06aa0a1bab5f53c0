"""Small named graphs with declared ends, used by tests, demos and the CLI."""
from __future__ import annotations

import itertools

from .ends import EndSpec
from .graph import Graph


def _clique(g: Graph, vs) -> None:
    vs = list(vs)
    for v in vs:
        g.add_vertex(v)
    for a, b in itertools.combinations(vs, 2):
        g.add_edge(a, b)


def blob_ring(n: int = 4, blob_size: int = 4, hub: bool = True, extra: dict | None = None):
    """Ring of ``n`` clique blobs joined by connectors ``v1..vn``, plus a hub.

    Connector ``vi`` sees all of blob ``Bi`` and blob ``B(i+1)``; the hub
    sees every blob vertex.  ``extra`` maps a connector index ``i`` to a list
    of extra blob names hung between ``v(i-1)`` and ``vi`` (so that the
    corner at that edge splits off several blobs at once).
    """
    g = Graph()
    blobs: dict[str, list[str]] = {}
    for i in range(1, n + 1):
        blobs[f"B{i}"] = [f"b{i}{j}" for j in range(1, blob_size + 1)]
    for i in range(1, n + 1):
        nxt = i % n + 1
        g.add_vertex(f"v{i}")
    for name, vs in blobs.items():
        _clique(g, vs)
    for i in range(1, n + 1):
        nxt = i % n + 1
        for w in blobs[f"B{i}"] + blobs[f"B{nxt}"]:
            g.add_edge(f"v{i}", w)
    for i, names in (extra or {}).items():
        # blob i normally sits between v(i-1) and vi; hang more blobs there
        prev = (i - 2) % n + 1
        for name in names:
            vs = [f"{name.lower()}{j}" for j in range(1, blob_size + 1)]
            _clique(g, vs)
            for w in vs:
                g.add_edge(f"v{prev}", w)
                g.add_edge(f"v{i}", w)
            blobs[name] = vs
    if hub:
        for vs in blobs.values():
            for w in vs:
                g.add_edge("u", w)
    return g, EndSpec.from_dict(blobs)


def wheel4():
    """Four 4-clique blobs in a ring with connectors and a hub (21 vertices)."""
    return blob_ring(4)


def wheel4_split_blob():
    """``wheel4`` with two blobs B1a, B1b in place of B1 between v4 and v1."""
    g, spec = blob_ring(4, extra={1: ["B1a", "B1b"]})
    d = dict(spec.ends)
    # drop the original B1 so both new blobs share its slot
    for v in d.pop("B1"):
        g.remove_vertex(v)
    return g, EndSpec.from_dict({k: d[k] for k in sorted(d)})


def series3():
    """Three 2-vertex blobs in a row joined through cut vertices ``a`` and ``b``."""
    g = Graph()
    for x, y in [("b11", "b12"), ("b21", "b22"), ("b31", "b32"),
                 ("a", "b12"), ("a", "b21"), ("b", "b22"), ("b", "b31")]:
        g.add_edge(x, y)
    spec = EndSpec.from_dict({"B1": {"b11", "b12"}, "B2": {"b21", "b22"}, "B3": {"b31", "b32"}})
    return g, spec


def chain(k: int = 4):
    """``k`` 2-vertex blobs in a row joined through ``k-1`` cut vertices ``c1..``."""
    g = Graph()
    ends = {}
    for i in range(1, k + 1):
        g.add_edge(f"b{i}1", f"b{i}2")
        ends[f"B{i}"] = {f"b{i}1", f"b{i}2"}
    for i in range(1, k):
        g.add_edge(f"c{i}", f"b{i}2")
        g.add_edge(f"c{i}", f"b{i + 1}1")
    return g, EndSpec.from_dict(ends)


def star_blobs(r: int = 3):
    """``r`` triangle blobs all attached to one articulation vertex ``x``."""
    g = Graph()
    ends = {}
    for i in range(1, r + 1):
        vs = [f"b{i}{j}" for j in range(1, 4)]
        _clique(g, vs)
        g.add_edge("x", vs[0])
        ends[f"B{i}"] = set(vs)
    return g, EndSpec.from_dict(ends)


def cycle(n: int = 4, prefix: str = "w") -> Graph:
    g = Graph()
    for i in range(n):
        g.add_edge(f"{prefix}{i + 1}", f"{prefix}{(i + 1) % n + 1}")
    return g


def c4() -> Graph:
    return cycle(4)


def two_triangles() -> Graph:
    """Two triangles sharing the vertex ``x``."""
    g = Graph()
    for a, b in [("x", "p1"), ("p1", "p2"), ("p2", "x"), ("x", "q1"), ("q1", "q2"), ("q2", "x")]:
        g.add_edge(a, b)
    return g


def small_tree() -> Graph:
    g = Graph()
    for a, b in [("r", "s"), ("r", "t"), ("s", "x"), ("s", "y"), ("t", "z")]:
        g.add_edge(a, b)
    return g


def linked_squares() -> Graph:
    """Two 4-cycles joined by two edges: a doubled link between two cycles."""
    g = cycle(4, "a")
    for a, b, _ in cycle(4, "b").edges():
        g.add_edge(a, b)
    g.add_edge("a1", "b1")
    g.add_edge("a2", "b2")
    return g


VERTEX_FIXTURES = {
    "wheel4": wheel4,
    "wheel4-split": wheel4_split_blob,
    "wheel6": lambda: blob_ring(6),
    "series3": series3,
    "chain4": chain,
    "star3": star_blobs,
}

EDGE_FIXTURES = {
    "c4": c4,
    "two-triangles": two_triangles,
    "tree": small_tree,
    "linked-squares": linked_squares,
}


def twin_wheels():
    """Two crossing systems sharing the corner cut ``{v1, u, v4}``.

    Blobs B2..B4 form a ring with connectors v1..v4 around hub ``u``; blobs
    D1..D3 form a second ring with connectors u, y1, y2, v4 around hub ``v1``.
    """
    g = Graph()
    blobs = {n: [f"{n.lower()}{j}" for j in range(1, 5)] for n in ("B2", "B3", "B4", "D1", "D2", "D3")}
    for vs in blobs.values():
        _clique(g, vs)

    def join(x, *names):
        for n in names:
            for w in blobs[n]:
                g.add_edge(x, w)

    join("v2", "B2", "B3")
    join("v3", "B3", "B4")
    join("v4", "B4", "D3")
    join("v1", "B2", "D1", "D2", "D3")
    join("u", "B2", "B3", "B4", "D1")
    join("y1", "D1", "D2")
    join("y2", "D2", "D3")
    return g, EndSpec.from_dict(blobs)


def wheel4_split_tail():
    """``wheel4_split_blob`` with connector v1 stretched into the path v1 - w1.

    ``v1`` keeps the two slot blobs B1a, B1b and ``w1`` takes over blob B2, so
    the corners at that end come in a three-part and a two-part kind.
    """
    g, spec = wheel4_split_blob()
    for w in spec.terminals("B2"):
        g.remove_vertex(w)
    d = dict(spec.ends)
    b2 = sorted(d["B2"])
    _clique(g, b2)
    for w in b2:
        g.add_edge("u", w)
        g.add_edge("v2", w)
        g.add_edge("w1", w)
    g.add_edge("v1", "w1")
    return g, spec


VERTEX_FIXTURES["twin-wheels"] = twin_wheels
VERTEX_FIXTURES["wheel4-split-tail"] = wheel4_split_tail
