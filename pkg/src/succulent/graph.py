"""Finite undirected multigraphs and the connectivity primitives built on them.

Vertex names are whitespace-free strings ordered lexicographically.  Vertex
sets are ``frozenset`` objects; :func:`canon` gives their sorted tuple form,
which is what every deterministic output uses.
"""
from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, Iterator

from .errors import InfeasibleSeparator, InputError

VertexSet = frozenset


def canon(vs: Iterable[str]) -> tuple[str, ...]:
    """Sorted, duplicate-free tuple form of a vertex set."""
    return tuple(sorted(set(vs)))


def set_key(vs: Iterable[str]) -> tuple:
    """Sort key for collections of vertex sets (size first, then members)."""
    t = canon(vs)
    return (len(t), t)


class Graph:
    """Undirected multigraph with counted adjacency and no self-loops."""

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple] = ()):
        self._adj: dict[str, Counter] = {}
        self._bits: _BitIndex | None = None
        for v in vertices:
            self.add_vertex(v)
        for e in edges:
            self.add_edge(*e)

    def add_vertex(self, v: str) -> None:
        if not isinstance(v, str) or not v or any(c.isspace() for c in v):
            raise InputError(f"invalid vertex name {v!r}")
        if v not in self._adj:
            self._adj[v] = Counter()
            self._bits = None

    def add_edge(self, u: str, v: str, count: int = 1) -> None:
        if u == v:
            raise InputError(f"self-loop at {u}")
        self.add_vertex(u)
        self.add_vertex(v)
        self._adj[u][v] += count
        self._adj[v][u] += count
        self._bits = None

    def remove_vertex(self, v: str) -> None:
        for w in self._adj.pop(v):
            del self._adj[w][v]
        self._bits = None

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self._adj))

    def neighbors(self, v: str) -> frozenset:
        return frozenset(self._adj[v])

    def multiplicity(self, u: str, v: str) -> int:
        return self._adj.get(u, {}).get(v, 0)

    def degree(self, v: str) -> int:
        """Number of incident edges, counting parallel edges separately."""
        return sum(self._adj[v].values())

    def edges(self) -> list[tuple[str, str, int]]:
        """Sorted ``(u, v, multiplicity)`` triples with ``u < v``."""
        out = []
        for u, nbrs in self._adj.items():
            for v, m in nbrs.items():
                if u < v:
                    out.append((u, v, m))
        return sorted(out)

    def edge_count(self) -> int:
        return sum(m for _, _, m in self.edges())

    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edges())

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {v: Counter(n) for v, n in self._adj.items()}
        return g

    def induced(self, keep: Iterable[str]) -> "Graph":
        keep = set(keep)
        g = Graph(sorted(keep))
        for u, v, m in self.edges():
            if u in keep and v in keep:
                g.add_edge(u, v, m)
        return g

    def is_connected(self) -> bool:
        return len(components(self, frozenset())) <= 1

    def to_networkx(self):
        import networkx as nx

        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for u, v, m in self.edges():
            for _ in range(m):
                g.add_edge(u, v)
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self)}, |E|={self.edge_count()})"

    # bitmask view used by the hot loops
    def bits(self) -> "_BitIndex":
        if self._bits is None:
            self._bits = _BitIndex(self)
        return self._bits


class _BitIndex:
    """Vertices numbered in sorted order with adjacency bitmasks."""

    def __init__(self, g: Graph):
        self.names = g.vertices
        self.index = {v: i for i, v in enumerate(self.names)}
        self.adj = [0] * len(self.names)
        for v, nbrs in g._adj.items():
            i = self.index[v]
            for w in nbrs:
                self.adj[i] |= 1 << self.index[w]
        self.full = (1 << len(self.names)) - 1

    def mask(self, vs: Iterable[str]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index[v]
        return m

    def unmask(self, m: int) -> frozenset:
        return frozenset(self.names[i] for i in iter_bits(m))

    def component_masks(self, allowed: int) -> list[int]:
        """Connected components of the subgraph induced by ``allowed``."""
        comps = []
        rest = allowed
        adj = self.adj
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
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
            comps.append(comp)
            rest &= ~comp
        return comps


def iter_bits(m: int) -> Iterator[int]:
    while m:
        b = m & -m
        yield b.bit_length() - 1
        m ^= b


def components(g: Graph, removed: Iterable[str] = frozenset()) -> list[frozenset]:
    """Components of ``g - removed``, ordered by smallest member."""
    bi = g.bits()
    allowed = bi.full & ~bi.mask(removed)
    comps = [bi.unmask(c) for c in bi.component_masks(allowed)]
    return sorted(comps, key=min)


def boundary(g: Graph, c: Iterable[str]) -> frozenset:
    c = frozenset(c)
    out = set()
    for v in c:
        out.update(g._adj[v])
    return frozenset(out - c)


def star_complement(g: Graph, c: Iterable[str]) -> frozenset:
    """Vertices neither in ``c`` nor adjacent to it."""
    c = frozenset(c)
    return frozenset(g._adj) - c - boundary(g, c)


def disjoint_path_count(g: Graph, sources, sinks, forbidden=frozenset()):
    """Menger count between two vertex sets, with a witness separator.

    Every vertex outside ``sources | sinks | forbidden`` has capacity one;
    the others may be shared by paths and never appear in the separator.
    Returns ``(count, separator)``.  Raises :class:`InfeasibleSeparator`
    when ``sources`` and ``sinks`` cannot be separated by allowed vertices.
    """
    sources, sinks, forbidden = frozenset(sources), frozenset(sinks), frozenset(forbidden)
    if not sources or not sinks:
        raise ValueError("sources and sinks must be non-empty")
    if sources & sinks:
        raise InfeasibleSeparator("sources and sinks overlap")
    uncut = sources | sinks | forbidden
    inf = len(g) + 1
    cap: dict = {}

    def arc(a, b, c):
        cap.setdefault(a, {})
        cap.setdefault(b, {})
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for v in g.vertices:
        arc((v, 0), (v, 1), inf if v in uncut else 1)
    for u, v, _ in g.edges():
        arc((u, 1), (v, 0), inf)
        arc((v, 1), (u, 0), inf)
    src, snk = ("$s",), ("$t",)
    for v in sources:
        arc(src, (v, 0), inf)
    for v in sinks:
        arc((v, 1), snk, inf)

    flow = 0
    while True:
        parent = {src: None}
        queue = deque([src])
        while queue and snk not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if snk not in parent:
            break
        b = snk
        while parent[b] is not None:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
        if flow >= inf:
            raise InfeasibleSeparator("sources and sinks joined through uncuttable vertices")
    reach = set(parent)
    sep = frozenset(v for v in g.vertices if (v, 0) in reach and (v, 1) not in reach)
    assert len(sep) == flow and not (sep & uncut)
    return flow, sep
