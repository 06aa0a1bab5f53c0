"""GRF graph files, JSON reports and DOT drawings."""
from __future__ import annotations

import json

from .ends import EndSpec
from .errors import ParseError
from .graph import Graph, canon

FORMAT_VERSION = 1


def parse_grf(text: str) -> tuple[Graph, EndSpec | None]:
    """Parse GRF text: ``# comment``, ``v NAME``, ``e NAME NAME``, ``end NAME V1 V2 ...``.

    Returns the graph and its end specification (``None`` when no ``end``
    lines are present).  Every problem is reported with its line number.
    """
    g = Graph()
    edges: set = set()
    ends: list = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        kind, args = tok[0], tok[1:]
        if kind == "v":
            if len(args) != 1:
                raise ParseError(no, "expected 'v NAME'")
            g.add_vertex(args[0])
        elif kind == "e":
            if len(args) != 2:
                raise ParseError(no, "expected 'e NAME NAME'")
            u, v = args
            if u == v:
                raise ParseError(no, f"self-loop at {u}")
            key = frozenset((u, v))
            if key in edges:
                raise ParseError(no, f"duplicate edge {u} {v}")
            edges.add(key)
            g.add_edge(u, v)
        elif kind == "end":
            if len(args) < 2:
                raise ParseError(no, "expected 'end NAME V1 V2 ...'")
            ends.append((no, args[0], args[1:]))
        else:
            raise ParseError(no, f"unknown directive {kind!r}")
    if len(g) == 0:
        raise ParseError(0, "no vertices")
    if not ends:
        return g, None
    seen_names: dict = {}
    owner: dict = {}
    out = []
    for no, name, vs in ends:
        if name in seen_names:
            raise ParseError(no, f"end {name} already declared on line {seen_names[name]}")
        seen_names[name] = no
        for v in vs:
            if v not in g:
                raise ParseError(no, f"end {name}: unknown vertex {v}")
            if v in owner:
                raise ParseError(no, f"vertex {v} already belongs to end {owner[v]}")
            owner[v] = name
        out.append((name, frozenset(vs)))
    if len(out) < 2:
        raise ParseError(ends[0][0], "at least two ends are required")
    return g, EndSpec(tuple(out))


def parse_graph_file(path) -> tuple[Graph, EndSpec | None]:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise ParseError(0, f"cannot read {path}: {e.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(data[: e.start].count(b"\n") + 1, "not valid UTF-8") from None
    return parse_grf(text)


def write_grf(g: Graph, spec: EndSpec | None = None, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    isolated = [v for v in g.vertices if not g.neighbors(v)]
    lines += [f"v {v}" for v in isolated]
    lines += [f"e {u} {v}" for u, v, _ in g.edges()]
    if spec is not None:
        lines += [f"end {name} {' '.join(canon(vs))}" for name, vs in spec.ends]
    return "\n".join(lines) + "\n"


# JSON


def _partition(p) -> list:
    return [list(b) for b in p]


def analysis_report(a, theorem=None, lemmas=None, timings=None) -> dict:
    corners = {c for h in a.hashes for c in h.corner_ids}
    members = {c for h in a.hashes for c in h.member_ids}

    def kind(cid):
        if cid in members:
            return "member"
        if cid in corners:
            return "corner"
        return "totally-isolated"

    rep = {
        "format": FORMAT_VERSION,
        "kappa": a.kappa,
        "ends": {name: list(canon(vs)) for name, vs in a.spec.ends},
        "slices": [
            {"vertices": list(canon(s)), "cut": list(canon(c))} for s, c in a.slices.slices
        ],
        "added_edges": [list(e) for e in a.slices.added_edges],
        "cut_classes": [
            {
                "id": c.id,
                "partition": _partition(c.partition),
                "members": [list(m.key) for m in c.members],
                "A": c.is_A,
                "B": c.is_B,
                "kind": kind(c.id),
            }
            for c in a.classes
        ],
        "crossing_graph": [list(e) for e in a.crossing.edges],
        "hash_classes": [_hash_report(h) for h in a.hashes],
        "isolated": list(a.isolated),
        "totally_isolated": list(a.totally_isolated),
        "pretree": {
            "elements": [e.label for e in a.pretree.elements],
            "between": sorted(
                [a.pretree.elements[x].label, a.pretree.elements[y].label, a.pretree.elements[z].label]
                for x, y, z in a.pretree.between
            ),
        },
        "tree": {
            "stars": [[a.pretree.elements[i].label for i in s] for s in a.tree.stars],
            "edges": [[a.pretree.elements[i].label, j] for i, j in a.tree.edges],
        },
        "succulent": succulent_report(a.succulent),
    }
    if theorem is not None:
        rep["theorem"] = {
            "ok": theorem.ok,
            "failures": list(theorem.failures),
            "anchor_classes": theorem.anchor_classes,
        }
    if lemmas is not None:
        rep["lemmas"] = {
            "ok": lemmas.ok,
            "checked": dict(sorted(lemmas.checked.items())),
            "failures": [[name, repr(w)] for name, w in lemmas.failures],
        }
    if timings is not None:
        rep["timings"] = {k: round(v, 6) for k, v in sorted(timings.items())}
    return rep


def _hash_report(h) -> dict:
    ring = h.ring
    return {
        "label": h.label,
        "members": list(h.member_ids),
        "centre": list(canon(h.centre)),
        "half_cuts": [list(canon(s)) for s in h.halves],
        "q_classes": [list(q) for q in h.q_classes],
        "eq_classes": [list(e) for e in h.eq_classes],
        "cyclic_order": list(h.cyclic_order),
        "corners": list(h.corner_ids),
        "fine_partition": _partition(h.fine_partition),
        "coarse_partition": _partition(h.coarse_partition),
        "ring": {
            "cycle": list(ring.cycle),
            "anchors": [
                {"edge": [u, v], "anchor": anc, "ends": sorted(b)} for u, v, anc, b in ring.anchors
            ],
            "classes": [{"class": c, "cut": list(uv)} for c, uv in sorted(ring.cut_for_class.items())],
        },
    }


def succulent_report(s) -> dict:
    return {
        "vertices": list(s.graph.vertices),
        "edges": [[u, v, m] for u, v, m in s.graph.edges()],
        "anchors": sorted(s.anchors),
        "f": dict(sorted(s.f.items())),
        "g": [{"class": c, "cut": list(canon(cut))} for c, cut in sorted(s.g.items())],
        "appendages": dict(sorted(s.appendages.items())),
        "anchor_ends": {a: sorted(es) for a, es in sorted(s.endsets.items())},
    }


def cactus_report(c) -> dict:
    return {
        "format": FORMAT_VERSION,
        "vertices": list(c.graph.vertices),
        "edges": [[u, v, lab] for u, v, lab in c.edges],
        "f": dict(sorted(c.f.items())),
        "g": [{"class": k, "edges": sorted(v)} for k, v in sorted(c.g.items())],
        "classes": len(c.g),
        "is_cactus": c.is_cactus(),
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# DOT


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def succulent_dot(s, name: str = "succulent") -> str:
    carried: dict = {}
    for e, a in s.f.items():
        carried.setdefault(a, []).append(e)
    lines = [f"graph {_q(name)} {{", "  node [shape=circle, label=\"\"];"]
    for v in s.graph.vertices:
        if v in s.anchors:
            lab = ",".join(sorted(carried.get(v, [])))
            lines.append(f"  {_q(v)} [shape=doublecircle, label={_q(lab)}];")
        else:
            lines.append(f"  {_q(v)};")
    for u, v, m in s.graph.edges():
        for _ in range(m):
            lines.append(f"  {_q(u)} -- {_q(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cactus_dot(c, name: str = "cactus") -> str:
    lines = [f"graph {_q(name)} {{", "  node [shape=circle];"]
    for v in c.graph.vertices:
        lines.append(f"  {_q(v)};")
    for u, v, lab in c.edges:
        lines.append(f"  {_q(u)} -- {_q(v)} [label={_q(lab)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
