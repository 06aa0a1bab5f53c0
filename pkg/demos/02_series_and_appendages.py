"""Blobs in series: no crossings, a pretree path, and an appendage for the middle end.

Run:  python3 demos/02_series_and_appendages.py
"""
from succulent import analyze, fixtures
from succulent.succulent import collapse_variant, verify_theorem

for name in ("series3", "chain4", "star3"):
    g, spec = fixtures.VERTEX_FIXTURES[name]()
    a = analyze(g, spec)
    print(f"== {name}: kappa={a.kappa}, {len(a.classes)} classes, no crossing systems: {not a.hashes}")
    els = a.pretree.elements
    for x, y, z in sorted(t for t in a.pretree.between if t[0] < t[2]):
        print(f"   {els[y].label} lies between {els[x].label} and {els[z].label}")
    print("   stars:", [[els[i].label for i in st] for st in a.tree.stars])

    s = a.succulent
    # The middle blob is never cut off alone, so it gets its own anchor on a double edge.
    for app, host in sorted(s.appendages.items()):
        print(f"   appendage {app} hangs on {host} by a double edge")
    print("   theorem check:", "passed" if a.verify().ok else "FAILED")

    v = collapse_variant(s)
    adjacent = [(x, y) for x, y, _ in v.graph.edges() if x in v.anchors and y in v.anchors]
    ok = verify_theorem(a.end_names, a.classes, v).ok
    print(f"   collapsed: f={v.f}, adjacent anchors={adjacent}, check {'passed' if ok else 'FAILED'}\n")
