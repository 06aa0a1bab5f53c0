"""Walk through the four-blob wheel: cuts, the crossing system, its ring, the succulent.

Run:  python3 demos/01_wheel.py
"""
from succulent import analyze, fixtures, io

g, spec = fixtures.wheel4()
print(f"{len(g)} vertices, ends {list(spec.names)}")

a = analyze(g, spec)
print(f"\nsmallest end cut size: {a.kappa}")
for c in a.classes:
    kind = "crosses something" if a.index.crossing_ids(c.id) else "isolated"
    print(f"  class {c.id}: {sorted(c.rep.vertices)} splits {c.partition}  ({kind})")

# The two "diagonal" cuts cross; together they form one crossing system.
h = a.hashes[0]
print(f"\ncrossing system {h.label}: members {h.member_ids}, centre {sorted(h.centre)}")
print("  half-cuts:", [sorted(s) for s in h.halves])
print("  around the circle:", [sorted(h.halves[h.q_classes[q][0]]) for q in h.cyclic_order])
print("  corner classes:", h.corner_ids)

# The ring: one cycle vertex per half-cut, one anchor per cycle edge.
for u, v, anc, block in h.ring.anchors:
    print(f"  anchor {anc} on {u} - {v} stands for {sorted(block)}")

s = a.succulent
rep = a.verify()
print(f"\nsucculent: {len(s.graph)} vertices, {len(s.anchors)} anchors")
print("  f:", s.f)
print(f"  minimum anchor cuts: {rep.anchor_classes} classes, theorem check {'passed' if rep.ok else rep.failures}")
print("\nDOT:\n" + io.succulent_dot(s))
