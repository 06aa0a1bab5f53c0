"""Minimum edge cuts through the vertex machinery, collapsed to a cactus.

Run:  python3 demos/03_edge_cactus.py
"""
from succulent import fixtures, io
from succulent.cactus import finite_edge_pipeline
from succulent.ends import EndSpec
from succulent.oracle import brute_edge_end_cuts

for name, make in fixtures.EDGE_FIXTURES.items():
    g = make()
    c = finite_edge_pipeline(g)
    spec = EndSpec(tuple((v, frozenset([v])) for v in g.vertices))
    k, brute = brute_edge_end_cuts(g, spec)
    ours = {c.cut_partition(labels) for labels in c.g.values()}
    print(f"== {name}: min edge cut {k}, {len(brute)} cut classes by brute force, "
          f"{len(c.g)} from the cactus, agree: {ours == set(brute)}, cactus: {c.is_cactus()}")
    for u, v, lab in c.edges:
        print(f"   {u} -- {v}")
    print()

print(io.cactus_dot(finite_edge_pipeline(fixtures.linked_squares()), "linked-squares"))
