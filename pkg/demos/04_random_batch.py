"""Verify a handful of random instances end to end, then break one succulent on purpose.

Run:  python3 demos/04_random_batch.py [N]
"""
import sys

from succulent import analyze
from succulent.oracle import PROFILES, negative_controls, random_instance, run_batch

n = int(sys.argv[1]) if len(sys.argv) > 1 else 12
for r in run_batch(n, seed=100, profiles=PROFILES):
    print(f"{'PASS' if r.ok else 'FAIL'} {r.name:24s} n={r.vertices:2d} ends={r.ends} "
          f"kappa={r.kappa} classes={r.classes} crossing systems={r.hashes}")

# The checker is not vacuous: damaged succulents are rejected.
a = analyze(*random_instance(0, "blob-ring"))
for what, rejected in negative_controls(a):
    print(f"mutant '{what}': {'rejected' if rejected else 'ACCEPTED'}")
