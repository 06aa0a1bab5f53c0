"""Minimum vertex cuts separating ends, organised into a succulent.

Typical use::

    from succulent import analyze, fixtures
    g, spec = fixtures.wheel4()
    a = analyze(g, spec)
    assert a.verify().ok
"""
from . import fixtures
from .analysis import Analysis, analyze
from .cactus import Cactus, edge_end_pipeline, finite_edge_pipeline
from .ends import EndSpec, attach_markers
from .errors import *  # noqa: F401,F403
from .graph import Graph, boundary, components
from .io import parse_graph_file, parse_grf
from .mincuts import enumerate_mincuts, kappa
from .oracle import automorphism_check, brute_mincuts, lemma_suite, random_instance
from .succulent import Succulent, collapse_variant, verify_theorem

__version__ = "0.1.0"
