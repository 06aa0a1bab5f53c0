"""Command line: ``succulent {analyze,succulent,cactus,verify,gen}``.

Exit codes: 0 success, 2 bad input (parse errors, disconnected graphs),
3 budget exceeded, 4 verification or structural failure.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import io
from .analysis import analyze
from .cactus import edge_end_pipeline, finite_edge_pipeline
from .errors import BudgetExceeded, InputError, SucculentError
from .fixtures import EDGE_FIXTURES, VERTEX_FIXTURES
from .mincuts import DEFAULT_BUDGET
from .oracle import EXTRA_PROFILES, PROFILES, lemma_suite, random_instance, run_batch, verify_instance
from .succulent import collapse_variant, verify_theorem

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_VERIFY = 0, 2, 3, 4


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load(path: str, need_ends: bool = True):
    g, spec = io.parse_graph_file(path)
    if need_ends and spec is None:
        raise InputError(f"{path}: no 'end' lines")
    return g, spec


def cmd_analyze(args) -> int:
    g, spec = _load(args.file)
    t0 = time.perf_counter()
    a = analyze(g, spec, budget=args.budget, strategy=args.strategy)
    th = a.verify()
    timings = {"total": time.perf_counter() - t0} if args.timings else None
    lem = lemma_suite(a) if args.lemmas else None
    _emit(io.dumps(io.analysis_report(a, th, lem, timings)), args.json)
    if args.dot:
        _emit(io.succulent_dot(a.succulent), args.dot)
    return EXIT_OK if th.ok and (lem is None or lem.ok) else EXIT_VERIFY


def cmd_succulent(args) -> int:
    g, spec = _load(args.file)
    a = analyze(g, spec, budget=args.budget)
    s = collapse_variant(a.succulent) if args.variant else a.succulent
    th = verify_theorem(a.end_names, a.classes, s)
    if args.json:
        rep = io.analysis_report(a, th)
        rep["succulent"] = io.succulent_report(s)
        rep["variant"] = bool(args.variant)
        _emit(io.dumps(rep), args.json)
    _emit(io.succulent_dot(s), args.dot)
    return EXIT_OK if th.ok else EXIT_VERIFY


def cmd_cactus(args) -> int:
    g, spec = _load(args.file, need_ends=args.mode == "end")
    if args.mode == "finite":
        c = finite_edge_pipeline(g, budget=args.budget)
    else:
        c = edge_end_pipeline(g, spec, budget=args.budget)
    if args.json:
        _emit(io.dumps(io.cactus_report(c)), args.json)
    _emit(io.cactus_dot(c), args.dot)
    return EXIT_OK if c.is_cactus() else EXIT_VERIFY


def _print_result(r, verbose: bool = True) -> None:
    head = f"{'PASS' if r.ok else 'FAIL'} {r.name}"
    print(f"{head}  (n={r.vertices} ends={r.ends} kappa={r.kappa} classes={r.classes} #={r.hashes})")
    if verbose or not r.ok:
        for check, passed, detail in r.lines:
            print(f"  {'ok  ' if passed else 'FAIL'} {check}" + (f": {detail}" if detail else ""))


def cmd_verify(args) -> int:
    if args.file is None and not args.batch:
        raise InputError("give a graph file or --batch N")
    results = []
    if args.file is not None:
        g, spec = _load(args.file)
        r = verify_instance(g, spec, args.file, mutate=True, automorphisms=True, budget=args.budget)
        _print_result(r)
        results.append(r)
    if args.batch:
        profiles = tuple(args.profile) if args.profile else PROFILES
        batch = run_batch(args.batch, seed=args.seed, jobs=args.jobs, profiles=profiles)
        for r in batch:
            _print_result(r, verbose=False)
        results.extend(batch)
    bad = [r.name for r in results if not r.ok]
    print(f"{len(results) - len(bad)}/{len(results)} instances verified")
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_gen(args) -> int:
    if args.fixture:
        make = {**VERTEX_FIXTURES, **EDGE_FIXTURES}[args.fixture]
        out = make()
        g, spec = out if isinstance(out, tuple) else (out, None)
        text = io.write_grf(g, spec, comment=f"fixture {args.fixture}")
    else:
        g, spec = random_instance(args.seed, args.profile)
        text = io.write_grf(g, spec, comment=f"{args.profile} seed {args.seed}")
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="succulent", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, json=True, dot=True):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on vertex subsets examined")
        if json:
            sp.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
        if dot:
            sp.add_argument("--dot", metavar="PATH", help="write DOT here instead of stdout")

    sp = sub.add_parser("analyze", help="full vertex pipeline, JSON report")
    sp.add_argument("file")
    common(sp)
    sp.add_argument("--strategy", choices=("exhaustive", "paths"), default="exhaustive")
    sp.add_argument("--lemmas", action="store_true", help="include the lemma suite in the report")
    sp.add_argument("--timings", action="store_true", help="include wall-clock timings (not deterministic)")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("succulent", help="succulent as DOT")
    sp.add_argument("file")
    common(sp)
    sp.add_argument("--variant", action="store_true", help="fold appendages into their host anchors")
    sp.set_defaults(func=cmd_succulent)

    sp = sub.add_parser("cactus", help="cactus of minimum edge cuts as DOT")
    sp.add_argument("file")
    common(sp)
    sp.add_argument("--mode", choices=("end", "finite"), default="end")
    sp.set_defaults(func=cmd_cactus)

    sp = sub.add_parser("verify", help="pipeline plus brute force, lemma suite and theorem check")
    sp.add_argument("file", nargs="?")
    common(sp, json=False, dot=False)
    sp.add_argument("--batch", type=int, default=0, metavar="N", help="also verify N random instances")
    sp.add_argument("--jobs", type=int, default=1, metavar="J")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--profile", action="append", choices=PROFILES + EXTRA_PROFILES)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="emit a random instance or a named fixture as GRF")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--profile", choices=PROFILES + EXTRA_PROFILES, default="blob-ring")
    sp.add_argument("--fixture", choices=sorted({**VERTEX_FIXTURES, **EDGE_FIXTURES}))
    sp.add_argument("-o", "--output", metavar="PATH")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as e:
        print(f"error: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except SucculentError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
