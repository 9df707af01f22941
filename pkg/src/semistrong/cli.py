"""Command-line front end.

One binary, subcommands for every capability: solve (tree DP), exact
(brute-force oracle), verify, reduce, gadget, gen, bench.  Human-readable
output by default, machine-readable JSON with --json (byte-deterministic
given identical inputs and seeds; wall-clock timings only with --timings).

Exit codes: 0 success/pass, 2 bad input or usage, 3 verification or type
failure, 4 inconclusive (node budget exhausted).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import generators
from .coloring import (
    ColoringFormatError,
    EdgeColoring,
    KINDS,
    load_coloring,
    save_coloring,
    verify_coloring,
)
from .graph import Graph, GraphFormatError, NotATreeError, load_graph, root_tree, save_graph
from .reduction import GADGET_KINDS, build_gadget, reduce_graph, verify_gadget_lemmas
from .solver import (
    UNKNOWN,
    BudgetExhausted,
    SolveLimits,
    SolveRequest,
    decide,
    enumerate_colorings,
    min_colors,
)
from .treedp import reconstruct_coloring, semistrong_index_tree, solve_tree

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAIL = 3
EXIT_INCONCLUSIVE = 4

BENCH_CSV_HEADER = "family,n,delta,budget,feasible,millis"


class _CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_graph(path: str) -> Graph:
    try:
        return load_graph(path)
    except (OSError, GraphFormatError, ValueError) as exc:
        raise _CliError(f"cannot read graph {path}: {exc}")


def _emit(args, payload: dict, human: str, started: float) -> None:
    if getattr(args, "json", False):
        record = {"command": args.command, **payload}
        if getattr(args, "timings", False):
            record["wall_time_ms"] = round(1000 * (time.perf_counter() - started), 3)
        print(json.dumps(record, sort_keys=True))
    else:
        print(human)


def _cmd_solve(args) -> int:
    started = time.perf_counter()
    g = _load_graph(args.input)
    try:
        tree = root_tree(g, 0) if g.vertex_count else None
    except NotATreeError as exc:
        raise _CliError(str(exc), EXIT_FAIL)
    payload: dict = {"input_sha256": _digest(args.input)}
    if args.budget is not None:
        if g.vertex_count <= 1:
            feasible, root_states = True, []
        else:
            try:
                result = solve_tree(tree, args.budget, engine=args.engine)
            except ValueError as exc:
                raise _CliError(str(exc))
            feasible = result.feasible
            root_states = sorted(map(list, result.root_set.states()))
            if feasible and args.emit_coloring:
                phi, _ = reconstruct_coloring(result)
                save_coloring(phi, args.emit_coloring)
        payload.update(feasible=feasible, budget_used=args.budget, root_set=root_states)
        _emit(args, payload, "feasible" if feasible else "infeasible", started)
        return EXIT_OK
    result = semistrong_index_tree(g, engine=args.engine)
    payload.update(
        index=result.index,
        budget_used=result.budget_used,
        root_tuple=None if result.root_state is None else list(result.root_state),
    )
    if args.emit_coloring:
        save_coloring(result.coloring, args.emit_coloring)
    _emit(args, payload, f"index {result.index}", started)
    return EXIT_OK


def _cmd_exact(args) -> int:
    started = time.perf_counter()
    g = _load_graph(args.input)
    limits = SolveLimits(max_nodes=args.node_budget, max_solutions=args.cap)
    payload: dict = {"input_sha256": _digest(args.input), "kind": args.kind}
    if args.enumerate:
        if args.palette is None:
            raise _CliError("--enumerate requires --palette")
        req = SolveRequest(
            g, args.kind, args.palette, limits=limits,
            symmetry=not args.no_symmetry, engine=args.engine,
        )
        first: list[tuple[int, ...]] = []

        def keep_first(colors):
            if not first:
                first.append(colors)

        outcome = enumerate_colorings(req, keep_first if args.witness else None)
        if args.witness and first:
            save_coloring(EdgeColoring(first[0], args.palette), args.witness)
        payload.update(
            palette=args.palette,
            count=outcome.count,
            exhausted=outcome.exhausted,
            cap_reached=outcome.cap_reached,
            budget_hit=outcome.budget_hit,
        )
        _emit(args, payload, str(outcome.count), started)
        return EXIT_INCONCLUSIVE if outcome.budget_hit else EXIT_OK
    if args.palette is not None:
        req = SolveRequest(
            g, args.kind, args.palette, limits=limits,
            symmetry=not args.no_symmetry, engine=args.engine,
        )
        result = decide(req)
        if args.witness and result.witness is not None:
            save_coloring(result.witness, args.witness)
        payload.update(palette=args.palette, status=result.status)
        _emit(args, payload, result.status, started)
        return EXIT_INCONCLUSIVE if result.status == UNKNOWN else EXIT_OK
    try:
        value = min_colors(g, args.kind, limits=limits, engine=args.engine)
    except BudgetExhausted as exc:
        raise _CliError(str(exc), EXIT_INCONCLUSIVE)
    except ValueError as exc:
        raise _CliError(str(exc))
    payload.update(min_colors=value)
    _emit(args, payload, str(value), started)
    return EXIT_OK


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    g = _load_graph(args.input)
    try:
        phi = load_coloring(args.coloring, g.edge_count)
    except (OSError, ColoringFormatError, ValueError) as exc:
        raise _CliError(f"cannot read coloring {args.coloring}: {exc}")
    result = verify_coloring(g, phi, args.kind)
    payload = {
        "input_sha256": _digest(args.input),
        "kind": args.kind,
        "ok": result.ok,
        "violation": result.message,
        "violation_edge": result.edge,
        "violation_color": result.color,
    }
    _emit(args, payload, "pass" if result.ok else f"FAIL: {result.message}", started)
    return EXIT_OK if result.ok else EXIT_FAIL


def _cmd_reduce(args) -> int:
    started = time.perf_counter()
    g = _load_graph(args.input)
    try:
        h, rmap = reduce_graph(g, args.k)
    except ValueError as exc:
        raise _CliError(str(exc))
    save_graph(h, args.output)
    with open(args.map, "w", encoding="utf-8") as fh:
        fh.write(rmap.to_json())
    payload = {
        "input_sha256": _digest(args.input),
        "k": args.k,
        "h_vertices": h.vertex_count,
        "h_edges": h.edge_count,
        "gadgets": len(rmap.placements),
    }
    _emit(
        args,
        payload,
        f"wrote H ({h.vertex_count} vertices, {h.edge_count} edges) to "
        f"{args.output}, map to {args.map}",
        started,
    )
    return EXIT_OK


def _cmd_gadget(args) -> int:
    started = time.perf_counter()
    try:
        gadget = build_gadget(args.kind, args.k)
    except ValueError as exc:
        raise _CliError(str(exc))
    if args.output:
        save_graph(gadget.graph, args.output)
    if args.map:
        with open(args.map, "w", encoding="utf-8") as fh:
            json.dump(
                {
                    "kind": gadget.kind,
                    "k": gadget.k,
                    "boundary": list(gadget.boundary),
                    "tagged": dict(sorted(gadget.tags.items())),
                },
                fh,
                indent=2,
                sort_keys=True,
            )
            fh.write("\n")
    if args.check_lemmas:
        report = verify_gadget_lemmas(
            args.kind, args.k, node_budget=args.node_budget, engine=args.engine
        )
        payload = {
            "kind": args.kind,
            "k": args.k,
            "violations": report.violations,
            "complete": report.complete,
            "checks": [
                {
                    "name": c.name,
                    "colorings": c.colorings,
                    "violations": c.violations,
                    "complete": c.complete,
                }
                for c in report.checks
            ],
        }
        _emit(args, payload, report.summary(), started)
        if report.violations:
            return EXIT_FAIL
        return EXIT_OK if report.complete else EXIT_INCONCLUSIVE
    payload = {
        "kind": args.kind,
        "k": args.k,
        "vertices": gadget.graph.vertex_count,
        "edges": gadget.graph.edge_count,
    }
    _emit(
        args,
        payload,
        f"{args.kind} gadget for k={args.k}: {gadget.graph.vertex_count} "
        f"vertices, {gadget.graph.edge_count} edges",
        started,
    )
    return EXIT_OK


_FAMILIES = (
    "path", "cycle", "star", "complete", "complete-bipartite",
    "random-tree", "circulant", "petersen", "hypercube",
)


def _generate(family: str, args) -> Graph:
    if family == "path":
        return generators.path(args.n)
    if family == "cycle":
        return generators.cycle(args.n)
    if family == "star":
        return generators.star(args.n)
    if family == "complete":
        return generators.complete(args.n)
    if family == "complete-bipartite":
        if args.a is None or args.b is None:
            raise _CliError("complete-bipartite requires --a and --b")
        return generators.complete_bipartite(args.a, args.b)
    if family == "random-tree":
        return generators.random_tree(args.n, args.seed, max_degree=args.max_degree)
    if family == "circulant":
        if not args.offsets:
            raise _CliError("circulant requires --offsets")
        offsets = [int(x) for x in args.offsets.split(",")]
        return generators.circulant(args.n, offsets)
    if family == "petersen":
        return generators.petersen()
    if family == "hypercube":
        return generators.hypercube(args.d)
    raise _CliError(f"unknown family {family!r}")


def _cmd_gen(args) -> int:
    started = time.perf_counter()
    try:
        g = _generate(args.family, args)
    except ValueError as exc:
        raise _CliError(str(exc))
    seeded = f" (seed={args.seed})" if args.family == "random-tree" else ""
    if args.output:
        save_graph(g, args.output)
        human = (
            f"wrote {args.family} ({g.vertex_count} vertices, "
            f"{g.edge_count} edges){seeded} to {args.output}"
        )
    else:
        from .graph import render_graph

        human = render_graph(g).rstrip("\n")
    payload = {
        "family": args.family,
        "seed": args.seed,
        "vertices": g.vertex_count,
        "edges": g.edge_count,
    }
    _emit(args, payload, human, started)
    return EXIT_OK


def _bench_measure(tree, budget, engine) -> float:
    """Best-of-three wall time in milliseconds."""
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        solve_tree(tree, budget, engine=engine, keep_sets=False)
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


def _cmd_bench(args) -> int:
    sizes = [int(x) for x in str(args.n).split(",")]
    rows = [BENCH_CSV_HEADER]
    for n in sizes:
        if args.family == "random-tree":
            g = generators.random_tree(n, args.seed, max_degree=args.delta)
        elif args.family == "path":
            g = generators.path(n)
        elif args.family == "star":
            g = generators.star(n)
        else:
            raise _CliError("bench families: random-tree, path, star")
        tree = root_tree(g, 0)
        delta = g.max_degree()
        budget = args.budget if args.budget is not None else delta
        feasible = solve_tree(tree, budget, engine=args.engine, keep_sets=False).feasible
        millis = _bench_measure(tree, budget, args.engine)
        rows.append(
            f"{args.family},{n},{delta},{budget},{str(feasible).lower()},{millis:.3f}"
        )
    text = "\n".join(rows) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(
            f"wrote {len(sizes)} rows to {args.output} "
            f"(engine={args.engine}, seed={args.seed})",
            file=sys.stderr,
        )
    else:
        print(text, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semistrong",
        description="Semistrong edge coloring: tree DP, exact solvers, gadgets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--timings", action="store_true",
            help="include wall-clock time in --json output (breaks byte determinism)",
        )
        p.add_argument(
            "--engine", choices=("auto", "python", "native"), default="auto",
            help="kernel selection (default: auto)",
        )

    p = sub.add_parser("solve", help="semistrong chromatic index of a tree")
    p.add_argument("--input", required=True)
    p.add_argument("--budget", type=int, help="decide feasibility at this budget")
    p.add_argument("--emit-coloring", help="write the reconstructed coloring here")
    add_common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("exact", help="brute-force minimize/decide/enumerate")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--input", required=True)
    p.add_argument("--palette", type=int)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--node-budget", type=int)
    p.add_argument("--cap", type=int, help="stop after this many solutions")
    p.add_argument("--witness", help="write a witness coloring here")
    add_common(p)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("verify", help="verify a coloring file against a kind")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--input", required=True)
    p.add_argument("--coloring", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="edge-replacement reduction for k-regular graphs")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="H graph file")
    p.add_argument("--map", required=True, help="reduction map JSON")
    add_common(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("gadget", help="emit a gadget graph / check its lemmas")
    p.add_argument("--kind", required=True, choices=GADGET_KINDS)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--output")
    p.add_argument("--map", help="write tag JSON here")
    p.add_argument("--check-lemmas", action="store_true")
    p.add_argument("--node-budget", type=int)
    add_common(p)
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("gen", help="instance generators")
    p.add_argument("--family", required=True, choices=_FAMILIES)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--offsets", help="comma-separated circulant offsets")
    p.add_argument("--output")
    add_common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="tree-DP timing harness (CSV)")
    p.add_argument("--family", default="random-tree")
    p.add_argument("--n", required=True, help="size or comma-separated sizes")
    p.add_argument("--delta", type=int, default=8, help="degree cap for random trees")
    p.add_argument("--budget", type=int, help="color budget (default: max degree)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="CSV path (default: stdout)")
    p.add_argument(
        "--engine", choices=("auto", "python", "native"), default="auto"
    )
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotATreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except RuntimeError as exc:
        # e.g. --engine native without the compiled kernels, or an
        # instance outside their limits
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
