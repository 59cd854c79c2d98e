"""Command-line front door.

Subcommands: validate, chain, mis, gen, bench.  Results are JSON on stdout
(byte-identical for identical command + input); wall time goes to stderr.

Exit codes: 0 success, 1 validation/input error, 2 budget exceeded,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time

from . import core, dp, geometry, oracle, transition
from .errors import BudgetExceeded, InternalError, PtError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_INTERNAL = 3


def _sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_input(path: str):
    """Returns ('graph', PtGraph) or ('geom', GeomInstance)."""
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "kind" in data:
        return "geom", geometry.instance_from_json(data)
    if isinstance(data, dict) and "n" in data:
        return "graph", core.graph_from_json(data)
    raise PtError("BAD_INPUT", f"{path} is neither a graph nor a geometry instance")


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True, separators=(",", ":")))


def _graph_for(path: str):
    kind, obj = _load_input(path)
    if kind == "graph":
        return obj
    return geometry.build_order(obj)


def cmd_validate(args) -> int:
    try:
        g = _graph_for(args.path)
    except PtError as exc:
        # construction errors double as validation failures with one witness
        _emit({
            "command": "validate",
            "input_sha256": _sha256(args.path),
            "result": {"ok": False, "violations": [{"rule": exc.code, "witness": []}]},
        })
        return EXIT_INPUT
    pseudo = core.validate_pseudo_transitive(g)
    strong = core.validate_strong(g)
    _emit({
        "command": "validate",
        "input_sha256": _sha256(args.path),
        "result": {
            "ok": pseudo.ok,
            "violations": pseudo.to_json()["violations"],
            "strong": strong.to_json(),
        },
    })
    return EXIT_OK if pseudo.ok else EXIT_INPUT


def cmd_chain(args) -> int:
    g = _graph_for(args.path)
    if args.algo == "dp":
        tables = dp.dp_tables(g)
        value, chain = dp.max_weight_chain_dp(g, validate=False)
        result = dp.result_record(value, chain)
        counters = {"inspections": tables.inspections}
        expected = value
    elif args.algo == "transition":
        res = transition.longest_chain_transition(g, args.budget)
        value, chain = res.value, res.chain
        result = res.to_json()
        counters = {"checks": res.checks, "nodes": res.nodes, "edges": res.edges}
    else:
        value, chain = oracle.brute_max_weight_chain(g)
        result = {"algorithm": "brute", "value": value, "chain": [int(v) for v in chain]}
        counters = {}
    if not core.verify_chain(g, chain):
        raise InternalError(f"witness {chain} is not a chain")
    recomputed = len(chain) if args.algo == "transition" else core.chain_weight(g, chain)
    if recomputed != value:
        raise InternalError(f"witness {chain} does not re-sum to {value}")
    _emit({
        "command": "chain",
        "algo": args.algo,
        "input_sha256": _sha256(args.path),
        "result": result,
        "counters": counters,
    })
    return EXIT_OK


def cmd_mis(args) -> int:
    kind, inst = _load_input(args.path)
    if kind != "geom":
        raise PtError("BAD_INPUT", "mis needs a geometry instance file")
    method = args.method
    if inst.kind == geometry.CHORDS:
        if method == "half":
            raise PtError("BAD_INPUT", "method half applies to grounded segments only")
        result = geometry.mis_circle(inst.items)
        method = "exact"
    elif inst.kind == geometry.GROUNDED_SEGMENTS:
        if method == "auto":
            acute = all(s.tx > s.bx for s in inst.items)
            method = "exact" if acute else "half"
        if method == "exact":
            result = geometry.mis_grounded_segments_exact(inst.items)
        else:
            result = geometry.mis_grounded_segments_half(inst.items)
    elif inst.kind == geometry.RECTS:
        if method == "half":
            raise PtError("BAD_INPUT", "method half applies to grounded segments only")
        result = geometry.mis_rectangles(inst.items, args.budget)
        method = "exact"
    else:
        raise PtError("BAD_INPUT", "no MIS routine for general segments")
    # re-check the certificate before printing
    for ai in range(len(result)):
        for bi in range(ai + 1, len(result)):
            if not geometry.disjoint(inst.items[result[ai]], inst.items[result[bi]]):
                raise InternalError("printed certificate would not be independent")
    _emit({
        "command": "mis",
        "input_sha256": _sha256(args.path),
        "result": {"mis": [int(i) for i in result], "size": len(result), "method": method},
    })
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = oracle.GenSpec(
        kind=args.kind,
        n=args.n,
        seed=args.seed,
        coordinate_range=args.coord_range,
        weight_range=tuple(args.weight_range),
        lean=args.lean,
    )
    obj = oracle.generate(spec)
    if isinstance(obj, geometry.GeomInstance):
        geometry.save_instance(obj, args.out)
    else:
        core.save_graph(obj, args.out)
    _emit({"command": "gen", "written": args.out, "sha256": _sha256(args.out)})
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()] if args.sizes else []
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "m", "sum_deg_sq", "inspections", "wall_time_s"])
    for n in sizes:
        if args.suite == "dp-scaling":
            inst = oracle.generate(oracle.GenSpec(
                kind=geometry.CHORDS, n=n, seed=args.seed, coordinate_range=4 * n + 4))
            g = geometry.build_order(inst)
            t0 = time.perf_counter()
            tables = dp.dp_tables(g)
            elapsed = time.perf_counter() - t0
            inspections = tables.inspections
            bound = 4 * (dp.sum_deg_sq(g) + n * n)
            if inspections > bound:
                raise InternalError(
                    f"inspection counter {inspections} exceeds bound {bound} at n={n}")
        else:  # transition-scaling
            inst = oracle.generate(oracle.GenSpec(
                kind=geometry.RECTS, n=n, seed=args.seed, coordinate_range=max(8, n)))
            g = geometry.build_order(inst)
            t0 = time.perf_counter()
            res = transition.longest_chain_transition(g, args.budget)
            elapsed = time.perf_counter() - t0
            inspections = res.checks
        writer.writerow([n, g.m, dp.sum_deg_sq(g), inspections, f"{elapsed:.6f}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ptchain",
        description="Longest / maximum-weight chains in pseudo-transitive DAGs "
                    "and geometric maximum independent sets.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="validate a graph or instance file")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("chain", help="maximum-weight / longest chain")
    c.add_argument("path")
    c.add_argument("--algo", choices=("dp", "transition", "brute"), default="dp")
    c.add_argument("--budget", type=int, default=transition.DEFAULT_CHECK_BUDGET)
    c.set_defaults(func=cmd_chain)

    m = sub.add_parser("mis", help="maximum independent set of a geometry instance")
    m.add_argument("path")
    m.add_argument("--method", choices=("exact", "half", "auto"), default="auto")
    m.add_argument("--budget", type=int, default=transition.DEFAULT_CHECK_BUDGET)
    m.set_defaults(func=cmd_mis)

    ggen = sub.add_parser("gen", help="write a deterministic random instance")
    ggen.add_argument("--kind", required=True,
                      choices=(geometry.SEGMENTS, geometry.GROUNDED_SEGMENTS,
                               geometry.RECTS, geometry.CHORDS, oracle.RAW_E2_TOURNAMENT))
    ggen.add_argument("--n", type=int, required=True)
    ggen.add_argument("--seed", type=int, default=0)
    ggen.add_argument("--coord-range", type=int, default=100)
    ggen.add_argument("--weight-range", type=int, nargs=2, default=(1, 1))
    ggen.add_argument("--lean", choices=("acute", "mixed"), default="acute")
    ggen.add_argument("--out", required=True)
    ggen.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="work-counter benchmark (CSV on stdout)")
    b.add_argument("--suite", choices=("dp-scaling", "transition-scaling"), required=True)
    b.add_argument("--sizes", default="")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--budget", type=int, default=transition.DEFAULT_CHECK_BUDGET)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except BudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except InternalError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INTERNAL
    except (PtError, OSError, json.JSONDecodeError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    print(f"time_s={time.perf_counter() - t0:.6f}", file=sys.stderr)
    return code


def main_entry() -> None:
    sys.exit(main())
