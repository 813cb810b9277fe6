"""Command-line interface.

Exit codes: 0 success, 1 verification failure or no antimagic labelling,
2 bad input (unreadable files, invalid graphs, unsupported cases).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dot import export_dot
from .errors import AntimagicError, InternalInvariantError
from .fileformats import (parse_graph, parse_labelling, serialize_graph, serialize_labelling,
                          write_atomic)
from .generators import GenConfig, gen_connected, gen_kk2, gen_multi
from .graph import X, VertexRef, connected_components, induced_subgraph
from .layering import build_F, build_layering, classify_types
from .multi import MultiTrace
from .oracle import DEFAULT_BUDGET, brute_force_search, is_antimagic_assignment
from .pipeline import PIPELINES, choose_pipeline, label_graph
from .stress import stress
from .verify import PROFILES, check_antimagic, check_structural_invariants

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise AntimagicError("IO_ERROR", f"cannot read {path}: {exc.strerror}") from None


def _root(arg: int | None) -> VertexRef | None:
    return None if arg is None else VertexRef(X, arg)


def cmd_generate(args) -> int:
    if args.kk2:
        g = gen_kk2(args.k)
    elif args.components:
        try:
            sizes = [int(s) for s in args.components.split(",") if s.strip()]
        except ValueError:
            raise AntimagicError("BAD_CONFIG", "--components must be comma-separated integers") from None
        g = gen_multi([GenConfig(args.k, n, seed=args.seed + j) for j, n in enumerate(sizes)], args.k)
    elif args.nx is not None:
        g = gen_connected(GenConfig(args.k, args.nx, seed=args.seed))
    else:
        raise AntimagicError("BAD_CONFIG", "give --nx, --components or --kk2")
    write_atomic(args.out, serialize_graph(g))
    return EXIT_OK


def cmd_label(args) -> int:
    g = parse_graph(_read(args.input))
    trace = MultiTrace()
    lab = label_graph(g, _root(args.root), best_effort=args.best_effort, trace=trace)
    result = check_antimagic(g, lab)
    if not result.ok:
        print(f"FAIL ANTIMAGIC {len(result.collisions)} colliding pairs; nothing written",
              file=sys.stderr)
        return EXIT_FAIL
    write_atomic(args.output, serialize_labelling(lab))
    if trace.rounds:
        print(f"repairs={len(trace.rounds)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    lab = parse_labelling(_read(args.labelling), g)
    result = check_antimagic(g, lab)
    if result.ok:
        print("PASS ANTIMAGIC")
    else:
        shown = "; ".join(f"{a}={b} sum {s}" for a, b, s in result.collisions[:5])
        print(f"FAIL ANTIMAGIC {shown}")
    ok = result.ok
    if args.profile:
        root = None
        if args.profile in ("odd", "even"):
            if len(connected_components(g)) != 1:
                raise AntimagicError("NOT_CONNECTED", f"profile {args.profile} needs a connected graph")
            root = build_layering(g, _root(args.root))
        report = check_structural_invariants(g, lab, lay=root, profile=args.profile)
        sys.stdout.write(report.render())
        ok = ok and report.ok
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    g = parse_graph(_read(args.input))
    res = brute_force_search(g, budget=args.max_edges, count_all=args.count)
    print(f"exists={'true' if res.exists else 'false'}")
    if args.count:
        print(f"count={res.count}")
    print(f"states={res.states_explored}")
    if res.witness is not None:
        if not is_antimagic_assignment(g, res.witness):
            raise InternalInvariantError("oracle witness failed re-validation")
        print("witness=" + ",".join(str(v) for v in res.witness))
    return EXIT_OK if res.exists else EXIT_FAIL


def _info_lines(g, root) -> list[str]:
    lay = build_layering(g, root)
    types = classify_types(lay)
    out = [f"root {lay.root}  depth {lay.depth}  layers {lay.p}"]
    for d, level in enumerate(lay.levels):
        if d == 0:
            desc = str(lay.root)
        else:
            desc = " ".join(f"{v}:{types.type_of(v)}" for v in level)
        out.append(f"  V{d} ({len(level)}): {desc}")
    for i in range(1, lay.p + 1):
        a, b = lay.interval(i)
        F = build_F(lay, types, i)
        out.append(f"  L{i}: {len(lay.layer(i))} edges, labels [{a}, {b}], |F|={len(F.edges)}")
    return out


def cmd_info(args) -> int:
    g = parse_graph(_read(args.input))
    comps = connected_components(g)
    print(f"k={g.k} |X|={g.x_count} |Y|={g.y_count} m={g.m} components={len(comps)} "
          f"pipeline={choose_pipeline(g)}")
    if len(comps) == 1:
        print("\n".join(_info_lines(g, _root(args.root))))
        return EXIT_OK
    if args.root is not None:
        raise AntimagicError("ROOT_NOT_SUPPORTED", "--root only applies to connected graphs")
    for n, comp in enumerate(comps, start=1):
        sub = induced_subgraph(g, comp)
        print(f"component {n}: |X|={sub.graph.x_count} |Y|={sub.graph.y_count} "
              f"x-ids {sub.x_ids[0]}..{sub.x_ids[-1]} (local ids below)")
        print("\n".join(_info_lines(sub.graph, None)))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = parse_graph(_read(args.graph))
    lab = parse_labelling(_read(args.labelling), g) if args.labelling else None
    sys.stdout.write(export_dot(g, lab))
    return EXIT_OK


def cmd_stress(args) -> int:
    summary = stress(args.k, args.trials, args.nx_min, args.nx_max, args.seed, args.pipeline)
    sys.stdout.write(summary.render())
    return EXIT_OK if summary.failed == 0 and summary.gen_errors == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antimagic",
                                     description="Antimagic labellings of (k,2)-biregular bipartite graphs")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("generate", help="write a random or complete instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nx", type=int)
    p.add_argument("--components", help="comma-separated |X| per component")
    p.add_argument("--kk2", action="store_true", help="emit K_{k,2}")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("label", help="construct an antimagic labelling")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--root", type=int)
    p.add_argument("--best-effort", action="store_true",
                   help="attempt disconnected even-k graphs (result is verified)")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labelling")
    p.add_argument("--graph", required=True)
    p.add_argument("--labelling", required=True)
    p.add_argument("--profile", choices=PROFILES)
    p.add_argument("--root", type=int, help="root for the odd/even profiles (default x0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search on small graphs")
    p.add_argument("--input", required=True)
    p.add_argument("--max-edges", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--count", action="store_true", help="count every antimagic labelling")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("info", help="layering report")
    p.add_argument("--input", required=True)
    p.add_argument("--root", type=int)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("export-dot", help="Graphviz output on stdout")
    p.add_argument("--graph", required=True)
    p.add_argument("--labelling")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("stress", help="random generate/label/verify runs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--nx-min", type=int, default=3)
    p.add_argument("--nx-max", type=int, default=20)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--pipeline", choices=PIPELINES, default="auto")
    p.set_defaults(func=cmd_stress)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InternalInvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except AntimagicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
