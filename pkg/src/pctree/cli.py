"""Command line entry point: ``pctree <command> ...``.

Exit status: 0 success (a tree, a valid verification, a recognized family),
1 a sound negative answer, 2 bad usage or input, 3 an internal guarantee
failed.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import extremal, formats, generators, oracle, pipeline, rainbow, sat
from .errors import BoundExceeded, InternalGuaranteeViolation, NoValidRepair
from .trees import Mode, tree_defect

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None, sidecar: dict | None = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text)
    if sidecar is not None:
        Path(out).with_suffix(".json").write_text(_dump(sidecar))


def cmd_solve(args) -> int:
    g = formats.read_graph(args.graph)
    outcome = pipeline.build_pc_tree(g, delta0=args.delta0)
    if args.report:
        Path(args.report).write_text(_dump(outcome.report))
    if outcome.found:
        sys.stdout.write(formats.format_tree(g, outcome.tree))
        return EXIT_OK
    w = outcome.witness
    if isinstance(w, pipeline.ExtremalFamily):
        inst = w.instance
        print(f"NO extremal {inst.tag} m={inst.m} k={inst.k}")
    else:
        print(f"NO exhaustive delta={w.delta} target={w.target}")
    return EXIT_NO


def cmd_rainbow(args) -> int:
    g = formats.read_graph(args.graph)
    t = rainbow.build_rainbow_tree(g, root=args.root - 1)
    sys.stdout.write(formats.format_tree(g, t))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = formats.read_graph(args.graph)
    _, t = oracle.max_colored_tree(g, Mode(args.mode), bound=args.bound)
    sys.stdout.write(formats.format_tree(g, t))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.tag == "random":
        g = generators.random_connected(args.n, args.p, args.colors, seed=args.seed)
        side = {"kind": "random", "n": args.n, "p": args.p, "colors": args.colors, "seed": args.seed}
    elif args.tag in generators.REPAIR_FIXTURES:
        g = generators.repair_fixture(args.tag)
        side = {"kind": "fixture", "name": args.tag}
    else:
        g, inst = extremal.generate(args.tag, args.m, args.k, seed=args.seed)
        side = inst.to_json()
    _emit(formats.format_graph(g), args.output, side)
    return EXIT_OK


def cmd_reduce(args) -> int:
    f = formats.read_cnf(args.cnf)
    g, rm = sat.reduce(f)
    _emit(formats.format_graph(g), args.output, rm.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    g = formats.read_graph(args.graph)
    mode = Mode(args.mode)
    t = formats.read_tree(args.tree, g, mode)
    bad = tree_defect(g, t, mode)
    if bad:
        print(f"invalid: {bad}")
        return EXIT_NO
    print(f"ok {mode.value} order={t.order}")
    return EXIT_OK


def cmd_recognize(args) -> int:
    g = formats.read_graph(args.graph)
    tags = tuple(t.strip() for t in args.tags.split(",") if t.strip())
    inst = extremal.recognize(g, tags)
    if inst is None:
        print("none")
        return EXIT_NO
    sys.stdout.write(_dump(inst.to_json()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pctree", description="Large properly colored and rainbow trees.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log pipeline stages to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="properly colored tree of order min(n, 2*delta+1), or NO")
    p.add_argument("graph")
    p.add_argument("--delta0", type=int, default=pipeline.DEFAULT_DELTA0,
                   help="exhaustive search when the minimum color degree is at most this (>= 3)")
    p.add_argument("--report", help="write a JSON run report here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("rainbow", help="rainbow tree in a star-colored graph")
    p.add_argument("graph")
    p.add_argument("--root", type=int, default=1, help="1-indexed start vertex")
    p.set_defaults(func=cmd_rainbow)

    p = sub.add_parser("oracle", help="exact maximum tree by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PROPER.value)
    p.add_argument("--bound", type=int, default=None, help="vertex limit (default $PCTREE_ORACLE_BOUND or 12)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a family member, a repair fixture, or a random graph")
    p.add_argument("tag", choices=list(extremal.TAGS) + list(generators.REPAIR_FIXTURES) + ["random"])
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--colors", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="graph file; a .json sidecar is written next to it")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="MAX-SAT instance to a star-colored graph")
    p.add_argument("cnf")
    p.add_argument("-o", "--output", help="graph file; the role map goes to a .json sidecar")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check a tree file against a graph")
    p.add_argument("graph")
    p.add_argument("tree")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PROPER.value)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recognize", help="match a graph against the extremal families")
    p.add_argument("graph")
    p.add_argument("--tags", default=",".join(extremal.TAGS))
    p.set_defaults(func=cmd_recognize)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (InternalGuaranteeViolation, NoValidRepair) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError, BoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
