"""Command-line surface.

Rule-set sources are either `builtin:ID` (a1_fixed, a1_modifiable,
a2_nolights) or a path to a rule file. Exit codes: 0 ok, 1 check or
verification failure, 2 usage error, 3 runtime violation (node collision).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .algorithms import BUILTIN_IDS, load_source
from .engine import CollisionError, NotWellDefinedError, parse_adversary, run
from .render import render_frame
from .rules import validate
from .ruleformat import ParseError
from .tracefile import TraceMeta, atomic_write_text, parse_trace_file, serialize_trace
from .verify import (
    BudgetExhausted,
    PhaseMissing,
    check_boundary_coverage,
    detect_phases,
    distance_divergence,
    exclusiveness_audit,
    verify_radius_coverage,
)


def _default_seed() -> int | None:
    env = os.environ.get("EXPLORE_SEED")
    return int(env) if env else None


def cmd_check(args) -> int:
    rs = load_source(args.source)
    report = validate(rs)
    ok = report.well_defined or (args.allow_symmetric and not report.conflicts)
    if args.json:
        print(
            json.dumps(
                {
                    "name": rs.name,
                    "well_defined": report.well_defined,
                    "conflicts": report.conflicts,
                    "adversary_controlled": report.adversary_controlled,
                    "normalization_warnings": report.normalization_warnings,
                    "ok": ok,
                }
            )
        )
    else:
        print(f"rule set {rs.name}: {len(rs.rules)} rules, phi={rs.phi}")
        for pair, rot, desc in report.conflicts:
            print(f"  conflict rules {pair} (rotations {rot}): {desc}")
        for idx in report.adversary_controlled:
            print(f"  adversary-controlled rule {idx} (symmetric pattern, directed move)")
        for w in report.normalization_warnings:
            print(f"  warning: {w}")
        print("well-defined" if report.well_defined else "NOT well-defined")
    return 0 if ok else 1


def cmd_run(args) -> int:
    rs = load_source(args.source)
    adv = parse_adversary(args.adversary, _default_seed())
    try:
        trace = run(rs, args.rounds, adv, allow_symmetric=args.allow_symmetric)
    except CollisionError as err:
        print(f"node collision: {err}", file=sys.stderr)
        return 3
    seed = str(getattr(adv, "seed", "-"))
    text = serialize_trace(trace, TraceMeta(rs.name, rs.phi, adv.name, seed))
    if args.trace:
        atomic_write_text(args.trace, text)
        print(f"{trace.rounds} rounds, {len(trace.violations)} violations -> {args.trace}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    rs = load_source(args.source)
    if rs.name not in BUILTIN_IDS:
        print(f"verify needs a builtin algorithm, got {rs.name!r}", file=sys.stderr)
        return 2
    adv = parse_adversary(args.adversary, _default_seed())
    k = args.phases
    rounds = args.rounds or 1024
    checks: dict[str, bool] = {}
    phase_rounds: list[int] = []
    while True:
        trace = run(rs, rounds, adv)
        try:
            detection = detect_phases(trace, rs.name, k)
            break
        except PhaseMissing:
            if rounds >= args.max_rounds:
                print(f"phases not reached within {rounds} rounds", file=sys.stderr)
                return 1
            rounds *= 2
    phase_rounds = detection.rounds
    checks["phases_detected"] = True
    checks["boundary_coverage"] = all(
        check_boundary_coverage(trace, rs.name, i, detection) for i in range(k)
    )
    checks["distance_divergence"] = distance_divergence(trace, detection)
    collisions, swaps = exclusiveness_audit(trace)
    ok = all(checks.values())
    if args.json:
        print(
            json.dumps(
                {
                    "algorithm": rs.name,
                    "phase_rounds": phase_rounds,
                    "checks": checks,
                    "collisions": collisions,
                    "edge_swaps": swaps,
                    "ok": ok,
                }
            )
        )
    else:
        for i, r in enumerate(phase_rounds):
            print(f"phase {i}: round {r}")
        for name, value in checks.items():
            print(f"{name}: {'pass' if value else 'FAIL'}")
        print(f"exclusiveness audit: {collisions} collisions, {swaps} edge swaps")
    return 0 if ok else 1


def cmd_cover(args) -> int:
    rs = load_source(args.source)
    adv = parse_adversary(args.adversary, _default_seed())
    try:
        round_ = verify_radius_coverage(
            rs, args.radius, args.budget, adv, allow_symmetric=args.allow_symmetric
        )
    except BudgetExhausted as err:
        print(f"not covered: node {err.witness} unvisited after {err.budget} rounds")
        return 1
    print(f"[-{args.radius},{args.radius}]^2 covered at round {round_}")
    return 0


def cmd_render(args) -> int:
    with open(args.tracefile, encoding="utf-8") as fh:
        parsed = parse_trace_file(fh.read())
    try:
        x0, y0, x1, y1 = (int(v) for v in args.viewport.split(","))
    except ValueError:
        print("viewport must be x0,y0,x1,y1", file=sys.stderr)
        return 2
    viewport = (x0, y0, x1, y1)
    frames = [
        (r, c)
        for r, c in enumerate(parsed.configurations)
        if r % args.every == 0
    ]
    if args.format == "ascii":
        for r, c in frames:
            print(f"# round {r}")
            sys.stdout.write(render_frame(c, viewport, "ascii"))
            print()
    else:
        os.makedirs(args.out, exist_ok=True)
        for r, c in frames:
            path = os.path.join(args.out, f"frame_{r:06d}.svg")
            atomic_write_text(path, render_frame(c, viewport, "svg"))
        print(f"{len(frames)} frames -> {args.out}")
    return 0


def cmd_bench(args) -> int:
    rs = load_source(args.source)
    start = time.perf_counter()
    trace = run(rs, args.rounds)
    elapsed = time.perf_counter() - start
    peak = max(len(c) for c in trace.configurations)
    print(f"{args.rounds / elapsed:.0f} rounds/s, peak occupied nodes: {peak}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridswarm",
        description="Simulate and verify luminous-robot swarms on the infinite grid",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        p.add_argument("source", help="builtin:ID or a rule-file path")

    p = sub.add_parser("check", help="validate a rule set for well-definedness")
    add_source(p)
    p.add_argument("--allow-symmetric", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("run", help="simulate and write a trace")
    add_source(p)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--adversary", default="identity")
    p.add_argument("--trace", help="output file (default: stdout)")
    p.add_argument("--allow-symmetric", action="store_true")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="check phases, boundaries, divergence")
    add_source(p)
    p.add_argument("--phases", type=int, required=True)
    p.add_argument("--adversary", default="identity")
    p.add_argument("--rounds", type=int, default=0, help="initial trace length")
    p.add_argument("--max-rounds", type=int, default=1 << 18)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cover", help="first round covering [-R,R]^2")
    add_source(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--adversary", default="identity")
    p.add_argument("--allow-symmetric", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("render", help="render trace frames")
    p.add_argument("tracefile")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--viewport", required=True, help="x0,y0,x1,y1")
    p.add_argument("--every", type=int, default=1)
    p.add_argument("--out", default="frames", help="output directory for svg")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="rounds/second")
    add_source(p)
    p.add_argument("--rounds", type=int, required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, NotWellDefinedError, ValueError, KeyError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
