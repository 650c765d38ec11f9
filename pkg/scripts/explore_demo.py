#!/usr/bin/env python3
"""Watch a built-in algorithm sweep its growing polygon, as ASCII frames.

Usage: explore_demo.py [a1_fixed|a1_modifiable|a2_nolights] [--rounds N]
"""

import argparse
import sys

from gridswarm.algorithms import BUILTIN_IDS, builtin
from gridswarm.engine import run, visited_set
from gridswarm.grid import farthest_pair_distance
from gridswarm.render import render_ascii


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("algorithm", choices=BUILTIN_IDS, nargs="?", default="a1_fixed")
    parser.add_argument("--rounds", type=int, default=40)
    parser.add_argument("--every", type=int, default=4)
    args = parser.parse_args()

    rs = builtin(args.algorithm)
    trace = run(rs, args.rounds)
    xs = [x for c in trace.configurations for x, _ in c]
    ys = [y for c in trace.configurations for _, y in c]
    viewport = (min(xs) - 1, min(ys) - 1, max(xs) + 1, max(ys) + 1)

    for r, c in enumerate(trace.configurations):
        if r % args.every:
            continue
        print(f"round {r}  (farthest pair: {farthest_pair_distance(c)})")
        print(render_ascii(c, viewport))
    print(f"visited {len(visited_set(trace))} nodes in {args.rounds} rounds")
    if trace.violations:
        print(f"violations: {len(trace.violations)} (edge swaps are permitted)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
