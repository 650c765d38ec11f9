#!/usr/bin/env python3
"""Demonstrate why rotation-symmetric rules are rejected by default.

A single robot whose rule says "move up whenever alone" has a rotation
symmetric view, so the adversary is free to re-orient it every round: under
the ping-pong strategy it oscillates on one edge forever and never explores
anything. `gridswarm check` reports such rules as adversary-controlled.
"""

import sys

from gridswarm.controls import lone_mover
from gridswarm.engine import PingPongAdversary, run
from gridswarm.rules import validate


def main() -> int:
    rs = lone_mover()
    report = validate(rs)
    print(f"validation: adversary_controlled rules = {report.adversary_controlled}")

    trace = run(rs, 12, PingPongAdversary(), allow_symmetric=True)
    positions = [next(iter(c)) for c in trace.configurations]
    print("positions under the ping-pong adversary:")
    print("  " + " -> ".join(str(p) for p in positions))
    print(f"distinct nodes ever visited: {len(set(positions))}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
