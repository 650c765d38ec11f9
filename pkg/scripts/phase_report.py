#!/usr/bin/env python3
"""Print measured phase rounds, durations, and audits for the built-ins."""

import argparse
import sys

from gridswarm.algorithms import BUILTIN_IDS
from gridswarm.verify import distance_divergence, exclusiveness_audit, run_until_phases


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--phases", type=int, default=10)
    args = parser.parse_args()

    for bid in BUILTIN_IDS:
        trace, detection = run_until_phases(bid, args.phases)
        durations = [b - a for a, b in zip(detection.rounds, detection.rounds[1:])]
        collisions, swaps = exclusiveness_audit(trace)
        print(bid)
        print(f"  phase rounds:   {detection.rounds}")
        print(f"  durations:      {durations}")
        print(f"  audit:          {collisions} collisions, {swaps} edge swaps")
        print(f"  divergence:     {distance_divergence(trace, detection)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
