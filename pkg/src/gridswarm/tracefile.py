"""Tab-separated trace serialization.

Header lines start with `#` and carry run metadata. Robot records are
`round TAB id TAB x TAB y TAB color`, sorted by (round, id); violation
records are `round TAB violation TAB kind TAB coords...` and follow the
robot records of their round. The record body is byte-stable: identical
inputs always serialize identically.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field

from .engine import Trace, ViolationEvent
from .grid import Pos


@dataclass
class TraceMeta:
    algorithm: str
    phi: int
    adversary: str
    seed: str = "-"


def serialize_trace(t: Trace, meta: TraceMeta) -> str:
    lines = [
        f"# algorithm\t{meta.algorithm}",
        f"# phi\t{meta.phi}",
        f"# adversary\t{meta.adversary}",
        f"# seed\t{meta.seed}",
    ]
    by_round_violations: dict[int, list[ViolationEvent]] = {}
    for v in t.violations:
        by_round_violations.setdefault(v.round, []).append(v)
    for round_ in range(len(t.configurations)):
        for rid in sorted(t.robot_tracks):
            (x, y), color = t.robot_tracks[rid][round_]
            lines.append(f"{round_}\t{rid}\t{x}\t{y}\t{color}")
        for v in by_round_violations.get(round_, []):
            coords = "\t".join(f"{x}\t{y}" for x, y in v.positions)
            lines.append(f"{round_}\tviolation\t{v.kind}\t{coords}")
    return "\n".join(lines) + "\n"


@dataclass
class ParsedTrace:
    meta: dict[str, str]
    configurations: list[dict[Pos, str]] = field(default_factory=list)
    violations: list[ViolationEvent] = field(default_factory=list)
    tracks: dict[int, list[tuple[Pos, str]]] = field(default_factory=dict)


def parse_trace_file(text: str) -> ParsedTrace:
    meta: dict[str, str] = {}
    configs: dict[int, dict[Pos, str]] = {}
    tracks: dict[int, dict[int, tuple[Pos, str]]] = {}
    violations: list[ViolationEvent] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            parts = line[1:].strip().split("\t")
            if len(parts) == 2:
                meta[parts[0]] = parts[1]
            continue
        fields = line.split("\t")
        round_ = int(fields[0])
        if fields[1] == "violation":
            kind = fields[2]
            coords = [int(v) for v in fields[3:]]
            positions = tuple(zip(coords[::2], coords[1::2]))
            violations.append(ViolationEvent(round_, kind, positions))
            continue
        rid, x, y, color = int(fields[1]), int(fields[2]), int(fields[3]), fields[4]
        configs.setdefault(round_, {})[(x, y)] = color
        tracks.setdefault(rid, {})[round_] = ((x, y), color)
    out = ParsedTrace(meta=meta, violations=violations)
    out.configurations = [configs[r] for r in sorted(configs)]
    out.tracks = {
        rid: [entries[r] for r in sorted(entries)] for rid, entries in tracks.items()
    }
    return out


def trace_record_bytes(text: str) -> bytes:
    """The record body without `#` metadata lines; this is the part that
    must be byte-identical across adversaries for well-defined rule sets."""
    body = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return ("\n".join(body) + "\n").encode()


def atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
