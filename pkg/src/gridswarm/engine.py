"""Synchronous round execution, adversary strategies, safety monitoring.

Each round every robot takes a snapshot, the adversary picks a rotation
for it, the robot matches its (rotated) local view against the rule table,
and the computed local move is mapped back through the inverse rotation.
All moves and color changes are then applied simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grid import Configuration, Move, Pos, rotate_move, rotate_view, view_at
from .rules import RuleSet, expanded_rules, match, validate


class IdentityAdversary:
    name = "identity"

    def rotation(self, round_: int, pos: Pos) -> int:
        return 0


class PingPongAdversary:
    """Alternates the identity and the half turn, round by round."""

    name = "pingpong"

    def rotation(self, round_: int, pos: Pos) -> int:
        return 0 if round_ % 2 == 0 else 2


class SeededRandomAdversary:
    """Deterministic pseudo-random rotation per (round, robot position)."""

    def __init__(self, seed: int):
        self.seed = seed
        self.name = f"random:{seed}"

    def rotation(self, round_: int, pos: Pos) -> int:
        mask = 0xFFFFFFFFFFFFFFFF
        h = (
            self.seed * 0x9E3779B97F4A7C15
            + round_ * 0xBF58476D1CE4E5B9
            + pos[0] * 0x94D049BB133111EB
            + pos[1] * 0xD6E8FEB86659FD93
        ) & mask
        h ^= h >> 31
        h = (h * 0xBF58476D1CE4E5B9) & mask
        h ^= h >> 27
        return h & 3


@dataclass(frozen=True)
class ViolationEvent:
    round: int
    kind: str  # "NodeCollision" | "EdgeSwap"
    positions: tuple[Pos, ...]  # target node, or the swapped edge endpoints


class CollisionError(Exception):
    def __init__(self, event: ViolationEvent):
        self.event = event
        super().__init__(
            f"round {event.round}: two robots target node {event.positions[0]}"
        )


class UnknownColorError(Exception):
    pass


class NotWellDefinedError(Exception):
    pass


@dataclass
class Trace:
    rule_set_name: str
    configurations: list[Configuration]
    violations: list[ViolationEvent] = field(default_factory=list)
    robot_tracks: dict[int, list[tuple[Pos, str]]] = field(default_factory=dict)

    @property
    def rounds(self) -> int:
        return len(self.configurations) - 1


def _actions(
    rs: RuleSet, c: Configuration, adv, round_: int, allow_symmetric: bool
) -> list[tuple[Pos, Pos, str]]:
    """Per-robot (source, destination, new color) for one round."""
    expanded = expanded_rules(rs)
    acts = []
    for pos, color in c.items():
        if color not in rs.colors:
            raise UnknownColorError(f"color {color!r} not in rule set {rs.name!r}")
        r = adv.rotation(round_, pos)
        view = view_at(c, pos, rs.phi)
        if r:
            view = rotate_view(r, view)
        move, new_color = match(expanded, view, allow_ambiguous=allow_symmetric)
        global_move = rotate_move(-r, move)
        dx, dy = global_move.offset
        dst = (pos[0] + dx, pos[1] + dy)
        if new_color is None or not rs.lights_modifiable:
            new_color = color
        acts.append((pos, dst, new_color))
    return acts


def step(
    rs: RuleSet,
    c: Configuration,
    adv=None,
    round_: int = 0,
    allow_symmetric: bool = False,
) -> tuple[Configuration, list[ViolationEvent]]:
    """One synchronous round. Node collisions are fatal (the model forbids
    co-location); edge swaps are recorded but execute."""
    adv = adv or IdentityAdversary()
    acts = _actions(rs, c, adv, round_, allow_symmetric)
    return _apply(acts, round_)


def _apply(
    acts: list[tuple[Pos, Pos, str]], round_: int
) -> tuple[Configuration, list[ViolationEvent]]:
    violations: list[ViolationEvent] = []
    targets: dict[Pos, Pos] = {}
    for src, dst, _ in acts:
        if dst in targets:
            raise CollisionError(ViolationEvent(round_, "NodeCollision", (dst,)))
        targets[dst] = src
    moved = {src: dst for src, dst, _ in acts if src != dst}
    for src, dst in moved.items():
        if moved.get(dst) == src and src < dst:
            violations.append(ViolationEvent(round_, "EdgeSwap", (src, dst)))
    return {dst: col for _, dst, col in acts}, violations


def run(
    rs: RuleSet,
    rounds: int,
    adv=None,
    initial: Configuration | None = None,
    allow_symmetric: bool = False,
    check: bool = True,
) -> Trace:
    """Execute `rounds` rounds from the rule set's initial configuration
    (or an explicit one) and record the trace.

    Robot identities exist only in the trace: they are assigned to the
    sorted initial positions and followed through the unique
    source-to-destination matching of each round.
    """
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    adv = adv or IdentityAdversary()
    if check:
        report = validate(rs)
        if report.conflicts:
            raise NotWellDefinedError(
                f"rule set {rs.name!r} has conflicting rules: {report.conflicts}"
            )
        if report.adversary_controlled and not allow_symmetric:
            raise NotWellDefinedError(
                f"rule set {rs.name!r} has adversary-controlled rules "
                f"{report.adversary_controlled}; pass allow_symmetric to run anyway"
            )

    c = dict(initial if initial is not None else rs.initial)
    positions = {i: p for i, p in enumerate(sorted(c))}
    trace = Trace(
        rule_set_name=rs.name,
        configurations=[dict(c)],
        robot_tracks={i: [(p, c[p])] for i, p in positions.items()},
    )
    for round_ in range(rounds):
        acts = _actions(rs, c, adv, round_, allow_symmetric)
        try:
            c, violations = _apply(acts, round_)
        except CollisionError as err:
            raise CollisionError(err.event) from None
        trace.violations.extend(violations)
        dest = {src: (dst, col) for src, dst, col in acts}
        for i, p in positions.items():
            positions[i] = dest[p][0]
            trace.robot_tracks[i].append(dest[p])
        trace.configurations.append(dict(c))
    return trace


def visited_set(t: Trace) -> set[Pos]:
    visited: set[Pos] = set()
    for c in t.configurations:
        visited.update(c)
    return visited


def parse_adversary(spec: str, default_seed: int | None = None):
    if spec == "identity":
        return IdentityAdversary()
    if spec == "pingpong":
        return PingPongAdversary()
    if spec == "random" or spec.startswith("random:"):
        if ":" in spec:
            seed = int(spec.split(":", 1)[1])
        elif default_seed is not None:
            seed = default_seed
        else:
            raise ValueError("random adversary needs a seed (random:SEED)")
        return SeededRandomAdversary(seed)
    raise ValueError(f"unknown adversary {spec!r}")
