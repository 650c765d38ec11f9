"""Small hand-built rule sets used as controls and adversary demos."""

from __future__ import annotations

from .grid import Move
from .rules import MUST_BE_EMPTY, Rule, RulePattern, RuleSet, ball_offsets


def empty_ball_pattern(phi: int, center_color: str) -> RulePattern:
    cells = {o: MUST_BE_EMPTY for o in ball_offsets(phi)}
    cells[(0, 0)] = center_color
    return RulePattern.from_dict(phi, cells)


def lone_mover(phi: int = 1) -> RuleSet:
    """One robot that always tries to move up. The pattern is rotation
    symmetric, so the adversary decides where it actually goes."""
    return RuleSet(
        name="lone_mover",
        phi=phi,
        colors=["A"],
        lights_modifiable=False,
        rules=[Rule(empty_ball_pattern(phi, "A"), Move.UP)],
        initial={(0, 0): "A"},
    )


def frozen(base: RuleSet) -> RuleSet:
    """The same initial configuration with no rules: nobody ever moves."""
    return RuleSet(
        name=f"{base.name}_frozen",
        phi=base.phi,
        colors=list(base.colors),
        lights_modifiable=base.lights_modifiable,
        rules=[],
        initial=dict(base.initial),
    )
