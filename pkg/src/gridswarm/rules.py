"""Declarative rule tables: patterns, rotation closure, matching, validation.

A rule pattern constrains the Manhattan ball around a robot. Pattern cells
are MUST_BE_EMPTY ("."), DONT_CARE ("x"), or a color label (must be
occupied by a robot showing that color). A rule fires when its pattern
matches the robot's view; rotated copies of every rule apply implicitly
(robots share chirality but have no common North).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grid import (
    EMPTY,
    OCCLUDED,
    Configuration,
    Move,
    Pos,
    View,
    _between,
    ball_offsets,
    rotate_move,
    rotate_offset,
)

MUST_BE_EMPTY = "."
DONT_CARE = "x"
RESERVED_LABELS = frozenset({MUST_BE_EMPTY, DONT_CARE, OCCLUDED})


@dataclass(frozen=True)
class RulePattern:
    phi: int
    cells: tuple[tuple[Pos, str], ...]  # full ball, sorted by offset

    @staticmethod
    def from_dict(phi: int, cells: dict[Pos, str]) -> "RulePattern":
        ball = set(ball_offsets(phi))
        if set(cells) != ball:
            raise ValueError("pattern must cover the whole visibility ball")
        if cells[(0, 0)] in (MUST_BE_EMPTY, DONT_CARE):
            raise ValueError("pattern center must be occupied by the mover")
        return RulePattern(phi, tuple(sorted(cells.items())))

    def as_dict(self) -> dict[Pos, str]:
        return dict(self.cells)

    @property
    def center_color(self) -> str:
        return self.as_dict()[(0, 0)]


@dataclass(frozen=True)
class Rule:
    pattern: RulePattern
    move: Move
    new_color: str | None = None


@dataclass(frozen=True)
class ExpandedRule:
    pattern: RulePattern
    move: Move
    new_color: str | None
    source_index: int
    rotation: int


@dataclass
class RuleSet:
    name: str
    phi: int
    colors: list[str]
    lights_modifiable: bool
    rules: list[Rule]
    initial: Configuration


@dataclass
class ValidationReport:
    conflicts: list[tuple[tuple[int, int], tuple[int, int], str]] = field(
        default_factory=list
    )
    adversary_controlled: list[int] = field(default_factory=list)
    normalization_warnings: list[str] = field(default_factory=list)

    @property
    def well_defined(self) -> bool:
        return not self.conflicts and not self.adversary_controlled


def hidden_offsets(phi: int, cells: dict[Pos, str], occupied) -> set[Pos]:
    """Offsets hidden behind a cell for which `occupied` holds."""
    hidden = set()
    for o in ball_offsets(phi):
        if o == (0, 0):
            continue
        if any(occupied(cells[b]) for b in _between(o)):
            hidden.add(o)
    return hidden


def normalize_pattern(p: RulePattern) -> tuple[RulePattern, list[str]]:
    """Force DONT_CARE at every offset hidden behind an occupied cell.

    A robot at distance one hides the cell behind it, so a pattern may not
    constrain what it cannot see.
    """
    cells = p.as_dict()
    warnings = []
    for o in hidden_offsets(
        p.phi, cells, lambda s: s not in (MUST_BE_EMPTY, DONT_CARE)
    ):
        if cells[o] != DONT_CARE:
            warnings.append(
                f"offset {o} is hidden behind an occupied cell; forced to don't-care"
            )
            cells[o] = DONT_CARE
    return RulePattern.from_dict(p.phi, cells), warnings


def rotate_pattern(quarter_turns: int, p: RulePattern) -> RulePattern:
    return RulePattern.from_dict(
        p.phi, {rotate_offset(quarter_turns, o): s for o, s in p.cells}
    )


def expand_rotations(rules: list[Rule], phi: int) -> list[ExpandedRule]:
    """Close the rule list under the four rotations.

    Exact duplicates (same pattern and same output) are dropped; identical
    patterns with differing outputs are kept and later reported by
    validate() as conflicts or adversary-controlled rules.
    """
    out: list[ExpandedRule] = []
    seen: set[tuple] = set()
    for idx, rule in enumerate(rules):
        for r in range(4):
            pat = rotate_pattern(r, rule.pattern)
            key = (pat.cells, rotate_move(r, rule.move), rule.new_color)
            if key in seen:
                continue
            seen.add(key)
            out.append(ExpandedRule(pat, key[1], rule.new_color, idx, r))
    return out


def expanded_rules(rs: RuleSet) -> list[ExpandedRule]:
    cached = getattr(rs, "_expanded", None)
    if cached is None:
        cached = expand_rotations(rs.rules, rs.phi)
        rs._expanded = cached
    return cached


def validate(rs: RuleSet) -> ValidationReport:
    """Check that the global move never depends on the adversary's choice
    of rotation: no two expanded rules share a pattern with different
    outputs, and no rotation-symmetric pattern carries a directed move."""
    report = ValidationReport()

    normalized = []
    for idx, rule in enumerate(rs.rules):
        pat, warns = normalize_pattern(rule.pattern)
        normalized.append(Rule(pat, rule.move, rule.new_color))
        report.normalization_warnings.extend(f"rule {idx}: {w}" for w in warns)

    for idx, rule in enumerate(normalized):
        for r in range(1, 4):
            if rotate_pattern(r, rule.pattern) == rule.pattern:
                if (rotate_move(r, rule.move), rule.new_color) != (
                    rule.move,
                    rule.new_color,
                ):
                    report.adversary_controlled.append(idx)
                    break

    expanded = expand_rotations(normalized, rs.phi)
    by_pattern: dict[tuple, list[ExpandedRule]] = {}
    for er in expanded:
        by_pattern.setdefault(er.pattern.cells, []).append(er)
    seen_pairs: set[tuple[int, int]] = set()
    for group in by_pattern.values():
        for i, a in enumerate(group):
            for b in group[i + 1 :]:
                if (a.move, a.new_color) == (b.move, b.new_color):
                    continue
                pair = tuple(sorted((a.source_index, b.source_index)))
                if pair[0] == pair[1] and pair[0] in report.adversary_controlled:
                    continue  # already reported as adversary-controlled
                if pair in seen_pairs:
                    continue  # one conflict per source-rule pair
                seen_pairs.add(pair)
                report.conflicts.append(
                    (
                        pair,
                        (a.rotation, b.rotation),
                        f"same pattern, outputs ({a.move.value},{a.new_color}) "
                        f"vs ({b.move.value},{b.new_color})",
                    )
                )
    return report


class AmbiguousMatchError(Exception):
    pass


def pattern_matches(pattern: RulePattern, view_cells: dict[Pos, str]) -> bool:
    for o, want in pattern.cells:
        got = view_cells[o]
        if want == DONT_CARE:
            continue
        if want != got:  # EMPTY matches EMPTY, a label matches that label
            return False
    return True


def match(
    expanded: list[ExpandedRule], v: View, allow_ambiguous: bool = False
) -> tuple[Move, str | None]:
    """Return the output of the matching rule, or (Idle, keep color).

    Ambiguity (two non-identical outputs matching) is an error for
    validated rule sets; with allow_ambiguous the first rule in
    (source, rotation) order wins, which lets the adversary demos run.
    """
    cells = v.as_dict()
    hits = [er for er in expanded if pattern_matches(er.pattern, cells)]
    if not hits:
        return Move.IDLE, None
    outputs = {(er.move, er.new_color) for er in hits}
    if len(outputs) > 1 and not allow_ambiguous:
        raise AmbiguousMatchError(
            f"view matches rules with {len(outputs)} different outputs "
            "(rule set not validated?)"
        )
    return hits[0].move, hits[0].new_color
