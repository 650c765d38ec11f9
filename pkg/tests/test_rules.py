import pytest

from gridswarm.algorithms import builtin
from gridswarm.grid import EMPTY, Move, View, ball_offsets, view_at
from gridswarm.rules import (
    DONT_CARE,
    MUST_BE_EMPTY,
    AmbiguousMatchError,
    Rule,
    RulePattern,
    RuleSet,
    expand_rotations,
    expanded_rules,
    match,
    normalize_pattern,
    rotate_pattern,
    validate,
)


def pattern(phi, **overrides):
    cells = {o: MUST_BE_EMPTY for o in ball_offsets(phi)}
    cells[(0, 0)] = overrides.pop("center", "A")
    for off, tok in overrides.pop("cells", {}).items():
        cells[off] = tok
    return RulePattern.from_dict(phi, cells)


def empty_view(phi, center="A", cells=None):
    d = {o: EMPTY for o in ball_offsets(phi)}
    d[(0, 0)] = center
    d.update(cells or {})
    return View.from_dict(phi, d)


def test_pattern_must_cover_ball():
    with pytest.raises(ValueError):
        RulePattern.from_dict(1, {(0, 0): "A"})


def test_pattern_center_must_be_occupied():
    cells = {o: MUST_BE_EMPTY for o in ball_offsets(1)}
    with pytest.raises(ValueError):
        RulePattern.from_dict(1, cells)


def test_normalize_phi1_unchanged():
    p = pattern(1, cells={(1, 0): "A"})
    q, warnings = normalize_pattern(p)
    assert q == p and warnings == []


def test_normalize_forces_hidden_cell():
    p = pattern(2, cells={(1, 0): "A", (2, 0): MUST_BE_EMPTY})
    q, warnings = normalize_pattern(p)
    assert q.as_dict()[(2, 0)] == DONT_CARE
    assert len(warnings) == 1


def test_normalize_all_empty_unchanged():
    p = pattern(2)
    q, warnings = normalize_pattern(p)
    assert q == p and warnings == []


def test_normalize_idempotent():
    p = pattern(2, cells={(0, 1): "A", (0, 2): "A", (-1, 0): "A", (-2, 0): "x"})
    q, _ = normalize_pattern(p)
    r, warnings = normalize_pattern(q)
    assert r == q and warnings == []


def test_rotate_pattern():
    p = pattern(1, cells={(1, 0): "A"})
    assert rotate_pattern(1, p).as_dict()[(0, 1)] == "A"
    assert rotate_pattern(4, p) == p


def test_expand_a1_fixed_counts():
    rs = builtin("a1_fixed")
    expanded = expand_rotations(rs.rules, rs.phi)
    assert len(expanded) == 24
    assert len({er.pattern.cells for er in expanded}) == 24


def test_expand_symmetric_pattern():
    rules = [Rule(pattern(1), Move.UP)]
    expanded = expand_rotations(rules, 1)
    assert len(expanded) == 4
    assert len({er.pattern.cells for er in expanded}) == 1
    assert {er.move for er in expanded} == {
        Move.UP,
        Move.DOWN,
        Move.LEFT,
        Move.RIGHT,
    }


def test_expand_empty():
    assert expand_rotations([], 1) == []


def test_expand_idempotent():
    rs = builtin("a1_fixed")
    once = expand_rotations(rs.rules, rs.phi)
    as_rules = [Rule(er.pattern, er.move, er.new_color) for er in once]
    twice = expand_rotations(as_rules, rs.phi)
    assert {(er.pattern.cells, er.move, er.new_color) for er in twice} == {
        (er.pattern.cells, er.move, er.new_color) for er in once
    }


def test_expanded_patterns_stay_inside_ball():
    for bid in ("a1_fixed", "a1_modifiable", "a2_nolights"):
        rs = builtin(bid)
        ball = set(ball_offsets(rs.phi))
        for er in expanded_rules(rs):
            assert {o for o, _ in er.pattern.cells} == ball


def test_validate_builtins_clean():
    for bid in ("a1_fixed", "a1_modifiable", "a2_nolights"):
        report = validate(builtin(bid))
        assert report.conflicts == []
        assert report.adversary_controlled == []
        assert report.well_defined


def test_validate_duplicated_rule_one_conflict():
    rs = builtin("a1_fixed")
    straight_tail = rs.rules[1]
    mutated = RuleSet(
        name="mutated",
        phi=rs.phi,
        colors=list(rs.colors),
        lights_modifiable=rs.lights_modifiable,
        rules=list(rs.rules) + [Rule(straight_tail.pattern, Move.DOWN)],
        initial=dict(rs.initial),
    )
    report = validate(mutated)
    assert len(report.conflicts) == 1
    assert not report.well_defined


def test_validate_symmetric_rule_adversary_controlled():
    rs = RuleSet("sym", 1, ["A"], False, [Rule(pattern(1), Move.UP)], {(0, 0): "A"})
    report = validate(rs)
    assert report.adversary_controlled == [0]
    assert report.conflicts == []
    assert not report.well_defined


def test_validate_symmetric_idle_rule_is_fine():
    rs = RuleSet("sym", 1, ["A"], False, [Rule(pattern(1), Move.IDLE)], {(0, 0): "A"})
    assert validate(rs).well_defined


def test_match_straight_head():
    rs = builtin("a1_fixed")
    v = empty_view(1, center="L", cells={(1, 0): "F"})
    assert match(expanded_rules(rs), v) == (Move.UP, None)


def test_match_unmatched_defaults_to_idle():
    rs = builtin("a1_fixed")
    v = empty_view(1, center="L", cells={(0, 1): "B", (1, 0): "F"})
    assert match(expanded_rules(rs), v) == (Move.IDLE, None)


def test_match_diagonal_color_change():
    rs = builtin("a1_modifiable")
    v = empty_view(1, center="Y", cells={(0, 1): "B"})
    assert match(expanded_rules(rs), v) == (Move.RIGHT, "P")


def test_match_ambiguous_raises():
    expanded = expand_rotations([Rule(pattern(1), Move.UP)], 1)
    v = empty_view(1)
    with pytest.raises(AmbiguousMatchError):
        match(expanded, v)
    assert match(expanded, v, allow_ambiguous=True) == (Move.UP, None)


def test_match_rotation_equivariance_on_rule_patterns():
    """Every expanded-rule pattern, realized as a view, matches the rotated
    rule under every rotation."""
    from gridswarm.grid import rotate_move, rotate_view

    for bid in ("a1_fixed", "a1_modifiable", "a2_nolights"):
        rs = builtin(bid)
        expanded = expanded_rules(rs)
        for er in expanded:
            cells = {
                o: (EMPTY if s in (MUST_BE_EMPTY, DONT_CARE) else s)
                for o, s in er.pattern.cells
            }
            v = View.from_dict(rs.phi, cells)
            base = match(expanded, v)
            for r in range(4):
                m, c = match(expanded, rotate_view(r, v))
                assert (m, c) == (rotate_move(r, base[0]), base[1])


def test_match_occluded_only_matches_dont_care():
    rs = builtin("a2_nolights")
    c = {(0, 0): "R", (1, 0): "R", (2, 0): "R"}
    v = view_at(c, (1, 0), 2)  # both (±2,0) offsets hidden from the middle robot
    move, _ = match(expanded_rules(rs), v)
    assert move in set(Move)  # must not crash on occluded cells
