"""Simulator and verification toolkit for synchronous luminous-robot
swarms exploring the infinite grid."""

from .algorithms import BUILTIN_IDS, builtin, load_source
from .engine import (
    IdentityAdversary,
    PingPongAdversary,
    SeededRandomAdversary,
    Trace,
    run,
    step,
    visited_set,
)
from .grid import (
    Configuration,
    Move,
    Pos,
    View,
    farthest_pair_distance,
    manhattan_distance,
    rotate_move,
    rotate_offset,
    rotate_view,
    translate_configuration,
    view_at,
)
from .rules import Rule, RulePattern, RuleSet, expand_rotations, match, validate
from .ruleformat import parse_rule_file, serialize_rule_set
from .verify import (
    check_boundary_coverage,
    detect_phases,
    distance_divergence,
    exclusiveness_audit,
    expected_configuration,
    expected_visited_boundary,
    verify_radius_coverage,
)

__all__ = [name for name in dir() if not name.startswith("_")]
