"""Randomized property suites.

Four families, mirrored by the acceptance harness: rotation equivariance
of matching, occlusion equivariance of views, translation equivariance of
runs, and the phi=2 occlusion characterization.
"""

import hypothesis.strategies as st
from hypothesis import given, settings

from gridswarm.algorithms import builtin
from gridswarm.grid import (
    EMPTY,
    OCCLUDED,
    ball_offsets,
    farthest_pair_distance,
    rotate_move,
    rotate_offset,
    rotate_view,
    translate_configuration,
    view_at,
)
from gridswarm.rules import expanded_rules, match

coords = st.integers(min_value=-50, max_value=50)
positions = st.tuples(coords, coords)
rotations = st.integers(min_value=0, max_value=3)
translations = st.tuples(
    st.integers(min_value=-1000, max_value=1000),
    st.integers(min_value=-1000, max_value=1000),
)


def configurations(labels, min_size=1, max_size=8):
    return st.dictionaries(
        positions, st.sampled_from(labels), min_size=min_size, max_size=max_size
    )


def ball_configurations(phi, labels):
    """Configurations contained in the phi-ball around the origin, with the
    origin always occupied (the observer)."""
    offs = [o for o in ball_offsets(phi) if o != (0, 0)]
    return st.builds(
        lambda center, others: {(0, 0): center, **others},
        st.sampled_from(labels),
        st.dictionaries(st.sampled_from(offs), st.sampled_from(labels), max_size=6),
    )


@given(rotations, st.tuples(coords, coords))
def test_rotation_preserves_norm(r, o):
    rx, ry = rotate_offset(r, o)
    assert abs(rx) + abs(ry) == abs(o[0]) + abs(o[1])


@given(ball_configurations(2, ["R", "B"]), rotations)
@settings(max_examples=300)
def test_occlusion_equivariance(c, r):
    """Rotating the world about the observer rotates the view."""
    rotated_world = {rotate_offset(r, p): col for p, col in c.items()}
    assert view_at(rotated_world, (0, 0), 2) == rotate_view(r, view_at(c, (0, 0), 2))


@given(configurations(["R"]), translations)
@settings(max_examples=300)
def test_translation_preserves_farthest_distance(c, t):
    assert farthest_pair_distance(translate_configuration(c, t)) == (
        farthest_pair_distance(c)
    )


@given(translations, rotations)
def test_translation_commutes_with_rotation_of_nothing(t, r):
    # translating twice composes
    c = {(0, 0): "R", (3, -1): "R"}
    once = translate_configuration(translate_configuration(c, t), (-t[0], -t[1]))
    assert once == c


@settings(max_examples=300)
@given(
    st.sampled_from(["a1_fixed", "a1_modifiable", "a2_nolights"]),
    st.data(),
    rotations,
)
def test_match_rotation_equivariance(bid, data, r):
    rs = builtin(bid)
    c = data.draw(ball_configurations(rs.phi, rs.colors))
    v = view_at(c, (0, 0), rs.phi)
    expanded = expanded_rules(rs)
    move, color = match(expanded, v)
    rmove, rcolor = match(expanded, rotate_view(r, v))
    assert (rmove, rcolor) == (rotate_move(r, move), color)


@given(ball_configurations(2, ["R"]))
@settings(max_examples=300)
def test_phi2_occlusion_characterization(c):
    v = view_at(c, (0, 0), 2)
    for axis in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        far = (2 * axis[0], 2 * axis[1])
        assert (v[far] == OCCLUDED) == (axis in c)


@given(ball_configurations(2, ["R", "B"]))
@settings(max_examples=200)
def test_view_cells_consistent_with_world(c):
    v = view_at(c, (0, 0), 2)
    for o, s in v.cells:
        if s == OCCLUDED:
            continue
        assert s == c.get(o, EMPTY)


@given(translations)
@settings(max_examples=100, deadline=None)
def test_run_translation_equivariance(t):
    from gridswarm.engine import run

    rs = builtin("a1_fixed")
    base = run(rs, 16)
    shifted = run(rs, 16, initial=translate_configuration(rs.initial, t))
    for c, d in zip(base.configurations, shifted.configurations):
        assert translate_configuration(c, t) == d
