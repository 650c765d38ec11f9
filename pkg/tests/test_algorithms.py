import pytest

from gridswarm.algorithms import BUILTIN_IDS, builtin, builtin_source, load_source
from gridswarm.rules import expanded_rules, validate


def test_builtin_ids():
    assert BUILTIN_IDS == ("a1_fixed", "a1_modifiable", "a2_nolights")


def test_a1_fixed_initial():
    rs = builtin("a1_fixed")
    assert rs.initial == {
        (-1, 0): "F",
        (0, 0): "L",
        (0, -1): "B",
        (2, 0): "B",
        (1, 2): "B",
        (-2, 1): "B",
    }


def test_a1_modifiable_initial():
    rs = builtin("a1_modifiable")
    assert rs.initial == {
        (0, 0): "G",
        (1, -1): "B",
        (1, -2): "Y",
        (3, -3): "Y",
        (2, 1): "R",
    }


def test_a2_nolights_initial():
    rs = builtin("a2_nolights")
    assert set(rs.initial) == {(0, 0), (5, -1), (5, 4), (1, 5), (3, 2), (3, 3), (4, 3)}
    assert set(rs.initial.values()) == {"R"}


def test_shape_counts():
    expected = {
        "a1_fixed": (1, 3, 6, 6, False),
        "a1_modifiable": (1, 5, 22, 5, True),
        "a2_nolights": (2, 1, 7, 7, False),
    }
    for bid, (phi, ncolors, nrules, nrobots, modifiable) in expected.items():
        rs = builtin(bid)
        assert rs.phi == phi
        assert len(rs.colors) == ncolors
        assert len(rs.rules) == nrules
        assert len(rs.initial) == nrobots
        assert rs.lights_modifiable is modifiable


def test_builtins_well_defined():
    for bid in BUILTIN_IDS:
        report = validate(builtin(bid))
        assert report.well_defined, bid


def test_a2_no_normalization_warnings():
    # occludable cells are already don't-care in the shipped rules
    assert validate(builtin("a2_nolights")).normalization_warnings == []


def test_a1_fixed_expansion_count():
    assert len(expanded_rules(builtin("a1_fixed"))) == 24


def test_unknown_builtin():
    with pytest.raises(KeyError):
        builtin("a3_unknown")


def test_load_source_builtin_prefix():
    assert load_source("builtin:a1_fixed").name == "a1_fixed"


def test_load_source_path(tmp_path):
    path = tmp_path / "copy.rules"
    path.write_text(builtin_source("a2_nolights"), encoding="utf-8")
    rs = load_source(str(path))
    assert rs.name == "a2_nolights"
    assert len(rs.rules) == 7
