"""The three built-in exploration algorithms, shipped as rule-file data.

The files under data/ double as fixtures for the rule-file format; they
are parsed once at first use and cached.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .rules import RuleSet
from .ruleformat import parse_rule_file

BUILTIN_IDS = ("a1_fixed", "a1_modifiable", "a2_nolights")


def builtin_source(builtin_id: str) -> str:
    if builtin_id not in BUILTIN_IDS:
        raise KeyError(f"unknown builtin {builtin_id!r}; choose from {BUILTIN_IDS}")
    return (
        resources.files("gridswarm.data").joinpath(f"{builtin_id}.rules").read_text()
    )


@lru_cache(maxsize=None)
def builtin(builtin_id: str) -> RuleSet:
    return parse_rule_file(builtin_source(builtin_id))


def load_source(src: str) -> RuleSet:
    """Resolve `builtin:ID` or a rule-file path."""
    if src.startswith("builtin:"):
        return builtin(src.split(":", 1)[1])
    with open(src, encoding="utf-8") as fh:
        return parse_rule_file(fh.read())
