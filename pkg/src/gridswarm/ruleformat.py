"""Text format for rule sets.

A rule file has a header (name, phi, colors, lights), an `init` block with
one `x y colorlabel` triple per line, and `rule` blocks: a directive line
`rule move=<up|down|left|right|idle> [color=<label>]` followed by 2*phi+1
pattern rows listing the cells of each y-level of the Manhattan ball, top
to bottom, left to right. Tokens: `.` must be empty, a color label must be
occupied with that color, `x` is don't-care. `#` starts a comment.
"""

from __future__ import annotations

from .grid import Move
from .rules import DONT_CARE, MUST_BE_EMPTY, RESERVED_LABELS, Rule, RulePattern, RuleSet

_MOVES = {m.value: m for m in Move}


class ParseError(Exception):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def row_offsets(phi: int, y: int) -> list[tuple[int, int]]:
    """Ball offsets of one y-level, west to east."""
    w = phi - abs(y)
    return [(x, y) for x in range(-w, w + 1)]


def parse_rule_file(text: str) -> RuleSet:
    lines = text.splitlines()
    name: str | None = None
    phi: int | None = None
    colors: list[str] | None = None
    modifiable: bool | None = None
    initial: dict[tuple[int, int], str] = {}
    rules: list[Rule] = []

    def content(i: int) -> str:
        return lines[i].split("#", 1)[0].strip()

    i = 0
    n = len(lines)

    def err(i: int, msg: str, column: int = 1):
        raise ParseError(i + 1, column, msg)

    def need_color(label: str, i: int) -> str:
        if colors is None or label not in colors:
            err(i, f"unknown color label {label!r}")
        return label

    section = "header"
    while i < n:
        line = content(i)
        if not line:
            i += 1
            continue
        tokens = line.split()
        head = tokens[0]

        if head == "rule":
            if phi is None or colors is None or modifiable is None:
                err(i, "rule block before complete header")
            move: Move | None = None
            new_color: str | None = None
            for tok in tokens[1:]:
                if tok.startswith("move="):
                    move = _MOVES.get(tok[5:])
                    if move is None:
                        err(i, f"unknown move {tok[5:]!r}")
                elif tok.startswith("color="):
                    new_color = need_color(tok[6:], i)
                else:
                    err(i, f"unexpected token {tok!r} in rule directive")
            if move is None:
                err(i, "rule directive needs move=<direction>")
            if new_color is not None and not modifiable:
                err(i, "color= is only allowed with modifiable lights")
            i += 1
            cells: dict[tuple[int, int], str] = {}
            for y in range(phi, -phi - 1, -1):
                while i < n and not content(i):
                    i += 1
                if i >= n:
                    err(n - 1, f"missing pattern row for y={y}")
                row = content(i).split()
                offsets = row_offsets(phi, y)
                if len(row) != len(offsets):
                    err(
                        i,
                        f"pattern row for y={y} has {len(row)} tokens, "
                        f"expected {len(offsets)}",
                    )
                for col, (tok, off) in enumerate(zip(row, offsets), start=1):
                    if tok in (MUST_BE_EMPTY, DONT_CARE):
                        cells[off] = tok
                    else:
                        cells[off] = need_color(tok, i)
                i += 1
            if cells[(0, 0)] in (MUST_BE_EMPTY, DONT_CARE):
                err(i - 1, "pattern center must be a color label")
            rules.append(Rule(RulePattern.from_dict(phi, cells), move, new_color))
            section = "rules"
            continue

        if head == "init":
            section = "init"
            i += 1
            continue

        if section == "init":
            if len(tokens) != 3:
                err(i, "init entry must be `x y colorlabel`")
            try:
                x, y = int(tokens[0]), int(tokens[1])
            except ValueError:
                err(i, "init coordinates must be integers")
            label = need_color(tokens[2], i)
            if (x, y) in initial:
                err(i, f"node ({x},{y}) occupied twice")
            initial[(x, y)] = label
            i += 1
            continue

        # header fields
        if head == "name" and len(tokens) == 2:
            name = tokens[1]
        elif head == "phi" and len(tokens) == 2:
            try:
                phi = int(tokens[1])
            except ValueError:
                err(i, "phi must be a positive integer")
            if phi < 1:
                err(i, "phi must be a positive integer")
        elif head == "colors" and len(tokens) >= 2:
            colors = tokens[1:]
            for c in colors:
                if c in RESERVED_LABELS or not c.isalnum():
                    err(i, f"invalid color label {c!r}")
            if len(set(colors)) != len(colors):
                err(i, "duplicate color label")
        elif head == "lights" and len(tokens) == 2 and tokens[1] in (
            "fixed",
            "modifiable",
        ):
            modifiable = tokens[1] == "modifiable"
        else:
            err(i, f"unrecognized line {line!r}")
        i += 1

    if name is None or phi is None or colors is None or modifiable is None:
        raise ParseError(n, 1, "incomplete header (need name, phi, colors, lights)")
    return RuleSet(name, phi, colors, modifiable, rules, initial)


def serialize_rule_set(rs: RuleSet) -> str:
    out = [
        f"name {rs.name}",
        f"phi {rs.phi}",
        "colors " + " ".join(rs.colors),
        "lights " + ("modifiable" if rs.lights_modifiable else "fixed"),
        "",
        "init",
    ]
    for (x, y), label in sorted(rs.initial.items()):
        out.append(f"{x} {y} {label}")
    for rule in rs.rules:
        out.append("")
        directive = f"rule move={rule.move.value}"
        if rule.new_color is not None:
            directive += f" color={rule.new_color}"
        out.append(directive)
        cells = rule.pattern.as_dict()
        for y in range(rs.phi, -rs.phi - 1, -1):
            out.append(" ".join(cells[o] for o in row_offsets(rs.phi, y)))
    return "\n".join(out) + "\n"
