"""Geometry of the infinite grid: positions, rotations, configurations, views.

Coordinate convention (used everywhere): x grows East, y grows North, and
one counterclockwise quarter turn maps (x, y) to (-y, x).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

Pos = tuple[int, int]

# Cell markers. Color labels are alphanumeric, so these cannot collide.
EMPTY = "."
OCCLUDED = "?"

Configuration = dict[Pos, str]  # occupied position -> color label


class Move(Enum):
    IDLE = "idle"
    UP = "up"
    DOWN = "down"
    LEFT = "left"
    RIGHT = "right"

    @property
    def offset(self) -> Pos:
        return _MOVE_OFFSETS[self]


_MOVE_OFFSETS = {
    Move.IDLE: (0, 0),
    Move.UP: (0, 1),
    Move.DOWN: (0, -1),
    Move.LEFT: (-1, 0),
    Move.RIGHT: (1, 0),
}


def manhattan_distance(p: Pos, q: Pos) -> int:
    return abs(p[0] - q[0]) + abs(p[1] - q[1])


def rotate_offset(quarter_turns: int, o: Pos) -> Pos:
    x, y = o
    for _ in range(quarter_turns % 4):
        x, y = -y, x
    return (x, y)


def rotate_move(quarter_turns: int, m: Move) -> Move:
    if m is Move.IDLE:
        return m
    off = rotate_offset(quarter_turns, m.offset)
    return _OFFSET_MOVES[off]


_OFFSET_MOVES = {m.offset: m for m in Move if m is not Move.IDLE}


def translate_configuration(c: Configuration, t: Pos) -> Configuration:
    dx, dy = t
    return {(x + dx, y + dy): col for (x, y), col in c.items()}


@lru_cache(maxsize=None)
def ball_offsets(phi: int) -> tuple[Pos, ...]:
    """All offsets with Manhattan norm <= phi, in (-y, x) reading order
    (north to south, west to east)."""
    offs = [
        (x, y)
        for y in range(phi, -phi - 1, -1)
        for x in range(-phi, phi + 1)
        if abs(x) + abs(y) <= phi
    ]
    return tuple(offs)


@lru_cache(maxsize=None)
def _between(o: Pos) -> tuple[Pos, ...]:
    """Integer points strictly between (0,0) and the offset o."""
    from math import gcd

    x, y = o
    g = gcd(abs(x), abs(y))
    if g <= 1:
        return ()
    sx, sy = x // g, y // g
    return tuple((sx * k, sy * k) for k in range(1, g))


@dataclass(frozen=True)
class View:
    """The snapshot a robot perceives: a Manhattan ball of cell states.

    Each cell is EMPTY, OCCLUDED, or a color label. The center (0,0)
    carries the observing robot's own color.
    """

    phi: int
    cells: tuple[tuple[Pos, str], ...]

    @staticmethod
    def from_dict(phi: int, cells: dict[Pos, str]) -> "View":
        return View(phi, tuple(sorted(cells.items())))

    def as_dict(self) -> dict[Pos, str]:
        return dict(self.cells)

    def __getitem__(self, o: Pos) -> str:
        return self.as_dict()[o]


def view_at(c: Configuration, p: Pos, phi: int) -> View:
    """Globally oriented view of the robot at p. Opaque robots occlude the
    cells directly behind them on the line of sight."""
    if p not in c:
        raise ValueError(f"no robot at {p}; views are defined for robots only")
    px, py = p
    cells: dict[Pos, str] = {}
    for o in ball_offsets(phi):
        if o == (0, 0):
            cells[o] = c[p]
            continue
        if any((px + bx, py + by) in c for bx, by in _between(o)):
            cells[o] = OCCLUDED
        else:
            cells[o] = c.get((px + o[0], py + o[1]), EMPTY)
    return View.from_dict(phi, cells)


def rotate_view(quarter_turns: int, v: View) -> View:
    return View.from_dict(
        v.phi, {rotate_offset(quarter_turns, o): s for o, s in v.cells}
    )


def farthest_pair_distance(c: Configuration) -> int:
    if not c:
        raise ValueError("empty configuration has no farthest pair")
    positions = list(c)
    return max(
        (
            manhattan_distance(p, q)
            for i, p in enumerate(positions)
            for q in positions[i + 1 :]
        ),
        default=0,
    )
