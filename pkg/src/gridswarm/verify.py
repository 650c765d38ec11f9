"""Mechanical checks of the exploration proofs.

Each built-in algorithm proceeds in phases: the moving group sweeps a
growing polygon whose corners are marked by beacons. The phase oracles
below evaluate the closed-form per-component translations; the checks
compare them against simulated traces by exact set equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algorithms import builtin
from .engine import Trace, run, visited_set
from .grid import Configuration, Pos, farthest_pair_distance, translate_configuration
from .rules import RuleSet


@dataclass(frozen=True)
class PhaseComponent:
    base: tuple[tuple[Pos, str], ...]  # component of the phase-0 configuration
    coef: Pos  # translated by (coef.x * i, coef.y * i) in phase i


@dataclass(frozen=True)
class PhaseSpec:
    components: tuple[PhaseComponent, ...]
    boundary_corners: tuple[Pos, ...]  # linear in i: (a + b*i) per coordinate pair
    boundary_corner_coefs: tuple[Pos, ...]
    extra_boundary_phase0: tuple[Pos, ...] = ()


def _comp(c: dict[Pos, str], coef: Pos) -> PhaseComponent:
    return PhaseComponent(tuple(sorted(c.items())), coef)


PHASE_SPECS: dict[str, PhaseSpec] = {
    "a1_fixed": PhaseSpec(
        components=(
            _comp({(-1, 0): "F", (0, 0): "L"}, (-1, -1)),
            _comp({(0, -1): "B"}, (-1, -1)),
            _comp({(2, 0): "B"}, (1, -1)),
            _comp({(1, 2): "B"}, (1, 1)),
            _comp({(-2, 1): "B"}, (-1, 1)),
        ),
        boundary_corners=((-1, 0), (1, 0), (1, 1), (-1, 1)),
        boundary_corner_coefs=((-1, -1), (1, -1), (1, 1), (-1, 1)),
    ),
    "a1_modifiable": PhaseSpec(
        components=(
            _comp({(1, -1): "B", (1, -2): "Y"}, (-2, 1)),
            _comp({(0, 0): "G"}, (-2, 1)),
            _comp({(3, -3): "Y"}, (1, -2)),
            _comp({(2, 1): "R"}, (1, 1)),
        ),
        boundary_corners=((0, 0), (2, -2), (2, 0)),
        boundary_corner_coefs=((-2, 1), (1, -2), (1, 1)),
    ),
    "a2_nolights": PhaseSpec(
        components=(
            _comp({(3, 2): "R", (3, 3): "R", (4, 3): "R"}, (1, 1)),
            _comp({(0, 0): "R"}, (-1, -1)),
            _comp({(5, -1): "R"}, (1, -1)),
            _comp({(5, 4): "R"}, (1, 1)),
            _comp({(1, 5): "R"}, (-1, 1)),
        ),
        boundary_corners=((2, 1), (4, 1), (4, 3), (2, 3)),
        boundary_corner_coefs=((-1, -1), (1, -1), (1, 1), (-1, 1)),
        extra_boundary_phase0=((3, 2),),
    ),
}


class PhaseMissing(Exception):
    def __init__(self, algorithm: str, i: int):
        self.algorithm = algorithm
        self.i = i
        super().__init__(f"{algorithm}: phase {i} configuration never reached")


class BudgetExhausted(Exception):
    def __init__(self, witness: Pos, budget: int):
        self.witness = witness
        self.budget = budget
        super().__init__(f"node {witness} still unvisited after {budget} rounds")


@dataclass
class PhaseDetection:
    rounds: list[int]  # rounds[i] = first round showing the phase-i configuration

    def round(self, i: int) -> int:
        return self.rounds[i]


def expected_configuration(algorithm: str, i: int) -> Configuration:
    spec = PHASE_SPECS[algorithm]
    config: Configuration = {}
    for comp in spec.components:
        t = (comp.coef[0] * i, comp.coef[1] * i)
        config.update(translate_configuration(dict(comp.base), t))
    return config


def detect_phases(t: Trace, algorithm: str, max_i: int) -> PhaseDetection:
    """First round at which each phase configuration appears, for
    i = 0..max_i. Raises PhaseMissing if a phase never shows up."""
    rounds: list[int] = []
    start = 0
    for i in range(max_i + 1):
        expected = expected_configuration(algorithm, i)
        for r in range(start, len(t.configurations)):
            if t.configurations[r] == expected:
                rounds.append(r)
                start = r + 1
                break
        else:
            raise PhaseMissing(algorithm, i)
    return PhaseDetection(rounds)


def _segment_points(a: Pos, b: Pos) -> list[Pos]:
    dx, dy = b[0] - a[0], b[1] - a[1]
    g = gcd(abs(dx), abs(dy))
    if g == 0:
        return [a]
    sx, sy = dx // g, dy // g
    return [(a[0] + sx * k, a[1] + sy * k) for k in range(g)]


def expected_visited_boundary(algorithm: str, i: int) -> set[Pos]:
    """Lattice points on the polygon swept during phase i."""
    spec = PHASE_SPECS[algorithm]
    corners = [
        (base[0] + coef[0] * i, base[1] + coef[1] * i)
        for base, coef in zip(spec.boundary_corners, spec.boundary_corner_coefs)
    ]
    points: set[Pos] = set()
    for a, b in zip(corners, corners[1:] + corners[:1]):
        points.update(_segment_points(a, b))
    if i == 0:
        points.update(spec.extra_boundary_phase0)
    return points


def check_boundary_coverage(
    t: Trace, algorithm: str, i: int, phases: PhaseDetection | None = None
) -> bool:
    """True iff everything on the phase-i polygon was visited by the time
    the phase-(i+1) configuration is reached."""
    if phases is None:
        phases = detect_phases(t, algorithm, i + 1)
    if len(phases.rounds) <= i + 1:
        raise ValueError(f"phase {i + 1} not detected; trace too short")
    end = phases.round(i + 1)
    visited: set[Pos] = set()
    for c in t.configurations[: end + 1]:
        visited.update(c)
    return expected_visited_boundary(algorithm, i) <= visited


def verify_radius_coverage(
    rs: RuleSet,
    radius: int,
    round_budget: int,
    adv=None,
    allow_symmetric: bool = False,
) -> int:
    """First round at which every node of [-radius, radius]^2 has been
    visited. Raises BudgetExhausted with an unvisited witness node."""
    from .engine import IdentityAdversary, step

    adv = adv or IdentityAdversary()
    needed = {
        (x, y)
        for x in range(-radius, radius + 1)
        for y in range(-radius, radius + 1)
    }
    c = dict(rs.initial)
    needed -= c.keys()
    if not needed:
        return 0
    for round_ in range(round_budget):
        c, _ = step(rs, c, adv, round_, allow_symmetric=allow_symmetric)
        needed -= c.keys()
        if not needed:
            return round_ + 1
    raise BudgetExhausted(min(needed), round_budget)


def exclusiveness_audit(t: Trace) -> tuple[int, int]:
    """(node collision count, edge swap count) over the whole trace."""
    collisions = sum(1 for v in t.violations if v.kind == "NodeCollision")
    swaps = sum(1 for v in t.violations if v.kind == "EdgeSwap")
    return collisions, swaps


def distance_divergence(t: Trace, phases: PhaseDetection) -> bool:
    """Finite stand-in for the farthest-pair distance tending to infinity:
    the per-phase maximum must be non-decreasing and strictly increase at
    least every two phases."""
    if len(phases.rounds) < 3:
        raise ValueError("need at least 3 detected phases")
    ds = []
    for a, b in zip(phases.rounds, phases.rounds[1:]):
        ds.append(
            max(farthest_pair_distance(c) for c in t.configurations[a:b])
        )
    if any(x > y for x, y in zip(ds, ds[1:])):
        return False
    return all(ds[j + 2] > ds[j] for j in range(len(ds) - 2))


def run_until_phases(
    algorithm: str,
    max_i: int,
    adv=None,
    start_rounds: int = 1024,
    cap: int = 1 << 18,
) -> tuple[Trace, PhaseDetection]:
    """Simulate the builtin until phases 0..max_i are all detected."""
    rs = builtin(algorithm)
    rounds = start_rounds
    while True:
        trace = run(rs, rounds, adv)
        try:
            return trace, detect_phases(trace, algorithm, max_i)
        except PhaseMissing:
            if rounds >= cap:
                raise
            rounds *= 2
