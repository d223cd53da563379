"""Planar point configurations, the rotating-line sweep and k-set counts.

A directed line ``ℓ`` starts pointing up (+y) and turns counterclockwise
through 180 degrees. Points are labelled 1..N by decreasing initial
projection, so label 1 is the highest point. Each time ``ℓ`` becomes
perpendicular to a pair of points their projections swap, giving a circular
sequence. Prefixes of length k are left k-sets and suffixes are right k-sets.

All predicates are exact: coordinates are ``Fraction`` and every comparison
is an integer or rational cross product.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import DegenerateConfiguration, GateSwitchError, InvalidInput
from .multiperm import Composition, diameter
from .perm_core import CircularSequence, n_bar

__all__ = [
    "PointConfig", "LRSpec", "KCount", "KSetCounts", "SandwichReport",
    "parse_points", "load_points", "sweep_sequence", "kset_counts", "f_LR",
    "f_LR_from_switches", "gates_of", "composition_from_LR", "complement_LR",
    "sandwich_check", "gon_configuration", "perturb", "random_configuration",
    "all_specs",
]

Point = tuple[Fraction, Fraction]


def _cross(o: Point, a: Point, b: Point):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _check_general_position(points: Sequence[Point], names: Sequence[int]):
    seen = {}
    for i, p in enumerate(points):
        if p[1] in seen:
            j = seen[p[1]]
            if points[j] == p:
                raise DegenerateConfiguration(f"points {names[j]} and {names[i]} coincide")
            raise DegenerateConfiguration(
                f"horizontal pair: points {names[j]} and {names[i]} share y = {p[1]}")
        seen[p[1]] = i
    for a, b, c in combinations(range(len(points)), 3):
        if _cross(points[a], points[b], points[c]) == 0:
            raise DegenerateConfiguration(
                f"collinear triple: points {names[a]}, {names[b]}, {names[c]}")


@dataclass(frozen=True)
class PointConfig:
    """Points in label order (index 0 holds label 1, the highest point).

    ``source_index[i]`` is the 1-based input position of label ``i + 1``.
    """

    points: tuple[Point, ...]
    source_index: tuple[int, ...] = field(default=())

    @classmethod
    def from_points(cls, raw: Iterable[tuple]) -> "PointConfig":
        pts = [(Fraction(x), Fraction(y)) for x, y in raw]
        if len(pts) < 2:
            raise InvalidInput("need at least two points")
        _check_general_position(pts, range(1, len(pts) + 1))
        order = sorted(range(len(pts)), key=lambda i: -pts[i][1])
        return cls(tuple(pts[i] for i in order), tuple(i + 1 for i in order))

    @property
    def n(self) -> int:
        return len(self.points)

    def to_text(self) -> str:
        return "".join(f"{x} {y}\n" for x, y in self.points)


def parse_points(text: str) -> list[Point]:
    """One ``x y`` pair per line; '#' starts a comment; blank lines skipped."""
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InvalidInput(f"line {lineno}: expected two coordinates, got {line!r}")
        try:
            pts.append((Fraction(tokens[0]), Fraction(tokens[1])))
        except (ValueError, ZeroDivisionError):
            raise InvalidInput(f"line {lineno}: bad rational in {line!r}") from None
    return pts


def load_points(source: str) -> PointConfig:
    return PointConfig.from_points(parse_points(source))


# -- sweep -------------------------------------------------------------------

def sweep_sequence(X: PointConfig) -> CircularSequence:
    pts = X.points
    n = len(pts)
    events = []
    for a, b in combinations(range(n), 2):
        # label a is above label b, so the difference points into the upper half-plane
        d = (pts[a][0] - pts[b][0], pts[a][1] - pts[b][1])
        events.append((d, a, b))

    def by_angle(e1, e2):
        (d1, a1, b1), (d2, a2, b2) = e1, e2
        cr = d1[0] * d2[1] - d1[1] * d2[0]
        if cr > 0:
            return -1
        if cr < 0:
            return 1
        if {a1, b1} & {a2, b2}:
            raise DegenerateConfiguration(f"points {sorted({a1, b1, a2, b2})} are collinear")
        return -1 if (a1, b1) < (a2, b2) else 1

    events.sort(key=cmp_to_key(by_angle))
    pos = list(range(n))  # pos[label] = 0-based position
    positions = []
    for _, a, b in events:
        if pos[b] != pos[a] + 1:
            raise DegenerateConfiguration(f"labels {a + 1} and {b + 1} not adjacent at their swap")
        pos[a], pos[b] = pos[b], pos[a]
        positions.append(pos[b] + 1)
    return CircularSequence.from_positions(n, positions)


@dataclass(frozen=True)
class KCount:
    f_left: int
    f_right: int
    f: int


@dataclass(frozen=True)
class KSetCounts:
    n: int
    switches: tuple[int, ...]  # s_1 .. s_{N-1}
    per_k: dict  # k -> KCount for 1 <= k <= (N-1)/2

    def __getitem__(self, k: int) -> KCount:
        return self.per_k[k]


def kset_counts(X: PointConfig) -> KSetCounts:
    seq = sweep_sequence(X)
    n = X.n
    s = [0] * (n - 1)
    for ev in seq.events:
        s[ev.position - 1] += 1
    per_k = {}
    for k in range(1, (n - 1) // 2 + 1):
        s_left, s_right = s[k - 1], s[n - k - 1]
        per_k[k] = KCount(s_left + 1, s_right + 1, s_left + s_right)
    return KSetCounts(n, tuple(s), per_k)


# -- L/R aggregation ---------------------------------------------------------

@dataclass(frozen=True)
class LRSpec:
    """Subsets L, R of sizes to count as left / right k-sets.

    ``L`` may reach ``N/2`` so that complements of even-N specs are
    representable; ``f_LR`` itself only accepts sizes up to ``(N-1)/2``.
    """

    n: int
    L: frozenset
    R: frozenset

    def __post_init__(self):
        object.__setattr__(self, "L", frozenset(int(k) for k in self.L))
        object.__setattr__(self, "R", frozenset(int(k) for k in self.R))
        if any(not 1 <= k <= self.n // 2 for k in self.L):
            raise InvalidInput(f"L={sorted(self.L)} must lie in 1..{self.n // 2}")
        if any(not 1 <= k <= (self.n - 1) // 2 for k in self.R):
            raise InvalidInput(f"R={sorted(self.R)} must lie in 1..{(self.n - 1) // 2}")

    @property
    def is_kset_spec(self) -> bool:
        return all(k <= (self.n - 1) // 2 for k in self.L)

    def correction(self) -> int:
        return len(self.L | self.R) - len(self.L & self.R)


def all_specs(n: int):
    sizes = range(1, (n - 1) // 2 + 1)
    subsets = [frozenset(c) for g in range(len(sizes) + 1) for c in combinations(sizes, g)]
    for L in subsets:
        for R in subsets:
            yield LRSpec(n, L, R)


def _require_kset_spec(spec: LRSpec, n: int):
    if spec.n != n:
        raise InvalidInput(f"spec is for N={spec.n}, configuration has N={n}")
    if not spec.is_kset_spec:
        raise InvalidInput(f"L={sorted(spec.L)} must lie in 1..{(n - 1) // 2}")


def f_LR_from_switches(counts: KSetCounts, spec: LRSpec) -> int:
    """Switch-vector form: sum s_k over L, s_{N-k} over R, plus |L∪R| - |L∩R|."""
    s, n = counts.switches, counts.n
    return (sum(s[k - 1] for k in spec.L) + sum(s[n - k - 1] for k in spec.R)
            + spec.correction())


def _f_LR_direct(per_k, spec: LRSpec) -> int:
    L, R = spec.L, spec.R
    return (sum(per_k[k].f for k in L & R)
            + sum(per_k[k].f_left for k in L - R)
            + sum(per_k[k].f_right for k in R - L))


def f_LR(X: PointConfig, spec: LRSpec, counts: Optional[KSetCounts] = None) -> int:
    """Number of sets that are left k-sets for k in L or right k-sets for k in R."""
    _require_kset_spec(spec, X.n)
    counts = counts or kset_counts(X)
    direct = _f_LR_direct(counts.per_k, spec)
    via_switches = f_LR_from_switches(counts, spec)
    if direct != via_switches:
        raise GateSwitchError(
            f"f(L,R) disagreement: per-k sum {direct} vs switch form {via_switches}")
    return direct


def gates_of(spec: LRSpec) -> tuple[int, ...]:
    return tuple(sorted(set(spec.L) | {spec.n - k for k in spec.R}))


def composition_from_LR(spec: LRSpec, n: Optional[int] = None) -> Composition:
    n = spec.n if n is None else n
    if n != spec.n:
        raise InvalidInput(f"spec is for N={spec.n}, asked for N={n}")
    gates = gates_of(spec)
    if not gates:
        raise InvalidInput("L and R are both empty: the composition has a single part")
    cuts = (0,) + gates + (n,)
    return Composition(tuple(b - a for a, b in zip(cuts, cuts[1:])))


def complement_LR(spec: LRSpec, n: Optional[int] = None) -> LRSpec:
    n = spec.n if n is None else n
    return LRSpec(
        n,
        frozenset(range(1, n // 2 + 1)) - spec.L,
        frozenset(range(1, (n - 1) // 2 + 1)) - spec.R,
    )


@dataclass(frozen=True)
class SandwichReport:
    spec: LRSpec
    lower: int  # diam P(<L,R>)
    middle: int  # f(L,R,X) - |L∪R| + |L∩R|
    upper: int  # C(N,2) - diam P(<L̄,R̄>)
    f_lr: int
    f_lr_switches: int
    lower_ok: bool
    upper_ok: bool
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok and self.f_lr == self.f_lr_switches


def _diameter_or_zero(spec: LRSpec, label: str, notes: list) -> int:
    if not gates_of(spec):
        notes.append(f"{label} composition has a single part; diameter taken as 0")
        return 0
    return diameter(composition_from_LR(spec))


def sandwich_check(X: PointConfig, spec: LRSpec, counts: Optional[KSetCounts] = None) -> SandwichReport:
    _require_kset_spec(spec, X.n)
    counts = counts or kset_counts(X)
    notes: list[str] = []
    direct = _f_LR_direct(counts.per_k, spec)
    via_switches = f_LR_from_switches(counts, spec)
    middle = direct - spec.correction()
    lower = _diameter_or_zero(spec, "<L,R>", notes)
    upper = n_bar(X.n) - _diameter_or_zero(complement_LR(spec), "complement", notes)
    return SandwichReport(spec, lower, middle, upper, direct, via_switches,
                          lower <= middle, middle <= upper, tuple(notes))


# -- generators --------------------------------------------------------------

def _config_or_none(pts) -> Optional[PointConfig]:
    try:
        return PointConfig.from_points(pts)
    except DegenerateConfiguration:
        return None


def random_configuration(n: int, seed: int, bound: int = 1000) -> PointConfig:
    """Deterministic random rational configuration in general position."""
    rng = random.Random(seed)
    while True:
        pts = [(Fraction(rng.randint(-bound, bound), rng.randint(1, 7)),
                Fraction(rng.randint(-bound, bound), rng.randint(1, 7))) for _ in range(n)]
        X = _config_or_none(pts)
        if X is not None:
            return X


def perturb(raw: Iterable[tuple], q: int = 1000, seed: int = 0, attempts: int = 100) -> PointConfig:
    """Move every point by at most 1/q per coordinate until in general position."""
    if q < 1:
        raise InvalidInput(f"q must be positive, got {q}")
    pts = [(Fraction(x), Fraction(y)) for x, y in raw]
    rng = random.Random(seed)
    scale = 1000 * q
    for _ in range(attempts):
        moved = [(x + Fraction(rng.randint(-1000, 1000), scale),
                  y + Fraction(rng.randint(-1000, 1000), scale)) for x, y in pts]
        X = _config_or_none(moved)
        if X is not None:
            return X
    raise DegenerateConfiguration(f"no general-position perturbation found in {attempts} attempts")


def gon_configuration(k: int, n: int) -> PointConfig:
    """A regular (2k+1)-gon with the remaining points clustered at its center.

    Coordinates are integer roundings of the gon at radius 10**6; the cluster
    lies on a small parabola. The k-set count is confirmed by the brute-force
    oracle, and the cluster is shrunk until it is exactly 2k+1.
    """
    from .oracle import ksets_bruteforce

    m = 2 * k + 1
    if k < 1 or n < m:
        raise InvalidInput(f"need k >= 1 and N >= 2k+1, got k={k}, N={n}")
    radius = 10 ** 6
    offset = 0.1  # keeps mirror-image vertices off a common horizontal line
    gon = [(round(radius * math.cos(offset + 2 * math.pi * i / m)),
            round(radius * math.sin(offset + 2 * math.pi * i / m))) for i in range(m)]
    spread = radius // 100
    for _ in range(12):
        for shift in range(1, 50):
            inner = [(Fraction(spread * t, n) + Fraction(shift, 7),
                      Fraction(spread * t * t, n * n) + Fraction(shift, 11))
                     for t in range(1, n - m + 1)]
            X = _config_or_none(gon + inner)
            if X is not None:
                break
        else:
            raise DegenerateConfiguration("could not place the inner cluster")
        if ksets_bruteforce(X, k)[2] == m:
            return X
        spread //= 10
    raise GateSwitchError(f"gon configuration for k={k}, N={n} did not reach {m} k-sets")
