"""Dynamic-programming oracle for lattice paths.

Exact big-integer counts of North/East paths below a rational-slope line,
directed walks/meanders/excursions for arbitrary jump sets, minimum
y-distance statistics for South/West walks, and cumulative excursion areas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence, Union

Point = tuple[int, int]


@dataclass(frozen=True)
class RationalSlope:
    """The boundary y = (a*x + b)/c, either strict or touch-allowed.

    Normalized so that gcd(a, b, c) = 1.
    """

    a: int
    b: int
    c: int
    touch: bool = False

    def __post_init__(self):
        if self.a <= 0 or self.c <= 0 or self.b < 0:
            raise ValueError("need a > 0, b >= 0, c > 0")
        g = gcd(gcd(self.a, self.b), self.c)
        if g > 1:
            object.__setattr__(self, "a", self.a // g)
            object.__setattr__(self, "b", self.b // g)
            object.__setattr__(self, "c", self.c // g)

    def allows(self, x: int, y: int) -> bool:
        lhs = self.c * y
        rhs = self.a * x + self.b
        return lhs <= rhs if self.touch else lhs < rhs

    def boundary_distance(self, x: int, y: int) -> Fraction:
        """Vertical distance (a*x + b)/c - y from the point to the line."""
        return Fraction(self.a * x + self.b, self.c) - y


@dataclass(frozen=True)
class JumpPolynomial:
    """Sparse jump set: altitude change -> positive weight."""

    jumps: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        norm = tuple(sorted((int(j), Fraction(w)) for j, w in dict(self.jumps).items()))
        if not norm:
            raise ValueError("empty jump set")
        if any(w <= 0 for _, w in norm):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "jumps", norm)

    @classmethod
    def from_jumps(cls, jumps: Union[Mapping[int, Rat], Iterable[int]]) -> "JumpPolynomial":
        if isinstance(jumps, Mapping):
            return cls(tuple((j, Fraction(w)) for j, w in jumps.items()))
        return cls(tuple((j, Fraction(1)) for j in jumps))

    @classmethod
    def two_jump(cls, down: int, up: int) -> "JumpPolynomial":
        """Unit-weight jumps {-down, +up}."""
        if down <= 0 or up <= 0:
            raise ValueError("down and up must be positive magnitudes")
        return cls.from_jumps([-down, up])

    @property
    def min_jump(self) -> int:
        return self.jumps[0][0]

    @property
    def max_jump(self) -> int:
        return self.jumps[-1][0]

    @property
    def small_root_count(self) -> int:
        """a = -(smallest exponent) of the jump polynomial."""
        return -self.min_jump

    @property
    def period(self) -> int:
        """a + c for the two-jump model {-a, +c}."""
        return self.max_jump - self.min_jump

    def is_unit_two_jump(self) -> bool:
        return (
            len(self.jumps) == 2
            and self.min_jump < 0 < self.max_jump
            and all(w == 1 for _, w in self.jumps)
        )


Rat = Union[int, Fraction]


def count_ne_below(slope: RationalSlope, end: Point) -> int:
    """Number of North/East paths from (0,0) to ``end`` with every lattice
    point below the slope boundary (strictly, or touch-allowed per the
    slope's flag).  Returns 0 when the endpoint itself is out of bounds.
    """
    xe, ye = end
    if xe < 0 or ye < 0:
        raise ValueError("endpoint must be in the first quadrant")
    if not slope.allows(0, 0) or not slope.allows(xe, ye):
        return 0
    col = [0] * (ye + 1)
    col[0] = 1
    for x in range(xe + 1):
        if x > 0:
            # East step: previous column carries over where allowed
            col = [col[y] if slope.allows(x, y) else 0 for y in range(ye + 1)]
        for y in range(1, ye + 1):
            if slope.allows(x, y) and col[y - 1]:
                col[y] += col[y - 1]
    return col[ye]


def count_directed(
    jumps: JumpPolynomial,
    n: int,
    start: int,
    end: Optional[int] = None,
    constrained: bool = True,
) -> Rat:
    """Exact (weighted) count of n-step paths from ``start`` to ``end``.

    ``end=None`` counts paths ending anywhere.  ``constrained`` keeps all
    altitudes non-negative (meander/excursion constraint).
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    if constrained and start < 0:
        raise ValueError("constrained walks need start >= 0")
    up = max(0, jumps.max_jump)
    down = max(0, -jumps.min_jump)
    cur: dict[int, Rat] = {start: 1}
    for k in range(n):
        remaining = n - 1 - k
        nxt: dict[int, Rat] = {}
        for h, cnt in cur.items():
            for j, w in jumps.jumps:
                h2 = h + j
                if constrained and h2 < 0:
                    continue
                if end is not None:
                    # reachability pruning toward the fixed endpoint
                    if h2 - end > down * remaining:
                        continue
                    if end - h2 > up * remaining:
                        continue
                add = cnt if w == 1 else cnt * w
                if h2 in nxt:
                    nxt[h2] += add
                else:
                    nxt[h2] = add
        cur = nxt
    if end is None:
        return sum(cur.values())
    return cur.get(end, 0)


@dataclass
class CountTable:
    """Full DP table: per-step altitude -> count, optionally with the sum of
    accumulated areas (doubled, to stay in integers under the trapezoid
    convention)."""

    length: int
    start: int
    counts: list[dict[int, Rat]]
    area_sums2: Optional[list[dict[int, Rat]]] = None

    @classmethod
    def build(
        cls,
        jumps: JumpPolynomial,
        n: int,
        start: int,
        constrained: bool = True,
        with_area: bool = False,
    ) -> "CountTable":
        counts: list[dict[int, Rat]] = [{start: 1}]
        areas: Optional[list[dict[int, Rat]]] = [{start: 0}] if with_area else None
        for _ in range(n):
            cur = counts[-1]
            nxt: dict[int, Rat] = {}
            nxt_area: dict[int, Rat] = {}
            cur_area = areas[-1] if with_area else {}
            for h, cnt in cur.items():
                for j, w in jumps.jumps:
                    h2 = h + j
                    if constrained and h2 < 0:
                        continue
                    add = cnt if w == 1 else cnt * w
                    nxt[h2] = nxt.get(h2, 0) + add
                    if with_area:
                        # trapezoid slice: (h + h2), doubled
                        slab = cur_area[h] + cnt * (h + h2)
                        slab = slab if w == 1 else slab * w
                        nxt_area[h2] = nxt_area.get(h2, 0) + slab
            counts.append(nxt)
            if with_area:
                areas.append(nxt_area)
        return cls(length=n, start=start, counts=counts, area_sums2=areas)


def bijection_map(slope: RationalSlope, obj):
    """Affine image (x, y) -> (x + y, a*x - c*y + b).

    A point maps to a point.  A North/East path (iterable of 'E'/'N' steps)
    maps to the list of its image points, a directed walk with jumps (1, a)
    and (1, -c) starting at (0, b).
    """
    a, b, c = slope.a, slope.b, slope.c
    if isinstance(obj, tuple) and len(obj) == 2 and all(isinstance(v, int) for v in obj):
        x, y = obj
        return (x + y, a * x - c * y + b)
    x = y = 0
    points = [(0, b)]
    for step in obj:
        if step == "E":
            x += 1
        elif step == "N":
            y += 1
        else:
            raise ValueError(f"not a North/East step: {step!r}")
        points.append((x + y, a * x - c * y + b))
    return points


def min_y_distance(
    slope: RationalSlope, q: Point, steps: Sequence[str]
) -> Fraction:
    """Minimum y-distance of a South/West walk from ``q`` to the origin.

    Zero if the walk touches or crosses the boundary after its first step;
    otherwise the minimum of (a*p1 + b)/c - p2 over all lattice points of
    the walk except the starting point.
    """
    x, y = q
    pts = []
    for step in steps:
        if step == "S":
            y -= 1
        elif step == "W":
            x -= 1
        else:
            raise ValueError(f"not a South/West step: {step!r}")
        pts.append((x, y))
    if (x, y) != (0, 0):
        raise ValueError("walk must end at the origin")
    best: Optional[Fraction] = None
    for p1, p2 in pts:
        d = slope.boundary_distance(p1, p2)
        if d <= 0:
            return Fraction(0)
        if best is None or d < best:
            best = d
    return best if best is not None else Fraction(0)


def count_W_t(slope: RationalSlope, q: Point, t: Rat) -> int:
    """|W_t|: walks from ``q`` on the boundary down to the origin keeping a
    y-distance of at least ``t`` from the boundary.

    Computed by the translated-barrier equivalence: these walks biject with
    North/East paths from the origin to (q1, q2 - 1) strictly below
    y = (a*x + b - c*t + 1)/c.
    """
    a, b, c = slope.a, slope.b, slope.c
    q1, q2 = q
    if c * q2 != a * q1 + b:
        raise ValueError("q must lie on the boundary")
    t = Fraction(t)
    if not 0 < t <= 1:
        raise ValueError("t must satisfy 0 < t <= 1")
    k = t * c
    if k.denominator != 1:
        raise ValueError("t must be a multiple of 1/c")
    k = int(k)
    if k > b:
        return 0
    shifted = RationalSlope(a, b - k + 1, c, touch=False)
    return count_ne_below(shifted, (q1, q2 - 1))


@dataclass
class DistanceProfile:
    """|W_t| cardinalities on the grid t = k/c together with the exact
    value of the integral of |W_t| over (0, 1]."""

    q: Point
    grid: dict[Fraction, int]
    integral: Fraction


def distance_profile(slope: RationalSlope, q: Point) -> DistanceProfile:
    c = slope.c
    grid = {Fraction(k, c): count_W_t(slope, q, Fraction(k, c)) for k in range(1, c + 1)}
    integral = Fraction(sum(grid.values()), c)
    return DistanceProfile(q=q, grid=grid, integral=integral)


def excursion_count(jumps: JumpPolynomial, n: int) -> Rat:
    return count_directed(jumps, n, 0, 0, constrained=True)


def mean_excursion_area(jumps: JumpPolynomial, n: int) -> Fraction:
    """Mean area below n-step excursions (trapezoid rule on the polyline).

    Raises ValueError if there is no excursion of length n.
    """
    if n == 0:
        return Fraction(0)
    up = max(0, jumps.max_jump)
    down = max(0, -jumps.min_jump)
    cnt: dict[int, Rat] = {0: 1}
    area2: dict[int, Rat] = {0: 0}
    for k in range(n):
        remaining = n - 1 - k
        ncnt: dict[int, Rat] = {}
        narea: dict[int, Rat] = {}
        for h, c0 in cnt.items():
            a0 = area2[h]
            for j, w in jumps.jumps:
                h2 = h + j
                if h2 < 0 or h2 > down * remaining:
                    continue
                add_c = c0 if w == 1 else c0 * w
                slab = a0 + c0 * (h + h2)
                add_a = slab if w == 1 else slab * w
                if h2 in ncnt:
                    ncnt[h2] += add_c
                    narea[h2] += add_a
                else:
                    ncnt[h2] = add_c
                    narea[h2] = add_a
        cnt, area2 = ncnt, narea
        if not cnt:
            break
    total = cnt.get(0, 0)
    if total == 0:
        raise ValueError(f"no excursion of length {n}")
    return Fraction(area2[0], 2) / total


def mean_area_scan(
    jumps: JumpPolynomial, max_n: int, checkpoints: Optional[Sequence[int]] = None
) -> list[tuple[int, Rat, Fraction]]:
    """One forward pass collecting (n, excursion count, mean area) at every
    requested checkpoint length (default: every length with an excursion).
    """
    wanted = set(checkpoints) if checkpoints is not None else None
    cnt: dict[int, Rat] = {0: 1}
    area2: dict[int, Rat] = {0: 0}
    out: list[tuple[int, Rat, Fraction]] = []
    for n in range(0, max_n + 1):
        if n > 0:
            ncnt: dict[int, Rat] = {}
            narea: dict[int, Rat] = {}
            for h, c0 in cnt.items():
                a0 = area2[h]
                for j, w in jumps.jumps:
                    h2 = h + j
                    if h2 < 0:
                        continue
                    add_c = c0 if w == 1 else c0 * w
                    slab = a0 + c0 * (h + h2)
                    add_a = slab if w == 1 else slab * w
                    if h2 in ncnt:
                        ncnt[h2] += add_c
                        narea[h2] += add_a
                    else:
                        ncnt[h2] = add_c
                        narea[h2] = add_a
            cnt, area2 = ncnt, narea
        c0 = cnt.get(0, 0)
        if c0 and (wanted is None or n in wanted):
            out.append((n, c0, Fraction(area2[0], 2) / c0))
    return out


def ne_to_directed(slope: RationalSlope, end: Point) -> tuple[int, int, int]:
    """Translate a below-the-line North/East problem into the equivalent
    directed-meander problem (jumps {-a, +c}, touch-allowed at 0).

    Returns (length, start altitude, end altitude).  Strictly-below slope
    models shift the offset down by one before the translation.
    """
    a, b, c = slope.a, slope.b, slope.c
    x, y = end
    offset = b if slope.touch else b - 1
    if offset < 0:
        raise ValueError("empty model: strict boundary with b = 0")
    return (x + y, a * x - c * y + offset, offset)
