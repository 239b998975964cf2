"""Holonomy coordinates (u, v) on the character torus and its coverings.

Fundamental domains: the torus is [0, 2)^2; the cylinder CYL_V(n) is
u in R, 0 <= v < 2n.  The bad point is fixed at (1, 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd

from ._geometry import LineFamily, Point, sgn
from .errors import GenericityError, PreconditionError
from .exact_arith import as_rat

TWO = Fraction(2)
BAD_POINT: Point = (Fraction(1), Fraction(1))


class Space(enum.Enum):
    PLANE = "plane"
    CYL_V = "cyl_v"
    TORUS = "torus"


class LineKind(enum.Enum):
    Y_LINE = "Y"
    Y1_LINE = "Y1"
    Y0_LINE = "Y0"


@dataclass(frozen=True)
class TorusPoint:
    u: Fraction
    v: Fraction
    space: Space = Space.PLANE
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "u", as_rat(self.u))
        object.__setattr__(self, "v", as_rat(self.v))
        if self.space is Space.CYL_V and not 0 <= self.v < 2 * self.n:
            raise ValueError(f"v={self.v} outside [0, {2 * self.n})")
        if self.space is Space.TORUS and not (0 <= self.u < 2 and 0 <= self.v < 2):
            raise ValueError(f"({self.u}, {self.v}) outside [0,2)^2")

    @property
    def xy(self) -> Point:
        return (self.u, self.v)

    def to_torus(self) -> "TorusPoint":
        return TorusPoint(self.u % 2, self.v % 2, Space.TORUS)

    def to_cylinder(self, n: int) -> "TorusPoint":
        return TorusPoint(self.u, self.v % (2 * n), Space.CYL_V, n)


@dataclass(frozen=True)
class ReducibleLine:
    """One of the three reducible line families.

    Y_LINE  {v = 2k + eta}, oriented by increasing u;
    Y1_LINE {v = u + 2k + 1}, oriented along (1, 1);
    Y0_LINE {u = 2k + eta}, oriented by *decreasing* v, so that the steep
    wall of a sawtooth profile runs parallel to it.
    """

    kind: LineKind
    k: int
    eta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "eta", as_rat(self.eta))
        if self.eta < 0:
            raise PreconditionError("eta must be >= 0")

    def contains(self, pt: Point) -> bool:
        u, v = pt
        if self.kind is LineKind.Y_LINE:
            return v == 2 * self.k + self.eta
        if self.kind is LineKind.Y1_LINE:
            return v == u + 2 * self.k + 1
        return u == 2 * self.k + self.eta

    def family(self, period: Fraction | int | None = None) -> LineFamily:
        """All lifts of this line under a covering with the given period.

        For Y_LINE/Y1_LINE the period acts on v, for Y0_LINE on u.
        """
        per = None if period is None else Fraction(period)
        if self.kind is LineKind.Y_LINE:
            return LineFamily(Fraction(0), Fraction(1), 2 * self.k + self.eta, per, (Fraction(1), Fraction(0)))
        if self.kind is LineKind.Y1_LINE:
            return LineFamily(Fraction(-1), Fraction(1), Fraction(2 * self.k + 1), per, (Fraction(1), Fraction(1)))
        return LineFamily(Fraction(1), Fraction(0), 2 * self.k + self.eta, per, (Fraction(0), Fraction(-1)))

    def describe(self) -> str:
        e = f" + {self.eta}" if self.eta else ""
        if self.kind is LineKind.Y_LINE:
            return f"v = {2 * self.k}{e}"
        if self.kind is LineKind.Y1_LINE:
            return f"v = u + {2 * self.k + 1}"
        return f"u = {2 * self.k}{e}"


def reducible_line(kind: LineKind | str, k: int, eta=0) -> ReducibleLine:
    if isinstance(kind, str):
        kind = LineKind[kind] if kind in LineKind.__members__ else LineKind(kind)
    return ReducibleLine(kind, int(k), as_rat(eta))


@dataclass(frozen=True)
class SlopeCurve:
    """The p/q surgery curve: parallel to p*v = q*u on the torus.

    It passes through (0, 1) for odd q and (0, 0) for even q.  Lifted to the
    plane it is the family ``p*v - q*u = c0 (mod 2)`` with c0 = p or 0.
    """

    p: int
    q: int

    def __post_init__(self):
        if gcd(self.p, self.q) != 1:
            raise PreconditionError("p and q must be coprime")
        if self.p < 1:
            raise PreconditionError("p must be >= 1")

    @property
    def base_point(self) -> TorusPoint:
        return TorusPoint(0, 1 if self.q % 2 else 0, Space.TORUS)

    @property
    def direction(self) -> Point:
        return (Fraction(self.p), Fraction(self.q))

    def family(self) -> LineFamily:
        b = self.base_point
        c0 = self.p * b.v - self.q * b.u
        return LineFamily(Fraction(-self.q), Fraction(self.p), c0, TWO, self.direction)

    def contains(self, pt: Point) -> bool:
        return self.family().contains(pt)


def slope_curve(p: int, q: int) -> SlopeCurve:
    return SlopeCurve(int(p), int(q))


def vertical_circle(u0, period=TWO) -> LineFamily:
    """The circle {u = u0} oriented by increasing v."""
    return LineFamily(Fraction(1), Fraction(0), as_rat(u0), Fraction(period), (Fraction(0), Fraction(1)))


def horizontal_circle(v0=0, period=TWO) -> LineFamily:
    """The circle {v = v0} oriented by increasing u."""
    return LineFamily(Fraction(0), Fraction(1), as_rat(v0), Fraction(period), (Fraction(1), Fraction(0)))


@dataclass(frozen=True)
class ThetaPoints:
    theta0: TorusPoint
    thetas: tuple[TorusPoint, ...]
    lifts: tuple[tuple[TorusPoint, ...], ...] = field(default=())  # lifts[i-1][k] = theta_i^{(k)}
    lifts0: tuple[TorusPoint, ...] = field(default=())  # theta_0^{(k)}
    n: int = 1

    @property
    def p(self) -> int:
        return len(self.thetas)

    def v_values(self) -> list[Fraction]:
        """Torus v-coordinates of theta_1..theta_p (ascending)."""
        return [t.v for t in self.thetas]


def theta_points(p: int, q: int, u_sigma, n: int = 1, eta=0) -> ThetaPoints:
    """Intersections of {u = u_sigma} with the p/q curve, ordered by v.

    The circle u = u_sigma is oriented by increasing v starting at v = 0,
    so theta_1 has the smallest v in [0, 2).  ``eta`` shifts the Y0
    circle, not u_sigma, and does not move these points.
    """
    curve = slope_curve(p, q)
    if n < 1:
        raise PreconditionError("n must be >= 1")
    us = as_rat(u_sigma) % 2
    as_rat(eta)
    # p*v = c0 + q*u (mod 2) has exactly p solutions v in [0, 2)
    c0 = curve.family().c
    vs = sorted(((c0 + q * us + 2 * j) / p) % 2 for j in range(p))
    if len(set(vs)) != p:
        raise GenericityError("circle u = u_sigma is a component of the slope curve")
    thetas = tuple(TorusPoint(us, v, Space.TORUS) for v in vs)
    for t in thetas:
        if t.xy == BAD_POINT:
            raise GenericityError(f"theta point collides with the bad point {BAD_POINT}")
    lifts = tuple(tuple(TorusPoint(us, v + 2 * k, Space.CYL_V, n) for k in range(n)) for v in vs)
    lifts0 = tuple(TorusPoint(us, Fraction(2 * k), Space.CYL_V, n) for k in range(n))
    return ThetaPoints(TorusPoint(us, 0, Space.TORUS), thetas, lifts, lifts0, n)


@dataclass
class GenericityReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def check_generic(u_sigma=None, eta=0, p=None, q=None, curve_points: list[Point] | None = None) -> GenericityReport:
    """Transversality hypotheses of the surgery formula, as a report.

    (i) no reducible circle u = u_sigma (or its eta-shift) passes the bad point;
    (ii) the slope curve misses the bad point and does not meet u = u_sigma
         on v = 0;
    (iii) supplied curve image points miss theta_0..theta_p.
    An empty configuration is generic.
    """
    rep = GenericityReport()
    if u_sigma is None:
        return rep
    us = as_rat(u_sigma) % 2
    eta = as_rat(eta)
    if us == BAD_POINT[0]:
        rep.violations.append("reducible circle u = u_sigma passes through the bad point (1, 1)")
    if eta and (us + eta) % 2 == BAD_POINT[0]:
        rep.violations.append("shifted circle u = u_sigma + eta passes through the bad point (1, 1)")
    if eta and us < 1 < us + eta:
        rep.violations.append("bad point lies in the strip between u = u_sigma and its eta-shift")
    if p is not None and q is not None:
        curve = slope_curve(p, q)
        fam = curve.family()
        if fam.contains(BAD_POINT):
            rep.violations.append("slope curve passes through the bad point (1, 1)")
        if fam.contains((us, Fraction(0))):
            rep.violations.append("slope curve meets u = u_sigma on the line v = 0")
        if curve_points:
            try:
                th = theta_points(p, q, us)
                marks = [th.theta0] + list(th.thetas)
            except GenericityError as exc:
                rep.violations.append(str(exc))
                marks = []
            for pt in curve_points:
                tp = ((pt[0]) % 2, (pt[1]) % 2)
                for i, m in enumerate(marks):
                    if tp == m.xy:
                        rep.violations.append(f"curve meets theta_{i} at {tp}")
    return rep


def lattice_intersections(p: int, q: int, u_sigma, span: int = 4) -> list[Point]:
    """Brute-force oracle: scan plane lifts of the slope curve and reduce.

    Independent of :func:`theta_points`: walks every lattice translate of the
    base line over a window and intersects with u = u_sigma directly.
    """
    curve = slope_curve(p, q)
    us = as_rat(u_sigma) % 2
    bu, bv = curve.base_point.u, curve.base_point.v
    found = set()
    for a in range(-span * p, span * p + 1):
        for b in range(-span * (abs(q) + 1), span * (abs(q) + 1) + 1):
            # line through (bu + 2a, bv + 2b) with direction (p, q)
            ou, ov = bu + 2 * a, bv + 2 * b
            t = (us - ou) / p
            v = ov + q * t
            if 0 <= v < 2:
                found.add((us, v))
    return sorted(found, key=lambda x: x[1])


def cylinder_lift_count(points: list[TorusPoint], n: int) -> dict[Point, int]:
    """Project cylinder points to the torus and count fibre sizes."""
    out: dict[Point, int] = {}
    for t in points:
        key = (t.u % 2, t.v % 2)
        out[key] = out.get(key, 0) + 1
    return out


def floor_div(x: Fraction, y) -> int:
    return floor(x / y)


__all__ = [
    "BAD_POINT",
    "Space",
    "LineKind",
    "TorusPoint",
    "ReducibleLine",
    "SlopeCurve",
    "ThetaPoints",
    "GenericityReport",
    "reducible_line",
    "slope_curve",
    "theta_points",
    "check_generic",
    "vertical_circle",
    "horizontal_circle",
    "lattice_intersections",
    "cylinder_lift_count",
    "sgn",
]
