"""Exact planar primitives: periodic line families, segment tests, polygons.

Points are ``(u, v)`` tuples of Fractions in the universal cover R^2.  A
periodic family ``{a*u + b*v = c (mod period)}`` represents a closed curve
on a torus or cylinder through all of its lifts at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterator

from .errors import GenericityError

Point = tuple[Fraction, Fraction]


def cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def lerp(a: Point, b: Point, t: Fraction) -> Point:
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def sgn(x) -> int:
    return (x > 0) - (x < 0)


def orient(a: Point, b: Point, c: Point) -> int:
    return sgn(cross(sub(b, a), sub(c, a)))


@dataclass(frozen=True)
class Crossing:
    """A transverse crossing of a segment with a target curve."""

    t: Fraction  # parameter along the segment, 0 < t < 1
    point: Point
    sign: int
    lift: int  # which lift of a periodic target was hit


@dataclass(frozen=True)
class LineFamily:
    """Lines ``a*u + b*v = c + j*period`` (all j when period is set).

    ``direction`` orients every line of the family; it must satisfy
    ``a*du + b*dv == 0``.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    period: Fraction | None
    direction: Point

    def __post_init__(self):
        if self.a * self.direction[0] + self.b * self.direction[1] != 0:
            raise ValueError("direction is not tangent to the family")
        if self.a == 0 and self.b == 0:
            raise ValueError("degenerate line family")

    def level(self, pt: Point) -> Fraction:
        return self.a * pt[0] + self.b * pt[1] - self.c

    def contains(self, pt: Point) -> bool:
        h = self.level(pt)
        if self.period is None:
            return h == 0
        return (h / self.period).denominator == 1

    def lift_index(self, h: Fraction) -> int:
        return 0 if self.period is None else int(h / self.period)

    def count(self, p0: Point, p1: Point) -> int:
        """Signed crossing count of segment p0->p1 by level-set counting."""
        h0, h1 = self.level(p0), self.level(p1)
        if self.contains(p0) or self.contains(p1):
            raise GenericityError(f"segment endpoint lies on target: {_fmt(p0)} -> {_fmt(p1)}")
        if h0 == h1:
            return 0
        if self.period is None:
            n = 1 if (h0 < 0) != (h1 < 0) else 0
        else:
            lo, hi = min(h0, h1), max(h0, h1)
            n = floor(hi / self.period) - floor(lo / self.period)
        return n * sgn(cross(sub(p1, p0), self.direction))

    def crossings(self, p0: Point, p1: Point) -> list[Crossing]:
        h0, h1 = self.level(p0), self.level(p1)
        if self.contains(p0) or self.contains(p1):
            raise GenericityError(f"segment endpoint lies on target: {_fmt(p0)} -> {_fmt(p1)}")
        if h0 == h1:
            return []
        s = sgn(cross(sub(p1, p0), self.direction))
        out = []
        for level in self._levels_between(h0, h1):
            t = (level - h0) / (h1 - h0)
            out.append(Crossing(t, lerp(p0, p1, t), s, self.lift_index(level)))
        out.sort(key=lambda c: c.t)
        return out

    def _levels_between(self, h0: Fraction, h1: Fraction) -> Iterator[Fraction]:
        lo, hi = min(h0, h1), max(h0, h1)
        if self.period is None:
            if lo < 0 < hi:
                yield Fraction(0)
            return
        j = floor(lo / self.period) + 1
        while j * self.period < hi:
            yield j * self.period
            j += 1


def _fmt(p: Point) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> Fraction | None:
    """Parameter t on a->b where it properly crosses c->d, else None.

    Touching at an endpoint or collinear overlap raises GenericityError.
    Used by the brute-force oracles and the polygon simplicity test.
    """
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 == o2 == 0:
        if _overlap_1d(a, b, c, d):
            raise GenericityError("collinear overlapping segments")
        return None
    if o1 * o2 > 0 or o3 * o4 > 0:
        return None
    if 0 in (o1, o2, o3, o4):
        raise GenericityError(f"segments touch at an endpoint: {_fmt(a)}{_fmt(b)} / {_fmt(c)}{_fmt(d)}")
    r, s = sub(b, a), sub(d, c)
    return cross(sub(c, a), s) / cross(r, s)


def _overlap_1d(a, b, c, d) -> bool:
    k = 0 if a[0] != b[0] or c[0] != d[0] else 1
    lo1, hi1 = sorted((a[k], b[k]))
    lo2, hi2 = sorted((c[k], d[k]))
    return max(lo1, lo2) <= min(hi1, hi2)


def signed_area(poly: list[Point]) -> Fraction:
    total = Fraction(0)
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        total += p[0] * q[1] - p[1] * q[0]
    return total / 2


def dedupe_polyline(poly: list[Point]) -> list[Point]:
    """Drop repeated consecutive vertices and collinear interior vertices."""
    out: list[Point] = []
    for p in poly:
        if out and out[-1] == p:
            continue
        out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) > 3:
        changed = False
        for i in range(len(out)):
            a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
            if orient(a, b, c) == 0:
                # b lies on line ac; drop it only if it is between a and c
                if _between(a, b, c):
                    del out[i]
                    changed = True
                    break
    return out


def _between(a: Point, b: Point, c: Point) -> bool:
    return min(a[0], c[0]) <= b[0] <= max(a[0], c[0]) and min(a[1], c[1]) <= b[1] <= max(a[1], c[1])


def is_simple_polygon(poly: list[Point]) -> bool:
    """True iff the closed polygon has no self-intersections or spikes."""
    m = len(poly)
    if m < 3:
        return False
    edges = [(poly[i], poly[(i + 1) % m]) for i in range(m)]
    for i in range(m):
        a, b = edges[i]
        if a == b:
            return False
        c = poly[(i + 2) % m]
        # consecutive edges folding back onto each other form a spike
        if orient(a, b, c) == 0 and _same_side(b, a, c):
            return False
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            if _segments_intersect_closed(a, b, *edges[j]):
                return False
    return signed_area(poly) != 0


def _same_side(origin: Point, p: Point, q: Point) -> bool:
    u, w = sub(p, origin), sub(q, origin)
    return u[0] * w[0] + u[1] * w[1] > 0


def _segments_intersect_closed(a, b, c, d) -> bool:
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _between(a, c, b):
        return True
    if o2 == 0 and _between(a, d, b):
        return True
    if o3 == 0 and _between(c, a, d):
        return True
    if o4 == 0 and _between(c, b, d):
        return True
    return False


def linf_distance_to_segment(x: Point, a: Point, b: Point) -> Fraction:
    """Exact sup-norm distance from point x to segment ab."""
    d = sub(b, a)
    e = sub(a, x)
    cands = {Fraction(0), Fraction(1)}
    for k in (0, 1):
        if d[k] != 0:
            cands.add(-e[k] / d[k])
    for s in (1, -1):
        den = d[0] - s * d[1]
        if den != 0:
            cands.add(-(e[0] - s * e[1]) / den)
    best = None
    for t in cands:
        if 0 <= t <= 1:
            val = max(abs(e[0] + d[0] * t), abs(e[1] + d[1] * t))
            best = val if best is None or val < best else best
    return best


@dataclass(frozen=True)
class PeriodicGraph:
    """Graph ``v = F(u) (mod vperiod)`` of a PL function with F(u + uperiod) = F(u).

    ``knots`` holds the breakpoints over one period ``[knots[0].u, knots[0].u + uperiod]``;
    the last knot must equal the first shifted by ``uperiod``.  The graph is
    oriented by increasing u.
    """

    knots: tuple[Point, ...]
    uperiod: Fraction
    vperiod: Fraction

    def __post_init__(self):
        k = self.knots
        if len(k) < 2 or k[-1] != (k[0][0] + self.uperiod, k[0][1]):
            raise ValueError("knots must span exactly one period")
        if any(k[i + 1][0] <= k[i][0] for i in range(len(k) - 1)):
            raise ValueError("knots must have strictly increasing u")

    def piece_at(self, u: Fraction) -> tuple[int, int]:
        """(period index, piece index) of the piece containing u (left-closed)."""
        u0 = self.knots[0][0]
        j = floor((u - u0) / self.uperiod)
        r = u - j * self.uperiod
        for i in range(len(self.knots) - 1):
            if r < self.knots[i + 1][0]:
                return j, i
        raise AssertionError("unreachable")

    def value(self, u: Fraction) -> Fraction:
        j, i = self.piece_at(u)
        (a, fa), (b, fb) = self.knots[i], self.knots[i + 1]
        r = u - j * self.uperiod
        return fa + (fb - fa) * (r - a) / (b - a)

    def slope(self, piece: int) -> Fraction:
        (a, fa), (b, fb) = self.knots[piece], self.knots[piece + 1]
        return (fb - fa) / (b - a)

    def breaks_between(self, u0: Fraction, u1: Fraction) -> list[Fraction]:
        """Breakpoint u-values strictly between u0 and u1, ascending."""
        lo, hi = min(u0, u1), max(u0, u1)
        out = []
        base = self.knots[0][0]
        j = floor((lo - base) / self.uperiod)
        while True:
            shift = j * self.uperiod
            if base + shift >= hi:
                break
            for a, _ in self.knots[:-1]:
                x = a + shift
                if lo < x < hi:
                    out.append(x)
            j += 1
        return sorted(out)

    def on_graph(self, pt: Point) -> bool:
        return ((pt[1] - self.value(pt[0])) / self.vperiod).denominator == 1

    def crossings(self, p0: Point, p1: Point) -> list[Crossing]:
        """Transverse crossings of segment p0->p1; ``lift`` holds the graph lift index.

        Raises GenericityError if an endpoint, or a point where the segment
        passes a breakpoint column, lies on the graph.
        """
        if self.on_graph(p0) or self.on_graph(p1):
            raise GenericityError(f"segment endpoint lies on the graph: {_fmt(p0)} -> {_fmt(p1)}")
        d = sub(p1, p0)
        ts = [Fraction(0)]
        if d[0] != 0:
            ts += sorted((x - p0[0]) / d[0] for x in self.breaks_between(p0[0], p1[0]))
        ts.append(Fraction(1))
        out = []
        for t0, t1 in zip(ts, ts[1:]):
            q0, q1 = lerp(p0, p1, t0), lerp(p0, p1, t1)
            if t0 > 0 and self.on_graph(q0):
                raise GenericityError(f"segment passes through a graph vertex at {_fmt(q0)}")
            mid = q0[0] + (q1[0] - q0[0]) / 2
            _, piece = self.piece_at(mid)
            h0 = q0[1] - self._value_on_piece(q0[0], mid)
            h1 = q1[1] - self._value_on_piece(q1[0], mid)
            if h0 == h1:
                continue
            s = -sgn(h1 - h0)
            lo, hi = min(h0, h1), max(h0, h1)
            j = floor(lo / self.vperiod) + 1
            while j * self.vperiod < hi:
                lvl = j * self.vperiod
                tt = (lvl - h0) / (h1 - h0)
                t = t0 + (t1 - t0) * tt
                out.append(Crossing(t, lerp(p0, p1, t), s, j))
                j += 1
        out.sort(key=lambda c: c.t)
        return out

    def _value_on_piece(self, u: Fraction, ref: Fraction) -> Fraction:
        """Evaluate the linear piece containing ``ref`` at u (u may be its end)."""
        j, i = self.piece_at(ref)
        (a, fa), (b, fb) = self.knots[i], self.knots[i + 1]
        r = u - j * self.uperiod
        return fa + (fb - fa) * (r - a) / (b - a)

    def count(self, p0: Point, p1: Point) -> int:
        return sum(c.sign for c in self.crossings(p0, p1))

    def polyline(self, u0: Fraction, u1: Fraction, lift: int = 0) -> list[Point]:
        """Vertices of graph lift ``lift`` from u0 to u1 (either direction)."""
        pts = [u0] + self.breaks_between(u0, u1) + [u1]
        if u1 < u0:
            pts = [u0] + self.breaks_between(u0, u1)[::-1] + [u1]
        sh = lift * self.vperiod
        return [(x, self.value(x) + sh) for x in pts]
