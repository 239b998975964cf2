"""Signed counting of a synthetic boundary-value curve against reducible lines.

A :class:`BoundaryCurve` is a finite union of oriented PL arcs and loops
drawn in the universal cover of the cylinder (u real, v read mod 2n).  Arc
endpoints sit on the reducible circle u = u_sigma (mod 2) and carry a sign
tag; an endpoint tagged BAD sits on the bad point and is ignored by the
spectral-flow counts.

Crossing sign: sgn det[curve tangent, target tangent].
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Union

from ._geometry import Crossing, LineFamily, PeriodicGraph, Point, cross, segments_cross, sgn, sub
from .errors import GenericityError, InstabilityError, PreconditionError
from .exact_arith import as_rat
from .perturbation import build_refined_profile, perturbed_graph
from .torus_model import (
    BAD_POINT,
    LineKind,
    ReducibleLine,
    SlopeCurve,
    check_generic,
    horizontal_circle,
    slope_curve,
    theta_points,
    vertical_circle,
)

START_SIGN = -1  # tag carried by the initial point of an arc

Target = Union[ReducibleLine, SlopeCurve, LineFamily, PeriodicGraph]

__all__ = [
    "Endpoint",
    "Component",
    "BoundaryCurve",
    "SignedCount",
    "SpectralFlow",
    "PartitionReport",
    "IdentityReport",
    "signed_count",
    "crossings_with",
    "stability_threshold",
    "partition_check",
    "brute_force_partition_counts",
    "spectral_flow",
    "spectral_flow_sum",
    "staircase_term",
    "surgery_count_identity",
    "random_boundary_curve",
    "random_partition_curve",
    "partition_targets",
    "SurgeryCase",
    "random_surgery_case",
]


@dataclass(frozen=True)
class Endpoint:
    sign: int
    bad: bool = False

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("endpoint sign must be +1 or -1")


@dataclass(frozen=True)
class Component:
    vertices: tuple[Point, ...]
    closed: bool = False
    start: Endpoint | None = None
    end: Endpoint | None = None

    def __post_init__(self):
        vs = tuple((as_rat(u), as_rat(v)) for u, v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if self.closed:
            if len(vs) < 3:
                raise ValueError("a loop needs at least 3 vertices")
            if self.start is not None or self.end is not None:
                raise ValueError("loops have no endpoints")
        else:
            if len(vs) < 2:
                raise ValueError("an arc needs at least 2 vertices")
            if self.start is None or self.end is None:
                raise ValueError("arcs need tagged endpoints")
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise GenericityError(f"repeated vertex {a}")

    def segments(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        segs = list(zip(vs, vs[1:]))
        if self.closed:
            segs.append((vs[-1], vs[0]))
        return segs

    def endpoints(self) -> list[tuple[Point, Endpoint]]:
        if self.closed:
            return []
        return [(self.vertices[0], self.start), (self.vertices[-1], self.end)]


@dataclass(frozen=True)
class BoundaryCurve:
    components: tuple[Component, ...]
    u_sigma: Fraction
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "u_sigma", as_rat(self.u_sigma))
        object.__setattr__(self, "components", tuple(self.components))
        if self.n < 1:
            raise PreconditionError("n must be >= 1")
        for c in self.components:
            for pt, ep in c.endpoints():
                if ep.bad:
                    if (pt[0] % 2, pt[1] % 2) != BAD_POINT:
                        raise GenericityError(f"BAD endpoint {pt} is not over the bad point")
                elif (pt[0] - self.u_sigma) % 2 != 0:
                    raise GenericityError(f"endpoint {pt} is off the circle u = {self.u_sigma}")

    @classmethod
    def empty(cls, u_sigma=0, n: int = 1) -> "BoundaryCurve":
        return cls((), as_rat(u_sigma), n)

    def segments(self) -> Iterable[tuple[Point, Point]]:
        for c in self.components:
            yield from c.segments()

    def endpoints(self) -> list[tuple[Point, Endpoint]]:
        return [e for c in self.components for e in c.endpoints()]

    def vertices(self) -> list[Point]:
        return [v for c in self.components for v in c.vertices]

    def bbox(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        vs = self.vertices()
        if not vs:
            z = Fraction(0)
            return z, z, z, z
        us = [v[0] for v in vs]
        ws = [v[1] for v in vs]
        return min(us), max(us), min(ws), max(ws)


@dataclass(frozen=True)
class SignedCount:
    value: int

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class SpectralFlow:
    value: int
    interval: tuple[Fraction, Fraction]
    lift: int


def _as_crosser(target: Target, n: int):
    if isinstance(target, (LineFamily, PeriodicGraph)):
        return target
    if isinstance(target, SlopeCurve):
        return target.family()
    if isinstance(target, ReducibleLine):
        if target.kind is LineKind.Y0_LINE:
            return target.family(None)
        return target.family(2 * n)
    raise TypeError(f"unsupported target {type(target).__name__}")


def crossings_with(curve: BoundaryCurve, target: Target) -> list[tuple[int, int, Crossing]]:
    """All crossings as (component index, segment index, crossing)."""
    fam = _as_crosser(target, curve.n)
    out = []
    for ci, comp in enumerate(curve.components):
        for si, (a, b) in enumerate(comp.segments()):
            for c in fam.crossings(a, b):
                out.append((ci, si, c))
    return out


def signed_count(curve: BoundaryCurve, target: Target) -> SignedCount:
    fam = _as_crosser(target, curve.n)
    return SignedCount(sum(fam.count(a, b) for a, b in curve.segments()))


# ---------------------------------------------------------------------------
# partition identity


@dataclass
class PartitionReport:
    count_Y: int
    count_Y1: int
    count_Y0: dict[int, int]
    threshold: Fraction
    eps: Fraction
    matching: list[tuple[Point, Point]] = field(default_factory=list)
    unmatched: list[Point] = field(default_factory=list)

    @property
    def rhs(self) -> int:
        return self.count_Y1 + sum(self.count_Y0.values())

    @property
    def holds(self) -> bool:
        return self.count_Y == self.rhs


def stability_threshold(curve: BoundaryCurve, n: int, m: int, p: int, eta=0) -> Fraction | None:
    """Sup-norm distance from the arc endpoints to the limit lines.

    Any eps strictly below this value leaves every endpoint outside the thin
    regions between the perturbed curve and its limit, so the partition
    identity is exact and eps-independent.  None when there are no endpoints.
    """
    eta = as_rat(eta)
    per = Fraction(2 * n)
    best = None
    for (u, v), _ in curve.endpoints():
        d = (v - u - 1 - 2 * m) % per
        d1 = min(d, per - d) / 2
        r = (u - 2 * p - eta) % per
        d0 = min(r, per - r)
        val = min(d1, d0)
        best = val if best is None or val < best else best
    return best


def _y0_lines(curve: BoundaryCurve, n: int, p: int, eta: Fraction) -> list[tuple[int, ReducibleLine]]:
    u0, u1, _, _ = curve.bbox()
    per = 2 * n
    kmin = floor((u0 - 2 * p - eta) / per)
    kmax = ceil((u1 - 2 * p - eta) / per)
    out = []
    for k in range(kmin, kmax + 1):
        out.append((k, ReducibleLine(LineKind.Y0_LINE, n * k + p, eta)))
    return out


def _check_params(n: int, m: int, p: int) -> None:
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if not (0 <= m < n and 0 <= p < n):
        raise PreconditionError("need 0 <= m, p < n")


def partition_check(curve: BoundaryCurve, n: int, m: int, p: int, eps, eta=0) -> PartitionReport:
    """Count against the perturbed curve and against its limit lines.

    Raises InstabilityError when eps is not below the stability threshold.
    """
    eps, eta = as_rat(eps), as_rat(eta)
    _check_params(n, m, p)
    if curve.n != n:
        raise PreconditionError(f"curve lives on CYL_V({curve.n}), not CYL_V({n})")
    thr = stability_threshold(curve, n, m, p, eta)
    if thr is not None and eps >= thr:
        raise InstabilityError(f"eps = {eps} is not below the stability threshold {thr}; use a smaller eps")
    prof = build_refined_profile(n, p, eps)
    graph = perturbed_graph(prof, m, eta)
    y1 = ReducibleLine(LineKind.Y1_LINE, m)
    cy = crossings_with(curve, graph)
    c1 = crossings_with(curve, y1)
    count_y0: dict[int, int] = {}
    c0 = []
    for k, line in _y0_lines(curve, n, p, eta):
        cs = crossings_with(curve, line)
        c0 += cs
        val = sum(c.sign for _, _, c in cs)
        if val:
            count_y0[k] = val
    rep = PartitionReport(
        sum(c.sign for _, _, c in cy),
        sum(c.sign for _, _, c in c1),
        count_y0,
        thr if thr is not None else Fraction(-1),
        eps,
    )
    rep.matching, rep.unmatched = _match(curve, prof, graph, cy, c1, c0)
    return rep


def _match(curve, prof, graph, cy, c1, c0):
    """Pair each crossing with the perturbed curve to a nearby limit-line crossing.

    A crossing on the ramp pairs with a wall crossing, one on the flat part
    with a slanted-line crossing; the partner is the nearest one along the
    same component with the same sign.
    """
    ramp = _ramp_piece(prof)
    pool = {1: [x for x in c1], 0: [x for x in c0]}
    pairs, unmatched = [], []
    for ci, si, c in cy:
        _, piece = graph.piece_at(c.point[0])
        cls = 0 if piece == ramp else 1
        best, bi = None, None
        for idx, (cj, sj, d) in enumerate(pool[cls]):
            if cj != ci or d.sign != c.sign:
                continue
            dist = abs((sj + d.t) - (si + c.t))
            if best is None or dist < best:
                best, bi = dist, idx
        if bi is None:
            unmatched.append(c.point)
        else:
            pairs.append((c.point, pool[cls].pop(bi)[2].point))
    unmatched += [d.point for k in (0, 1) for _, _, d in pool[k]]
    return pairs, unmatched


def _ramp_piece(prof) -> int:
    # refined knots: flat is piece 0, ramp is piece 1
    return 1


def brute_force_partition_counts(curve: BoundaryCurve, n: int, m: int, p: int, eps, eta=0) -> tuple[int, int, int]:
    """Oracle: intersect every curve segment with explicit target segments.

    Shares no counting code with :func:`partition_check`; it materialises
    the perturbed curve and the limit lines as finite segment lists over the
    curve's bounding box and tests pairs with the exact segment predicate.
    """
    eps, eta = as_rat(eps), as_rat(eta)
    prof = build_refined_profile(n, p, eps)
    per = Fraction(2 * n)
    u0, u1, v0, v1 = curve.bbox()
    u0, u1, v0, v1 = u0 - 1, u1 + 1, v0 - 1, v1 + 1
    knots = [(a + eta, b + eta + 2 * m) for a, b in prof.breakpoints[:-1]]
    ysegs = []
    kmin = floor((u0 - knots[0][0]) / per) - 1
    kmax = ceil((u1 - knots[0][0]) / per) + 1
    jmin = floor((v0 - 4 * n) / per) - 1
    jmax = ceil((v1 + 4 * n) / per) + 1
    for k in range(kmin, kmax + 1):
        pts = [(a + k * per, b) for a, b in knots] + [(knots[0][0] + (k + 1) * per, knots[0][1])]
        for j in range(jmin, jmax + 1):
            sh = [(a, b + j * per) for a, b in pts]
            ysegs += [(sh[i], sh[i + 1], (sh[i + 1][0] - sh[i][0], sh[i + 1][1] - sh[i][1])) for i in range(len(sh) - 1)]
    y1segs = []
    lo, hi = u0 - 2, u1 + 2
    for j in range(floor((v0 - u1 - 1 - 2 * m) / per) - 1, ceil((v1 - u0 - 1 - 2 * m) / per) + 2):
        c = 1 + 2 * m + j * per
        y1segs.append(((lo, lo + c), (hi, hi + c), (Fraction(1), Fraction(1))))
    y0segs = []
    k = floor((u0 - 2 * p - eta) / per)
    while 2 * p + eta + k * per <= u1:
        x = 2 * p + eta + k * per
        y0segs.append(((x, v1 + 1), (x, v0 - 1), (Fraction(0), Fraction(-1))))
        k += 1

    def box(a, b):
        return min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1])

    csegs = [(a, b, box(a, b)) for a, b in curve.segments()]

    def tally(segs):
        tot = 0
        for c, d, direction in segs:
            bx = box(c, d)
            for a, b, ba in csegs:
                if ba[1] < bx[0] or bx[1] < ba[0] or ba[3] < bx[2] or bx[3] < ba[2]:
                    continue
                if segments_cross(a, b, c, d) is not None:
                    tot += sgn(cross(sub(b, a), direction))
        return tot

    return tally(ysegs), tally(y1segs), tally(y0segs)


# ---------------------------------------------------------------------------
# spectral flow and the surgery identity


def _live_endpoints(curve: BoundaryCurve):
    for pt, ep in curve.endpoints():
        if not ep.bad:
            yield pt, ep


def spectral_flow(curve: BoundaryCurve, interval, lift_k: int = 0) -> SpectralFlow:
    """Signed count of endpoints with v (mod 2n) in (a + 2k, b + 2k)."""
    a, b = (as_rat(x) for x in interval)
    if a > b:
        raise PreconditionError("interval must satisfy a <= b")
    per = 2 * curve.n
    lo, hi = a + 2 * lift_k, b + 2 * lift_k
    tot = 0
    for (u, v), ep in _live_endpoints(curve):
        # compare against every translate of the window that could contain v
        w = v % per
        for s in (-per, 0, per):
            x = w + s
            if x in (lo, hi):
                raise GenericityError(f"endpoint at v = {v} collides with the interval boundary")
            if lo < x < hi:
                tot += ep.sign
    return SpectralFlow(tot, (a, b), lift_k)


def spectral_flow_sum(curve: BoundaryCurve, theta_i, theta_j) -> int:
    """Sum over the n lifts of the flow across [theta_i, theta_j] (torus v-values)."""
    a = theta_i.v if hasattr(theta_i, "v") else as_rat(theta_i)
    b = theta_j.v if hasattr(theta_j, "v") else as_rat(theta_j)
    return sum(spectral_flow(curve, (a, b), k).value for k in range(curve.n))


def staircase_term(curve: BoundaryCurve, theta_vs: list[Fraction]) -> int:
    """Endpoint sum weighted by the multiplicities p, p-1, ..., 0.

    ``theta_vs`` are the ascending torus v-values of theta_1..theta_p; the
    weight of an endpoint is p minus the number of theta values below it.
    """
    p = len(theta_vs)
    tot = 0
    for (u, v), ep in _live_endpoints(curve):
        w = v % 2
        if w == 0 or w in theta_vs:
            raise GenericityError(f"endpoint at v = {v} sits on a theta point")
        below = sum(1 for t in theta_vs if t < w)
        tot += ep.sign * (p - below)
    return tot


@dataclass
class IdentityReport:
    lhs: int
    count_h: int
    count_v: int
    sf_lifts: int
    sf_staircase: int
    p: int
    q: int

    @property
    def rhs(self) -> int:
        return self.p * self.count_h + self.q * self.count_v + self.sf_lifts

    @property
    def paths_agree(self) -> bool:
        return self.sf_lifts == self.sf_staircase

    @property
    def holds(self) -> bool:
        return self.paths_agree and self.lhs == self.rhs


def surgery_count_identity(curve: BoundaryCurve, p: int, q: int, n: int, u_sigma, eta) -> IdentityReport:
    u_sigma, eta = as_rat(u_sigma), as_rat(eta)
    if curve.n != n:
        raise PreconditionError(f"curve lives on CYL_V({curve.n}), not CYL_V({n})")
    if (curve.u_sigma - u_sigma) % 2:
        raise PreconditionError("u_sigma disagrees with the curve")
    rep = check_generic(u_sigma, eta, p, q, curve.vertices())
    if not rep.ok:
        raise GenericityError("; ".join(rep.violations))
    th = theta_points(p, q, u_sigma, n, eta)
    lhs = signed_count(curve, slope_curve(p, q)).value
    ch = signed_count(curve, horizontal_circle(0)).value
    cv = signed_count(curve, vertical_circle(u_sigma + eta)).value
    sf = sum(spectral_flow_sum(curve, th.theta0, t) for t in th.thetas)
    st = staircase_term(curve, th.v_values())
    return IdentityReport(lhs, ch, cv, sf, st, p, q)


# ---------------------------------------------------------------------------
# seeded generator


def _rand_rat(rng: random.Random, lo: Fraction, hi: Fraction, den: int) -> Fraction:
    a, b = ceil(lo * den), floor(hi * den)
    return Fraction(rng.randint(a, b), den)


def random_boundary_curve(
    seed: int | random.Random,
    n: int = 1,
    u_sigma=0,
    arcs: int = 1,
    loops: int = 0,
    bends: int = 3,
    width=3,
    den: int = 97,
    avoid: list | None = None,
    max_tries: int = 200,
) -> BoundaryCurve:
    """Seeded random generic curve.

    Arcs start and end on u = u_sigma and wander through ``bends`` random
    interior vertices in the box |u - u_sigma| <= width, 0 <= v < 2n.  The
    odd denominator keeps vertices off the lines used by the checks; any
    target in ``avoid`` that a vertex or endpoint touches causes a retry.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    u_sigma = as_rat(u_sigma)
    width = as_rat(width)
    top = Fraction(2 * n)
    for _ in range(max_tries):
        comps = []
        for _ in range(arcs):
            start = (u_sigma, _rand_rat(rng, Fraction(0), top, den))
            end = (u_sigma, _rand_rat(rng, Fraction(0), top, den))
            mid = [
                (_rand_rat(rng, u_sigma - width, u_sigma + width, den), _rand_rat(rng, Fraction(0), top, den))
                for _ in range(bends)
            ]
            comps.append(Component(tuple([start] + mid + [end]), False, Endpoint(START_SIGN), Endpoint(-START_SIGN)))
        for _ in range(loops):
            cu = _rand_rat(rng, u_sigma - width, u_sigma + width, den)
            cv = _rand_rat(rng, Fraction(0), top, den)
            k = rng.randint(3, 5)
            pts = []
            for i in range(k):
                r = _rand_rat(rng, Fraction(1, 4), Fraction(3, 2), den)
                # a star-shaped polygon: angle sectors keep it simple
                dx, dy = _DIRS[(i * len(_DIRS)) // k]
                pts.append((cu + r * dx, cv + r * dy))
            comps.append(Component(tuple(pts), True))
        try:
            curve = BoundaryCurve(tuple(comps), u_sigma, n)
            if any(a == b for a, b in curve.segments()):
                continue
            for tgt in avoid or ():
                fam = _as_crosser(tgt, n)
                if isinstance(fam, LineFamily):
                    if any(fam.contains(v) for v in curve.vertices()):
                        raise GenericityError("vertex on an avoided line")
                    continue
                for a, b in curve.segments():
                    fam.crossings(a, b)
            return curve
        except GenericityError:
            continue
    raise GenericityError("could not generate a generic curve; widen the box or change the seed")


_DIRS = [
    (Fraction(1), Fraction(0)),
    (Fraction(1), Fraction(1)),
    (Fraction(0), Fraction(1)),
    (Fraction(-1), Fraction(1)),
    (Fraction(-1), Fraction(0)),
    (Fraction(-1), Fraction(-1)),
    (Fraction(0), Fraction(-1)),
    (Fraction(1), Fraction(-1)),
]


def partition_targets(n: int, m: int, p: int, eps, eta=0) -> list:
    """The perturbed curve and every limit line, as periodic crossers."""
    eta = as_rat(eta)
    graph = perturbed_graph(build_refined_profile(n, p, eps), m, eta)
    y1 = ReducibleLine(LineKind.Y1_LINE, m).family(2 * n)
    walls = LineFamily(Fraction(1), Fraction(0), 2 * p + eta, Fraction(2 * n), (Fraction(0), Fraction(-1)))
    return [graph, y1, walls]


def random_partition_curve(seed, n: int, m: int, p: int, eps, eta=0, u_sigma=None, **kw) -> BoundaryCurve:
    """Seeded curve that is generic for :func:`partition_check` at this eps."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    eps = as_rat(eps)
    if u_sigma is None:
        u_sigma = Fraction(2 * rng.randrange(n), n) + Fraction(1, 7)
    avoid = partition_targets(n, m, p, eps, eta)
    for _ in range(200):
        c = random_boundary_curve(rng, n, u_sigma, avoid=avoid, **kw)
        thr = stability_threshold(c, n, m, p, eta)
        if thr is None or eps < thr:
            return c
    raise GenericityError("could not generate a stable curve; lower eps")


@dataclass(frozen=True)
class SurgeryCase:
    curve: BoundaryCurve
    p: int
    q: int
    n: int
    u_sigma: Fraction
    eta: Fraction


def random_surgery_case(seed, max_p: int = 5, max_n: int = 3, max_q: int = 7, **kw) -> SurgeryCase:
    """Seeded generic input for :func:`surgery_count_identity`."""
    from math import gcd

    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(200):
        p = rng.randint(1, max_p)
        q = rng.randint(-max_q, max_q)
        if gcd(p, q) != 1:
            continue
        n = rng.randint(1, max_n)
        us = Fraction(rng.randrange(1, 2 * 89), 89)
        eta = Fraction(rng.randrange(0, 13), 131)
        if not check_generic(us, eta, p, q).ok:
            continue
        avoid = [slope_curve(p, q).family(), horizontal_circle(0), vertical_circle(us + eta)]
        kw.setdefault("arcs", rng.randint(0, 3))
        kw.setdefault("loops", rng.randint(0, 2))
        try:
            curve = random_boundary_curve(rng, n, us, avoid=avoid, **kw)
            surgery_count_identity(curve, p, q, n, us, eta)
        except GenericityError:
            kw.pop("arcs", None), kw.pop("loops", None)
            continue
        return SurgeryCase(curve, p, q, n, us, eta)
    raise GenericityError("could not generate a generic surgery case")
