"""Piecewise-linear surgery perturbation profiles.

Two shapes are built here.

* The basic profile ``f`` has period 2: it equals t on [-1 + eps, 1 - eps]
  and drops linearly through (1, 0) across the wall at t = 1.
* The refined profile ``F`` has period 2n on the cylinder (values taken mod
  2n).  It follows v = t + 1 just above that line and falls by 2n across a
  narrow wall at t = 2p (mod 2n).  As eps -> 0 its graph tends to the union
  of the line v = u + 1 and the walls u = 2nk + 2p.

The refined shape is tuned so that the graph meets the slanted line and
the wall close to the top corner (2p, 2p + 1) of the wall:

    flat      from (w - 2n + e2, . + 1 + eL) to (w - e1, . + 1 + eR)
    ramp      from (w - e1, ...) down to (w + e2, w + e2 + 1 + eL - 2n)

with eL = eps/2, eR = eps/4, e2 = eps/2 and e1 = eps^2/(16n).  Since e1 is
much smaller than e2 the ramp crosses u = w near its top.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from ._geometry import PeriodicGraph, Point
from .errors import PreconditionError
from .exact_arith import as_rat
from .torus_model import LineKind, ReducibleLine

EPS0 = Fraction(1, 4)

__all__ = [
    "EPS0",
    "PerturbationProfile",
    "build_basic_profile",
    "build_refined_profile",
    "eval_profile",
    "limit_lines",
    "perturbed_graph",
    "approximation_error",
    "check_basic_properties",
    "check_refined_properties",
    "graph_distance_to_limit",
]


@dataclass(frozen=True)
class PerturbationProfile:
    n: int
    p_offset: int
    eps: Fraction
    breakpoints: tuple[Point, ...]  # one period, last = first + (period, 0)
    kind: str  # "basic" or "refined"

    @property
    def period(self) -> Fraction:
        return self.breakpoints[-1][0] - self.breakpoints[0][0]

    @property
    def wall(self) -> Fraction:
        """u-position of the wall inside [0, period)."""
        return Fraction(1) if self.kind == "basic" else Fraction(2 * self.p_offset)

    def graph(self, vperiod=None) -> PeriodicGraph:
        vp = self.period if vperiod is None else Fraction(vperiod)
        return PeriodicGraph(self.breakpoints, self.period, vp)


def build_basic_profile(eps) -> PerturbationProfile:
    eps = as_rat(eps)
    if not 0 < eps < Fraction(1, 2):
        raise PreconditionError("eps must satisfy 0 < eps < 1/2")
    pts = (
        (-1 + eps, -1 + eps),
        (1 - eps, 1 - eps),
        (1 + eps, -1 + eps),
    )
    return PerturbationProfile(1, 0, eps, pts, "basic")


def _refined_knots(n: int, w: Fraction, eps: Fraction) -> tuple[Point, ...]:
    eL, eR = eps / 2, eps / 4
    e1, e2 = eps * eps / (16 * n), eps / 2
    a = w - 2 * n + e2
    b = w - e1
    return (
        (a, a + 1 + eL),
        (b, b + 1 + eR),
        (a + 2 * n, a + 1 + eL),
    )


def build_refined_profile(n: int, p_offset: int, eps) -> PerturbationProfile:
    eps = as_rat(eps)
    n, p_offset = int(n), int(p_offset)
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if not 0 <= p_offset < n:
        raise PreconditionError("p_offset must satisfy 0 <= p < n")
    if not 0 < eps <= EPS0:
        raise PreconditionError(f"eps must satisfy 0 < eps <= {EPS0}")
    return PerturbationProfile(n, p_offset, eps, _refined_knots(n, Fraction(2 * p_offset), eps), "refined")


def eval_profile(profile: PerturbationProfile, t) -> Fraction:
    """Exact value; the refined profile is reported in [F - 2n, F) style as stored.

    Both profiles are periodic as functions (the refined one takes values
    mod 2n on the cylinder, which is the same as F(t + 2n) = F(t) + 2n).
    """
    return profile.graph().value(as_rat(t))


def approximation_error(profile: PerturbationProfile, t) -> Fraction:
    """|F(t) - target(t)|, reduced mod the value period for refined profiles.

    The target is t for the basic profile and t + 1 for the refined one.
    """
    t = as_rat(t)
    val = eval_profile(profile, t)
    if profile.kind == "basic":
        return abs(val - t)
    per = profile.period
    d = (val - t - 1) % per
    return min(d, per - d)


def _excluded(profile: PerturbationProfile, t: Fraction) -> bool:
    per = profile.period
    r = (t - profile.wall) % per
    return min(r, per - r) <= profile.eps


def check_basic_properties(profile: PerturbationProfile) -> list[str]:
    """Exact breakpoint checks of periodicity, range, antisymmetry and tracking.

    Returns the list of violated properties (empty when all hold).
    """
    bad = []
    eps = profile.eps
    knots = [k[0] for k in profile.breakpoints] + [Fraction(-1), Fraction(0), Fraction(1)]
    for t in knots:
        if eval_profile(profile, t + 2) != eval_profile(profile, t):
            bad.append(f"periodicity fails at {t}")
        if eval_profile(profile, 1 - t) != -eval_profile(profile, 1 + t):
            bad.append(f"antisymmetry about 1 fails at {t}")
        r = t - 2 * floor((t + 1) / 2)
        if not -1 <= eval_profile(profile, r) <= 1:
            bad.append(f"range fails at {r}")
    for t in [-1 + eps, 1 - eps] + [k[0] for k in profile.breakpoints if -1 + eps <= k[0] <= 1 - eps]:
        if not approximation_error(profile, t) < eps:
            bad.append(f"tracking estimate fails at {t}")
    return bad


def check_refined_properties(profile: PerturbationProfile) -> list[str]:
    """Exact checks of periodicity, tracking outside the wall zone, limit proximity."""
    bad = []
    n, eps = profile.n, profile.eps
    per = profile.period
    ts = [k[0] for k in profile.breakpoints]
    lo, hi = Fraction(-1), Fraction(2 * n - 1)
    # sample breakpoints of |F - t - 1| restricted to [lo, hi] outside the wall zone
    cands = set()
    for j in range(-1, 2):
        for t in ts:
            cands.add(t + j * per)
        for s in (-eps, eps):
            cands.add(profile.wall + s + j * per)
    cands |= {lo, hi}
    for t in sorted(cands):
        if not lo <= t <= hi:
            continue
        if eval_profile(profile, t + per) != eval_profile(profile, t):
            bad.append(f"periodicity fails at {t}")
        if not _excluded(profile, t) and not approximation_error(profile, t) < eps:
            bad.append(f"tracking estimate fails at {t}")
    for t in ts:
        if graph_distance_to_limit(profile, (t, eval_profile(profile, t))) >= eps:
            bad.append(f"breakpoint {t} is not within eps of the limit lines")
    return bad


def limit_lines(profile: PerturbationProfile, m: int = 0, eta=0) -> list[ReducibleLine]:
    """Limit line set per fundamental domain: the slanted line and one wall."""
    if profile.kind != "refined":
        raise PreconditionError("limit_lines needs a refined profile")
    eta = as_rat(eta)
    return [
        ReducibleLine(LineKind.Y1_LINE, m, Fraction(0)),
        ReducibleLine(LineKind.Y0_LINE, profile.p_offset, eta),
    ]


def graph_distance_to_limit(profile: PerturbationProfile, pt: Point) -> Fraction:
    """Sup-norm distance from a point to (slanted line) U (walls), mod periods."""
    per = profile.period
    u, v = pt
    d = (v - u - 1) % per
    d1 = min(d, per - d) / 2
    r = (u - profile.wall) % per
    d0 = min(r, per - r)
    return min(d1, d0)


def perturbed_graph(profile: PerturbationProfile, m: int = 0, eta=0) -> PeriodicGraph:
    """Graph of v = F(u - eta) + eta + 2m on the cylinder (v mod 2n)."""
    eta = as_rat(eta)
    shift = eta + 2 * m
    knots = tuple((a + eta, b + shift) for a, b in profile.breakpoints)
    return PeriodicGraph(knots, profile.period, profile.period)


def walls(profile: PerturbationProfile, u0, u1, eta=0) -> list[Fraction]:
    """Wall positions u = 2nk + 2p + eta inside [u0, u1]."""
    per = profile.period
    base = profile.wall + as_rat(eta)
    k = floor((as_rat(u0) - base) / per)
    out = []
    while base + k * per <= u1:
        x = base + k * per
        if x >= u0:
            out.append(x)
        k += 1
    return out
