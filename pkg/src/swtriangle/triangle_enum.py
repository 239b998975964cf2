"""Combinatorial triangles between a boundary curve and two reducible lines.

A triangle for the cobordism W1 has corners

    a-  on  (slanted line) ∩ curve,
    ϑ   =   slanted line ∩ perturbed curve,
    a+  on  perturbed curve ∩ curve,

and for W0 the roles move one step: a- on the perturbed curve, ϑ on the
wall, a+ on the wall.  The contour runs a- → ϑ along the first line, ϑ → a+
along the second and back to a- along the curve.  It must bound an embedded
polygon whose three corners are convex.

Sign: counterclockwise contours count +1.  A W1 triangle whose target is a
generator of the wall class (see :class:`Generator`) picks up an extra -1,
the Koszul sign of the unit degree shift that separates the two classes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import atan2, ceil, floor, pi
from typing import Sequence

from ._geometry import (
    LineFamily,
    linf_distance_to_segment,
    PeriodicGraph,
    Point,
    is_simple_polygon,
    orient,
    sgn,
    signed_area,
)
from .errors import GenericityError, GradingError, IntegrityError, PreconditionError
from .exact_arith import as_rat
from .monopole_count import BoundaryCurve, partition_targets

__all__ = [
    "Tag",
    "Generator",
    "Triangle",
    "TriangleSet",
    "TriangleConfig",
    "CornerLattice",
    "corner_clearance",
    "CancellationReport",
    "generators",
    "enumerate_triangles",
    "w_matrix",
    "w1_w0_cancellation",
    "connecting_map",
    "matmul",
    "limit_grading",
    "random_triangle_config",
]


class Tag(enum.Enum):
    W1 = "W1"
    W0 = "W0"


@dataclass(frozen=True)
class Generator:
    """A crossing of the curve with one target.

    ``where`` is the target name ("Y1", "Y", "Y0"); ``lift`` picks the lift of
    the target through the point.  For "Y" generators ``cls`` is 1 on the
    flat part of the perturbed curve and 0 on its ramp.
    """

    gid: str
    where: str
    point: Point
    comp: int
    seg: int
    t: Fraction
    sign: int
    lift: int
    cls: int = -1

    @property
    def position(self) -> Fraction:
        return self.seg + self.t


@dataclass(frozen=True)
class Triangle:
    a_minus: Point
    vartheta: Point
    a_plus: Point
    contour: tuple[Point, ...]
    sides: tuple[tuple[Point, ...], tuple[Point, ...], tuple[Point, ...]]
    sign: int
    orientation: int
    area: Fraction
    tag: Tag


@dataclass
class TriangleSet:
    triangles: list[Triangle]
    source: str
    target: str
    diagnostic: str = ""

    @property
    def total(self) -> int:
        return sum(t.sign for t in self.triangles)


@dataclass(frozen=True)
class TriangleConfig:
    curve: BoundaryCurve
    n: int
    m: int
    p: int
    eps: Fraction
    eta: Fraction = Fraction(0)

    def targets(self):
        return partition_targets(self.n, self.m, self.p, self.eps, self.eta)


def generators(config: TriangleConfig) -> dict[str, list[Generator]]:
    graph, y1, walls = config.targets()
    out: dict[str, list[Generator]] = {"Y1": [], "Y": [], "Y0": []}
    for name, tgt in (("Y1", y1), ("Y", graph), ("Y0", walls)):
        for ci, comp in enumerate(config.curve.components):
            for si, (a, b) in enumerate(comp.segments()):
                for c in tgt.crossings(a, b):
                    cls = -1
                    if name == "Y":
                        _, piece = graph.piece_at(c.point[0])
                        cls = 0 if piece == 1 else 1
                    gid = f"{name}:{len(out[name])}"
                    out[name].append(Generator(gid, name, c.point, ci, si, c.t, c.sign, c.lift, cls))
    return out


# ---------------------------------------------------------------------------
# geometry of a single candidate


def _graph_piece_lines(graph: PeriodicGraph, k: int):
    for i in range(len(graph.knots) - 1):
        (a, fa), (b, fb) = graph.knots[i], graph.knots[i + 1]
        sh = k * graph.uperiod
        yield i, a + sh, b + sh, (fb - fa) / (b - a), fa - (fb - fa) / (b - a) * (a + sh)


def _meet(fam: LineFamily, lift: int, graph: PeriodicGraph, glift: int) -> Point:
    """Unique point of line ``fam`` lift ``lift`` on graph lift ``glift``."""
    c = fam.c + lift * fam.period
    s = glift * graph.vperiod
    A, B = fam.a, fam.b
    found = []
    if B == 0:
        u = c / A
        found.append((u, graph.value(u) + s))
    else:
        vs = [k[1] for k in graph.knots]
        u0 = graph.knots[0][0]
        # on period k the value A*u + B*v sweeps a bounded window; scan a margin around it
        lo_l = [A * (u0 + j) + B * (v + s) for j in (0, graph.uperiod) for v in vs]
        span = max(abs(A) * graph.uperiod, Fraction(1))
        kc = (c - min(lo_l)) / (A * graph.uperiod) if A else Fraction(0)
        k0 = floor(kc) - ceil((max(lo_l) - min(lo_l)) / span) - 2
        k1 = ceil(kc) + ceil((max(lo_l) - min(lo_l)) / span) + 2
        for k in range(min(k0, k1), max(k0, k1) + 1):
            for _, a, b, al, be in _graph_piece_lines(graph, k):
                den = A + B * al
                if den == 0:
                    continue
                u = (c - B * (be + s)) / den
                if a <= u < b:
                    found.append((u, al * u + be + s))
    found = sorted(set(found))
    if len(found) != 1:
        raise GenericityError(f"expected one intersection point, found {len(found)}")
    return found[0]


def _curve_path(curve: BoundaryCurve, g_from: Generator, g_to: Generator, forward: bool) -> list[Point] | None:
    """Vertices of the curve from g_from to g_to (inclusive), or None."""
    comp = curve.components[g_from.comp]
    vs = comp.vertices
    m = len(vs)
    nseg = m if comp.closed else m - 1
    p0, p1 = g_from.position, g_to.position
    if p0 == p1:
        return None
    pts = [g_from.point]
    if not comp.closed:
        if (p1 > p0) != forward:
            return None
        if forward:
            pts += [vs[i] for i in range(g_from.seg + 1, g_to.seg + 1)]
        else:
            pts += [vs[i] for i in range(g_from.seg, g_to.seg, -1)]
    else:
        if forward:
            i = (g_from.seg + 1) % nseg
            s = g_from.seg
            while s != g_to.seg or (p1 < p0 and s == g_from.seg and len(pts) == 1):
                pts.append(vs[i])
                s = i
                i = (i + 1) % nseg
        else:
            s = g_from.seg
            i = s
            while s != g_to.seg or (p1 > p0 and s == g_from.seg and len(pts) == 1):
                pts.append(vs[i])
                s = (s - 1) % nseg
                i = s
    pts.append(g_to.point)
    return pts


def _convex(poly: list[Point], idx: int, o: int) -> bool:
    m = len(poly)
    return orient(poly[idx - 1], poly[idx], poly[(idx + 1) % m]) == o


def _clean(pts: list[Point]) -> list[Point]:
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    return out


def _candidate(curve, side_a, side_b, g_minus, g_plus, forward, tag, koszul) -> Triangle | None:
    back = _curve_path(curve, g_plus, g_minus, forward)
    if back is None:
        return None
    a = _clean(side_a)
    b = _clean(side_b)
    poly = a[:-1] + b[:-1] + back[:-1]
    poly = _clean(poly)
    if len(poly) < 3 or not is_simple_polygon(poly):
        return None
    area = signed_area(poly)
    o = sgn(area)
    i_theta = len(a) - 1
    i_plus = len(a) + len(b) - 2
    if not (_convex(poly, 0, o) and _convex(poly, i_theta, o) and _convex(poly, i_plus, o)):
        return None
    return Triangle(
        g_minus.point, a[-1], g_plus.point, tuple(poly), (tuple(a), tuple(b), tuple(back)),
        o * koszul, o, abs(area), tag,
    )


@dataclass(frozen=True)
class CornerLattice:
    """Points where the slanted line meets a wall: (w + P k, w + c + P (k + j)).

    ``wall`` is the wall offset w, ``c`` the slanted-line offset (v = u + c)
    and ``period`` the period P = 2n of both families.
    """

    wall: Fraction
    c: Fraction
    period: Fraction

    def nearest(self, pt: Point) -> Point:
        k = round((pt[0] - self.wall) / self.period)
        u = self.wall + k * self.period
        j = round((pt[1] - u - self.c) / self.period)
        return (u, u + self.c + j * self.period)

    def blocks(self, side: list[Point], theta: Point, on_graph: bool) -> str:
        """Why a side is inadmissible, or "" when it is admissible.

        Sides along the perturbed curve may only turn at the knot next to
        ϑ.  Straight sides must stay in the lower-left wedge at the corner
        and may not run past another corner.
        """
        cu, cv = self.nearest(theta)
        a, b = side[0], side[-1]
        if on_graph:
            for x in side[1:-1]:
                if max(abs(x[0] - cu), abs(x[1] - cv)) >= Fraction(1, 2):
                    return "side runs along a full ramp of the perturbed curve"
            return ""
        far = b if a == theta else a
        if a[0] == b[0]:
            if far[1] > cv:
                return "wall side leaves the ramp through the corner"
            lo, hi = sorted((a[1], b[1]))
            j0 = ceil((lo - cu - self.c) / self.period)
            for j in range(j0, j0 + 2 + int((hi - lo) / self.period)):
                v = cu + self.c + j * self.period
                if lo < v < hi and v != cv:
                    return "wall side passes another corner"
            return ""
        if far[0] > cu:
            return "slanted side leaves the flat part through the corner"
        lo, hi = sorted((a[0], b[0]))
        k0 = ceil((lo - self.wall) / self.period)
        for k in range(k0, k0 + 2 + int((hi - lo) / self.period)):
            u = self.wall + k * self.period
            if lo < u < hi and u != cu:
                return "slanted side crosses another wall"
        return ""


def corner_clearance(config: TriangleConfig) -> Fraction | None:
    """Sup-norm distance from the curve to the nearest limit corner."""
    _, y1, walls = config.targets()
    lat = CornerLattice(walls.c, y1.c, walls.period)
    per = lat.period
    best = None
    for a, b in config.curve.segments():
        lo_u, hi_u = min(a[0], b[0]) - 1, max(a[0], b[0]) + 1
        lo_v, hi_v = min(a[1], b[1]) - 1, max(a[1], b[1]) + 1
        for k in range(floor((lo_u - lat.wall) / per), ceil((hi_u - lat.wall) / per) + 1):
            u = lat.wall + k * per
            for j in range(floor((lo_v - u - lat.c) / per), ceil((hi_v - u - lat.c) / per) + 1):
                d = linf_distance_to_segment((u, u + lat.c + j * per), a, b)
                best = d if best is None or d < best else best
    return best


def _side(target, lift: int, p_from: Point, p_to: Point) -> list[Point]:
    if isinstance(target, PeriodicGraph):
        return target.polyline(p_from[0], p_to[0], lift)
    return [p_from, p_to]


def enumerate_triangles(
    curve: BoundaryCurve,
    line_a,
    line_b,
    a_minus: Generator,
    a_plus: Generator,
    tag: Tag,
    ambient: int = 1,
    corners: "CornerLattice | None" = None,
) -> TriangleSet:
    """Inequivalent triangles a- → ϑ → a+ → a-; the minimal-area one is kept.

    ``line_a``/``line_b`` are the periodic targets through a- and a+ (one a
    LineFamily, the other the perturbed PeriodicGraph).  ``ambient`` = -1
    reverses the ambient orientation.  With ``corners`` the line sides may
    not run past a limit corner other than the one at ϑ.
    """
    ts = TriangleSet([], a_minus.gid, a_plus.gid)
    if a_minus.comp != a_plus.comp:
        ts.diagnostic = "corners lie on different curve components"
        return ts
    if isinstance(line_a, PeriodicGraph):
        theta = _meet(line_b, a_plus.lift, line_a, a_minus.lift)
    else:
        theta = _meet(line_a, a_minus.lift, line_b, a_plus.lift)
    koszul = -1 if (tag is Tag.W1 and a_plus.cls == 0) else 1
    side_a = _side(line_a, a_minus.lift, a_minus.point, theta)
    side_b = _side(line_b, a_plus.lift, theta, a_plus.point)
    if corners is not None:
        for side, tgt in ((side_a, line_a), (side_b, line_b)):
            why = corners.blocks(side, theta, isinstance(tgt, PeriodicGraph))
            if why:
                ts.diagnostic = why
                return ts
    cands = []
    for forward in (True, False):
        tri = _candidate(curve, side_a, side_b, a_minus, a_plus, forward, tag, koszul * ambient)
        if tri is not None:
            cands.append(tri)
    if not cands:
        ts.diagnostic = "no embedded contour with convex corners"
        return ts
    cands.sort(key=lambda t: t.area)
    if len(cands) > 1 and cands[0].area == cands[1].area:
        raise GenericityError("two candidate triangles enclose equal area")
    ts.triangles = [cands[0]]
    return ts


# ---------------------------------------------------------------------------
# matrices


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    if not a or not b:
        rows = len(a)
        cols = len(b[0]) if b else 0
        return [[0] * cols for _ in range(rows)]
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _roles(config: TriangleConfig, tag: Tag):
    graph, y1, walls = config.targets()
    if tag is Tag.W1:
        return y1, graph, "Y1", "Y"
    return graph, walls, "Y", "Y0"


def triangle_table(config: TriangleConfig, tag: Tag, gens=None) -> dict[tuple[str, str], TriangleSet]:
    gens = gens or generators(config)
    la, lb, src, dst = _roles(config, tag)
    _, y1, walls = config.targets()
    corners = CornerLattice(walls.c, y1.c, walls.period)
    table = {}
    for s in gens[src]:
        for t in gens[dst]:
            table[(s.gid, t.gid)] = enumerate_triangles(config.curve, la, lb, s, t, tag, corners=corners)
    return table


Grade = tuple[tuple[str, int], int]


def _angle(d: Point) -> float:
    return atan2(float(d[1]), float(d[0]))


def _turn(d0: Point, d1: Point) -> float:
    a = _angle(d1) - _angle(d0)
    while a <= -pi:
        a += 2 * pi
    while a > pi:
        a -= 2 * pi
    return a


def _tangent(curve: BoundaryCurve, g: Generator) -> Point:
    a, b = curve.components[g.comp].segments()[g.seg]
    return (b[0] - a[0], b[1] - a[1])


def _rotation(curve: BoundaryCurve, g_from: Generator, g_to: Generator) -> float:
    """Total turning of the curve tangent from g_from forward to g_to."""
    comp = curve.components[g_from.comp]
    segs = comp.segments()
    i, j = g_from.seg, g_to.seg
    if not comp.closed and (j, g_to.t) < (i, g_from.t):
        return -_rotation(curve, g_to, g_from)
    total = 0.0
    k = i
    while k != j:
        nxt = (k + 1) % len(segs)
        total += _turn(_sub(segs[k]), _sub(segs[nxt]))
        k = nxt
    return total


def _sub(seg) -> Point:
    return (seg[1][0] - seg[0][0], seg[1][1] - seg[0][1])


def _line_angle(d: Point, line_dir: Point) -> float:
    """Angle from the line to the tangent, reduced to (0, pi)."""
    a = _angle(d) - _angle(line_dir)
    while a <= 0:
        a += pi
    while a > pi:
        a -= pi
    return a


def _maslov_degrees(curve: BoundaryCurve, gens: list[Generator], line_dir: Point) -> dict[str, int]:
    """Relative Maslov degree of crossings with a straight line, per component.

    The first crossing on each component has degree 0.  A convex bigon
    between two crossings changes the degree by one.
    """
    out: dict[str, int] = {}
    base: dict[int, Generator] = {}
    for g in gens:
        b = base.setdefault(g.comp, g)
        if b is g:
            out[g.gid] = 0
            continue
        ab = _line_angle(_tangent(curve, b), line_dir)
        ag = _line_angle(_tangent(curve, g), line_dir)
        k = (ab + _rotation(curve, b, g) - ag) / pi
        out[g.gid] = round(k)
    return out


def limit_grading(config: TriangleConfig, gens=None) -> dict[str, Grade]:
    """Degrees induced from the limit lines.

    Crossings with the slanted line and with the walls get planar Maslov
    degrees; a crossing with the perturbed curve inherits the degree of its
    limit partner.  Degrees are keyed by (line, component): two generators
    with different keys have no relative index and are never filtered.
    """
    gens = gens or generators(config)
    _, y1, walls = config.targets()
    out: dict[str, Grade] = {}
    for name, fam in (("Y1", y1), ("Y0", walls)):
        degs = _maslov_degrees(config.curve, gens[name], fam.direction)
        for g in gens[name]:
            out[g.gid] = ((name, g.comp), degs[g.gid])
    partner = _partner(gens)
    for g in gens["Y"]:
        if g.gid not in partner:
            raise GradingError(f"{g.gid} has no limit partner; eps is too large for this curve")
        out[g.gid] = out[partner[g.gid]]
    return out


def w_matrix(tag: Tag, config: TriangleConfig, grading: dict[str, Grade] | None = None, gens=None, table=None) -> list[list[int]]:
    """Rows: target generators, columns: source generators.

    With a grading, a pair whose degrees share a key contributes only when
    the degrees agree (relative index 0).
    """
    gens = gens or generators(config)
    _, _, src, dst = _roles(config, tag)
    table = table or triangle_table(config, tag, gens)
    mat = []
    for t in gens[dst]:
        row = []
        for s in gens[src]:
            if grading is not None:
                if s.gid not in grading or t.gid not in grading:
                    raise GradingError(f"missing degree for {s.gid} or {t.gid}")
                (ks, ds), (kt, dt) = grading[s.gid], grading[t.gid]
                if ks == kt and ds != dt:
                    row.append(0)
                    continue
            row.append(table[(s.gid, t.gid)].total)
        mat.append(row)
    return mat


@dataclass
class CancellationReport:
    pairs: list[tuple[Triangle, Triangle]] = field(default_factory=list)
    unmatched: list[Triangle] = field(default_factory=list)
    product: list[list[int]] = field(default_factory=list)
    w1: list[list[int]] = field(default_factory=list)
    w0: list[list[int]] = field(default_factory=list)
    diagonal_ok: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def product_zero(self) -> bool:
        return all(x == 0 for row in self.product for x in row)

    @property
    def ok(self) -> bool:
        return not self.unmatched and self.product_zero and self.diagonal_ok


def _partner(gens: dict[str, list[Generator]]) -> dict[str, str]:
    """Match Y generators to the limit-line generators they converge to."""
    out = {}
    for cls, pool_name in ((1, "Y1"), (0, "Y0")):
        pool = list(gens[pool_name])
        for y in gens["Y"]:
            if y.cls != cls:
                continue
            best, bi = None, None
            for i, g in enumerate(pool):
                if g.comp != y.comp or g.sign != y.sign:
                    continue
                d = abs(g.position - y.position)
                if best is None or d < best:
                    best, bi = d, i
            if bi is not None:
                g = pool.pop(bi)
                out[y.gid] = g.gid
                out[g.gid] = y.gid
    return out


def w1_w0_cancellation(config: TriangleConfig) -> CancellationReport:
    """Sign-reversing bijection Ξ_W1(a1, a0(ε)) ↔ Ξ_W0(a1(ε), a0) and w0·w1 = 0.

    Both certificates are computed independently: the bijection pairs the
    triangles generator pair by generator pair, the product uses the graded
    integer matrices.
    """
    gens = generators(config)
    rep = CancellationReport()
    t1 = triangle_table(config, Tag.W1, gens)
    t0 = triangle_table(config, Tag.W0, gens)
    partner = _partner(gens)
    lonely = [g.gid for pool in gens.values() for g in pool if g.gid not in partner]
    if lonely:
        raise GenericityError(f"no limit partner for {', '.join(lonely)}; eps is too large for this curve")
    grading = limit_grading(config, gens)
    for a1 in gens["Y1"]:
        for a0 in gens["Y0"]:
            left = t1[(a1.gid, partner[a0.gid])].triangles
            right = t0[(partner[a1.gid], a0.gid)].triangles
            if len(left) == len(right) == 1 and left[0].sign == -right[0].sign:
                rep.pairs.append((left[0], right[0]))
            else:
                rep.unmatched += left + right
    rep.w1 = w_matrix(Tag.W1, config, grading, gens, t1)
    rep.w0 = w_matrix(Tag.W0, config, grading, gens, t0)
    if gens["Y"]:
        rep.product = matmul(rep.w0, rep.w1)
    else:
        rep.product = [[0] * len(gens["Y1"]) for _ in gens["Y0"]]
    for a in gens["Y1"]:
        if t1[(a.gid, partner[a.gid])].total != 1:
            rep.diagonal_ok = False
            rep.notes.append(f"<{partner[a.gid]}, w1({a.gid})> != 1")
    for a in gens["Y0"]:
        if t0[(partner[a.gid], a.gid)].total != 1:
            rep.diagonal_ok = False
            rep.notes.append(f"<{a.gid}, w0({partner[a.gid]})> != 1")
    return rep


def connecting_map(flow_matrix: Sequence[Sequence[int]], cycle: Sequence[int], d0: Sequence[Sequence[int]] | None = None) -> list[int]:
    """Δ(x) = flow_matrix · x, rows indexed by the targets a^(1).

    ``d0`` is the differential of the source complex; when given, non-cycles
    are rejected.
    """
    cycle = [int(x) for x in cycle]
    if d0 is not None and any(sum(r[j] * cycle[j] for j in range(len(cycle))) for r in d0):
        raise PreconditionError("input is not a cycle")
    if flow_matrix and len(flow_matrix[0]) != len(cycle):
        raise PreconditionError("flow matrix and cycle have mismatched sizes")
    return [sum(r[j] * cycle[j] for j in range(len(cycle))) for r in flow_matrix]


def random_triangle_config(seed, n: int | None = None, m: int = 0, p: int | None = None, eps=Fraction(1, 10), eta=0, max_tries: int = 200, **kw) -> TriangleConfig:
    """Seeded generic configuration whose crossings all have limit partners."""
    import random

    from .monopole_count import partition_check, random_partition_curve

    rng = random.Random(seed)
    n = n if n is not None else rng.randint(1, 3)
    p = p if p is not None else rng.randrange(n)
    eps = as_rat(eps)
    for _ in range(max_tries):
        curve = random_partition_curve(rng.randrange(1 << 30), n, m, p, eps, eta, **kw)
        if partition_check(curve, n, m, p, eps, eta).unmatched:
            continue
        cfg = TriangleConfig(curve, n, m, p, eps, as_rat(eta))
        clear = corner_clearance(cfg)
        if clear is not None and clear <= 2 * eps:
            continue
        return cfg
    raise GenericityError("no generic configuration found")
