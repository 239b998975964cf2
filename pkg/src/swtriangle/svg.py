"""Deterministic SVG pictures of a boundary curve against the limit lines.

One holonomy unit is 40 SVG user units, the user-space origin is the corner
(0, 0) of the fundamental domain and v grows upwards.  Output depends only on
the inputs (exact coordinates are rounded to 3 decimals at the very end).
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from xml.sax.saxutils import escape

from .errors import SwTriangleError
from .monopole_count import BoundaryCurve, partition_targets
from .torus_model import theta_points
from .triangle_enum import Tag, TriangleConfig, generators, triangle_table

SCALE = 40
COLORS = {
    "axis": "#a0aec0",
    "y1": "#2f855a",
    "walls": "#805ad5",
    "graph": "#dd6b20",
    "circle": "#718096",
    "curve": "#1a202c",
    "theta": "#d69e2e",
    "vartheta": "#e53e3e",
    "plus": "#3182ce",
    "minus": "#e53e3e",
}

__all__ = ["SCALE", "render_svg"]


class _Canvas:
    def __init__(self, u0, u1, v0, v1):
        self.u0, self.u1, self.v0, self.v1 = u0, u1, v0, v1
        self.items: list[str] = []

    def xy(self, pt) -> str:
        # user space: origin at the holonomy origin, v flipped to point up
        x = Fraction(pt[0]) * SCALE
        y = -Fraction(pt[1]) * SCALE
        return f"{float(x):.3f},{float(y) + 0.0:.3f}"

    def polyline(self, pts, color: str, width: float = 1.5, dash: str | None = None, cls: str = ""):
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.items.append(
            f'<polyline class="{cls}" points="{" ".join(self.xy(p) for p in pts)}" fill="none" '
            f'stroke="{color}" stroke-width="{width}"{extra}/>'
        )

    def polygon(self, pts, fill: str, cls: str = "", title: str = ""):
        t = f"<title>{escape(title)}</title>" if title else ""
        self.items.append(
            f'<polygon class="{cls}" points="{" ".join(self.xy(p) for p in pts)}" fill="{fill}" '
            f'fill-opacity="0.35" stroke="{fill}" stroke-width="1">{t}</polygon>'
        )

    def dot(self, pt, color: str, r: float = 3, cls: str = "", title: str = ""):
        x, y = self.xy(pt).split(",")
        t = f"<title>{escape(title)}</title>" if title else ""
        self.items.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="{r}" fill="{color}">{t}</circle>')


def _viewport(curve: BoundaryCurve, n: int):
    """The fundamental domain [0, 2] x [0, 2n] grown in steps of 2 to hold the curve."""
    u0, u1, v0, v1 = 0, 2, 0, 2 * n
    if curve.components:
        a, b, c, d = curve.bbox()
        half = Fraction(1, 2)
        u0, u1 = min(u0, 2 * floor((a - half) / 2)), max(u1, 2 * ceil((b + half) / 2))
        v0, v1 = min(v0, 2 * floor((c - half) / 2)), max(v1, 2 * ceil((d + half) / 2))
    return Fraction(u0), Fraction(u1), Fraction(v0), Fraction(v1)


def render_svg(
    curve: BoundaryCurve,
    n: int,
    m: int = 0,
    p: int = 0,
    eps=Fraction(1, 10),
    eta=0,
    slope: tuple[int, int] | None = None,
    triangles: bool = True,
) -> str:
    """Picture of ``curve`` with Y1, the walls, the perturbed curve and triangles.

    θ points are drawn when ``slope`` = (p, q) is given.  Triangles are
    drawn when the configuration admits enumeration; if it does not, the
    picture is still produced and carries a comment saying why.
    """
    eps, eta = Fraction(eps), Fraction(eta)
    u0, u1, v0, v1 = _viewport(curve, n)
    cv = _Canvas(u0, u1, v0, v1)
    cv.polyline([(u0, 0), (u1, 0)], COLORS["axis"], width=1, cls="axis")
    cv.polyline([(0, v0), (0, v1)], COLORS["axis"], width=1, cls="axis")
    graph, y1, walls = partition_targets(n, m, p, eps, eta)
    period = Fraction(2 * n)

    # slanted lines v = u + c + P k
    c = y1.c
    k0 = floor((v0 - u1 - c) / period)
    k1 = ceil((v1 - u0 - c) / period)
    for k in range(k0, k1 + 1):
        off = c + k * period
        a, b = max(u0, v0 - off), min(u1, v1 - off)
        if a < b:
            cv.polyline([(a, a + off), (b, b + off)], COLORS["y1"], cls="y1")
    # walls u = w + P k
    for k in range(floor((u0 - walls.c) / period), ceil((u1 - walls.c) / period) + 1):
        u = walls.c + k * period
        if u0 <= u <= u1:
            cv.polyline([(u, v0), (u, v1)], COLORS["walls"], cls="wall")
    # vertical circle through the arc endpoints
    for k in range(floor((u0 - curve.u_sigma) / 2), ceil((u1 - curve.u_sigma) / 2) + 1):
        u = curve.u_sigma + 2 * k
        if u0 <= u <= u1:
            cv.polyline([(u, v0), (u, v1)], COLORS["circle"], width=1, dash="4 3", cls="circle")
    # perturbed curve, clipped to the viewport by the clip path
    lo = floor((v0 - max(k[1] for k in graph.knots)) / graph.vperiod)
    hi = ceil((v1 - min(k[1] for k in graph.knots)) / graph.vperiod) + 1
    for lift in range(lo, hi + 1):
        cv.polyline(graph.polyline(u0, u1, lift), COLORS["graph"], cls="graph")

    notes: list[str] = []
    if triangles and curve.components:
        config = TriangleConfig(curve, n, m, p, eps, eta)
        try:
            gens = generators(config)
            seen_tri = set()
            varthetas = set()
            for tag in (Tag.W1, Tag.W0):
                table = triangle_table(config, tag, gens)
                for key in sorted(table):
                    for tri in table[key].triangles:
                        if tri.contour in seen_tri:
                            continue
                        seen_tri.add(tri.contour)
                        varthetas.add(tri.vartheta)
                        color = COLORS["plus"] if tri.sign > 0 else COLORS["minus"]
                        cv.polygon(tri.contour, color, cls=f"triangle {tag.value} sign{tri.sign:+d}", title=f"{tag.value} {key[0]} -> {key[1]} sign {tri.sign:+d}")
            for pt in sorted(varthetas):
                cv.dot(pt, COLORS["vartheta"], r=3.5, cls="vartheta", title="ϑ")
        except SwTriangleError as exc:
            notes.append(f"triangles omitted: {exc}")

    for comp in curve.components:
        pts = list(comp.vertices) + ([comp.vertices[0]] if comp.closed else [])
        cv.polyline(pts, COLORS["curve"], width=2, cls="curve")
        for pt, ep in comp.endpoints():
            cv.dot(pt, COLORS["curve"], r=2.5, cls="endpoint", title=f"tag {ep.sign:+d}{' bad' if ep.bad else ''}")

    if slope is not None:
        th = theta_points(slope[0], slope[1], curve.u_sigma, n, eta)
        for i, lifts in enumerate(th.lifts, start=1):
            for pt in lifts:
                for k in range(floor((u0 - pt.u) / 2), ceil((u1 - pt.u) / 2) + 1):
                    for j in range(floor((v0 - pt.v) / period), ceil((v1 - pt.v) / period) + 1):
                        q = (pt.u + 2 * k, pt.v + j * period)
                        if u0 <= q[0] <= u1 and v0 <= q[1] <= v1:
                            cv.dot(q, COLORS["theta"], r=3, cls="theta", title=f"θ{i}")

    x0, y0 = int(u0 * SCALE), int(-v1 * SCALE)
    w, h = int((u1 - u0) * SCALE), int((v1 - v0) * SCALE)
    box = f'x="{x0}" y="{y0}" width="{w}" height="{h}"'
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="{x0} {y0} {w} {h}">',
        f"<!-- u in [{u0}, {u1}], v in [{v0}, {v1}], {SCALE} units per holonomy unit -->",
    ]
    head += [f"<!-- {escape(t)} -->" for t in notes]
    head += [
        f'<defs><clipPath id="view"><rect {box}/></clipPath></defs>',
        f'<rect {box} fill="#ffffff"/>',
        '<g clip-path="url(#view)">',
    ]
    return "\n".join(head + cv.items + ["</g>", "</svg>"]) + "\n"
