"""Regenerate the sample files and golden SVGs under src/swtriangle/data.

    python3 tools/make_fixtures.py

Seeds are fixed, so the output is reproducible; the goldens change only when
the renderer or the generators change.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from pathlib import Path

from swtriangle.errors import GenericityError
from swtriangle.floer_harness import GradedComplex
from swtriangle.invariants import unknot_problem
from swtriangle.monopole_count import BoundaryCurve, Endpoint, partition_check, random_partition_curve, surgery_count_identity
from swtriangle.serialization import ComplexFile, CurveFile, dump_path
from swtriangle.svg import render_svg
from swtriangle.triangle_enum import random_triangle_config

DATA = Path(__file__).resolve().parents[1] / "src" / "swtriangle" / "data"

# (file stem, n, p, seed, generator keywords)
FIGURES = [
    ("figure1_config", 4, 0, 16, {}),
    ("figure2_config", 4, 2, 3, {}),
    ("figure3_config", 1, 0, 1, {"bends": 1, "width": 1}),
]


def _flip_start(curve: BoundaryCurve) -> BoundaryCurve:
    comp = curve.components[0]
    bad = dataclasses.replace(comp, start=Endpoint(-comp.start.sign, comp.start.bad))
    return BoundaryCurve((bad,) + curve.components[1:], curve.u_sigma, curve.n)


def _slope_for(curve: BoundaryCurve, eta) -> tuple[int, int]:
    for p, q in [(3, 2), (2, 1), (3, 1), (5, 2), (4, 3), (5, 3)]:
        try:
            if surgery_count_identity(curve, p, q, curve.n, curve.u_sigma, eta).holds:
                return p, q
        except GenericityError:
            continue
    raise SystemExit("no generic slope for the sample curve")


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    for stem, n, p, seed, kw in FIGURES:
        cfg = random_triangle_config(seed, n=n, m=0, p=p, **kw)
        dump_path(cfg, DATA / f"{stem}.json")
        svg = render_svg(cfg.curve, cfg.n, cfg.m, cfg.p, cfg.eps, cfg.eta)
        (DATA / f"{stem}.svg").write_text(svg, encoding="utf-8")

    empty = BoundaryCurve.empty(Fraction(1, 7), 4)
    dump_path(CurveFile(empty, 0, 2, Fraction(1, 10), Fraction(1, 11), (3, 2)), DATA / "empty_curve.json")
    (DATA / "empty_curve.svg").write_text(render_svg(empty, 4, 0, 2, Fraction(1, 10), Fraction(1, 11), (3, 2)), encoding="utf-8")

    # the surgery count needs the shifted circle u = u_sigma + eta off the arc endpoints
    eps, eta = Fraction(1, 10), Fraction(1, 11)
    curve = random_partition_curve(4, 4, 0, 2, eps, eta)
    slope = _slope_for(curve, eta)
    sample = CurveFile(curve, 0, 2, eps, eta, slope)
    assert partition_check(curve, 4, 0, 2, eps, eta).holds
    dump_path(sample, DATA / "figure2_curve.json")
    (DATA / "figure2_curve.svg").write_text(render_svg(curve, 4, 0, 2, eps, eta, slope), encoding="utf-8")
    bad = dataclasses.replace(sample, curve=_flip_start(curve))
    assert not surgery_count_identity(bad.curve, *slope, bad.curve.n, bad.curve.u_sigma, eta).holds
    dump_path(bad, DATA / "corrupted_sign_curve.json")

    dump_path(unknot_problem(3, 1), DATA / "unknot_3_1.json")
    dump_path(unknot_problem(5, 3), DATA / "unknot_5_3.json")
    (DATA / "malformed.json").write_text('{\n  "format_version": "1",\n  "kind": "surgery",\n  "body": {"p": 5, "q": 3,}\n}\n', encoding="utf-8")

    # split: zero differentials, inclusion, projection, Δ = 0
    c1 = GradedComplex(("x",), (0,), ((0,),))
    c0 = GradedComplex(("y",), (0,), ((0,),))
    cy = GradedComplex(("x'", "y'"), (0, 0), ((0, 0), (0, 0)))
    dump_path(ComplexFile(c1, cy, (c0,), ((1,), (0,)), ((0, 1),), ((0,),)), DATA / "split_complex.json")

    # four generators in all: a1 in C_Y1, a0 in C_Y0, the cone on a mixed flow a0 -> a1
    c1 = GradedComplex(("a1",), (0,), ((0,),))
    c0 = GradedComplex(("a0",), (1,), ((0,),))
    cy = GradedComplex(("a1'", "a0'"), (0, 1), ((0, 1), (0, 0)))
    dump_path(ComplexFile(c1, cy, (c0,), ((1,), (0,)), ((0, 1),), ((1,),)), DATA / "snake_complex.json")

    # w1 ignores the differential of C_Y1
    c1 = GradedComplex(("a", "b"), (0, 1), ((0, 1), (0, 0)))
    cy = GradedComplex(("a'", "b'", "c'"), (0, 1, 0), ((0, 0, 0), (0, 0, 0), (0, 0, 0)))
    c0 = GradedComplex(("c",), (0,), ((0,),))
    dump_path(
        ComplexFile(c1, cy, (c0,), ((1, 0), (0, 1), (0, 0)), ((0, 0, 1),), ((0,), (0,))),
        DATA / "non_chain_map_complex.json",
    )


if __name__ == "__main__":
    main()
