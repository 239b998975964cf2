"""JSON problem files.

Every file is an object ``{"format_version": "1", "kind": ..., "body": ...}``
with kind one of ``surgery``, ``curve``, ``complex``, ``triangle-config``.
Rationals are written as strings "num/den" (integers as plain strings or
numbers), never as floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import FormatError
from .exact_arith import format_rat
from .floer_harness import GradedComplex, TriangleData
from .invariants import AlexanderData, SurgeryProblem
from .monopole_count import BoundaryCurve, Component, Endpoint
from .triangle_enum import TriangleConfig

FORMAT_VERSION = "1"
KINDS = ("surgery", "curve", "complex", "triangle-config")

__all__ = [
    "FORMAT_VERSION",
    "KINDS",
    "CurveFile",
    "ComplexFile",
    "dumps",
    "loads",
    "load_path",
    "dump_path",
]


@dataclass(frozen=True)
class CurveFile:
    """A boundary curve with the parameters of the checks run on it."""

    curve: BoundaryCurve
    m: int = 0
    p: int = 0
    eps: Fraction = Fraction(1, 10)
    eta: Fraction = Fraction(0)
    slope: tuple[int, int] | None = None  # (p, q) of the surgery identity


@dataclass(frozen=True)
class ComplexFile:
    """The three complexes and maps of the triangle; maps are raw matrices."""

    c1: GradedComplex
    cy: GradedComplex
    c0_list: tuple[GradedComplex, ...]
    w1: tuple[tuple[int, ...], ...]
    w0: tuple[tuple[int, ...], ...]
    delta: tuple[tuple[int, ...], ...]

    @classmethod
    def from_data(cls, d: TriangleData) -> "ComplexFile":
        return cls(d.c1, d.cy, tuple(d.c0_list), d.w1.matrix, d.w0.matrix, d.delta.matrix)


# ---------------------------------------------------------------------------
# encoding


def _rat(x) -> str:
    return format_rat(x)


def _curve_body(c: BoundaryCurve) -> dict:
    comps = []
    for comp in c.components:
        d: dict[str, Any] = {
            "closed": comp.closed,
            "vertices": [[_rat(u), _rat(v)] for u, v in comp.vertices],
        }
        if not comp.closed:
            d["start"] = {"sign": comp.start.sign, "bad": comp.start.bad}
            d["end"] = {"sign": comp.end.sign, "bad": comp.end.bad}
        comps.append(d)
    return {"n": c.n, "u_sigma": _rat(c.u_sigma), "components": comps}


def _complex_body(cx: GradedComplex) -> dict:
    return {
        "modulus": cx.modulus,
        "generators": [[i, d] for i, d in zip(cx.ids, cx.degrees)],
        "differential": [list(r) for r in cx.d],
    }


def _encode(obj) -> tuple[str, dict]:
    if isinstance(obj, SurgeryProblem):
        return "surgery", {
            "n": obj.n,
            "p": obj.p,
            "q": obj.q,
            "h1_order": obj.h1_order,
            "lambda_bar_Y": _rat(obj.lambda_bar_Y),
            "alexander": {"torsion_order": obj.alexander.torsion_order, "coeffs": list(obj.alexander.coeffs)},
        }
    if isinstance(obj, BoundaryCurve):
        obj = CurveFile(obj)
    if isinstance(obj, CurveFile):
        body = _curve_body(obj.curve)
        body.update({"m": obj.m, "p": obj.p, "eps": _rat(obj.eps), "eta": _rat(obj.eta)})
        if obj.slope is not None:
            body["surgery"] = {"p": obj.slope[0], "q": obj.slope[1]}
        return "curve", body
    if isinstance(obj, TriangleData):
        obj = ComplexFile.from_data(obj)
    if isinstance(obj, ComplexFile):
        return "complex", {
            "c1": _complex_body(obj.c1),
            "cy": _complex_body(obj.cy),
            "c0": [_complex_body(c) for c in obj.c0_list],
            "w1": [list(r) for r in obj.w1],
            "w0": [list(r) for r in obj.w0],
            "delta": [list(r) for r in obj.delta],
        }
    if isinstance(obj, TriangleConfig):
        body = _curve_body(obj.curve)
        body.update({"m": obj.m, "p": obj.p, "eps": _rat(obj.eps), "eta": _rat(obj.eta)})
        return "triangle-config", body
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    """Deterministic text: sorted keys, two-space indent, trailing newline."""
    kind, body = _encode(obj)
    doc = {"format_version": FORMAT_VERSION, "kind": kind, "body": body}
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def dump_path(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


# ---------------------------------------------------------------------------
# decoding


class _Reader:
    """Typed access to a decoded tree that reports the JSON path on failure."""

    def __init__(self, text: str):
        self.text = text

    def fail(self, path: str, msg: str):
        raise FormatError(f"{path}: {msg}", path=path)

    def obj(self, node, path: str) -> dict:
        if not isinstance(node, dict):
            self.fail(path, "expected an object")
        return node

    def get(self, node: dict, key: str, path: str, default=...):
        if key not in node:
            if default is ...:
                self.fail(path, f"missing key {key!r}")
            return default
        return node[key]

    def int_(self, node, path: str) -> int:
        if isinstance(node, bool) or not isinstance(node, (int, str)):
            self.fail(path, "expected an integer")
        try:
            return int(node)
        except ValueError:
            self.fail(path, f"expected an integer, got {node!r}")

    def rat(self, node, path: str) -> Fraction:
        if isinstance(node, bool) or isinstance(node, float) or not isinstance(node, (int, str)):
            self.fail(path, 'expected a rational written as "num/den"')
        try:
            return Fraction(node)
        except (ValueError, ZeroDivisionError):
            self.fail(path, f"bad rational {node!r}")

    def list_(self, node, path: str) -> list:
        if not isinstance(node, list):
            self.fail(path, "expected a list")
        return node

    def matrix(self, node, path: str) -> tuple[tuple[int, ...], ...]:
        rows = self.list_(node, path)
        return tuple(tuple(self.int_(x, f"{path}[{i}][{j}]") for j, x in enumerate(self.list_(r, f"{path}[{i}]"))) for i, r in enumerate(rows))


def _read_curve(r: _Reader, body: dict, path: str) -> BoundaryCurve:
    n = r.int_(r.get(body, "n", path), f"{path}.n")
    us = r.rat(r.get(body, "u_sigma", path), f"{path}.u_sigma")
    comps = []
    for i, c in enumerate(r.list_(r.get(body, "components", path, []), f"{path}.components")):
        cp = f"{path}.components[{i}]"
        c = r.obj(c, cp)
        closed = r.get(c, "closed", cp, False)
        if not isinstance(closed, bool):
            r.fail(f"{cp}.closed", "expected true or false")
        verts = []
        for j, v in enumerate(r.list_(r.get(c, "vertices", cp), f"{cp}.vertices")):
            vp = f"{cp}.vertices[{j}]"
            v = r.list_(v, vp)
            if len(v) != 2:
                r.fail(vp, "a vertex is a pair [u, v]")
            verts.append((r.rat(v[0], vp + "[0]"), r.rat(v[1], vp + "[1]")))
        start = end = None
        if not closed:
            eps = []
            for key in ("start", "end"):
                e = r.obj(r.get(c, key, cp), f"{cp}.{key}")
                sign = r.int_(r.get(e, "sign", f"{cp}.{key}"), f"{cp}.{key}.sign")
                if sign not in (1, -1):
                    r.fail(f"{cp}.{key}.sign", "sign must be 1 or -1")
                bad = r.get(e, "bad", f"{cp}.{key}", False)
                eps.append(Endpoint(sign, bool(bad)))
            start, end = eps
        try:
            comps.append(Component(tuple(verts), closed, start, end))
        except ValueError as exc:
            r.fail(cp, str(exc))
    return BoundaryCurve(tuple(comps), us, n)


def _read_complex(r: _Reader, body, path: str) -> GradedComplex:
    body = r.obj(body, path)
    mod = r.int_(r.get(body, "modulus", path, 0), f"{path}.modulus")
    gens = []
    for i, g in enumerate(r.list_(r.get(body, "generators", path), f"{path}.generators")):
        gp = f"{path}.generators[{i}]"
        g = r.list_(g, gp)
        if len(g) != 2 or not isinstance(g[0], str):
            r.fail(gp, 'a generator is ["id", degree]')
        gens.append((g[0], r.int_(g[1], gp + "[1]")))
    d = r.matrix(r.get(body, "differential", path, [[0] * len(gens) for _ in gens]), f"{path}.differential")
    return GradedComplex(tuple(g for g, _ in gens), tuple(x for _, x in gens), d, mod)


def loads(text: str):
    """Parse a problem file; FormatError carries line/column for syntax errors."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}", exc.lineno, exc.colno) from None
    r = _Reader(text)
    doc = r.obj(doc, "$")
    ver = r.get(doc, "format_version", "$")
    if str(ver) != FORMAT_VERSION:
        r.fail("$.format_version", f"unsupported version {ver!r} (expected {FORMAT_VERSION!r})")
    kind = r.get(doc, "kind", "$")
    if kind not in KINDS:
        r.fail("$.kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    body = r.obj(r.get(doc, "body", "$"), "$.body")
    bp = "$.body"
    if kind == "surgery":
        alex = r.obj(r.get(body, "alexander", bp, {}), bp + ".alexander")
        coeffs = tuple(r.int_(a, f"{bp}.alexander.coeffs[{i}]") for i, a in enumerate(r.list_(alex.get("coeffs", []), bp + ".alexander.coeffs")))
        return SurgeryProblem(
            r.int_(r.get(body, "n", bp, 1), bp + ".n"),
            r.int_(r.get(body, "p", bp), bp + ".p"),
            r.int_(r.get(body, "q", bp), bp + ".q"),
            r.int_(r.get(body, "h1_order", bp, 1), bp + ".h1_order"),
            r.rat(r.get(body, "lambda_bar_Y", bp, "0"), bp + ".lambda_bar_Y"),
            AlexanderData(r.int_(alex.get("torsion_order", 1), bp + ".alexander.torsion_order"), coeffs),
        )
    if kind in ("curve", "triangle-config"):
        curve = _read_curve(r, body, bp)
        m = r.int_(r.get(body, "m", bp, 0), bp + ".m")
        p = r.int_(r.get(body, "p", bp, 0), bp + ".p")
        eps = r.rat(r.get(body, "eps", bp, "1/10"), bp + ".eps")
        eta = r.rat(r.get(body, "eta", bp, "0"), bp + ".eta")
        if kind == "triangle-config":
            return TriangleConfig(curve, curve.n, m, p, eps, eta)
        slope = None
        if "surgery" in body:
            s = r.obj(body["surgery"], bp + ".surgery")
            slope = (r.int_(r.get(s, "p", bp + ".surgery"), bp + ".surgery.p"), r.int_(r.get(s, "q", bp + ".surgery"), bp + ".surgery.q"))
        return CurveFile(curve, m, p, eps, eta, slope)
    # complex
    c0 = r.get(body, "c0", bp)
    c0_list = tuple(_read_complex(r, c, f"{bp}.c0[{i}]") for i, c in enumerate(r.list_(c0, bp + ".c0")))
    return ComplexFile(
        _read_complex(r, r.get(body, "c1", bp), bp + ".c1"),
        _read_complex(r, r.get(body, "cy", bp), bp + ".cy"),
        c0_list,
        r.matrix(r.get(body, "w1", bp), bp + ".w1"),
        r.matrix(r.get(body, "w0", bp), bp + ".w0"),
        r.matrix(r.get(body, "delta", bp), bp + ".delta"),
    )


def load_path(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
