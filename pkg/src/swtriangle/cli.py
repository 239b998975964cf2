"""Command line front end.

Exit codes: 0 every check passed, 1 an identity failed, 2 bad input or a
parse error, 3 the input is well formed but violates a precondition.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from math import gcd

from . import __version__
from .errors import FormatError, GenericityError, GradingError, IntegrityError, PreconditionError, SwTriangleError
from .exact_arith import dedekind_sum, format_rat, parse_rat, reciprocity_rhs
from .floer_harness import ChainMap, direct_sum, enumerate_spinc, exact_triangle_check, random_triangle_data
from .invariants import SurgeryProblem, casson_walker_report, random_surgery_problem
from .monopole_count import BoundaryCurve, partition_check, random_partition_curve, surgery_count_identity
from .serialization import ComplexFile, CurveFile, dumps, load_path
from .svg import render_svg
from .triangle_enum import Tag, TriangleConfig, generators, random_triangle_config, triangle_table, w1_w0_cancellation

EXIT_OK, EXIT_IDENTITY, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_IDENTITY", "EXIT_INPUT", "EXIT_PRECONDITION"]


class InputError(Exception):
    """Command line input that cannot be used (exit 2)."""


class Report:
    """Collects output lines; PASS/FAIL markers are colored on a terminal."""

    def __init__(self, color: bool):
        self.lines: list[str] = []
        self.color = color
        self.failed = False

    def __call__(self, line: str = "") -> None:
        self.lines.append(line)

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        word = "PASS" if ok else "FAIL"
        if self.color:
            word = ("\x1b[32m" if ok else "\x1b[31m") + word + "\x1b[0m"
        self.lines.append(f"{word}  {name}" + (f": {detail}" if detail else ""))
        self.failed |= not ok

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _use_color(stream) -> bool:
    if "NO_COLOR" in os.environ:
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _rat_arg(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError, FormatError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _load(path: str, *kinds):
    obj = load_path(path)
    names = {SurgeryProblem: "surgery", CurveFile: "curve", ComplexFile: "complex", TriangleConfig: "triangle-config"}
    if kinds and not isinstance(obj, kinds):
        want = " or ".join(names[k] for k in kinds)
        raise InputError(f"{path}: expected a {want} file, got {names.get(type(obj), type(obj).__name__)}")
    return obj


def _save(args, obj) -> None:
    if getattr(args, "save_input", None):
        with open(args.save_input, "w", encoding="utf-8") as fh:
            fh.write(dumps(obj))


def _r(x) -> str:
    return "undefined" if x is None else format_rat(x)


# ---------------------------------------------------------------------------
# subcommands


def cmd_dedekind(args, out: Report) -> None:
    p, q = args.p, args.q
    if gcd(p, q) != 1:
        raise InputError("p and q must be coprime")
    s = dedekind_sum(p, q)
    out(f"s({p},{q}) = {format_rat(s)}  (≈ {float(s):.6f})")
    if p >= 1 and q >= 1:
        t = dedekind_sum(q, p)
        rhs = reciprocity_rhs(p, q)
        out(f"s({q},{p}) = {format_rat(t)}  (≈ {float(t):.6f})")
        out.check("reciprocity", s + t == rhs, f"{format_rat(s + t)} = {format_rat(rhs)}")


def cmd_casson_walker(args, out: Report) -> None:
    if args.input:
        pr = _load(args.input, SurgeryProblem)
    elif args.p is not None:
        if args.q is None:
            raise InputError("give both p and q")
        pr = SurgeryProblem(args.n, args.p, args.q, args.h1, args.lambda_bar)
    elif args.seed is not None:
        pr = random_surgery_problem(args.seed)
        _save(args, pr)
    else:
        raise InputError("give p q, --input FILE or --seed N")
    rep = casson_walker_report(pr)
    out(f"surgery p/q = {pr.p}/{pr.q} on a knot of order n = {pr.n}, |H1(Y)| = {pr.h1_order}")
    out(f"λ̄(Y_p/q) = {format_rat(rep.lambda_bar)}")
    out(f"λ(Y_p/q) = {_r(rep.lambda_)}")
    out(f"s(p,q,n) = {format_rat(rep.s_pqn)}")
    out("terms:")
    out(f"  p·λ̄(Y)           = {format_rat(rep.base_term)}")
    out(f"  q·Σ a_j j²        = {format_rat(rep.alexander_term)}")
    out(f"  |H1(Y)|·s(p,q,n)  = {format_rat(rep.correction_term)}")
    out(f"  s(p,q)            = {format_rat(rep.dedekind)}")


def cmd_spinc(args, out: Report) -> None:
    base, n, p, q = args.base, args.n, args.p, args.q
    if args.input:
        pr = _load(args.input, SurgeryProblem)
        base, n, p, q = "Ypq", pr.n, pr.p, pr.q
    if base is None:
        raise InputError("give a base manifold (Y, Y1, Y0, Ypq) or --input FILE")
    fam = enumerate_spinc(base, n, p, q)
    card = "infinite (Z-family)" if fam.cardinality is None else str(fam.cardinality)
    out(f"base {fam.base}, n = {fam.n}, shape {fam.shape.value}, cardinality {card}")
    labels = fam.labels() if fam.cardinality is not None else fam.labels(-args.window, args.window + 1)
    for lab in labels:
        out(f"  {lab}")


def cmd_verify_partition(args, out: Report) -> None:
    if args.input:
        cf = _load(args.input, CurveFile)
    elif args.seed is not None:
        eps = args.eps if args.eps is not None else Fraction(1, 10)
        eta = args.eta if args.eta is not None else Fraction(0)
        cf = CurveFile(random_partition_curve(args.seed, 2, 0, 1, eps, eta), 0, 1, eps, eta)
        _save(args, cf)
    else:
        raise InputError("give --input FILE or --seed N")
    eps = args.eps if args.eps is not None else cf.eps
    eta = args.eta if args.eta is not None else cf.eta
    c = cf.curve
    out(f"curve: {len(c.components)} component(s) on CYL_V({c.n}), u_σ = {format_rat(c.u_sigma)}")
    rep = partition_check(c, c.n, cf.m, cf.p, eps, eta)
    y0 = sum(rep.count_Y0.values())
    out(f"#(γ∩Y) = {rep.count_Y}, #(γ∩Y1) = {rep.count_Y1}, #(γ∩Y0) = {y0}, matched {len(rep.matching)}, unmatched {len(rep.unmatched)}")
    out.check("partition identity", rep.holds, f"{rep.count_Y} = {rep.count_Y1} + {y0}")
    if cf.slope is not None:
        sp, sq = cf.slope
        ir = surgery_count_identity(c, sp, sq, c.n, c.u_sigma, eta)
        out(f"#(γ∩Y_p/q) = {ir.lhs}, #(γ∩h) = {ir.count_h}, #(γ∩v) = {ir.count_v}, ΣSF = {ir.sf_lifts} (staircase {ir.sf_staircase})")
        out.check("surgery count identity", ir.holds, f"{ir.lhs} = {sp}·{ir.count_h} + {sq}·{ir.count_v} + {ir.sf_lifts}")


def cmd_triangles(args, out: Report) -> None:
    if args.input:
        cfg = _load(args.input, TriangleConfig)
    elif args.seed is not None:
        cfg = random_triangle_config(args.seed, n=args.n, p=args.p_offset)
        _save(args, cfg)
    else:
        raise InputError("give --input FILE or --seed N")
    if args.eps is not None or args.eta is not None:
        cfg = TriangleConfig(cfg.curve, cfg.n, cfg.m, cfg.p, args.eps if args.eps is not None else cfg.eps, args.eta if args.eta is not None else cfg.eta)
    gens = generators(cfg)
    out(f"n = {cfg.n}, m = {cfg.m}, p = {cfg.p}, ε = {format_rat(cfg.eps)}, η = {format_rat(cfg.eta)}")
    out(f"generators: Y1 {len(gens['Y1'])}, Y {len(gens['Y'])}, Y0 {len(gens['Y0'])}")
    for tag in (Tag.W1, Tag.W0):
        table = triangle_table(cfg, tag, gens)
        for key in sorted(table):
            for tri in table[key].triangles:
                out(f"  {tag.value} {key[0]} -> {key[1]}: sign {tri.sign:+d}, area {format_rat(tri.area)}")
    rep = w1_w0_cancellation(cfg)
    out(f"w1 = {rep.w1}")
    out(f"w0 = {rep.w0}")
    out(f"w0·w1 = {rep.product}")
    out.check("triangle bijection", not rep.unmatched, f"{len(rep.pairs)} sign-reversing pairs, {len(rep.unmatched)} unmatched")
    out.check("w0·w1 = 0", rep.product_zero)
    out.check("diagonal entries", rep.diagonal_ok, "; ".join(rep.notes))


_SQUARES = {
    "w1": ("C_Y1", "C_Y", 0),
    "w0": ("C_Y", "C_Y0", 0),
    "delta": ("C_Y0", "C_Y1", -1),
}


def cmd_exactness(args, out: Report) -> None:
    if args.input:
        cx = _load(args.input, ComplexFile)
    elif args.seed is not None:
        cx = ComplexFile.from_data(random_triangle_data(args.seed))
        _save(args, cx)
    else:
        raise InputError("give --input FILE or --seed N")
    c0 = direct_sum(list(cx.c0_list))
    spaces = {"C_Y1": cx.c1, "C_Y": cx.cy, "C_Y0": c0}
    for name, m in (("w1", cx.w1), ("w0", cx.w0), ("delta", cx.delta)):
        src, dst, shift = _SQUARES[name]
        try:
            ChainMap(spaces[src], spaces[dst], m, shift)
        except (IntegrityError, GradingError) as exc:
            raise IntegrityError(f"square {name}: {src} -> {dst} does not commute: {exc}") from None
    rep = exact_triangle_check(cx.c1, cx.cy, list(cx.c0_list), cx.w1, cx.w0, cx.delta)
    out(f"ranks: C_Y1 {cx.c1.dim}, C_Y {cx.cy.dim}, C_Y0 {c0.dim} ({len(cx.c0_list)} summand(s))")
    out.check("0 -> C_Y1 -> C_Y -> C_Y0 -> 0 exact on generators", rep.short_exact)
    for nd in rep.nodes:
        out.check(f"node {nd.name}", nd.exact, f"dim im = {nd.dim_image}, dim ker = {nd.dim_kernel}, composite zero {'yes' if nd.composite_zero else 'no'}")
    out.check("Δ equals the connecting map", rep.delta_matches_snake)
    for f in rep.failures:
        out(f"  {f}")


def cmd_render(args, out: Report) -> None:
    if args.input:
        obj = _load(args.input, CurveFile, TriangleConfig)
    elif args.seed is not None:
        obj = random_triangle_config(args.seed)
        _save(args, obj)
    else:
        raise InputError("give --input FILE or --seed N")
    slope = None
    if isinstance(obj, CurveFile):
        curve, m, p, eps, eta, slope = obj.curve, obj.m, obj.p, obj.eps, obj.eta, obj.slope
    else:
        curve, m, p, eps, eta = obj.curve, obj.m, obj.p, obj.eps, obj.eta
    eps = args.eps if args.eps is not None else eps
    eta = args.eta if args.eta is not None else eta
    out.lines.append(render_svg(curve, curve.n, m, p, eps, eta, slope).rstrip("\n"))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", metavar="FILE", help="problem file (JSON)")
    common.add_argument("--output", "-o", metavar="FILE", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, help="generate a random input from this seed")
    common.add_argument("--eps", type=_rat_arg, help="perturbation size, e.g. 1/10")
    common.add_argument("--eta", type=_rat_arg, help="wall offset, e.g. 1/7")
    common.add_argument("--save-input", metavar="FILE", help="with --seed, also write the generated input")

    ap = argparse.ArgumentParser(prog="swtriangle", description="Exact checks for the surgery exact triangle.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dedekind", parents=[common], help="Dedekind sum s(p, q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_dedekind)

    s = sub.add_parser("casson-walker", parents=[common], help="Casson-Walker invariant of a surgery")
    s.add_argument("p", type=int, nargs="?")
    s.add_argument("q", type=int, nargs="?")
    s.add_argument("--n", type=int, default=1, help="order of the knot in H1(Y) (default 1)")
    s.add_argument("--h1", type=int, default=1, help="|H1(Y)| (default 1)")
    s.add_argument("--lambda-bar", type=_rat_arg, default=0, help="normalized invariant of Y, e.g. 1/2 (default 0)")
    s.set_defaults(func=cmd_casson_walker)

    s = sub.add_parser("spinc", parents=[common], help="list spin^c structures")
    s.add_argument("base", nargs="?", choices=["Y", "Y1", "Y0", "Ypq"])
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--p", type=int)
    s.add_argument("--q", type=int)
    s.add_argument("--window", type=int, default=3, help="for the Z-family, list L_-W .. L_W")
    s.set_defaults(func=cmd_spinc)

    s = sub.add_parser("verify-partition", parents=[common], help="partition and surgery count identities")
    s.set_defaults(func=cmd_verify_partition)

    s = sub.add_parser("triangles", parents=[common], help="enumerate triangles and check w0·w1 = 0")
    s.add_argument("--n", type=int, help="with --seed: cylinder size")
    s.add_argument("--p-offset", type=int, help="with --seed: wall offset p")
    s.set_defaults(func=cmd_triangles)

    s = sub.add_parser("exactness", parents=[common], help="exactness of a triangle of chain complexes")
    s.set_defaults(func=cmd_exactness)

    s = sub.add_parser("render", parents=[common], help="SVG picture of a curve or triangle configuration")
    s.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    stream = sys.stdout
    out = Report(color=not args.output and _use_color(stream))
    try:
        args.func(args, out)
    except (InputError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, GenericityError, GradingError, IntegrityError) as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SwTriangleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out.text())
    else:
        stream.write(out.text())
    return EXIT_IDENTITY if out.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
