"""End-to-end acceptance criteria.

Each test is one criterion; the terminal summary prints a PASS/FAIL line per
criterion with the measured detail.  Sizes and time limits are the contract
values, not samples.
"""

import time
from fractions import Fraction
from math import gcd

import pytest
import sympy

from swtriangle import _linalg as la
from swtriangle.cli import main
from swtriangle.exact_arith import dedekind_sum
from swtriangle.floer_harness import (
    exact_triangle_check,
    integer_left_inverse,
    integer_right_inverse,
    random_triangle_data,
)
from swtriangle.invariants import (
    alexander_moment,
    casson_walker_surgery,
    random_surgery_problem,
    sw_hat_sum_surgery,
    unknot_problem,
)
from swtriangle.monopole_count import (
    brute_force_partition_counts,
    partition_check,
    random_partition_curve,
    random_surgery_case,
    surgery_count_identity,
)
from swtriangle.perturbation import (
    build_basic_profile,
    build_refined_profile,
    check_basic_properties,
    check_refined_properties,
    limit_lines,
)
from swtriangle.triangle_enum import Tag, random_triangle_config, w1_w0_cancellation

F = Fraction


def _elapsed(start):
    return time.perf_counter() - start


@pytest.mark.acceptance("C1 Dedekind reciprocity, coprime 1 <= p, q <= 200, < 5 s")
def test_c1_dedekind_reciprocity(record_property):
    start = time.perf_counter()
    pairs = bad = 0
    for p in range(1, 201):
        for q in range(1, 201):
            if gcd(p, q) != 1:
                continue
            pairs += 1
            rhs = F(-1, 4) + (F(p, q) + F(q, p) + F(1, p * q)) / 12
            if dedekind_sum(p, q) + dedekind_sum(q, p) != rhs:
                bad += 1
    secs = _elapsed(start)
    record_property("detail", f"{pairs} pairs, {bad} failures, {secs:.2f} s")
    assert bad == 0 and secs < 5


@pytest.mark.acceptance("C2 lens-space equivalence, p <= 50, |q| <= 50, < 1 s")
def test_c2_lens_space_equivalence(record_property):
    start = time.perf_counter()
    pairs = bad = 0
    for p in range(1, 51):
        for q in range(-50, 51):
            if gcd(p, q) != 1:
                continue
            pairs += 1
            if casson_walker_surgery(unknot_problem(p, q)) != -p * dedekind_sum(p, q) / 2:
                bad += 1
    secs = _elapsed(start)
    record_property("detail", f"{pairs} pairs, {bad} failures, {secs:.2f} s")
    assert bad == 0 and secs < 1


@pytest.mark.acceptance("C3 dual-formula identity, 200 problems, n <= 6")
def test_c3_dual_formula(record_property):
    bad = 0
    for seed in range(200):
        pr = random_surgery_problem(seed, max_n=6)
        sw = sw_hat_sum_surgery(pr, pr.lambda_bar_Y, alexander_moment(pr.alexander))
        bad += sw != casson_walker_surgery(pr)
    record_property("detail", f"200 problems, {bad} failures")
    assert bad == 0


@pytest.mark.acceptance("C4 partition identity with brute-force oracle, 500 curves, < 30 s")
def test_c4_partition_identity(record_property):
    start = time.perf_counter()
    bad = []
    combos = [(n, m, p) for n in range(1, 5) for m in range(n) for p in range(n)]
    for seed in range(500):
        n, m, p = combos[seed % len(combos)]
        eps = F(1, 10)
        eta = F(0) if seed % 3 else F(1, 2)
        curve = random_partition_curve(seed, n, m, p, eps, eta, loops=seed % 2)
        rep = partition_check(curve, n, m, p, eps, eta)
        oracle = brute_force_partition_counts(curve, n, m, p, eps, eta)
        if not rep.holds or (rep.count_Y, rep.count_Y1, sum(rep.count_Y0.values())) != oracle:
            bad.append(seed)
    secs = _elapsed(start)
    record_property("detail", f"500 curves over {len(combos)} (n, m, p) cases, {len(bad)} failures, {secs:.1f} s")
    assert not bad and secs < 30, bad[:10]


@pytest.mark.acceptance("C5 surgery count identity, both paths, 500 curves, p <= 5, < 30 s")
def test_c5_surgery_count_identity(record_property):
    start = time.perf_counter()
    bad = []
    for seed in range(500):
        case = random_surgery_case(seed, max_p=5)
        assert case.p <= 5
        rep = surgery_count_identity(case.curve, case.p, case.q, case.n, case.u_sigma, case.eta)
        if not (rep.paths_agree and rep.holds):
            bad.append(seed)
    secs = _elapsed(start)
    record_property("detail", f"500 curves, {len(bad)} failures, {secs:.1f} s")
    assert not bad and secs < 30, bad[:10]


@pytest.mark.acceptance("C6 triangle cancellation bijection and w0.w1 = 0, 200 configurations")
def test_c6_triangle_cancellation(record_property):
    bad = []
    pairs = 0
    for seed in range(200):
        rep = w1_w0_cancellation(random_triangle_config(seed))
        prod = la.matmul(rep.w0, rep.w1) if rep.w0 and rep.w1 else []
        paired = all(a.tag is Tag.W1 and b.tag is Tag.W0 and a.sign == -b.sign for a, b in rep.pairs)
        if rep.unmatched or not paired or not la.is_zero(prod) or not rep.diagonal_ok:
            bad.append(seed)
        pairs += len(rep.pairs)
    record_property("detail", f"200 configurations, {pairs} sign-reversing pairs, {len(bad)} failures")
    assert not bad, bad[:10]


def _snake_agrees(data) -> bool:
    """Connecting map from a sympy diagram chase, compared with Δ in homology."""
    c1, cy, c0 = data.c1, data.cy, data.c0
    if not c0.dim:
        return True
    w1 = sympy.Matrix(data.w1.rows())
    w0 = sympy.Matrix(data.w0.rows())
    delta = sympy.Matrix(data.delta.rows())
    d_y = sympy.Matrix(cy.matrix())
    d_1 = sympy.Matrix(c1.matrix()) if c1.dim else sympy.zeros(0, 0)
    d_0 = sympy.Matrix(c0.matrix())
    for z in d_0.nullspace():
        lift = w0.pinv_solve(z, arbitrary_matrix=sympy.zeros(cy.dim, 1))
        y = d_y * lift
        if c1.dim == 0:
            continue
        x = w1.pinv_solve(y, arbitrary_matrix=sympy.zeros(c1.dim, 1))
        if w1 * x != y:
            return False
        diff = delta * z - x
        if d_1.rank() != d_1.row_join(diff).rank():
            return False
    return True


@pytest.mark.acceptance("C7 exact triangle, snake-map oracle and inverses, 100 data sets")
def test_c7_exact_triangle(record_property):
    bad = []
    for seed in range(100):
        data = random_triangle_data(seed, max_generators=12, modulus=(0, 2, 4)[seed % 3])
        assert data.cy.dim <= 12
        rep = exact_triangle_check(data.c1, data.cy, data.c0_list, data.w1, data.w0, data.delta)
        w1, w0 = data.w1.rows(), data.w0.rows()
        left, right = integer_left_inverse(w1), integer_right_inverse(w0)
        diag = (not data.c1.dim or la.matmul(left, w1) == la.identity(data.c1.dim)) and (
            not data.c0.dim or la.matmul(w0, right) == la.identity(data.c0.dim)
        )
        if not (rep.ok and diag and _snake_agrees(data)):
            bad.append(seed)
    record_property("detail", f"100 data sets, {len(bad)} failures")
    assert not bad, bad[:10]


def _distance_to_lines(lines, pt, period):
    """Sup-norm distance from pt to the periodic families a*u + b*v = c."""
    u, v = pt
    best = None
    for ln in lines:
        fam = ln.family(period)
        r = (fam.a * u + fam.b * v - fam.c) % period
        d = min(r, period - r) / (abs(fam.a) + abs(fam.b))
        best = d if best is None else min(best, d)
    return best


@pytest.mark.acceptance("C8 perturbation profile contract, eps in {1/4, 1/10, 1/100}, n <= 6")
def test_c8_profile_contract(record_property):
    problems = []
    checked = 0
    for eps in (F(1, 4), F(1, 10), F(1, 100)):
        problems += check_basic_properties(build_basic_profile(eps))
        for n in range(1, 7):
            for p in range(n):
                prof = build_refined_profile(n, p, eps)
                problems += check_refined_properties(prof)
                lines = limit_lines(prof)
                for t, v in prof.breakpoints:
                    checked += 1
                    if not _distance_to_lines(lines, (t, v), prof.period) < eps:
                        problems.append(f"n={n} p={p} eps={eps}: ({t}, {v}) is far from the limit lines")
    record_property("detail", f"{checked} breakpoints, {len(problems)} violations")
    assert not problems, problems[:5]


@pytest.mark.acceptance("C9 CLI goldens and exit codes")
def test_c9_cli_goldens(record_property, data_dir, tmp_path, capsys):
    results = {}
    for name in ("figure1_config", "figure2_config", "figure3_config"):
        out = tmp_path / f"{name}.svg"
        code = main(["render", "-i", str(data_dir / f"{name}.json"), "-o", str(out)])
        results[f"render {name}"] = code == 0 and out.read_bytes() == (data_dir / f"{name}.svg").read_bytes()
    expected = [
        ("verify-partition", "figure2_curve.json", 0),
        ("verify-partition", "corrupted_sign_curve.json", 1),
        ("exactness", "split_complex.json", 0),
        ("exactness", "snake_complex.json", 0),
        ("exactness", "non_chain_map_complex.json", 3),
    ]
    for cmd, name, want in expected:
        results[f"{cmd} {name}"] = main([cmd, "-i", str(data_dir / name)]) == want
    capsys.readouterr()
    failed = [k for k, ok in results.items() if not ok]
    record_property("detail", f"{len(results) - len(failed)}/{len(results)} checks")
    assert not failed, failed
