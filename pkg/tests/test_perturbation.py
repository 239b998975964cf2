from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from swtriangle._geometry import linf_distance_to_segment
from swtriangle.errors import PreconditionError
from swtriangle.perturbation import (
    approximation_error,
    build_basic_profile,
    build_refined_profile,
    check_basic_properties,
    check_refined_properties,
    eval_profile,
    graph_distance_to_limit,
    limit_lines,
    perturbed_graph,
    walls,
)
from swtriangle.torus_model import LineKind

F = Fraction
EPSILONS = [F(1, 4), F(1, 10), F(1, 100)]


def test_basic_profile_examples():
    prof = build_basic_profile(F(1, 10))
    assert eval_profile(prof, 0) == 0
    assert abs(eval_profile(prof, F(1, 2)) - F(1, 2)) < F(1, 10)
    # antisymmetric about t = 1 (the literal symmetry is incompatible with tracking t)
    assert eval_profile(prof, 1 - F(1, 4)) == -eval_profile(prof, 1 + F(1, 4))
    assert eval_profile(prof, F(-1, 3) + 2) == eval_profile(prof, F(-1, 3))


def test_basic_profile_eps_range():
    with pytest.raises(PreconditionError):
        build_basic_profile(F(1, 2))
    with pytest.raises(PreconditionError):
        build_basic_profile(0)


def test_refined_profile_limit_lines_examples():
    lines = limit_lines(build_refined_profile(1, 0, F(1, 10)))
    assert [ln.describe() for ln in lines] == ["v = u + 1", "u = 0"]
    lines = limit_lines(build_refined_profile(4, 2, F(1, 10)))
    assert lines[0].kind is LineKind.Y1_LINE and lines[1].contains((F(4), F(0)))
    assert walls(build_refined_profile(4, 2, F(1, 10)), -8, 16) == [-4, 4, 12]
    assert walls(build_refined_profile(2, 1, F(1, 10)), 0, 8) == [2, 6]


def test_wall_positions_shift_with_offset():
    w0 = walls(build_refined_profile(4, 0, F(1, 10)), 0, 8)
    w2 = walls(build_refined_profile(4, 2, F(1, 10)), 0, 8)
    assert [b - a for a, b in zip(w0, w2)] == [4]


def test_refined_graph_passes_the_corner():
    # the ramp crosses the slanted line right at the corner (2p, 2p + 1)
    prof = build_refined_profile(4, 2, F(1, 10))
    pts = prof.graph().polyline(F(2), F(6))
    d = min(linf_distance_to_segment((F(4), F(5)), a, b) for a, b in zip(pts, pts[1:]))
    assert d < F(1, 10)


def test_eval_at_breakpoints_returns_stored_values():
    for prof in (build_basic_profile(F(1, 10)), build_refined_profile(3, 1, F(1, 10))):
        for t, v in prof.breakpoints[:-1]:
            assert eval_profile(prof, t) == v


def test_refined_tracking_off_the_wall():
    prof = build_refined_profile(1, 0, F(1, 10))
    for k in (-1, 0, 1):
        for s in (F(-1, 5), F(1, 5)):
            assert approximation_error(prof, 2 * k + s) < F(1, 10)


@pytest.mark.parametrize("eps", EPSILONS)
@pytest.mark.parametrize("n", range(1, 7))
def test_profile_contract_at_breakpoints(eps, n):
    assert check_basic_properties(build_basic_profile(eps)) == []
    for p in range(n):
        assert check_refined_properties(build_refined_profile(n, p, eps)) == []


def _tracking_oracle(prof, samples=400):
    """Dense sampling, independent of the breakpoint bookkeeping."""
    n, eps = prof.n, prof.eps
    lo, hi = F(-1), F(2 * n - 1)
    per = 2 * n
    for i in range(samples + 1):
        t = lo + (hi - lo) * i / samples
        r = (t - prof.wall) % per
        if min(r, per - r) <= eps:
            continue
        d = (eval_profile(prof, t) - t - 1) % per
        if not min(d, per - d) < eps:
            return t
    return None


eps_st = st.fractions(min_value=F(1, 200), max_value=F(1, 4), max_denominator=200)


@given(st.integers(1, 6), st.data(), eps_st)
def test_tracking_estimate_by_sampling(n, data, eps):
    p = data.draw(st.integers(0, n - 1))
    assert _tracking_oracle(build_refined_profile(n, p, eps)) is None


@given(st.integers(1, 6), st.data(), eps_st, eps_st)
def test_monotone_convergence(n, data, e1, e2):
    e1, e2 = min(e1, e2), max(e1, e2)
    p = data.draw(st.integers(0, n - 1))
    small = build_refined_profile(n, p, e1)
    for t, v in small.breakpoints:
        assert graph_distance_to_limit(small, (t, v)) < e2


@given(st.integers(1, 6), st.data(), eps_st, st.fractions(min_value=0, max_value=1, max_denominator=30))
def test_graph_is_transverse_to_limit_lines(n, data, eps, eta):
    p = data.draw(st.integers(0, n - 1))
    g = perturbed_graph(build_refined_profile(n, p, eps), 0, eta)
    for i in range(len(g.knots) - 1):
        # slope 1 would run along the slanted line; finite slope is transverse to walls
        assert g.slope(i) != 1


def test_limit_lines_needs_refined_profile():
    with pytest.raises(PreconditionError):
        limit_lines(build_basic_profile(F(1, 10)))
