from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from swtriangle.errors import GenericityError, PreconditionError
from swtriangle.torus_model import (
    BAD_POINT,
    LineKind,
    check_generic,
    cylinder_lift_count,
    lattice_intersections,
    reducible_line,
    slope_curve,
    theta_points,
)

F = Fraction


def theta_oracle(p, q, us):
    """Walk the closed curve base + t (p, q), t in [0, 2), and stop on u = us mod 2."""
    bv = F(1) if q % 2 else F(0)
    out = set()
    for j in range(p):
        t = (F(us) + 2 * j) / p
        out.add((F(us) % 2, (bv + q * t) % 2))
    return sorted(out, key=lambda x: x[1])


def test_reducible_line_examples():
    y1 = reducible_line(LineKind.Y1_LINE, 0, 0)
    assert y1.describe() == "v = u + 1"
    assert y1.contains((F(3), F(4))) and not y1.contains((F(3), F(3)))
    y0 = reducible_line("Y0_LINE", 2, F(1, 20))
    assert y0.contains((4 + F(1, 20), F(7)))
    assert y0.describe() == "u = 4 + 1/20"
    y = reducible_line(LineKind.Y_LINE, 0, 0)
    assert y.describe() == "v = 0"
    assert y.contains((F(5, 3), F(0)))


def test_negative_eta_rejected():
    with pytest.raises(PreconditionError):
        reducible_line(LineKind.Y_LINE, 0, F(-1, 3))


def test_slope_curve_examples():
    # the convention puts the 1/0 curve through (0, 0) along v = 0
    c = slope_curve(1, 0)
    assert c.contains((F(0), F(0))) and c.contains((F(1, 3), F(0)))
    c31 = slope_curve(3, 1)
    assert c31.direction == (3, 1)
    assert c31.contains((F(0), F(1))) and c31.contains((F(3), F(2)))
    c21 = slope_curve(2, 1)
    assert c21.contains((F(0), F(1))) and c21.contains((F(2), F(2)))


def test_slope_curve_rejects_non_coprime():
    with pytest.raises(PreconditionError):
        slope_curve(4, 2)


def test_theta_points_examples():
    assert len(theta_points(1, 0, 0, 1, F(1, 20)).thetas) == 1
    th = theta_points(3, 1, 0, 1, 0)
    assert [t.xy for t in th.thetas] == theta_oracle(3, 1, 0) == lattice_intersections(3, 1, 0)
    th = theta_points(2, 3, F(2, 3), 3, F(1, 20))
    assert th.p == 2
    assert sum(len(x) for x in th.lifts) == 6


def test_check_generic_examples():
    assert not check_generic(u_sigma=1).ok
    assert check_generic(u_sigma=0, eta=F(1, 20), p=3, q=1).ok
    assert check_generic().ok


def test_u_sigma_on_bad_circle_is_not_generic():
    rep = check_generic(u_sigma=0, eta=1, p=3, q=1)
    assert any("bad point" in v for v in rep.violations)


coprime_pq = st.tuples(st.integers(1, 9), st.integers(-9, 9)).filter(lambda t: gcd(*t) == 1)
u_values = st.fractions(min_value=0, max_value=2, max_denominator=37).filter(lambda x: x not in (0, 1, 2))


@given(coprime_pq, u_values, st.integers(1, 4))
def test_theta_count_and_lifts(pq, us, n):
    p, q = pq
    try:
        th = theta_points(p, q, us, n)
    except GenericityError:
        assume(False)
    # exactly p torus intersections, equal to an independent walk
    assert th.p == p
    assert [t.xy for t in th.thetas] == theta_oracle(p, q, us)
    # projecting the p*n cylinder lifts recovers each theta with fibre n
    counts = cylinder_lift_count([x for lifts in th.lifts for x in lifts], n)
    assert counts == {t.xy: n for t in th.thetas}
    # exact membership: substituting back gives 0 exactly
    fam = slope_curve(p, q).family()
    for t in th.thetas:
        assert fam.contains(t.xy)
        assert t.u == us


@given(coprime_pq)
def test_slope_curves_miss_the_bad_point(pq):
    # p - q = c0 (mod 2) has no coprime solution for either base point
    assert not slope_curve(*pq).contains(BAD_POINT)
