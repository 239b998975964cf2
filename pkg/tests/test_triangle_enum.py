from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from swtriangle.errors import PreconditionError
from swtriangle.floer_harness import integer_left_inverse, integer_right_inverse
from swtriangle.monopole_count import BoundaryCurve, Component
from swtriangle.serialization import load_path
from swtriangle.triangle_enum import (
    CornerLattice,
    Tag,
    TriangleConfig,
    connecting_map,
    enumerate_triangles,
    generators,
    matmul,
    random_triangle_config,
    triangle_table,
    w1_w0_cancellation,
    w_matrix,
)

F = Fraction


# ---------------------------------------------------------------------------
# an independent polygon oracle


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _proper_or_touching(a, b, c, d):
    d1, d2, d3, d4 = _cross(c, d, a), _cross(c, d, b), _cross(a, b, c), _cross(a, b, d)
    if ((d1 > 0) != (d2 > 0)) and d1 and d2 and ((d3 > 0) != (d4 > 0)) and d3 and d4:
        return True

    def on(p, q, r):
        return _cross(p, q, r) == 0 and min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])

    return (d1 == 0 and on(c, d, a)) or (d2 == 0 and on(c, d, b)) or (d3 == 0 and on(a, b, c)) or (d4 == 0 and on(a, b, d))


def simple_polygon_oracle(poly):
    m = len(poly)
    edges = [(poly[i], poly[(i + 1) % m]) for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if j == i + 1 or (i == 0 and j == m - 1):
                continue
            if _proper_or_touching(*edges[i], *edges[j]):
                return False
    return len(set(poly)) == m


def shoelace(poly):
    return sum(a[0] * b[1] - b[0] * a[1] for a, b in zip(poly, poly[1:] + poly[:1])) / 2


def _fig(data_dir, k):
    return load_path(data_dir / f"figure{k}_config.json")


# ---------------------------------------------------------------------------
# examples


def test_curve_disjoint_from_lines_has_no_triangles():
    lp = Component(((F(2, 5), F(3, 10)), (F(3, 5), F(3, 10)), (F(1, 2), F(1, 2))), True)
    cfg = TriangleConfig(BoundaryCurve((lp,), F(1, 7), 1), 1, 0, 0, F(1, 10))
    gens = generators(cfg)
    assert all(not v for v in gens.values())
    assert triangle_table(cfg, Tag.W1, gens) == {}
    rep = w1_w0_cancellation(cfg)
    assert rep.ok and rep.pairs == [] and rep.unmatched == []


def test_figure3_single_triangle_matches_subpath_oracle(data_dir):
    cfg = _fig(data_dir, 3)
    gens = generators(cfg)
    t1 = triangle_table(cfg, Tag.W1, gens)
    found = [(k, ts.triangles[0]) for k, ts in t1.items() if ts.triangles]
    assert found
    for (src, dst), tri in found:
        poly = list(tri.contour)
        assert simple_polygon_oracle(poly)
        assert abs(shoelace(poly)) == tri.area
        assert tri.orientation == (1 if shoelace(poly) > 0 else -1)
        # sides chain a- -> vartheta -> a+ -> a- and make up the whole contour
        a, b, back = tri.sides
        assert a[0] == tri.a_minus and a[-1] == b[0] == tri.vartheta
        assert b[-1] == back[0] == tri.a_plus and back[-1] == tri.a_minus
        assert set(poly) <= set(a) | set(b) | set(back)
        # on an arc only one sub-path joins the two corners
        assert not cfg.curve.components[0].closed
    # the diagonal entries carry exactly one triangle each
    rep = w1_w0_cancellation(cfg)
    assert rep.diagonal_ok


def test_figure3_bijection_of_size_one(data_dir):
    rep = w1_w0_cancellation(_fig(data_dir, 3))
    assert len(rep.pairs) == 1 and not rep.unmatched
    left, right = rep.pairs[0]
    assert left.tag is Tag.W1 and right.tag is Tag.W0
    assert left.sign == -right.sign
    assert rep.product_zero


def test_two_components_give_independent_triangles():
    for seed in range(200):
        cfg = random_triangle_config(seed, n=1, arcs=2, bends=1, width=1)
        gens = generators(cfg)
        comps = {g.comp for g in gens["Y1"]}
        if len(comps) == 2:
            break
    else:
        pytest.skip("no two-component sample")
    t1 = triangle_table(cfg, Tag.W1, gens)
    comp_of = {g.gid: g.comp for g in gens["Y1"]}
    with_triangles = {comp_of[src] for (src, _), ts in t1.items() if ts.triangles}
    assert with_triangles == {0, 1}
    assert w1_w0_cancellation(cfg).ok


def test_w_matrix_without_triangles_is_zero():
    lp = Component(((F(2, 5), F(3, 10)), (F(3, 5), F(3, 10)), (F(1, 2), F(1, 2))), True)
    cfg = TriangleConfig(BoundaryCurve((lp,), F(1, 7), 1), 1, 0, 0, F(1, 10))
    assert w_matrix(Tag.W1, cfg) == [] and w_matrix(Tag.W0, cfg) == []


def test_connecting_map_examples():
    assert connecting_map([[1, 0], [0, 2]], [0, 0]) == [0, 0]
    assert connecting_map([[0, 0], [0, 0]], [1, 1]) == [0, 0]
    assert connecting_map([[1]], [1]) == [1]
    with pytest.raises(PreconditionError):
        connecting_map([[1]], [1], d0=[[1]])
    with pytest.raises(PreconditionError):
        connecting_map([[1, 0]], [1])


def test_matmul_shapes():
    assert matmul([[1, 2]], [[3], [4]]) == [[11]]
    assert matmul([], [[1, 2]]) == []


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_cancellation_certificates_agree(seed):
    cfg = random_triangle_config(seed)
    rep = w1_w0_cancellation(cfg)
    assert not rep.unmatched
    assert rep.product_zero
    assert rep.diagonal_ok
    # every paired triangle sits over one (a1, a0) entry of the product
    for left, right in rep.pairs:
        assert left.sign + right.sign == 0


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_diagonal_identities_give_one_sided_inverses(seed):
    cfg = random_triangle_config(seed)
    rep = w1_w0_cancellation(cfg)
    if rep.w1 and rep.w1[0]:
        left = integer_left_inverse(rep.w1)
        assert left is not None
        assert matmul(left, rep.w1) == [[int(i == j) for j in range(len(rep.w1[0]))] for i in range(len(rep.w1[0]))]
    if rep.w0 and rep.w0[0]:
        right = integer_right_inverse(rep.w0)
        assert right is not None
        assert matmul(rep.w0, right) == [[int(i == j) for j in range(len(rep.w0))] for i in range(len(rep.w0))]


@settings(max_examples=20)
@given(st.integers(0, 10**6))
def test_ambient_orientation_negates_signs(seed):
    cfg = random_triangle_config(seed)
    gens = generators(cfg)
    graph, y1, walls = cfg.targets()
    corners = CornerLattice(walls.c, y1.c, walls.period)
    mats = {}
    for amb in (1, -1):
        for tag, la, lb, src, dst in ((Tag.W1, y1, graph, "Y1", "Y"), (Tag.W0, graph, walls, "Y", "Y0")):
            mats[(amb, tag)] = [
                [sum(t.sign for t in enumerate_triangles(cfg.curve, la, lb, s, d, tag, amb, corners).triangles) for s in gens[src]]
                for d in gens[dst]
            ]
    for tag in Tag:
        assert mats[(-1, tag)] == [[-x for x in row] for row in mats[(1, tag)]]
    # the composite still vanishes after the global sign change
    rep = w1_w0_cancellation(cfg)
    assert rep.product_zero


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_enumeration_is_deterministic(seed):
    cfg = random_triangle_config(seed)
    a = triangle_table(cfg, Tag.W0)
    b = triangle_table(cfg, Tag.W0)
    assert {k: v.triangles for k, v in a.items()} == {k: v.triangles for k, v in b.items()}
