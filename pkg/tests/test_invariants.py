from fractions import Fraction
from math import floor, gcd

import pytest
from hypothesis import given, strategies as st

from swtriangle.errors import PreconditionError
from swtriangle.invariants import (
    AlexanderData,
    SurgeryProblem,
    alexander_moment,
    casson_walker_report,
    casson_walker_surgery,
    lens_space_sw_sum,
    random_surgery_problem,
    s_pqn,
    sw_hat_sum_surgery,
    unknot_problem,
    unnormalized,
    xi_difference_model,
)


def saw(x):
    x = Fraction(x)
    return Fraction(0) if x.denominator == 1 else x - floor(x) - Fraction(1, 2)


def dedekind(p, q):
    q = abs(q)
    return sum((saw(Fraction(k, q)) * saw(Fraction(p * k, q)) for k in range(1, q)), Fraction(0))


def lambda_bar_oracle(pr):
    moment = sum(a * j * j for j, a in enumerate(pr.alexander.coeffs, start=1))
    corr = Fraction(pr.q * (pr.n**2 - 1), 12 * pr.n**2) - Fraction(pr.p) * dedekind(pr.p, pr.q) / 2
    return pr.p * pr.lambda_bar_Y + pr.q * moment + pr.h1_order * corr


def test_alexander_moment():
    assert alexander_moment(AlexanderData()) == 0
    assert alexander_moment(AlexanderData(1, (1,))) == 1
    assert alexander_moment(AlexanderData(1, (-1, 3))) == 11


def test_alexander_normalization():
    a = AlexanderData(5, (1, 2))
    assert a.constant_term == -1 and a.value_at_one() == 5
    with pytest.raises(PreconditionError):
        AlexanderData(0)


def test_s_pqn_examples():
    assert s_pqn(3, 5, 1) == 0
    assert s_pqn(1, 1, 2) == Fraction(1, 16)
    assert s_pqn(5, 3, 1) == -5 * dedekind(5, 3) / 2
    with pytest.raises(PreconditionError):
        s_pqn(2, 4, 1)
    with pytest.raises(PreconditionError):
        s_pqn(1, 1, 0)


def test_casson_walker_unknot_examples():
    assert casson_walker_surgery(unknot_problem(2, 1)) == 0
    assert casson_walker_surgery(unknot_problem(3, 5)) == 0
    assert casson_walker_surgery(unknot_problem(1, 1)) == 0
    assert casson_walker_surgery(unknot_problem(5, 3)) == Fraction(5, 36)


def test_report_terms_and_normalization():
    pr = SurgeryProblem(2, 3, 1, 2, Fraction(1, 2), AlexanderData(1, (1,)))
    rep = casson_walker_report(pr)
    assert rep.lambda_bar == rep.base_term + rep.alexander_term + rep.correction_term
    assert rep.base_term == Fraction(3, 2) and rep.alexander_term == 1
    assert rep.lambda_ == 2 * rep.lambda_bar / 6
    assert casson_walker_report(SurgeryProblem(1, 0, 1)).lambda_ is None
    assert unnormalized(Fraction(3), 6) == 1


def test_problem_validation():
    with pytest.raises(PreconditionError):
        SurgeryProblem(1, 2, 4)
    with pytest.raises(PreconditionError):
        SurgeryProblem(0, 1, 1)
    with pytest.raises(PreconditionError):
        SurgeryProblem(1, 1, 1, h1_order=0)


def test_lens_space_sums():
    assert lens_space_sw_sum(1, 1) == 0
    assert lens_space_sw_sum(2, 1) == 0
    assert lens_space_sw_sum(5, 3) == Fraction(5, 36)
    with pytest.raises(PreconditionError):
        lens_space_sw_sum(0, 1)


def test_xi_difference_model():
    assert xi_difference_model(2, 1, 2) == Fraction(1, 16)
    assert xi_difference_model(5, 3, 1) == -5 * dedekind(5, 3) / 2
    assert xi_difference_model(5, 3, 4, sf_sum=7) == xi_difference_model(5, 3, 4, sf_sum=-2)


def test_sw_sum_all_zero_inputs():
    pr = SurgeryProblem(1, 5, 3, 4)
    assert sw_hat_sum_surgery(pr, 0, 0) == -4 * 5 * dedekind(5, 3) / 2


@given(st.integers(0, 10**6))
def test_casson_walker_matches_oracle(seed):
    pr = random_surgery_problem(seed)
    assert casson_walker_surgery(pr) == lambda_bar_oracle(pr)


@given(st.integers(0, 10**6))
def test_dual_formula(seed):
    pr = random_surgery_problem(seed)
    got = sw_hat_sum_surgery(pr, pr.lambda_bar_Y, alexander_moment(pr.alexander))
    assert got == casson_walker_surgery(pr)


@given(st.integers(1, 50), st.integers(-50, 50))
def test_lens_consistency(p, q):
    if gcd(p, q) != 1:
        return
    assert casson_walker_surgery(unknot_problem(p, q)) == lens_space_sw_sum(p, q)


@given(st.integers(0, 10**6), st.fractions(max_denominator=12).filter(lambda x: abs(x) < 50))
def test_lambda_bar_is_affine_in_base(seed, shift):
    pr = random_surgery_problem(seed)
    moved = SurgeryProblem(pr.n, pr.p, pr.q, pr.h1_order, pr.lambda_bar_Y + shift, pr.alexander)
    assert casson_walker_surgery(moved) - casson_walker_surgery(pr) == pr.p * shift


@given(st.integers(0, 10**6))
def test_denominators_divide_expected(seed):
    pr = random_surgery_problem(seed)
    rest = casson_walker_surgery(pr) - pr.p * pr.lambda_bar_Y
    bound = 12 * pr.n**2 * 2 * 6 * abs(pr.q) if pr.q else 12 * pr.n**2
    assert bound % rest.denominator == 0
