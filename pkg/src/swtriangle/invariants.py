"""Closed-form surgery formulas: Casson–Walker and the modified SW count.

Notation: for a surgery problem on a knot of order n in Y,

    λ̄(Y_{p/q}) = p λ̄(Y) + q Σ a_j j² + |H1(Y)| s(p, q, n),
    s(p, q, n) = q (n² - 1) / (12 n²) - p s(p, q) / 2,

where s(p, q) is the Dedekind sum with q as modulus and λ̄ = |H1| λ / 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import PreconditionError
from .exact_arith import as_rat, dedekind_sum

__all__ = [
    "AlexanderData",
    "SurgeryProblem",
    "CassonWalkerReport",
    "alexander_moment",
    "s_pqn",
    "casson_walker_surgery",
    "casson_walker_report",
    "sw_hat_sum_surgery",
    "lens_space_sw_sum",
    "xi_difference_model",
    "unnormalized",
    "unknot_problem",
    "random_surgery_problem",
]


@dataclass(frozen=True)
class AlexanderData:
    """Symmetrized Alexander polynomial A(t) = c0 + Σ a_j (t^j + t^-j) of Y0.

    Normalized so that A(1) = torsion_order, which fixes the constant term
    c0 = torsion_order - 2 Σ a_j.
    """

    torsion_order: int = 1
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if int(self.torsion_order) < 1:
            raise PreconditionError("torsion order must be a positive integer")

    @property
    def constant_term(self) -> int:
        return self.torsion_order - 2 * sum(self.coeffs)

    def value_at_one(self) -> int:
        return self.constant_term + 2 * sum(self.coeffs)


@dataclass(frozen=True)
class SurgeryProblem:
    n: int
    p: int
    q: int
    h1_order: int = 1
    lambda_bar_Y: Fraction = Fraction(0)
    alexander: AlexanderData = field(default_factory=AlexanderData)

    def __post_init__(self):
        object.__setattr__(self, "lambda_bar_Y", as_rat(self.lambda_bar_Y))
        if self.n < 1:
            raise PreconditionError("n must be >= 1")
        if gcd(self.p, self.q) != 1:
            raise PreconditionError("p and q must be coprime")
        if self.h1_order < 1:
            raise PreconditionError("|H1(Y)| must be >= 1")

    @property
    def h1_order_result(self) -> int:
        """|H1(Y_{p/q})| = |p| |H1(Y)|."""
        return abs(self.p) * self.h1_order


def alexander_moment(data: AlexanderData) -> int:
    """Σ_j a_j j²."""
    return sum(a * j * j for j, a in enumerate(data.coeffs, start=1))


def s_pqn(p: int, q: int, n: int) -> Fraction:
    if n < 1:
        raise PreconditionError("n must be >= 1")
    return Fraction(q * (n * n - 1), 12 * n * n) - p * dedekind_sum(p, q) / 2


@dataclass(frozen=True)
class CassonWalkerReport:
    lambda_bar: Fraction
    lambda_: Fraction | None
    base_term: Fraction
    alexander_term: Fraction
    correction_term: Fraction
    s_pqn: Fraction
    dedekind: Fraction


def casson_walker_report(problem: SurgeryProblem) -> CassonWalkerReport:
    """λ̄(Y_{p/q}) with its three terms, and λ = 2 λ̄ / |H1(Y_{p/q})| when p ≠ 0."""
    pr = problem
    base = pr.p * pr.lambda_bar_Y
    alex = Fraction(pr.q * alexander_moment(pr.alexander))
    spqn = s_pqn(pr.p, pr.q, pr.n)
    corr = pr.h1_order * spqn
    lb = base + alex + corr
    lam = 2 * lb / pr.h1_order_result if pr.p else None
    return CassonWalkerReport(lb, lam, base, alex, corr, spqn, dedekind_sum(pr.p, pr.q))


def casson_walker_surgery(problem: SurgeryProblem) -> Fraction:
    return casson_walker_report(problem).lambda_bar


def unnormalized(lambda_bar, h1_order: int) -> Fraction:
    """λ = 2 λ̄ / |H1|."""
    if h1_order < 1:
        raise PreconditionError("|H1| must be >= 1")
    return 2 * as_rat(lambda_bar) / h1_order


def sw_hat_sum_surgery(problem: SurgeryProblem, sw_hat_sum_Y, sw_sum_Y0) -> Fraction:
    """p Σ ŜW_Y + q Σ SW_{Y0} + |H1(Y)| s(p, q, n)."""
    return problem.p * as_rat(sw_hat_sum_Y) + problem.q * as_rat(sw_sum_Y0) + problem.h1_order * s_pqn(problem.p, problem.q, problem.n)


def lens_space_sw_sum(p: int, q: int) -> Fraction:
    """Σ ŜW over L(p, q) = -p s(p, q) / 2."""
    if p < 1:
        raise PreconditionError("p must be >= 1")
    if gcd(p, q) != 1:
        raise PreconditionError("p and q must be coprime")
    return -p * dedekind_sum(p, q) / 2


def xi_difference_model(p: int, q: int, n: int, u_sigma=None, sf_sum: int = 0) -> Fraction:
    """Σξ(Y_{p/q}) - pΣξ(Y) - ΣSF, modeled by its average over the n classes u.

    Individual per-u terms are not available; every u gets the average
    s(p, q, n).  ``u_sigma`` and ``sf_sum`` do not enter: the spectral flow
    has already been subtracted.
    """
    if gcd(p, q) != 1:
        raise PreconditionError("p and q must be coprime")
    return s_pqn(p, q, n)


def unknot_problem(p: int, q: int) -> SurgeryProblem:
    """p/q surgery on the unknot in S³, which gives L(p, q)."""
    return SurgeryProblem(1, p, q, 1, Fraction(0), AlexanderData(1, ()))


def random_surgery_problem(seed, max_n: int = 6) -> SurgeryProblem:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    while True:
        p, q = rng.randint(1, 40), rng.randint(-40, 40)
        if gcd(p, q) == 1:
            break
    coeffs = tuple(rng.randint(-5, 5) for _ in range(rng.randint(0, 4)))
    tors = rng.randint(1, 9)
    lam = Fraction(rng.randint(-50, 50), rng.choice([1, 2, 3, 4, 6, 8, 12]))
    return SurgeryProblem(n, p, q, rng.randint(1, 12), lam, AlexanderData(tors, coeffs))
