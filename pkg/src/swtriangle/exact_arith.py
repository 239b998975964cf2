"""Exact rational scalars, the sawtooth function and Dedekind sums.

All quantities in the package are :class:`fractions.Fraction` instances
(aliased here as ``Rat``).  Integers are arbitrary precision, so nothing is
ever rounded.

Dedekind sum convention: the second argument is the modulus,

    s(p, q) = sum_{i=1}^{|q|-1} ((i/q)) ((p i / q)).

The same convention is used by every formula in :mod:`swtriangle.invariants`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import floor, gcd

from .errors import PreconditionError

Rat = Fraction

__all__ = ["Rat", "as_rat", "sawtooth", "dedekind_sum", "reciprocity_rhs", "parse_rat", "format_rat"]


def as_rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"a/b"`` string to a Fraction.

    Floats are refused: a float has already been rounded.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    # Fraction() also accepts decimals like "0.1"; those are exact too.
    return Fraction(text)


def format_rat(x: Fraction) -> str:
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sawtooth(x) -> Fraction:
    """((x)) = x - floor(x) - 1/2 for non-integers, 0 on integers."""
    x = as_rat(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def dedekind_sum(p: int, q: int) -> Fraction:
    """Direct O(|q|) evaluation of s(p, q) with ``q`` the modulus.

    Raises PreconditionError unless gcd(p, q) = 1.  Negative moduli use
    |q| terms; since ((.)) is odd, s(p, -q) = s(p, q).
    """
    p, q = int(p), int(q)
    if gcd(p, q) != 1:
        raise PreconditionError("p and q must be coprime")
    return _dedekind_cached(p % abs(q) if q else p, abs(q))


@lru_cache(maxsize=65536)
def _dedekind_cached(p: int, q: int) -> Fraction:
    if q <= 1:
        return Fraction(0)
    # Sum of (2i - q)(2r - q) over non-integer terms, r = p*i mod q, over 4q^2.
    total = 0
    for i in range(1, q):
        r = (p * i) % q
        if r:
            total += (2 * i - q) * (2 * r - q)
    return Fraction(total, 4 * q * q)


def reciprocity_rhs(p: int, q: int) -> Fraction:
    """Right-hand side of Dedekind reciprocity for coprime p, q >= 1."""
    return Fraction(-1, 4) + (Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q)) / 12
