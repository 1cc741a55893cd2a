"""Exact rational scalars and the combinatorial helpers built on them.

``Rational`` is :class:`fractions.Fraction`: always in lowest terms with a
positive denominator, so equality is canonical-form equality and zero tests
are exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Rational.

    Floats are refused: no floating point enters the pipeline.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to Rational")


def format_rational(q: RationalLike) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    q = rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-, whitespace- or newline-separated list of rationals."""
    items = text.replace(",", " ").split()
    return [rational(item) for item in items]


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return Fraction(math.factorial(n))


def falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient with the generalized upper index.

    For k < 0 the value is 0. For n >= 0 and k > n the value is 0. For any
    integer n (negative included) it is n(n-1)...(n-k+1)/k!.
    """
    if k < 0:
        return Fraction(0)
    if n >= 0:
        return Fraction(math.comb(n, k)) if k <= n else Fraction(0)
    return Fraction(falling(n, k), math.factorial(k))


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    return reduce(math.lcm, (Fraction(v).denominator for v in values), 1)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Nonnegative square root of q if it is a rational square, else None."""
    if q < 0:
        return None
    p, d = q.numerator, q.denominator
    rp, rd = math.isqrt(p), math.isqrt(d)
    if rp * rp == p and rd * rd == d:
        return Fraction(rp, rd)
    return None
