"""Named parameter families whose moment sequences are Legendre or Hermite values.

Each family at a rational parameter r provides

* the moment array L (ordinary or exponential) whose first column is the
  polynomial family evaluated at r,
* the coefficient array L^-1 of the orthogonal polynomials having those
  moments,
* the three-term recurrence of those polynomials,
* closed forms for the moments and for their Hankel transform.

Everything stays over Q: no square roots of parameters are formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Union

from .errors import DegenerateFamily
from .exact import format_rational, rational
from .expriordan import ExponentialRiordan
from .powerseries import PowerSeries
from .production import ThreeTermRecurrence
from .riordan import OrdinaryRiordan

Array = Union[OrdinaryRiordan, ExponentialRiordan]

FAMILY_NAMES = ("legendre", "shifted-legendre", "hermite", "unitary-hermite", "chebyshev-u")


# -- closed forms ------------------------------------------------------------


def legendre_value(n: int, r) -> Fraction:
    """P_n(r) = sum_k (-1)^k C(n,k)^2 ((1+r)/2)^(n-k) ((1-r)/2)^k."""
    r = rational(r)
    u, v = (1 + r) / 2, (1 - r) / 2
    return sum((Fraction((-1) ** k * comb(n, k) ** 2) * u ** (n - k) * v**k for k in range(n + 1)), Fraction(0))


def shifted_legendre_value(n: int, r) -> Fraction:
    """P~_n(r) = sum_k (-1)^(n-k) C(n+k, 2k) C(2k, k) r^k."""
    r = rational(r)
    return sum(((-1) ** (n - k) * comb(n + k, 2 * k) * comb(2 * k, k) * r**k for k in range(n + 1)), Fraction(0))


def hermite_value(n: int, r) -> Fraction:
    """H_n(r) = n! sum_{k <= n/2} (-1)^k (2r)^(n-2k) / (k! (n-2k)!)."""
    r = rational(r)
    total = sum(
        (Fraction((-1) ** k, factorial(k) * factorial(n - 2 * k)) * (2 * r) ** (n - 2 * k) for k in range(n // 2 + 1)),
        Fraction(0),
    )
    return total * factorial(n)


def unitary_hermite_value(n: int, r) -> Fraction:
    """He_n(r) = sum over k with n-k even of n! / ((-2)^((n-k)/2) k! ((n-k)/2)!) r^k."""
    r = rational(r)
    total = Fraction(0)
    for k in range(n % 2, n + 1, 2):
        m = (n - k) // 2
        total += Fraction(factorial(n), (-2) ** m * factorial(k) * factorial(m)) * r**k
    return total


def _sign_binom(n: int) -> int:
    return -1 if comb(n + 1, 2) % 2 else 1


def superfactorial(n: int) -> int:
    out = 1
    for k in range(n + 1):
        out *= factorial(k)
    return out


def shifted_legendre_hankel(n: int, r) -> Fraction:
    """2^n (r(r-1))^C(n+1,2)."""
    r = rational(r)
    return 2**n * (r * (r - 1)) ** comb(n + 1, 2)


def legendre_hankel(n: int, r) -> Fraction:
    """(r^2-1)^C(n+1,2) / 2^(n^2)."""
    r = rational(r)
    return (r * r - 1) ** comb(n + 1, 2) / Fraction(2 ** (n * n))


def unitary_hermite_hankel(n: int, r=None) -> Fraction:
    """(-1)^C(n+1,2) prod_{k=0}^n k!; independent of r."""
    return Fraction(_sign_binom(n) * superfactorial(n))


def hermite_hankel(n: int, r=None) -> Fraction:
    """(-1)^C(n+1,2) prod_{k=0}^n 2^k k!; independent of r."""
    return Fraction(_sign_binom(n) * 2 ** comb(n + 1, 2) * superfactorial(n))


def chebyshev_hankel(n: int, r=None, s=1) -> Fraction:
    """s^C(n+1,2), the Hankel transform of the constant-(r, s) J-fraction."""
    return rational(s) ** comb(n + 1, 2)


CLOSED_FORMS: dict[str, Callable[[int, Fraction], Fraction]] = {
    "legendre": legendre_value,
    "shifted-legendre": shifted_legendre_value,
    "hermite": hermite_value,
    "unitary-hermite": unitary_hermite_value,
}


def closed_form(family: str, r, n: int) -> Fraction:
    """Exact P_n(r), P~_n(r), H_n(r) or He_n(r) from the finite sums."""
    try:
        fn = CLOSED_FORMS[family]
    except KeyError:
        raise ValueError(f"no closed form for family {family!r}; choose from {sorted(CLOSED_FORMS)}") from None
    if n < 0:
        raise ValueError("n must be nonnegative")
    return fn(n, r)


# -- arrays ----------------------------------------------------------------


def _quadratic(a0, a1, a2, order: int) -> PowerSeries:
    return PowerSeries([a0, a1, a2], order)


def shifted_legendre_coefficient_array(r, order: int) -> OrdinaryRiordan:
    """((1 + r(1-r)x^2)/(1+(2r-1)x+r(r-1)x^2), x/(1+(2r-1)x+r(r-1)x^2))."""
    r = rational(r)
    if r * (r - 1) == 0:
        raise DegenerateFamily(f"shifted Legendre at r = {format_rational(r)}: beta_1 = 2r(r-1) vanishes")
    den = _quadratic(1, 2 * r - 1, r * (r - 1), order)
    num = _quadratic(1, 0, r * (1 - r), order)
    return OrdinaryRiordan(num / den, PowerSeries.x(order) / den)


def shifted_legendre_array(r, order: int) -> OrdinaryRiordan:
    """The moment array L, inverse of the coefficient array."""
    return shifted_legendre_coefficient_array(r, order).inverse()


def shifted_legendre_array_closed(r, order: int) -> OrdinaryRiordan:
    """(1/sqrt(1-2(2r-1)x+x^2), (1-(2r-1)x-sqrt(1-2(2r-1)x+x^2))/(2r(r-1)x))."""
    r = rational(r)
    if r * (r - 1) == 0:
        raise DegenerateFamily(f"shifted Legendre at r = {format_rational(r)}: beta_1 = 2r(r-1) vanishes")
    work = order + 1
    root = _quadratic(1, -2 * (2 * r - 1), 1, work).sqrt()
    g = 1 / root
    num = _quadratic(1, -(2 * r - 1), 0, work) - root
    f = num.shift(-1) / (2 * r * (r - 1))
    return OrdinaryRiordan(g.truncate(order), f.truncate(order))


def legendre_coefficient_array(r, order: int) -> OrdinaryRiordan:
    """((1 + (1-r^2)/4 x^2)/(1+rx+(r^2-1)/4 x^2), x/(1+rx+(r^2-1)/4 x^2)).

    The x^2 coefficient of the denominator is (r^2-1)/4: that is the value
    for which the inverse has first column P_n(r), equals the closed form
    (1/sqrt(1-2rx+x^2), 2(1-rx-sqrt(1-2rx+x^2))/(x(r^2-1))), and has
    production corner (r^2-1)/2 over a band of (r^2-1)/4.
    """
    r = rational(r)
    if r * r == 1:
        raise DegenerateFamily(f"Legendre at r = {format_rational(r)}: beta_1 = (r^2-1)/2 vanishes")
    den = _quadratic(1, r, (r * r - 1) / 4, order)
    num = _quadratic(1, 0, (1 - r * r) / 4, order)
    return OrdinaryRiordan(num / den, PowerSeries.x(order) / den)


def legendre_array(r, order: int) -> OrdinaryRiordan:
    return legendre_coefficient_array(r, order).inverse()


def legendre_array_closed(r, order: int) -> OrdinaryRiordan:
    """(1/sqrt(1-2rx+x^2), 2(1-rx-sqrt(1-2rx+x^2))/(x(r^2-1)))."""
    r = rational(r)
    if r * r == 1:
        raise DegenerateFamily(f"Legendre at r = {format_rational(r)}: beta_1 = (r^2-1)/2 vanishes")
    work = order + 1
    root = _quadratic(1, -2 * r, 1, work).sqrt()
    num = _quadratic(1, -r, 0, work) - root
    f = num.shift(-1) * 2 / (r * r - 1)
    return OrdinaryRiordan((1 / root).truncate(order), f.truncate(order))


def unitary_hermite_array(r, order: int) -> ExponentialRiordan:
    """[e^(rx - x^2/2), x]."""
    r = rational(r)
    g = _quadratic(0, r, Fraction(-1, 2), order).exp()
    return ExponentialRiordan.appell(g)


def hermite_array(r, order: int) -> ExponentialRiordan:
    """[e^(2rx - x^2), x]."""
    r = rational(r)
    g = _quadratic(0, 2 * r, -1, order).exp()
    return ExponentialRiordan.appell(g)


def chebyshev_modified_array(r, s, order: int) -> OrdinaryRiordan:
    """Coefficient array (1/(1+rx+sx^2), x/(1+rx+sx^2)) of s^(n/2) U_n((x-r)/(2 sqrt s))."""
    r, s = rational(r), rational(s)
    if s == 0:
        raise DegenerateFamily("modified Chebyshev family with s = 0: beta = s vanishes")
    den = _quadratic(1, r, s, order)
    return OrdinaryRiordan(1 / den, PowerSeries.x(order) / den)


# -- bundled view -----------------------------------------------------------


@dataclass(frozen=True)
class MomentFamily:
    """One family at one parameter value, with everything needed to check it."""

    name: str
    r: Fraction
    s: Fraction | None
    order: int
    moment_array: Array
    coefficient_array: Array
    alpha: Callable[[int], Fraction] = field(repr=False)
    beta: Callable[[int], Fraction] = field(repr=False)
    hankel_closed: Callable[[int], Fraction] = field(repr=False)
    value: Callable[[int], Fraction] | None = field(default=None, repr=False)

    @property
    def exponential(self) -> bool:
        return isinstance(self.moment_array, ExponentialRiordan)

    def recurrence(self, depth: int) -> ThreeTermRecurrence:
        return ThreeTermRecurrence.from_functions(self.alpha, self.beta, depth)

    def moments(self, count: int) -> list[Fraction]:
        """First column of the moment array (already n!-scaled when exponential)."""
        g = self.moment_array.g
        terms = g.egf_terms() if self.exponential else list(g.coeffs)
        return terms[:count]


def family(name: str, r, s=None, order: int = 20) -> MomentFamily:
    """Build a named family; ``s`` is used only by chebyshev-u (default 1)."""
    r = rational(r)
    if name == "shifted-legendre":
        coeff = shifted_legendre_coefficient_array(r, order)
        rr = r * (r - 1)
        return MomentFamily(
            name, r, None, order, coeff.inverse(), coeff,
            alpha=lambda n: 2 * r - 1,
            beta=lambda n: 2 * rr if n == 1 else rr,
            hankel_closed=lambda n: shifted_legendre_hankel(n, r),
            value=lambda n: shifted_legendre_value(n, r),
        )
    if name == "legendre":
        coeff = legendre_coefficient_array(r, order)
        q = r * r - 1
        return MomentFamily(
            name, r, None, order, coeff.inverse(), coeff,
            alpha=lambda n: r,
            beta=lambda n: q / 2 if n == 1 else q / 4,
            hankel_closed=lambda n: legendre_hankel(n, r),
            value=lambda n: legendre_value(n, r),
        )
    if name == "unitary-hermite":
        arr = unitary_hermite_array(r, order)
        return MomentFamily(
            name, r, None, order, arr, arr.inverse(),
            alpha=lambda n: r,
            beta=lambda n: Fraction(-n),
            hankel_closed=unitary_hermite_hankel,
            value=lambda n: unitary_hermite_value(n, r),
        )
    if name == "hermite":
        arr = hermite_array(r, order)
        return MomentFamily(
            name, r, None, order, arr, arr.inverse(),
            alpha=lambda n: 2 * r,
            beta=lambda n: Fraction(-2 * n),
            hankel_closed=hermite_hankel,
            value=lambda n: hermite_value(n, r),
        )
    if name == "chebyshev-u":
        s = Fraction(1) if s is None else rational(s)
        coeff = chebyshev_modified_array(r, s, order)
        return MomentFamily(
            name, r, s, order, coeff.inverse(), coeff,
            alpha=lambda n: r,
            beta=lambda n: s,
            hankel_closed=lambda n: chebyshev_hankel(n, r, s),
        )
    raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")
