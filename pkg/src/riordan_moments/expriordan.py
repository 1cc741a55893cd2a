"""Exponential Riordan arrays [g, f] and their production functions.

Column k of [g, f] has exponential generating function g*f^k/k!, so
entry (n, k) is (n!/k!) [x^n] g*f^k.  The group law is the same as for
ordinary arrays; only the realization and the action differ.

The production matrix of [g, f] is determined by two series

    r(x) = f'(fbar(x)),    c(x) = g'(fbar(x)) / g(fbar(x)),

through p(i, j) = (i!/j!) (c_{i-j} + j r_{i-j+1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import OrderExceeded
from .matrix import ProductionMatrix, TriangularMatrix
from .powerseries import PowerSeries
from .riordan import RiordanPair


@dataclass(frozen=True, eq=False, repr=False)
class ExponentialRiordan(RiordanPair):
    bracket = "[]"

    def realize(self, rows: int) -> TriangularMatrix:
        cols = self._column_series(rows)
        fact = [factorial(i) for i in range(rows)]
        return TriangularMatrix(
            [[Fraction(fact[n], fact[k]) * cols[k][n] for k in range(n + 1)] for n in range(rows)]
        )

    def apply(self, u: PowerSeries) -> PowerSeries:
        """Action on e.g.f.s: U(x) -> g(x)*U(f(x))."""
        return self.g * u.compose(self.f)

    def row_sums(self) -> PowerSeries:
        """E.g.f. g*exp(f) of the row sums."""
        return self.g * self.f.exp()

    def cr_functions(self) -> tuple[PowerSeries, PowerSeries]:
        """(c, r) with c = g'(fbar)/g(fbar) and r = f'(fbar); both of order N-1."""
        fbar = self.f.revert()
        g_at = self.g.compose(fbar)
        dg_at = self.g.derivative().compose(fbar)
        c = dg_at / g_at
        r = self.f.derivative().compose(fbar)
        return c, r

    def production(self, size: int | None = None) -> ProductionMatrix:
        c, r = self.cr_functions()
        return production_from_cr(c, r, size)


def production_from_cr(c: PowerSeries, r: PowerSeries, size: int | None = None) -> ProductionMatrix:
    """p(i, j) = (i!/j!)(c_{i-j} + j r_{i-j+1}) for j <= i+1, with c_{-1} = 0."""
    limit = min(c.order, r.order) + 1
    if size is None:
        size = limit
    if size > limit:
        raise OrderExceeded(f"size {size} needs c and r to order {size - 1}")

    def entry(i: int, j: int) -> Fraction:
        ci = c[i - j] if i >= j else Fraction(0)
        rj = j * r[i - j + 1] if j else Fraction(0)
        return Fraction(factorial(i), factorial(j)) * (ci + rj)

    return ProductionMatrix.from_function(entry, size)


def phi_table(c: PowerSeries, r: PowerSeries, size: int) -> ProductionMatrix:
    """Production entries read off phi(t, z) = e^{tz} (c(z) + t r(z)).

    phi = sum p(n, k) t^k z^n / n!.  The bivariate product is expanded
    directly as a dictionary of monomials t^a z^b, independently of the
    closed entry formula.
    """
    if size > min(c.order, r.order) + 1:
        raise OrderExceeded(f"size {size} needs c and r to order {size - 1}")
    max_z = size - 1
    # e^{tz} = sum_m t^m z^m / m!
    etz = {(m, m): Fraction(1, factorial(m)) for m in range(max_z + 1)}
    # c(z) + t r(z)
    inner: dict[tuple[int, int], Fraction] = {}
    for b in range(max_z + 1):
        if c[b]:
            inner[(0, b)] = inner.get((0, b), Fraction(0)) + c[b]
        if r[b]:
            inner[(1, b)] = inner.get((1, b), Fraction(0)) + r[b]
    phi: dict[tuple[int, int], Fraction] = {}
    for (ta, za), u in etz.items():
        for (tb, zb), v in inner.items():
            if za + zb <= max_z:
                key = (ta + tb, za + zb)
                phi[key] = phi.get(key, Fraction(0)) + u * v

    def entry(n: int, k: int) -> Fraction:
        return phi.get((k, n), Fraction(0)) * factorial(n)

    return ProductionMatrix.from_function(entry, size)


def realize_exp(e: ExponentialRiordan, rows: int) -> TriangularMatrix:
    return e.realize(rows)


def multiply_exp(e: ExponentialRiordan, other: ExponentialRiordan) -> ExponentialRiordan:
    return e.multiply(other)


def inverse_exp(e: ExponentialRiordan) -> ExponentialRiordan:
    return e.inverse()


def apply_exp(e: ExponentialRiordan, u: PowerSeries) -> PowerSeries:
    return e.apply(u)


def cr_functions(e: ExponentialRiordan) -> tuple[PowerSeries, PowerSeries]:
    return e.cr_functions()
