"""Truncated formal power series over the rationals.

A :class:`PowerSeries` of order ``N`` knows the coefficients of
``x^0 .. x^N`` exactly and nothing beyond; asking for ``[x^n]`` with
``n > N`` raises :class:`OrderExceeded` rather than returning a silent zero.
Binary operations on series of different orders truncate to the smaller
order.  Every operation documents the order of its result.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .errors import (
    CompositionDomain,
    ExpDomain,
    LogDomain,
    NoSeriesSqrt,
    NotAUnit,
    NotRevertible,
    OrderExceeded,
)
from .exact import format_rational, rational, rational_sqrt

Scalar = Union[int, Fraction]


class PowerSeries:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [rational(v) for v in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            if len(c) > order + 1:
                c = c[: order + 1]
            else:
                c.extend([Fraction(0)] * (order + 1 - len(c)))
        if not c:
            raise ValueError("a power series needs at least one coefficient")
        self._c = tuple(c)

    # -- construction -----------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, order: int) -> PowerSeries:
        return cls([value], order)

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls([], order) if order >= 0 else cls([0])

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> PowerSeries:
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, k: int, order: int, coefficient: Scalar = 1) -> PowerSeries:
        return cls([0] * k + [coefficient], order)

    @classmethod
    def from_function(cls, term: Callable[[int], Scalar], order: int) -> PowerSeries:
        return cls((term(n) for n in range(order + 1)))

    @classmethod
    def geometric(cls, ratio: Scalar, order: int) -> PowerSeries:
        """1/(1 - ratio*x)."""
        ratio = rational(ratio)
        return cls((ratio**n for n in range(order + 1)))

    # -- access -------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def coefficient(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise OrderExceeded(f"[x^{n}] requested from a series known to order {self.order}")
        return self._c[n]

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficient(n)

    def __iter__(self):
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if all known ones vanish."""
        for i, v in enumerate(self._c):
            if v:
                return i
        return None

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise OrderExceeded(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self._c[: order + 1])

    def egf_terms(self) -> list[Fraction]:
        """n! [x^n] s for every known n (the sequence this series is an e.g.f. of)."""
        out, fact = [], 1
        for n, v in enumerate(self._c):
            if n:
                fact *= n
            out.append(v * fact)
        return out

    @classmethod
    def from_egf_terms(cls, terms: Sequence[Scalar]) -> PowerSeries:
        out, fact = [], 1
        for n, v in enumerate(terms):
            if n:
                fact *= n
            out.append(rational(v) / fact)
        return cls(out)

    # -- ring operations ----------------------------------------------------

    def _lift(self, other) -> PowerSeries | None:
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return PowerSeries(a + b for a, b in zip(self._c[: n + 1], o._c[: n + 1]))

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(-a for a in self._c)

    def __pos__(self) -> PowerSeries:
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(a * other for a in self._c)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._c, other._c
        out = []
        for k in range(n + 1):
            total = Fraction(0)
            for i in range(k + 1):
                ai = a[i]
                if ai:
                    total += ai * b[k - i]
            out.append(total)
        return PowerSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            inv = 1 / Fraction(other)
            return PowerSeries(a * inv for a in self._c)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        b0 = other._c[0]
        if b0 == 0:
            raise NotAUnit("divisor has zero constant term")
        n = min(self.order, other.order)
        a, b = self._c, other._c
        out: list[Fraction] = []
        for k in range(n + 1):
            total = a[k]
            for i in range(1, k + 1):
                bi = b[i]
                if bi:
                    total -= bi * out[k - i]
            out.append(total / b0)
        return PowerSeries(out)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> PowerSeries:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return PowerSeries.one(self.order) / (self ** (-k))
        result = PowerSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def agrees_with(self, other: PowerSeries) -> bool:
        """Equality on the common truncation order."""
        n = min(self.order, other.order)
        return self._c[: n + 1] == other._c[: n + 1]

    def divide_exact(self, other: PowerSeries) -> PowerSeries:
        """Quotient allowing a common power of x to cancel.

        If the divisor has valuation v > 0 and the dividend vanishes through
        x^(v-1), both are shifted down by v first; the result loses v orders.
        Otherwise this is ordinary division.
        """
        if other._c[0] != 0:
            return self / other
        v = other.valuation()
        if v is None:
            raise NotAUnit("division by a series that vanishes to its truncation order")
        if any(self._c[:v]):
            raise NotAUnit(f"dividend does not vanish to order {v - 1}; quotient is not a power series")
        return self.shift(-v) / other.shift(-v)

    def shift(self, k: int) -> PowerSeries:
        """Multiply by x^k (k >= 0, order grows by k) or drop x^(-k) (k < 0)."""
        if k >= 0:
            return PowerSeries([0] * k + list(self._c))
        if any(self._c[: -k]):
            raise ValueError(f"series is not divisible by x^{-k}")
        if -k > self.order:
            raise OrderExceeded("shift consumes every known coefficient")
        return PowerSeries(self._c[-k:])

    # -- composition and inversion -----------------------------------------

    def compose(self, inner: PowerSeries) -> PowerSeries:
        """self(inner(x)), exact to order min(self.order, inner.order)."""
        if inner._c[0] != 0:
            raise CompositionDomain("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = PowerSeries.constant(self._c[n], n)
        for k in range(n - 1, -1, -1):
            result = result * inner + self._c[k]
        return result

    def __matmul__(self, inner: PowerSeries) -> PowerSeries:
        return self.compose(inner)

    def revert(self) -> PowerSeries:
        """Compositional inverse, same order, by Lagrange inversion.

        [x^n] rev(f) = (1/n) [x^(n-1)] (x/f)^n.
        """
        c = self._c
        if c[0] != 0 or self.order < 1 or c[1] == 0:
            raise NotRevertible("reversion needs f(0) = 0 and [x^1]f != 0")
        n_max = self.order
        h = 1 / PowerSeries(c[1:])  # x/f, order n_max-1
        out = [Fraction(0)]
        power = PowerSeries.one(n_max - 1)
        for n in range(1, n_max + 1):
            power = power * h
            out.append(power._c[n - 1] / n)
        return PowerSeries(out)

    # -- analytic-style operations -----------------------------------------

    def sqrt(self) -> PowerSeries:
        """The square root with positive constant term, same order."""
        root0 = rational_sqrt(self._c[0])
        if root0 is None or root0 == 0:
            raise NoSeriesSqrt(f"constant term {format_rational(self._c[0])} is not a nonzero rational square")
        s = self._c
        t = [root0]
        two_t0 = 2 * root0
        for n in range(1, len(s)):
            acc = s[n]
            for k in range(1, n):
                acc -= t[k] * t[n - k]
            t.append(acc / two_t0)
        return PowerSeries(t)

    def exp(self) -> PowerSeries:
        if self._c[0] != 0:
            raise ExpDomain("exp needs zero constant term")
        s = self._c
        e = [Fraction(1)]
        for n in range(1, len(s)):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if s[k]:
                    acc += k * s[k] * e[n - k]
            e.append(acc / n)
        return PowerSeries(e)

    def log(self) -> PowerSeries:
        if self._c[0] != 1:
            raise LogDomain("log needs constant term 1")
        if self.order == 0:
            return PowerSeries([0])
        return (self.derivative() / self.truncate(self.order - 1)).integral()

    def derivative(self) -> PowerSeries:
        """Formal derivative; order drops by one."""
        if self.order == 0:
            raise OrderExceeded("derivative of an order-0 series has no known coefficients")
        return PowerSeries(n * a for n, a in enumerate(self._c) if n)

    def integral(self) -> PowerSeries:
        """Antiderivative with zero constant term; order grows by one."""
        return PowerSeries([Fraction(0)] + [a / (n + 1) for n, a in enumerate(self._c)])

    def aerate(self) -> PowerSeries:
        """s(x^2), same order (tail truncated)."""
        out = [Fraction(0)] * (self.order + 1)
        for k in range(0, self.order // 2 + 1):
            out[2 * k] = self._c[k]
        return PowerSeries(out)

    # -- display --------------------------------------------------------------

    def __repr__(self) -> str:
        return f"PowerSeries([{', '.join(format_rational(a) for a in self._c)}])"

    def to_strings(self) -> list[str]:
        return [format_rational(a) for a in self._c]

    def __str__(self) -> str:
        return ", ".join(self.to_strings())


def coefficient(s: PowerSeries, n: int) -> Fraction:
    return s.coefficient(n)


def compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    return outer.compose(inner)


def revert(f: PowerSeries) -> PowerSeries:
    return f.revert()


def sqrt(s: PowerSeries) -> PowerSeries:
    return s.sqrt()


def exp(s: PowerSeries) -> PowerSeries:
    return s.exp()


def log(s: PowerSeries) -> PowerSeries:
    return s.log()


def derivative(s: PowerSeries) -> PowerSeries:
    return s.derivative()


def integral(s: PowerSeries) -> PowerSeries:
    return s.integral()


def aerate(s: PowerSeries) -> PowerSeries:
    return s.aerate()
