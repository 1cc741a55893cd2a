"""Ordinary Riordan arrays (g, f).

Column k of (g, f) has ordinary generating function g*f^k.  Pairs are
kept proper: g(0) = 1, f(0) = 0, [x]f = 1.

The A/Z characterization is applied without requiring z0 != 0: aerated
arrays such as (c(x^2), x c(x^2)) have z0 = 0 and still satisfy both
recurrences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, TypeVar

from .errors import NotProper, OrderExceeded
from .matrix import TriangularMatrix
from .powerseries import PowerSeries

P = TypeVar("P", bound="RiordanPair")


@dataclass(frozen=True)
class RiordanPair:
    """A proper pair (g, f) with the group law shared by both array kinds."""

    g: PowerSeries
    f: PowerSeries

    bracket: ClassVar[str] = "()"

    def __post_init__(self):
        g, f = self.g, self.f
        if g.order < 0 or f.order < 1:
            raise NotProper("f must be known at least to order 1")
        if g[0] != 1:
            raise NotProper(f"g(0) must be 1, got {g[0]}")
        if f[0] != 0:
            raise NotProper(f"f(0) must be 0, got {f[0]}")
        if f[1] != 1:
            raise NotProper(f"[x]f must be 1, got {f[1]}")

    @classmethod
    def identity(cls: type[P], order: int) -> P:
        return cls(PowerSeries.one(order), PowerSeries.x(order))

    @classmethod
    def appell(cls: type[P], g: PowerSeries) -> P:
        return cls(g, PowerSeries.x(g.order))

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def multiply(self: P, other: P) -> P:
        """(g, f)*(h, l) = (g*(h o f), l o f)."""
        if type(other) is not type(self):
            raise TypeError("cannot multiply ordinary and exponential arrays")
        return type(self)(self.g * other.g.compose(self.f), other.f.compose(self.f))

    def __mul__(self: P, other: P) -> P:
        return self.multiply(other)

    def inverse(self: P) -> P:
        """(g, f)^-1 = (1/(g o fbar), fbar)."""
        fbar = self.f.revert()
        return type(self)(1 / self.g.compose(fbar), fbar)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.g == other.g and self.f == other.f

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.g, self.f))

    def agrees_with(self, other: RiordanPair) -> bool:
        return type(other) is type(self) and self.g.agrees_with(other.g) and self.f.agrees_with(other.f)

    def truncate(self: P, order: int) -> P:
        return type(self)(self.g.truncate(order), self.f.truncate(order))

    def _column_series(self, rows: int) -> list[PowerSeries]:
        if rows < 1:
            raise ValueError("rows must be positive")
        if rows - 1 > self.order:
            raise OrderExceeded(f"{rows} rows need series order {rows - 1}; pair is known to order {self.order}")
        n = rows - 1
        col = self.g.truncate(n)
        f = self.f.truncate(n)
        cols = [col]
        for _ in range(1, rows):
            col = col * f
            cols.append(col)
        return cols

    def __repr__(self) -> str:
        lo, hi = self.bracket
        return f"{type(self).__name__}{lo}g={self.g!r}, f={self.f!r}{hi}"


@dataclass(frozen=True, eq=False, repr=False)
class OrdinaryRiordan(RiordanPair):
    def realize(self, rows: int) -> TriangularMatrix:
        """Entry (n, k) = [x^n] g*f^k."""
        cols = self._column_series(rows)
        return TriangularMatrix([[cols[k][n] for k in range(n + 1)] for n in range(rows)])

    def apply(self, a: PowerSeries) -> PowerSeries:
        """Action on g.f.s: A(x) -> g(x)*A(f(x))."""
        return self.g * a.compose(self.f)

    def row_sums(self) -> PowerSeries:
        """g/(1-f)."""
        return self.g / (1 - self.f)

    def diagonal_sums(self) -> PowerSeries:
        """g/(1-x*f)."""
        x = PowerSeries.x(self.f.order)
        return self.g / (1 - x * self.f)

    def bivariate_table(self, rows: int) -> TriangularMatrix:
        """Coefficients of x^n y^k in g(x)/(1 - y f(x)), by expansion in y.

        Works in Q[y][[x]]: each x-coefficient is a polynomial in y. This
        route never forms the column series g*f^k.
        """
        if rows - 1 > self.order:
            raise OrderExceeded(f"{rows} rows need series order {rows - 1}")
        f = self.f
        # b = 1/(1 - y f): b_0 = 1, b_n = sum_{i>=1} y f_i b_{n-i}
        b: list[list[Fraction]] = [[Fraction(1)]]
        for n in range(1, rows):
            poly = [Fraction(0)] * (n + 1)
            for i in range(1, n + 1):
                fi = f[i]
                if not fi:
                    continue
                for k, v in enumerate(b[n - i]):
                    poly[k + 1] += fi * v
            b.append(poly)
        table = []
        for n in range(rows):
            poly = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                gi = self.g[i]
                if not gi:
                    continue
                for k, v in enumerate(b[n - i]):
                    poly[k] += gi * v
            table.append(poly)
        return TriangularMatrix(table)

    def a_and_z_sequences(self) -> tuple[PowerSeries, PowerSeries]:
        """A(x) = x/fbar(x), Z(x) = (1 - 1/g(fbar(x)))/fbar(x); both of order N-1."""
        fbar = self.f.revert()
        a_seq = 1 / fbar.shift(-1)
        z_num = 1 - 1 / self.g.compose(fbar)
        z_seq = z_num.divide_exact(fbar)
        return a_seq, z_seq

    def c_sequence(self) -> PowerSeries:
        """C(x) with f = x/(1 - x C(x)), i.e. C = (1 - x/f)/x; order N-2."""
        x_over_f = 1 / self.f.shift(-1)
        return (1 - x_over_f).shift(-1)


def satisfies_az(matrix: TriangularMatrix, a_seq: PowerSeries, z_seq: PowerSeries) -> bool:
    """Check d(n+1,k+1) = sum_j a_j d(n,k+j) and d(n+1,0) = sum_j z_j d(n,j)."""
    d = matrix.dimension
    for n in range(d - 1):
        if n > z_seq.order or n > a_seq.order:
            break
        row = matrix.row(n)
        if matrix[n + 1, 0] != sum((z_seq[j] * row[j] for j in range(n + 1)), Fraction(0)):
            return False
        for k in range(n + 1):
            want = sum((a_seq[j] * row[k + j] for j in range(n - k + 1)), Fraction(0))
            if matrix[n + 1, k + 1] != want:
                return False
    return True


def satisfies_c_recurrence(matrix: TriangularMatrix, c_seq: PowerSeries, first_column: bool = False) -> bool:
    """Check a(n+1,k) = a(n,k-1) + sum_i c_i a(n-i,k) for k >= 1.

    The recurrence holds for column 0 only when g is tied to f as in
    (f/x, f); pass ``first_column=True`` to check it there as well.
    """
    k_min = 0 if first_column else 1
    for n in range(min(matrix.dimension - 1, c_seq.order + 1)):
        for k in range(k_min, n + 2):
            acc = matrix[n, k - 1] if k >= 1 else Fraction(0)
            for i in range(n - k + 1):
                acc += c_seq[i] * matrix[n - i, k]
            if matrix[n + 1, k] != acc:
                return False
    return True


def realize_stretched(g: PowerSeries, h: PowerSeries, rows: int) -> TriangularMatrix:
    """Matrix with columns g*h^k for a "stretched" pair such as (g, x f).

    Rows are truncated to the lower triangle; for h = x f every column k
    vanishes above row 2k, so nothing is lost.
    """
    if rows - 1 > min(g.order, h.order):
        raise OrderExceeded(f"{rows} rows need series order {rows - 1}")
    col = g.truncate(rows - 1)
    hh = h.truncate(rows - 1)
    cols = [col]
    for _ in range(1, rows):
        col = col * hh
        cols.append(col)
    return TriangularMatrix([[cols[k][n] for k in range(n + 1)] for n in range(rows)])


def aerate_matrix(m: TriangularMatrix) -> TriangularMatrix:
    """Entry (i, j) = m^r((i+j)/2, (i-j)/2) when i-j is even, else 0.

    m^r is the reversal m^r(i, j) = m(i, i-j).
    """
    rev = m.reversal()
    d = m.dimension
    rows = []
    for i in range(d):
        row = []
        for j in range(i + 1):
            if (i - j) % 2:
                row.append(0)
            else:
                row.append(rev[(i + j) // 2, (i - j) // 2])
        rows.append(row)
    return TriangularMatrix(rows)


def realize(r: OrdinaryRiordan, rows: int) -> TriangularMatrix:
    return r.realize(rows)


def multiply(r: RiordanPair, s: RiordanPair) -> RiordanPair:
    return r.multiply(s)


def inverse(r: RiordanPair) -> RiordanPair:
    return r.inverse()
