"""Exact lower-triangular matrices, the common realization of arrays."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import NotInvertible, OrderExceeded
from .exact import format_rational, lcm_of_denominators, rational


class TriangularMatrix:
    """Lower-triangular matrix stored row by row; row n holds n+1 entries.

    Immutable. Entries above the diagonal are implicitly zero.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence]):
        built = []
        for n, row in enumerate(rows):
            row = [rational(v) for v in row]
            if len(row) > n + 1:
                if any(row[n + 1 :]):
                    raise ValueError(f"row {n} has nonzero entries above the diagonal")
                row = row[: n + 1]
            row.extend([Fraction(0)] * (n + 1 - len(row)))
            built.append(tuple(row))
        self._rows = tuple(built)

    @classmethod
    def from_function(cls, entry: Callable[[int, int], object], dimension: int) -> TriangularMatrix:
        return cls([[entry(n, k) for k in range(n + 1)] for n in range(dimension)])

    @classmethod
    def identity(cls, dimension: int) -> TriangularMatrix:
        return cls.from_function(lambda n, k: int(n == k), dimension)

    @property
    def dimension(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __len__(self) -> int:
        return len(self._rows)

    def entry(self, n: int, k: int) -> Fraction:
        if n >= self.dimension or n < 0:
            raise OrderExceeded(f"row {n} outside a {self.dimension}-row matrix")
        if k < 0 or k > n:
            return Fraction(0)
        return self._rows[n][k]

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        n, k = index
        return self.entry(n, k)

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self._rows[n]

    def column(self, k: int) -> list[Fraction]:
        return [self._rows[n][k] for n in range(k, self.dimension)]

    def first_column(self) -> list[Fraction]:
        return [row[0] for row in self._rows]

    def diagonal(self) -> list[Fraction]:
        return [row[n] for n, row in enumerate(self._rows)]

    def leading(self, dimension: int) -> TriangularMatrix:
        if dimension > self.dimension:
            raise OrderExceeded(f"cannot take {dimension} rows of a {self.dimension}-row matrix")
        return TriangularMatrix(self._rows[:dimension])

    def full(self) -> list[list[Fraction]]:
        d = self.dimension
        return [list(row) + [Fraction(0)] * (d - n - 1) for n, row in enumerate(self._rows)]

    def __eq__(self, other) -> bool:
        if isinstance(other, TriangularMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __matmul__(self, other: TriangularMatrix) -> TriangularMatrix:
        d = min(self.dimension, other.dimension)
        a, b = self._rows, other._rows
        out = []
        for n in range(d):
            row = []
            for k in range(n + 1):
                total = Fraction(0)
                for j in range(k, n + 1):
                    aj = a[n][j]
                    if aj:
                        total += aj * b[j][k]
                row.append(total)
            out.append(row)
        return TriangularMatrix(out)

    def apply(self, vector: Sequence) -> list[Fraction]:
        """Matrix times column vector (first ``dimension`` entries used)."""
        v = [rational(a) for a in vector]
        if len(v) < self.dimension:
            raise OrderExceeded("vector shorter than the matrix dimension")
        return [sum((a * v[k] for k, a in enumerate(row)), Fraction(0)) for row in self._rows]

    def is_invertible(self) -> bool:
        return all(self.diagonal())

    def inverse(self) -> TriangularMatrix:
        """Exact inverse by forward substitution."""
        d = self.dimension
        diag = self.diagonal()
        if not all(diag):
            n = next(i for i, v in enumerate(diag) if not v)
            raise NotInvertible(f"zero diagonal entry at row {n}")
        a = self._rows
        inv: list[list[Fraction]] = []
        for n in range(d):
            row = [Fraction(0)] * (n + 1)
            row[n] = 1 / diag[n]
            for k in range(n - 1, -1, -1):
                total = Fraction(0)
                for j in range(k, n):
                    anj = a[n][j]
                    if anj:
                        total += anj * inv[j][k]
                row[k] = -total / diag[n]
            inv.append(row)
        return TriangularMatrix(inv)

    def reversal(self) -> TriangularMatrix:
        """Entry (i, j) is m(i, i-j)."""
        return TriangularMatrix([list(reversed(row)) for row in self._rows])

    def row_sums(self) -> list[Fraction]:
        return [sum(row, Fraction(0)) for row in self._rows]

    def diagonal_sums(self) -> list[Fraction]:
        """sum_{k <= n/2} m(n-k, k)."""
        return [
            sum((self._rows[n - k][k] for k in range(n // 2 + 1)), Fraction(0))
            for n in range(self.dimension)
        ]

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"TriangularMatrix({self.to_strings()!r})"


@dataclass(frozen=True)
class TridiagonalVerdict:
    """Outcome of a tri-diagonality test; truthy iff tri-diagonal."""

    tridiagonal: bool
    witness: tuple[int, int] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.tridiagonal


class ProductionMatrix:
    """Lower-Hessenberg matrix: row i stores columns 0..i+1.

    A production matrix built from an N-row realization has N-1 rows, since
    the last realized row is consumed by the beheading.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence]):
        built = []
        for i, row in enumerate(rows):
            row = [rational(v) for v in row]
            if len(row) > i + 2:
                if any(row[i + 2 :]):
                    raise ValueError(f"row {i} has entries beyond the superdiagonal")
                row = row[: i + 2]
            row.extend([Fraction(0)] * (i + 2 - len(row)))
            built.append(tuple(row))
        self._rows = tuple(built)

    @classmethod
    def from_function(cls, entry: Callable[[int, int], object], size: int) -> ProductionMatrix:
        return cls([[entry(i, j) for j in range(i + 2)] for i in range(size)])

    @classmethod
    def tridiagonal(cls, diag: Sequence, sub: Sequence, size: int) -> ProductionMatrix:
        """Unit superdiagonal, ``diag[i]`` on the diagonal, ``sub[i-1]`` at (i, i-1)."""

        def entry(i, j):
            if j == i + 1:
                return 1
            if j == i:
                return diag[i]
            if j == i - 1:
                return sub[i - 1]
            return 0

        return cls.from_function(entry, size)

    @classmethod
    def shift(cls, size: int) -> ProductionMatrix:
        return cls.from_function(lambda i, j: int(j == i + 1), size)

    @property
    def size(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Fraction:
        if i < 0 or i >= self.size:
            raise OrderExceeded(f"row {i} outside a production matrix of size {self.size}")
        if j < 0 or j > i + 1:
            return Fraction(0)
        return self._rows[i][j]

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        return self.entry(*index)

    def __eq__(self, other) -> bool:
        if isinstance(other, ProductionMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def leading(self, size: int) -> ProductionMatrix:
        if size > self.size:
            raise OrderExceeded(f"cannot take {size} rows of a size-{self.size} production matrix")
        return ProductionMatrix(self._rows[:size])

    def agrees_with(self, other: ProductionMatrix) -> bool:
        n = min(self.size, other.size)
        return self._rows[:n] == other._rows[:n]

    def square(self, n: int) -> list[list[Fraction]]:
        """Leading n x n principal submatrix."""
        if n > self.size:
            raise OrderExceeded(f"{n}x{n} block of a size-{self.size} production matrix")
        return [[self.entry(i, j) for j in range(n)] for i in range(n)]

    def bands(self) -> dict[str, list[Fraction]]:
        return {
            "sub": [self._rows[i][i - 1] for i in range(1, self.size)],
            "diag": [self._rows[i][i] for i in range(self.size)],
            "super": [self._rows[i][i + 1] for i in range(self.size)],
        }

    def tridiagonal_verdict(self) -> TridiagonalVerdict:
        """Zero outside bands -1..+1 and a unit superdiagonal; first offender in row-major order."""
        for i, row in enumerate(self._rows):
            for j in range(i - 1):
                if row[j]:
                    return TridiagonalVerdict(False, (i, j), f"nonzero entry {format_rational(row[j])} below the subdiagonal")
            if row[i + 1] != 1:
                return TridiagonalVerdict(False, (i, i + 1), f"superdiagonal entry {format_rational(row[i + 1])} is not 1")
        return TridiagonalVerdict(True)

    def is_tridiagonal(self) -> TridiagonalVerdict:
        return self.tridiagonal_verdict()

    def stack(self, rows: int) -> TriangularMatrix:
        """Rows r_0 = (1, 0, ...), r_i = r_{i-1} P."""
        if rows - 1 > self.size:
            raise OrderExceeded(f"{rows} rows need a production matrix of size {rows - 1}")
        out = [[Fraction(1)]]
        for i in range(1, rows):
            prev = out[-1]
            row = []
            for k in range(i + 1):
                total = Fraction(0)
                for j in range(max(k - 1, 0), i):
                    pj = prev[j]
                    if pj:
                        total += pj * self.entry(j, k)
                row.append(total)
            out.append(row)
        return TriangularMatrix(out)

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"ProductionMatrix({self.to_strings()!r})"


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is scaled to integers by the lcm of its denominators; the
    product of those scale factors is divided out at the end.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = 1
    a: list[list[int]] = []
    for row in matrix:
        row = [rational(v) for v in row]
        if len(row) != n:
            raise ValueError("determinant needs a square matrix")
        d = lcm_of_denominators(row)
        scale *= d
        a.append([int(v * d) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)
