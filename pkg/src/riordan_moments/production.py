"""Production (Stieltjes) matrices and three-term recurrence data.

For an invertible lower-triangular L the production matrix is
P = L^-1 * Lbar, where Lbar is L without its first row; equivalently the
rows of L satisfy r_i = r_{i-1} P starting from r_0 = (1, 0, 0, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import NotEnoughCoefficients, NotInvertible, NotTridiagonal
from .exact import rational
from .expriordan import ExponentialRiordan
from .matrix import ProductionMatrix, TriangularMatrix, TridiagonalVerdict
from .riordan import OrdinaryRiordan, RiordanPair


@dataclass(frozen=True)
class ThreeTermRecurrence:
    """p_{n+1}(x) = (x - alpha_n) p_n(x) - beta_n p_{n-1}(x).

    ``alphas`` holds alpha_0, alpha_1, ...; ``betas`` holds beta_1, beta_2, ...
    Zero betas are allowed and reported through :attr:`degenerate`.
    """

    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(rational(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(rational(b) for b in self.betas))

    @classmethod
    def from_functions(
        cls,
        alpha: Callable[[int], object],
        beta: Callable[[int], object],
        depth: int,
    ) -> ThreeTermRecurrence:
        """alpha_0..alpha_depth and beta_1..beta_depth."""
        return cls(tuple(alpha(n) for n in range(depth + 1)), tuple(beta(n) for n in range(1, depth + 1)))

    @classmethod
    def constant(cls, alpha, beta, depth: int) -> ThreeTermRecurrence:
        return cls.from_functions(lambda n: alpha, lambda n: beta, depth)

    def alpha(self, n: int) -> Fraction:
        if n < 0 or n >= len(self.alphas):
            raise NotEnoughCoefficients(f"alpha_{n} not available (have alpha_0..alpha_{len(self.alphas) - 1})")
        return self.alphas[n]

    def beta(self, n: int) -> Fraction:
        if n < 1 or n > len(self.betas):
            raise NotEnoughCoefficients(f"beta_{n} not available (have beta_1..beta_{len(self.betas)})")
        return self.betas[n - 1]

    @property
    def degenerate(self) -> list[int]:
        """Indices n with beta_n = 0 (Favard's condition fails there)."""
        return [n for n, b in enumerate(self.betas, start=1) if b == 0]

    @property
    def is_orthogonal(self) -> bool:
        return not self.degenerate

    def truncate(self, depth: int) -> ThreeTermRecurrence:
        return ThreeTermRecurrence(self.alphas[: depth + 1], self.betas[:depth])

    def production(self, size: int | None = None) -> ProductionMatrix:
        """The tri-diagonal matrix with alpha on the diagonal and beta below it."""
        if size is None:
            size = min(len(self.alphas), len(self.betas) + 1)
        if size > len(self.alphas) or size - 1 > len(self.betas):
            raise NotEnoughCoefficients(f"size {size} needs alpha_0..alpha_{size - 1} and beta_1..beta_{size - 1}")
        return ProductionMatrix.tridiagonal(self.alphas, self.betas, size)


def production_matrix(m: TriangularMatrix) -> ProductionMatrix:
    """P = M^-1 * Mbar restricted to the rows an N-row M determines (N-1 rows)."""
    d = m.dimension
    if d < 2:
        raise ValueError("a production matrix needs at least two realized rows")
    if not m.is_invertible():
        raise NotInvertible("matrix has a zero diagonal entry")
    inv = m.leading(d - 1).inverse()
    rows = []
    for i in range(d - 1):
        inv_row = inv.row(i)
        row = []
        for j in range(i + 2):
            total = Fraction(0)
            for k in range(max(j - 1, 0), i + 1):
                coef = inv_row[k]
                if coef:
                    total += coef * m[k + 1, j]
            row.append(total)
        rows.append(row)
    return ProductionMatrix(rows)


def is_tridiagonal(p: ProductionMatrix) -> TridiagonalVerdict:
    return p.tridiagonal_verdict()


def extract_recurrence(p: ProductionMatrix) -> ThreeTermRecurrence:
    """alpha_n = P(n, n), beta_n = P(n, n-1)."""
    verdict = p.tridiagonal_verdict()
    if not verdict:
        raise NotTridiagonal(f"production matrix is not tri-diagonal at {verdict.witness}: {verdict.reason}", verdict.witness)
    bands = p.bands()
    return ThreeTermRecurrence(tuple(bands["diag"]), tuple(bands["sub"]))


def ordinary_stieltjes(r: OrdinaryRiordan, size: int | None = None) -> ProductionMatrix:
    """Column 0 is the Z-sequence, column j >= 1 is the A-sequence shifted down j-1."""
    a_seq, z_seq = r.a_and_z_sequences()
    limit = min(a_seq.order, z_seq.order) + 1
    if size is None:
        size = limit
    if size > limit:
        raise NotEnoughCoefficients(f"size {size} needs A and Z to order {size - 1}")

    def entry(i: int, j: int) -> Fraction:
        if j == 0:
            return z_seq[i]
        return a_seq[i - j + 1]

    return ProductionMatrix.from_function(entry, size)


def riordan_stieltjes(r: RiordanPair, size: int | None = None) -> ProductionMatrix:
    """Production matrix computed from the generating functions alone."""
    if isinstance(r, ExponentialRiordan):
        return r.production(size)
    if isinstance(r, OrdinaryRiordan):
        return ordinary_stieltjes(r, size)
    raise TypeError(f"not a Riordan array: {type(r).__name__}")


def characteristic_polynomial(square: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients (ascending) of det(x I - M), by Faddeev-LeVerrier."""
    n = len(square)
    m = [[rational(v) for v in row] for row in square]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    if n == 0:
        return coeffs
    # M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k)/k
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        prev_c = coeffs[n - k + 1]
        nxt = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                total = Fraction(0)
                for t in range(n):
                    if m[i][t] and mk[t][j]:
                        total += m[i][t] * mk[t][j]
                nxt[i][j] = total
            nxt[i][i] += prev_c
        mk = nxt
        trace = Fraction(0)
        for i in range(n):
            for t in range(n):
                if m[i][t] and mk[t][i]:
                    trace += m[i][t] * mk[t][i]
        coeffs[n - k] = -trace / k
    return coeffs
