"""Monic orthogonal polynomials, moment sequences and Hankel transforms.

Moments are produced from a recurrence by evaluating the finite J-fraction

    mu_0 / (1 - alpha_0 x - beta_1 x^2 / (1 - alpha_1 x - beta_2 x^2 / ...))

bottom-up over truncated series.  Cutting the fraction at depth D only
disturbs coefficients from x^(2D) on, so D = ceil(n/2) levels give n exact
moments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .errors import NotEnoughCoefficients, NotEnoughMoments, SingularHankel
from .exact import format_rational, rational
from .expriordan import ExponentialRiordan
from .matrix import TriangularMatrix, determinant
from .powerseries import PowerSeries
from .production import ThreeTermRecurrence
from .riordan import OrdinaryRiordan


@dataclass(frozen=True)
class MomentSequence:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(rational(v) for v in self.values)
        if not values:
            raise ValueError("a moment sequence needs at least one value")
        object.__setattr__(self, "values", values)

    @property
    def normalized(self) -> bool:
        return self.values[0] == 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    def as_series(self) -> PowerSeries:
        return PowerSeries(self.values)

    def to_strings(self) -> list[str]:
        return [format_rational(v) for v in self.values]


MomentLike = Union[MomentSequence, Sequence]


def _moments(mu: MomentLike) -> MomentSequence:
    return mu if isinstance(mu, MomentSequence) else MomentSequence(tuple(mu))


@dataclass(frozen=True)
class PolynomialFamily:
    """Row n of ``coefficients`` holds p_n in ascending powers of x."""

    coefficients: TriangularMatrix

    def __len__(self) -> int:
        return self.coefficients.dimension

    def polynomial(self, n: int) -> tuple[Fraction, ...]:
        return self.coefficients.row(n)

    def evaluate(self, n: int, x) -> Fraction:
        x = rational(x)
        acc = Fraction(0)
        for c in reversed(self.polynomial(n)):
            acc = acc * x + c
        return acc

    @property
    def monic(self) -> bool:
        return all(v == 1 for v in self.coefficients.diagonal())


def generate_polynomials(rec: ThreeTermRecurrence, count: int) -> PolynomialFamily:
    """p_0..p_{count-1} from p_0 = 1, p_1 = x - alpha_0 and the recurrence.

    Coefficient rows obey a(n+1,k) = a(n,k-1) - alpha_n a(n,k) - beta_n a(n-1,k).
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rows: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(count - 1):
        alpha = rec.alpha(n)
        beta = rec.beta(n) if n >= 1 else Fraction(0)
        cur = rows[n]
        prev = rows[n - 1] if n >= 1 else []
        nxt = []
        for k in range(n + 2):
            v = cur[k - 1] if k >= 1 else Fraction(0)
            if k <= n:
                v -= alpha * cur[k]
            if k <= n - 1:
                v -= beta * prev[k]
            nxt.append(v)
        rows.append(nxt)
    return PolynomialFamily(TriangularMatrix(rows))


def moments_from_recurrence(rec: ThreeTermRecurrence, count: int, mu0=1) -> MomentSequence:
    """mu_0..mu_{count-1} from the J-fraction of ``rec``.

    alpha_h is needed when 2h+1 <= count-1 and beta_h when 2h <= count-1;
    coefficients that cannot influence the requested moments may be absent.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    order = count - 1
    depth = (count + 1) // 2

    def alpha(h: int) -> Fraction:
        if 2 * h + 1 > order:
            return rec.alphas[h] if h < len(rec.alphas) else Fraction(0)
        return rec.alpha(h)

    def beta(h: int) -> Fraction:
        if 2 * h > order:
            return rec.betas[h - 1] if h - 1 < len(rec.betas) else Fraction(0)
        return rec.beta(h)

    x = PowerSeries.x(order)
    x2 = PowerSeries.monomial(2, order)
    tail = PowerSeries.one(order)
    for h in range(depth - 1, -1, -1):
        tail = 1 / (1 - alpha(h) * x - beta(h + 1) * x2 * tail)
    return MomentSequence(tuple(rational(mu0) * v for v in tail))


def moments_from_array_column(source, exponential: bool = False, count: int | None = None) -> MomentSequence:
    """First column of a moment array.

    ``source`` may be a realized TriangularMatrix (first column read as is),
    a Riordan pair (g's coefficients, times n! for an exponential array), or
    the series g itself with ``exponential`` saying whether to scale by n!.
    """
    if isinstance(source, TriangularMatrix):
        values = source.first_column()
    else:
        if isinstance(source, ExponentialRiordan):
            g, exponential = source.g, True
        elif isinstance(source, OrdinaryRiordan):
            g, exponential = source.g, False
        elif isinstance(source, PowerSeries):
            g = source
        else:
            raise TypeError(f"cannot read moments from {type(source).__name__}")
        values = g.egf_terms() if exponential else list(g.coeffs)
    if count is not None:
        if count > len(values):
            raise NotEnoughMoments(f"asked for {count} moments, source has {len(values)}")
        values = values[:count]
    return MomentSequence(tuple(values))


def hankel_matrix(mu: MomentLike, n: int, shift: int = 0) -> list[list[Fraction]]:
    mu = _moments(mu)
    if len(mu) < 2 * n + 1 + shift:
        raise NotEnoughMoments(f"h_{n} needs {2 * n + 1 + shift} moments, got {len(mu)}")
    return [[mu[i + j + shift] for j in range(n + 1)] for i in range(n + 1)]


def hankel_direct(mu: MomentLike, n: int) -> Fraction:
    """det(mu_{i+j})_{0<=i,j<=n} by fraction-free elimination."""
    return determinant(hankel_matrix(mu, n))


def hankel_transform(mu: MomentLike, n_max: int) -> list[Fraction]:
    return [hankel_direct(mu, n) for n in range(n_max + 1)]


def hankel_product(rec: ThreeTermRecurrence, mu0, n: int) -> Fraction:
    """h_n = mu_0^(n+1) prod_{k=1}^n beta_k^(n+1-k); independent of the alphas."""
    h = rational(mu0) ** (n + 1)
    for k in range(1, n + 1):
        h *= rec.beta(k) ** (n + 1 - k)
    return h


def _delta(mu: MomentSequence, n: int) -> Fraction:
    if n < 0:
        return Fraction(1)
    return determinant([[mu[i + j] for j in range(n + 1)] for i in range(n + 1)])


def _delta_prime(mu: MomentSequence, n: int) -> Fraction:
    """Hankel-type determinant with rows 0..n and columns 0..n-1, n+1."""
    if n < 0:
        return Fraction(0)
    cols = list(range(n)) + [n + 1]
    return determinant([[mu[i + j] for j in cols] for i in range(n + 1)])


def recurrence_from_moments(mu: MomentLike, n: int) -> ThreeTermRecurrence:
    """alpha_0..alpha_n and beta_1..beta_n from 2n+2 moments via

    alpha_k = D'_k/D_k - D'_{k-1}/D_{k-1},   beta_k = D_{k-2} D_k / D_{k-1}^2.
    """
    mu = _moments(mu)
    if len(mu) < 2 * n + 2:
        raise NotEnoughMoments(f"recovering alpha_0..alpha_{n} needs {2 * n + 2} moments, got {len(mu)}")
    deltas = {k: _delta(mu, k) for k in range(-2, n + 1)}
    deltas[-2] = Fraction(1)
    primes = {k: _delta_prime(mu, k) for k in range(-1, n + 1)}
    for k in range(0, n + 1):
        if deltas[k] == 0:
            raise SingularHankel(f"Hankel determinant Delta_{k} vanishes; recurrence undefined from index {k}", k)
    alphas = []
    for k in range(n + 1):
        prev = primes[k - 1] / deltas[k - 1]
        alphas.append(primes[k] / deltas[k] - prev)
    betas = [deltas[k - 2] * deltas[k] / deltas[k - 1] ** 2 for k in range(1, n + 1)]
    return ThreeTermRecurrence(tuple(alphas), tuple(betas))


def jfraction_from_moments(mu: MomentLike, n: int | None = None) -> ThreeTermRecurrence:
    """Expand the moment g.f. as a J-fraction by repeated series inversion.

    Independent of determinants: with g_h = 1/(1 - alpha_h x - beta_{h+1} x^2 g_{h+1}),
    alpha_h = [x] g_h and beta_{h+1} x^2 g_{h+1} = 1 - alpha_h x - 1/g_h.

    Every coefficient the moments determine is returned, capped at alpha_n and
    beta_n when ``n`` is given: m moments fix alpha_0..alpha_{(m-2)//2} and
    beta_1..beta_{(m-1)//2}.  So 2n+2 moments give a full depth-n recurrence
    and 2n+1 give beta_1..beta_n, which is all the Hankel product needs.
    """
    mu = _moments(mu)
    avail_a, avail_b = (len(mu) - 2) // 2, (len(mu) - 1) // 2
    if n is None:
        n_a, n_b = avail_a, avail_b
    else:
        if n < 0 or avail_b < n:
            raise NotEnoughMoments(f"a depth-{n} J-fraction needs at least {2 * n + 1} moments, got {len(mu)}")
        n_a, n_b = min(n, avail_a), n
    if mu[0] == 0:
        raise SingularHankel("mu_0 = 0", 0)
    g = PowerSeries(mu.values[: 2 * n_b + 2]) / mu[0]
    alphas, betas = [], []
    for h in range(n_b + 1):
        if h <= n_a:
            alphas.append(g[1])
        if h == n_b:
            break
        t = 1 - g[1] * PowerSeries.x(g.order) - 1 / g
        beta = t[2]
        if beta == 0:
            raise SingularHankel(f"beta_{h + 1} = 0: the J-fraction terminates and Delta_{h + 1} vanishes", h + 1)
        betas.append(beta)
        g = t.shift(-2) / beta
    return ThreeTermRecurrence(tuple(alphas), tuple(betas))


def binomial_transform(mu: MomentLike) -> MomentSequence:
    """b_n = sum_k C(n, k) a_k."""
    mu = _moments(mu)
    return MomentSequence(
        tuple(sum((comb(n, k) * mu[k] for k in range(n + 1)), Fraction(0)) for n in range(len(mu)))
    )


def expand_in_family(family: PolynomialFamily, moment_array: TriangularMatrix, n: int) -> list[Fraction]:
    """Coefficients of sum_i l(n,i) p_i(x); equals x^n when the arrays are inverse."""
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        lni = moment_array[n, i]
        if lni:
            for k, c in enumerate(family.polynomial(i)):
                out[k] += lni * c
    return out
