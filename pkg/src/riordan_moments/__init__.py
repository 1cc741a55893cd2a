"""Exact rational toolkit for Riordan matrices, their production matrices and moment problems.

All arithmetic is over the rationals (:class:`fractions.Fraction`); nothing
is ever rounded.
"""

from .errors import (
    CompositionDomain,
    DegenerateFamily,
    ExpDomain,
    LogDomain,
    NoSeriesSqrt,
    NotAUnit,
    NotEnoughCoefficients,
    NotEnoughMoments,
    NotInvertible,
    NotProper,
    NotRevertible,
    NotTridiagonal,
    OrderExceeded,
    ParseError,
    RiordanError,
    SingularHankel,
)
from .exact import Rational, format_rational, rational
from .expr import parse_series
from .expriordan import ExponentialRiordan, production_from_cr
from .families import FAMILY_NAMES, MomentFamily, closed_form, family
from .matrix import ProductionMatrix, TriangularMatrix, TridiagonalVerdict, determinant
from .orthopoly import (
    MomentSequence,
    PolynomialFamily,
    generate_polynomials,
    hankel_direct,
    hankel_product,
    hankel_transform,
    jfraction_from_moments,
    moments_from_array_column,
    moments_from_recurrence,
    recurrence_from_moments,
)
from .powerseries import PowerSeries
from .production import (
    ThreeTermRecurrence,
    characteristic_polynomial,
    extract_recurrence,
    is_tridiagonal,
    production_matrix,
    riordan_stieltjes,
)
from .riordan import OrdinaryRiordan, RiordanPair

__version__ = "0.1.0"
