"""Exception hierarchy shared by every module in the package."""


class RiordanError(Exception):
    """Base class for all domain errors raised by this package."""


class OrderExceeded(RiordanError, IndexError):
    """A coefficient or row beyond the known truncation order was requested."""


class NotAUnit(RiordanError, ZeroDivisionError):
    pass


class CompositionDomain(RiordanError, ValueError):
    pass


class NotRevertible(RiordanError, ValueError):
    pass


class NoSeriesSqrt(RiordanError, ValueError):
    pass


class ExpDomain(RiordanError, ValueError):
    pass


class LogDomain(RiordanError, ValueError):
    pass


class NotProper(RiordanError, ValueError):
    """Pair (g, f) violates g(0)=1, f(0)=0, [x]f=1."""


class NotInvertible(RiordanError, ValueError):
    pass


class NotTridiagonal(RiordanError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotEnoughMoments(RiordanError, ValueError):
    pass


class NotEnoughCoefficients(RiordanError, ValueError):
    pass


class SingularHankel(RiordanError, ArithmeticError):
    def __init__(self, message, depth=None):
        super().__init__(message)
        self.depth = depth


class DegenerateFamily(RiordanError, ValueError):
    pass


class ParseError(RiordanError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
