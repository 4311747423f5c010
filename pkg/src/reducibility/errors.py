"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by :mod:`reducibility`."""


class ArityMismatch(AlgebraError, ValueError):
    pass


class ExponentOverflow(AlgebraError, OverflowError):
    pass


class OrderMismatch(AlgebraError, ValueError):
    pass


class ParseError(AlgebraError, ValueError):
    pass


class RingMismatch(AlgebraError, ValueError):
    pass


class ZeroDivisorError(AlgebraError, ZeroDivisionError):
    """Raised when a colon by the zero element or zero ideal is requested."""


class CeilingExceeded(AlgebraError, RuntimeError):
    """A search window or linear-span closure grew past its configured ceiling."""


class InfiniteLength(AlgebraError, ValueError):
    """The requested quotient does not have finite length."""


class NotParameterIdeal(AlgebraError, ValueError):
    pass


class NotInSemigroup(AlgebraError, ValueError):
    pass


class HypothesisViolation(AlgebraError, RuntimeError):
    """Two computations that must agree under the stated hypotheses disagree."""
