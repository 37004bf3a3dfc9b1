"""Exception hierarchy shared by the whole package."""


class SkeinError(Exception):
    """Base class for computation errors (CLI exit status 1)."""


class ModeMismatch(SkeinError, TypeError):
    """Operands live in different scalar contexts (exact vs numeric, or different t)."""


class DivisionByZero(SkeinError, ZeroDivisionError):
    """Exact division by the zero scalar."""


class DegenerateScalar(SkeinError, ArithmeticError):
    """A numeric divisor is within tolerance of zero.

    In practice this means the chosen t is (numerically) a root of unity for
    the exponent involved.
    """


class ZeroCurve(SkeinError, ValueError):
    """An operation that needs a nonempty curve was handed (0, 0)."""


class NonPrimitiveCurve(SkeinError, ValueError):
    """A simple-diagram atom was given a curve with gcd(p, q) != 1."""


class ParityMismatch(SkeinError, ValueError):
    """x + z or y + w is odd, so no commutator witness exists in this form."""


class DependentCurves(SkeinError, ValueError):
    """The two curves are linearly dependent (zero determinant)."""


class ParseError(Exception):
    """Malformed expression (CLI exit status 2)."""

    def __init__(self, message: str, position: int, expected=()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
