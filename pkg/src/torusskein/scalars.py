"""Coefficient arithmetic: Laurent polynomials in t, their fraction field, and
complex numbers obtained by specializing t.

Exact scalars are :class:`RationalScalar` values kept in a canonical form so
that equality is structural.  Numeric scalars wrap a Python ``complex``.  A
:class:`ScalarContext` records which of the two worlds a computation lives
in, plus the value of t and the degeneracy tolerance for the numeric case.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import DegenerateScalar, DivisionByZero, ModeMismatch

DEFAULT_TOLERANCE = 1e-12


# ----------------------------------------------------------------------------
# dense integer polynomials (lists, lowest degree first)
# ----------------------------------------------------------------------------

def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(a: List[int]) -> List[int]:
    g = _content(a)
    if g > 1:
        a = [c // g for c in a]
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _prem(a: List[int], b: List[int]) -> List[int]:
    """Pseudo-remainder of a by b, up to a positive power of lc(b)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[i + shift] -= lr * bc
        _trim(r)
    return r


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Primitive gcd of two integer polynomials, leading coefficient positive.

    Uses the primitive polynomial remainder sequence, so the result agrees with
    the gcd over the rationals up to a rational multiple.
    """
    a = _primitive(_trim(list(a)))
    b = _primitive(_trim(list(b)))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [1]
        r = _prem(a, b)
        a, b = b, _primitive(r) if r else []
    return a


def poly_divexact(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Quotient a / b over the integers; raises ArithmeticError if inexact."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return []
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db]
        if c == 0:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[i] = qc
        for j, bc in enumerate(b):
            r[i + j] -= qc * bc
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


# ----------------------------------------------------------------------------
# Laurent polynomials
# ----------------------------------------------------------------------------

class LaurentPoly:
    """Element of Z[t, 1/t], stored densely as ``low`` plus a coefficient tuple.

    The first and last stored coefficients are nonzero; the zero polynomial has
    an empty tuple.  Instances are immutable.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, terms: Optional[Dict[int, int]] = None):
        terms = {int(k): int(v) for k, v in (terms or {}).items() if v}
        if not terms:
            self._set(0, ())
            return
        low, high = min(terms), max(terms)
        self._set(low, tuple(terms.get(k, 0) for k in range(low, high + 1)))

    def _set(self, low: int, coeffs: Tuple[int, ...]) -> None:
        object.__setattr__(self, "low", low if coeffs else 0)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def _dense(cls, low: int, coeffs: Sequence[int]) -> "LaurentPoly":
        c = list(coeffs)
        _trim(c)
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        obj = cls.__new__(cls)
        obj._set(low + start, tuple(c[start:]))
        return obj

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "LaurentPoly":
        return cls._dense(k, (coeff,))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls._dense(0, (c,))

    # -- inspection ---------------------------------------------------------
    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def terms(self) -> Dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.low == 0 and self.coeffs == (1,)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def content(self) -> int:
        return _content(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.low, self.coeffs)))
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for i, c in enumerate(self.coeffs, self.low - low):
            out[i] += c
        for i, c in enumerate(other.coeffs, other.low - low):
            out[i] += c
        return LaurentPoly._dense(low, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._dense(self.low, [-c for c in self.coeffs])

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return LaurentPoly._dense(self.low + other.low, [a[0] * c for c in b])
        if len(b) == 1:
            return LaurentPoly._dense(self.low + other.low, [b[0] * c for c in a])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._dense(self.low + other.low, out)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly._dense(self.low, [k * c for c in self.coeffs])

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        if not self.coeffs or k == 0:
            return self
        obj = LaurentPoly.__new__(LaurentPoly)
        obj._set(self.low + k, self.coeffs)
        return obj

    def evaluate(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc * z ** self.low if self.low else acc

    # -- text ---------------------------------------------------------------
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.high, self.low - 1, -1):
            c = self.coeffs[k - self.low]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms()!r})"

    def to_json(self) -> Dict[str, str]:
        return {str(k): str(v) for k, v in sorted(self.terms().items())}

    @classmethod
    def from_json(cls, data: Dict[str, str]) -> "LaurentPoly":
        return cls({int(k): int(v) for k, v in data.items()})


# ----------------------------------------------------------------------------
# exact scalars
# ----------------------------------------------------------------------------

_ONE_POLY = LaurentPoly.constant(1)


def _canonical(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return num, _ONE_POLY
    # t is a unit: move the denominator's t-power onto the numerator
    nlow = num.low - den.low
    nc, dc = list(num.coeffs), list(den.coeffs)
    if len(dc) > 1:
        g = poly_gcd(nc, dc)
        if len(g) > 1:
            nc = poly_divexact(nc, g)
            dc = poly_divexact(dc, g)
    c = math.gcd(_content(nc), _content(dc))
    if dc[-1] < 0:
        c = -c
    if c != 1:
        nc = [x // c for x in nc]
        dc = [x // c for x in dc]
    return LaurentPoly._dense(nlow, nc), LaurentPoly._dense(0, dc)


class RationalScalar:
    """Element of Q(t) in canonical form.

    Canonical means: the denominator is an ordinary polynomial with nonzero
    constant term, numerator and denominator are coprime with joint content 1,
    and the denominator's leading coefficient is positive.  Two instances are
    equal exactly when their fields are identical.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num, den = _canonical(_as_poly(num), _as_poly(den))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RationalScalar is immutable")

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly = _ONE_POLY) -> "RationalScalar":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "RationalScalar":
        return cls._raw(LaurentPoly.monomial(k, coeff))

    def canonicalize(self) -> "RationalScalar":
        return RationalScalar(self.num, self.den)

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RationalScalar(other)
        if not isinstance(other, RationalScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.num, self.den)))
        return self._hash

    def _coerce(self, other) -> "RationalScalar":
        if isinstance(other, RationalScalar):
            return other
        if isinstance(other, (int, LaurentPoly)) and not isinstance(other, bool):
            return RationalScalar._raw(_as_poly(other))
        if isinstance(other, (NumericScalar, complex, float)):
            raise ModeMismatch("cannot combine an exact scalar with a numeric one")
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den.is_one() and other.den.is_one():
            return RationalScalar._raw(self.num + other.num)
        if self.den == other.den:
            return RationalScalar(self.num + other.num, self.den)
        return RationalScalar(self.num * other.den + other.num * self.den,
                              self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalScalar":
        return RationalScalar._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RationalScalar._raw(LaurentPoly())
        if self.den.is_one() and other.den.is_one():
            return RationalScalar._raw(self.num * other.num)
        return RationalScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise DivisionByZero("division by the zero scalar")
        if other.den.is_one() and other.num.is_monomial():
            c = other.num.coeffs[0]
            if c in (1, -1):
                return RationalScalar._raw(self.num.shift(-other.num.low).scale(c), self.den)
        return RationalScalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def shift(self, k: int) -> "RationalScalar":
        """Multiply by t**k (stays canonical)."""
        return RationalScalar._raw(self.num.shift(k), self.den)

    def evaluate(self, z: complex, tolerance: float = DEFAULT_TOLERANCE) -> "NumericScalar":
        return scalar_eval(self, z, tolerance)

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalScalar({self})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RationalScalar":
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot build a Laurent polynomial from {type(x).__name__}")


# ----------------------------------------------------------------------------
# numeric scalars
# ----------------------------------------------------------------------------

class NumericScalar:
    """A finite complex number standing in for a scalar at a fixed t."""

    __slots__ = ("value",)

    def __init__(self, value: complex = 0j):
        value = complex(value)
        if not (cmath.isfinite(value)):
            raise DegenerateScalar(f"non-finite numeric scalar {value!r}")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("NumericScalar is immutable")

    def _coerce(self, other):
        if isinstance(other, NumericScalar):
            return other.value
        if isinstance(other, (int, float, complex)) and not isinstance(other, bool):
            return complex(other)
        if isinstance(other, (RationalScalar, LaurentPoly)):
            raise ModeMismatch("cannot combine a numeric scalar with an exact one")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else NumericScalar(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else NumericScalar(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else NumericScalar(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else NumericScalar(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return NumericScalar(-self.value)

    def divide(self, other, tolerance: float = DEFAULT_TOLERANCE) -> "NumericScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot divide by {type(other).__name__}")
        if abs(o) <= tolerance:
            raise DegenerateScalar(
                f"numeric divisor {o!r} within {tolerance:g} of zero "
                "(t is numerically a root of unity here)")
        return NumericScalar(self.value / o)

    def __truediv__(self, other):
        return self.divide(other)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NumericScalar(o).divide(self)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, NumericScalar):
            return self.value == other.value
        if isinstance(other, (int, float, complex)) and not isinstance(other, bool):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __abs__(self) -> float:
        return abs(self.value)

    def __complex__(self) -> complex:
        return self.value

    def __str__(self) -> str:
        return format_complex(self.value)

    def __repr__(self) -> str:
        return f"NumericScalar({self.value!r})"

    def to_json(self) -> dict:
        return {"re": self.value.real, "im": self.value.imag}

    @classmethod
    def from_json(cls, data: dict) -> "NumericScalar":
        return cls(complex(float(data["re"]), float(data["im"])))


def format_complex(z: complex, digits: int = 12) -> str:
    """Parser-compatible text such as ``(0.7-0.3*i)``."""
    re_s = f"{z.real:.{digits}g}"
    im = z.imag
    sign = "-" if math.copysign(1.0, im) < 0 else "+"
    return f"({re_s}{sign}{abs(im):.{digits}g}*i)"


Scalar = Union[RationalScalar, NumericScalar]


# ----------------------------------------------------------------------------
# context
# ----------------------------------------------------------------------------

class Mode(str, enum.Enum):
    EXACT = "exact"
    NUMERIC = "numeric"


@lru_cache(maxsize=4096)
def _exact_monomial(k: int) -> RationalScalar:
    return RationalScalar.monomial(k)


@dataclass(frozen=True)
class ScalarContext:
    """Which coefficient field a computation uses."""

    mode: Mode = Mode.EXACT
    t_value: Optional[complex] = None
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if self.mode is Mode.NUMERIC:
            if self.t_value is None:
                raise ValueError("numeric mode needs a value for t")
            object.__setattr__(self, "t_value", complex(self.t_value))
            if not abs(self.t_value) > 0:
                raise ValueError("t must be nonzero")
            if self.tolerance < 0:
                raise ValueError("tolerance must be nonnegative")
        elif self.t_value is not None:
            raise ValueError("exact mode takes no value for t")

    @classmethod
    def numeric(cls, t: complex, tolerance: float = DEFAULT_TOLERANCE) -> "ScalarContext":
        return cls(Mode.NUMERIC, complex(t), tolerance)

    @property
    def is_exact(self) -> bool:
        return self.mode is Mode.EXACT

    def zero(self) -> Scalar:
        return RationalScalar._raw(LaurentPoly()) if self.is_exact else NumericScalar(0j)

    def one(self) -> Scalar:
        return self.from_int(1)

    def from_int(self, n: int) -> Scalar:
        if self.is_exact:
            return RationalScalar._raw(LaurentPoly.constant(n))
        return NumericScalar(n)

    def monomial(self, k: int) -> Scalar:
        if self.is_exact:
            return _exact_monomial(k)
        return NumericScalar(self.t_value ** k)

    def times_monomial(self, s: Scalar, k: int) -> Scalar:
        """s * t**k."""
        if k == 0:
            return s
        if self.is_exact:
            return s.shift(k)
        return NumericScalar(s.value * self.t_value ** k)

    def coerce(self, x) -> Scalar:
        """Accept ints (and complex numbers in numeric mode); reject the wrong mode."""
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if self.is_exact:
            if isinstance(x, RationalScalar):
                return x
            if isinstance(x, (int, LaurentPoly)):
                return RationalScalar._raw(_as_poly(x))
            if isinstance(x, (NumericScalar, float, complex)):
                raise ModeMismatch("numeric value in an exact context")
        else:
            if isinstance(x, NumericScalar):
                return x
            if isinstance(x, (int, float, complex)):
                return NumericScalar(x)
            if isinstance(x, RationalScalar):
                raise ModeMismatch("exact value in a numeric context")
        raise TypeError(f"not a scalar: {x!r}")

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return scalar_div(a, b, self)

    def evaluate(self, s: Scalar) -> Scalar:
        """Bring an exact scalar into this context (identity in exact mode)."""
        if self.is_exact or isinstance(s, NumericScalar):
            return self.coerce(s)
        return scalar_eval(s, self.t_value, self.tolerance)


EXACT = ScalarContext()


# ----------------------------------------------------------------------------
# functional interface
# ----------------------------------------------------------------------------

def _check_same_kind(a, b) -> None:
    if type(a) is not type(b):
        raise ModeMismatch(f"mixed scalar kinds: {type(a).__name__} and {type(b).__name__}")


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    _check_same_kind(a, b)
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    _check_same_kind(a, b)
    return a * b


def scalar_div(a: Scalar, b: Scalar, ctx: Optional[ScalarContext] = None) -> Scalar:
    _check_same_kind(a, b)
    if isinstance(a, NumericScalar):
        tol = ctx.tolerance if ctx is not None else DEFAULT_TOLERANCE
        return a.divide(b, tol)
    return a / b


def monomial(k: int, ctx: ScalarContext = EXACT) -> Scalar:
    return ctx.monomial(k)


def scalar_eval(a: RationalScalar, t0: complex,
                tolerance: float = DEFAULT_TOLERANCE) -> NumericScalar:
    """Specialize an exact scalar at ``t = t0``."""
    t0 = complex(t0)
    if t0 == 0 and (a.num.low < 0 or a.den.low < 0):
        raise DegenerateScalar("negative power of t evaluated at t = 0")
    d = a.den.evaluate(t0)
    if abs(d) <= tolerance:
        raise DegenerateScalar(f"denominator {a.den} vanishes at t = {t0}")
    return NumericScalar(a.num.evaluate(t0) / d)
