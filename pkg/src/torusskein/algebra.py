"""The skein algebra of the torus in the Frohman-Gelca T-basis.

Curves are indexed by integer pairs up to sign.  The index (0, 0) stands for
the empty skein ``phi`` (the multiplicative identity), *not* for the symbol
(0,0)_T; the latter equals ``2 * phi`` and only shows up as an intermediate
in :func:`multiply_basis` and in the T_0 term of the Chebyshev conversions.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple

from .errors import ModeMismatch, NonPrimitiveCurve, ZeroCurve
from .scalars import EXACT, Scalar, ScalarContext


class CurveIndex(NamedTuple):
    """Canonical index: p > 0, or p == 0 and q >= 0."""

    p: int
    q: int

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


PHI = CurveIndex(0, 0)


def canonicalize(p: int, q: int) -> CurveIndex:
    if p < 0 or (p == 0 and q < 0):
        return CurveIndex(-p, -q)
    return CurveIndex(p, q)


def is_canonical(p: int, q: int) -> bool:
    return p > 0 or (p == 0 and q >= 0)


def det(a: Tuple[int, int], b: Tuple[int, int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


def gcd_split(c: Tuple[int, int]) -> Tuple[int, CurveIndex]:
    """Return ``(n, primitive)`` with ``c = n * primitive`` (up to sign)."""
    p, q = c
    if p == 0 and q == 0:
        raise ZeroCurve("the empty skein has no gcd decomposition")
    n = math.gcd(p, q)
    return n, canonicalize(p // n, q // n)


# ----------------------------------------------------------------------------
# elements
# ----------------------------------------------------------------------------

class SkeinElement:
    """Finite linear combination of T-basis elements.

    ``terms`` maps canonical :class:`CurveIndex` keys to nonzero scalars and is
    kept in lexicographic key order.  Treat instances as immutable.
    """

    __slots__ = ("terms", "ctx")

    def __init__(self, terms: Optional[Mapping] = None, ctx: ScalarContext = EXACT):
        acc: Dict[CurveIndex, Scalar] = {}
        for key, coeff in (terms or {}).items():
            c = canonicalize(*key)
            s = ctx.coerce(coeff)
            acc[c] = acc[c] + s if c in acc else s
        self._init(acc, ctx)

    def _init(self, acc: Dict[CurveIndex, Scalar], ctx: ScalarContext) -> None:
        self.terms = {k: acc[k] for k in sorted(acc) if acc[k]}
        self.ctx = ctx

    @classmethod
    def _clean(cls, acc: Dict[CurveIndex, Scalar], ctx: ScalarContext) -> "SkeinElement":
        obj = cls.__new__(cls)
        obj._init(acc, ctx)
        return obj

    @classmethod
    def zero(cls, ctx: ScalarContext = EXACT) -> "SkeinElement":
        return cls._clean({}, ctx)

    @classmethod
    def phi(cls, ctx: ScalarContext = EXACT) -> "SkeinElement":
        return cls._clean({PHI: ctx.one()}, ctx)

    @classmethod
    def basis(cls, p: int, q: int, coeff=1, ctx: ScalarContext = EXACT) -> "SkeinElement":
        return cls({(p, q): coeff}, ctx)

    @classmethod
    def scalar(cls, s, ctx: ScalarContext = EXACT) -> "SkeinElement":
        return cls({PHI: s}, ctx)

    # -- inspection ---------------------------------------------------------
    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[CurveIndex]:
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, p: int, q: int) -> Scalar:
        return self.terms.get(canonicalize(p, q), self.ctx.zero())

    def is_scalar(self) -> bool:
        """True if the element is a multiple of phi (including zero)."""
        return all(k == PHI for k in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, tuple(self.terms.items())))

    def __repr__(self) -> str:
        from .formatting import format_element
        return f"SkeinElement({format_element(self)})"

    # -- linear structure ---------------------------------------------------
    def _check(self, other: "SkeinElement") -> None:
        if self.ctx != other.ctx:
            raise ModeMismatch("elements belong to different scalar contexts")

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return SkeinElement._clean(acc, self.ctx)

    def __neg__(self) -> "SkeinElement":
        return SkeinElement._clean({k: -v for k, v in self.terms.items()}, self.ctx)

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> "SkeinElement":
        s = self.ctx.coerce(s)
        return SkeinElement._clean({k: s * v for k, v in self.terms.items()}, self.ctx)

    def __mul__(self, other):
        if isinstance(other, SkeinElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


class SimpleKey(NamedTuple):
    curve: CurveIndex
    n: int


def _simple_key(p: int, q: int, n: int) -> SimpleKey:
    if n < 0:
        raise ValueError("multiplicity must be nonnegative")
    c = canonicalize(p, q)
    if c == PHI:
        if n != 0:
            raise ZeroCurve("(0,0) only appears as the empty skein, multiplicity 0")
        return SimpleKey(PHI, 0)
    if math.gcd(c.p, c.q) != 1:
        raise NonPrimitiveCurve(f"simple diagrams need a primitive curve, got {c}")
    if n == 0:
        return SimpleKey(PHI, 0)
    return SimpleKey(c, n)


class SimpleElement:
    """Linear combination of simple diagrams ``(a,b)^n`` (n parallel copies)."""

    __slots__ = ("terms", "ctx")

    def __init__(self, terms: Optional[Mapping] = None, ctx: ScalarContext = EXACT):
        acc: Dict[SimpleKey, Scalar] = {}
        for (p, q, n), coeff in (terms or {}).items():
            k = _simple_key(p, q, n)
            s = ctx.coerce(coeff)
            acc[k] = acc[k] + s if k in acc else s
        self._init(acc, ctx)

    def _init(self, acc, ctx):
        self.terms = {k: acc[k] for k in sorted(acc) if acc[k]}
        self.ctx = ctx

    @classmethod
    def _clean(cls, acc, ctx) -> "SimpleElement":
        obj = cls.__new__(cls)
        obj._init(acc, ctx)
        return obj

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, tuple(self.terms.items())))

    def __add__(self, other: "SimpleElement") -> "SimpleElement":
        if self.ctx != other.ctx:
            raise ModeMismatch("elements belong to different scalar contexts")
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return SimpleElement._clean(acc, self.ctx)

    def __neg__(self) -> "SimpleElement":
        return SimpleElement._clean({k: -v for k, v in self.terms.items()}, self.ctx)

    def __sub__(self, other: "SimpleElement") -> "SimpleElement":
        return self + (-other)

    def __repr__(self) -> str:
        from .formatting import format_simple
        return f"SimpleElement({format_simple(self)})"


# ----------------------------------------------------------------------------
# product-to-sum
# ----------------------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _basis_product(a: CurveIndex, b: CurveIndex) -> Tuple[Tuple[CurveIndex, int, int], ...]:
    """Terms ``(index, integer multiplier, power of t)`` of a * b."""
    if a == PHI:
        return ((b, 1, 0),)
    if b == PHI:
        return ((a, 1, 0),)
    p, q = a
    r, s = b
    d = p * s - q * r
    out: Dict[CurveIndex, List[int]] = {}
    for (u, v), e in (((p + r, q + s), d), ((p - r, q - s), -d)):
        if u == 0 and v == 0:
            # (0,0)_T = 2 phi
            out.setdefault(PHI, []).append((2, e))
        else:
            out.setdefault(canonicalize(u, v), []).append((1, e))
    terms = []
    for k in sorted(out):
        for m, e in out[k]:
            terms.append((k, m, e))
    return tuple(terms)


def multiply_basis(a: Tuple[int, int], b: Tuple[int, int],
                   ctx: ScalarContext = EXACT) -> SkeinElement:
    """(p,q)_T * (r,s)_T = t^d (p+r,q+s)_T + t^-d (p-r,q-s)_T with d = ps - qr."""
    acc: Dict[CurveIndex, Scalar] = {}
    for k, m, e in _basis_product(canonicalize(*a), canonicalize(*b)):
        term = ctx.times_monomial(ctx.from_int(m), e)
        acc[k] = acc[k] + term if k in acc else term
    return SkeinElement._clean(acc, ctx)


def multiply(a: SkeinElement, b: SkeinElement) -> SkeinElement:
    """Noncommutative product, the bilinear extension of :func:`multiply_basis`."""
    if a.ctx != b.ctx:
        raise ModeMismatch("elements belong to different scalar contexts")
    ctx = a.ctx
    acc: Dict[CurveIndex, Scalar] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            c = ca * cb
            for k, m, e in _basis_product(ka, kb):
                term = ctx.times_monomial(c, e)
                if m != 1:
                    term = term * m
                acc[k] = acc[k] + term if k in acc else term
    return SkeinElement._clean(acc, ctx)


def commutator(a: SkeinElement, b: SkeinElement) -> SkeinElement:
    return multiply(a, b) - multiply(b, a)


def power(a: SkeinElement, n: int) -> SkeinElement:
    if n < 0:
        raise ValueError("only nonnegative powers are defined")
    result = SkeinElement.phi(a.ctx)
    for _ in range(n):
        result = multiply(result, a)
    return result


# ----------------------------------------------------------------------------
# Chebyshev conversions
# ----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def chebyshev_coeffs(n: int) -> Tuple[int, ...]:
    """Monomial coefficients of T_n (lowest degree first); T_0 = 2, T_1 = x."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (2,)
    if n == 1:
        return (0, 1)
    prev, cur = chebyshev_coeffs(n - 2), chebyshev_coeffs(n - 1)
    nxt = [0] + list(cur)
    for i, c in enumerate(prev):
        nxt[i] -= c
    return tuple(nxt)


@lru_cache(maxsize=None)
def _monomial_to_chebyshev(n: int) -> Tuple[Tuple[int, int], ...]:
    rem = [0] * n + [1]
    out = []
    for k in range(n, -1, -1):
        c = rem[k]
        if not c:
            continue
        tk = chebyshev_coeffs(k)
        lead = tk[-1]
        if c % lead:
            raise ArithmeticError(f"non-integral coefficient for T_{k} in x^{n}")
        ck = c // lead
        out.append((k, ck))
        for i, v in enumerate(tk):
            rem[i] -= ck * v
    return tuple(out)


def monomial_to_chebyshev(n: int) -> Dict[int, int]:
    """Coefficients c_k with x^n = sum_k c_k T_k(x), highest k first."""
    if n < 1:
        raise ValueError("x^0 is the empty skein and is never converted")
    return dict(_monomial_to_chebyshev(n))


def simple_to_T(s: SimpleElement) -> SkeinElement:
    ctx = s.ctx
    acc: Dict[CurveIndex, Scalar] = {}

    def add(k, v):
        acc[k] = acc[k] + v if k in acc else v

    for (curve, n), lam in s.terms.items():
        if n == 0:
            add(PHI, lam)
            continue
        a, b = curve
        for k, c in _monomial_to_chebyshev(n):
            if k == 0:
                add(PHI, lam * (2 * c))
            else:
                add(canonicalize(k * a, k * b), lam * c)
    return SkeinElement._clean(acc, ctx)


def T_to_simple(e: SkeinElement) -> SimpleElement:
    ctx = e.ctx
    acc: Dict[SimpleKey, Scalar] = {}

    def add(k, v):
        acc[k] = acc[k] + v if k in acc else v

    for idx, lam in e.terms.items():
        if idx == PHI:
            add(SimpleKey(PHI, 0), lam)
            continue
        n, prim = gcd_split(idx)
        for j, c in enumerate(chebyshev_coeffs(n)):
            if c:
                key = SimpleKey(prim, j) if j else SimpleKey(PHI, 0)
                add(key, lam * c)
    return SimpleElement._clean(acc, ctx)


def simple_power(a: int, b: int, n: int, ctx: ScalarContext = EXACT) -> SimpleElement:
    """The single simple diagram (a,b)^n with coefficient 1."""
    return SimpleElement({(a, b, n): 1}, ctx)


def iter_canonical(max_index: int) -> Iterable[CurveIndex]:
    """All canonical indices with |p|, |q| <= max_index, in lexicographic order."""
    for p in range(0, max_index + 1):
        for q in range(-max_index, max_index + 1):
            if is_canonical(p, q):
                yield CurveIndex(p, q)
