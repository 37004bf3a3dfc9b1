"""Traces on the torus skein algebra and certified reduction modulo commutators.

Every T-basis element falls into one of five parity classes; summing
coefficients per class gives the five traces.  Reduction rewrites each term
onto a fixed representative of its class and records the commutators that
account for the difference, so the result can be checked by expansion.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple

from .algebra import (CurveIndex, SkeinElement, canonicalize, commutator, det,
                      is_canonical)
from .errors import DependentCurves, ParityMismatch
from .scalars import EXACT, Scalar, ScalarContext


class ParityClass(str, enum.Enum):
    PHI = "phi"
    EE = "ee"
    EO = "eo"
    OE = "oe"
    OO = "oo"


CLASSES = tuple(ParityClass)

_REPRESENTATIVES = {
    ParityClass.PHI: CurveIndex(0, 0),
    ParityClass.EE: CurveIndex(2, 0),
    ParityClass.EO: CurveIndex(0, 1),
    ParityClass.OE: CurveIndex(1, 0),
    ParityClass.OO: CurveIndex(1, 1),
}


def parity_class(c) -> ParityClass:
    p, q = c
    if p == 0 and q == 0:
        return ParityClass.PHI
    return (ParityClass.EE, ParityClass.EO, ParityClass.OE, ParityClass.OO)[2 * (p % 2) + q % 2]


def class_representative(cls: ParityClass) -> CurveIndex:
    return _REPRESENTATIVES[ParityClass(cls)]


@dataclass(frozen=True)
class QuotientVector:
    """Coordinates in the five-dimensional commutator quotient."""

    phi: Scalar
    ee: Scalar
    eo: Scalar
    oe: Scalar
    oo: Scalar

    @classmethod
    def zero(cls, ctx: ScalarContext = EXACT) -> "QuotientVector":
        z = ctx.zero()
        return cls(z, z, z, z, z)

    def __getitem__(self, cls) -> Scalar:
        return getattr(self, ParityClass(cls).value)

    def components(self):
        return [(c, self[c]) for c in CLASSES]

    def is_zero(self) -> bool:
        return not any(v for _, v in self.components())

    def as_element(self, ctx: ScalarContext = EXACT) -> SkeinElement:
        """Place each component on its class representative."""
        return SkeinElement({class_representative(c): v for c, v in self.components()}, ctx)


def phi_map(e: SkeinElement) -> QuotientVector:
    sums = {c: e.ctx.zero() for c in CLASSES}
    for idx, coeff in e.terms.items():
        cls = parity_class(idx)
        sums[cls] = sums[cls] + coeff
    return QuotientVector(*(sums[c] for c in CLASSES))


def trace(e: SkeinElement, cls) -> Scalar:
    """The trace attached to ``cls``; ``trace(e, "phi")`` is the Yang-Mills measure."""
    return phi_map(e)[cls]


def yang_mills(e: SkeinElement) -> Scalar:
    return trace(e, ParityClass.PHI)


# ----------------------------------------------------------------------------
# witnesses
# ----------------------------------------------------------------------------

class Witness(NamedTuple):
    """(x,y)_T - (z,w)_T == lam * [left_T, right_T]; alpha = ps - qr before sign fixing."""

    lam: Scalar
    left: CurveIndex
    right: CurveIndex
    alpha: int


def commutator_witness(x: int, y: int, z: int, w: int,
                       ctx: ScalarContext = EXACT) -> Witness:
    if (x + z) % 2 or (y + w) % 2:
        raise ParityMismatch(f"x+z = {x + z} and y+w = {y + w} must both be even")
    if x * w - y * z == 0:
        raise DependentCurves(f"({x},{y}) and ({z},{w}) are linearly dependent")
    p, q = (x + z) // 2, (y + w) // 2
    r, s = (x - z) // 2, (y - w) // 2
    alpha = p * s - q * r
    lam = ctx.div(ctx.one(), ctx.monomial(alpha) - ctx.monomial(-alpha))
    # the T-basis ignores orientation, so the sign-fixed pair has the same commutator
    return Witness(lam, canonicalize(p, q), canonicalize(r, s), alpha)


def pick_independent_direction(cls, avoid: Iterable = ()) -> CurveIndex:
    """First index of ``cls`` independent of ``avoid`` and of the representative.

    Candidates are ordered by max(|p|, |q|), then by p, then by |q| with the
    positive q first.
    """
    cls = ParityClass(cls)
    if cls is ParityClass.PHI:
        raise ValueError("the phi class has a single element")
    blockers = [tuple(a) for a in avoid] + [class_representative(cls)]
    for m in itertools.count(1):
        ring = [CurveIndex(p, q)
                for p in range(0, m + 1) for q in range(-m, m + 1)
                if max(p, abs(q)) == m and is_canonical(p, q)
                and parity_class((p, q)) is cls]
        ring.sort(key=lambda c: (c.p, abs(c.q), c.q < 0))
        for cand in ring:
            if all(det(cand, b) != 0 for b in blockers):
                return cand
    raise AssertionError("unreachable")


# ----------------------------------------------------------------------------
# certificates
# ----------------------------------------------------------------------------

class CertWitness(NamedTuple):
    lam: Scalar
    left: CurveIndex
    right: CurveIndex


@dataclass
class CommutatorCertificate:
    residual: QuotientVector
    witnesses: List[CertWitness] = field(default_factory=list)

    def expand(self, ctx: ScalarContext = EXACT) -> SkeinElement:
        total = self.residual.as_element(ctx)
        for lam, left, right in self.witnesses:
            a = SkeinElement.basis(*left, ctx=ctx)
            b = SkeinElement.basis(*right, ctx=ctx)
            total = total + commutator(a, b).scale(lam)
        return total


def reduce_mod_commutators(e: SkeinElement) -> CommutatorCertificate:
    """Split ``e`` into class-representative residual plus explicit commutators."""
    ctx = e.ctx
    witnesses: List[CertWitness] = []

    def rewrite(coeff, src, dst):
        wit = commutator_witness(src[0], src[1], dst[0], dst[1], ctx)
        witnesses.append(CertWitness(coeff * wit.lam, wit.left, wit.right))

    for idx, coeff in e.terms.items():
        rep = class_representative(parity_class(idx))
        if idx == rep:
            continue
        if det(idx, rep) != 0:
            rewrite(coeff, idx, rep)
        else:
            mid = pick_independent_direction(parity_class(idx), [idx])
            rewrite(coeff, idx, mid)
            rewrite(coeff, mid, rep)
    return CommutatorCertificate(phi_map(e), witnesses)


def verify_certificate(e: SkeinElement, cert: CommutatorCertificate,
                       tolerance: float = 1e-9) -> bool:
    """Check that residual + sum of weighted commutators reproduces ``e``.

    Exact contexts compare structurally; numeric ones allow ``tolerance``
    per coefficient, relative to max(1, |coefficient|).
    """
    try:
        expanded = cert.expand(e.ctx)
    except (TypeError, ArithmeticError):
        return False
    if e.ctx.is_exact:
        return expanded == e
    for k in set(expanded.terms) | set(e.terms):
        a = complex(expanded.terms.get(k, 0j))
        b = complex(e.terms.get(k, 0j))
        if abs(a - b) > tolerance * max(1.0, abs(a), abs(b)):
            return False
    return True
