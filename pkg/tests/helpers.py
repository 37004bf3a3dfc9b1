from torusskein.algebra import SkeinElement
from torusskein.scalars import LaurentPoly, RationalScalar


def mono(k: int, c: int = 1) -> RationalScalar:
    """c * t**k."""
    return RationalScalar(LaurentPoly.monomial(k, c))


def lp(terms) -> RationalScalar:
    return RationalScalar(LaurentPoly(terms))


def B(p, q, coeff=1, ctx=None):
    if ctx is None:
        return SkeinElement.basis(p, q, coeff)
    return SkeinElement.basis(p, q, coeff, ctx)


def elem(terms, ctx=None):
    return SkeinElement(terms) if ctx is None else SkeinElement(terms, ctx)
