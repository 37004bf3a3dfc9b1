"""Exact arithmetic in the Kauffman bracket skein algebra of the torus.

Elements are written in the Frohman-Gelca T-basis and multiplied with the
product-to-sum formula.  The package also provides the Chebyshev change of
basis to simple diagrams, the five traces, and commutator certificates that
reduce any element to the five-dimensional commutator quotient.
"""

from .algebra import (PHI, CurveIndex, SimpleElement, SkeinElement, T_to_simple,
                      canonicalize, chebyshev_coeffs, commutator, gcd_split,
                      monomial_to_chebyshev, multiply, multiply_basis, simple_to_T)
from .errors import (DegenerateScalar, DependentCurves, DivisionByZero, ModeMismatch,
                     ParityMismatch, ParseError, SkeinError, ZeroCurve)
from .quotient import (CommutatorCertificate, ParityClass, QuotientVector,
                       class_representative, commutator_witness, parity_class, phi_map,
                       pick_independent_direction, reduce_mod_commutators, trace,
                       verify_certificate)
from .scalars import (EXACT, LaurentPoly, Mode, NumericScalar, RationalScalar,
                      ScalarContext, monomial, scalar_add, scalar_div, scalar_eval,
                      scalar_mul)

__version__ = "0.1.0"

__all__ = [
    "PHI", "CurveIndex", "SimpleElement", "SkeinElement", "T_to_simple", "canonicalize",
    "chebyshev_coeffs", "commutator", "gcd_split", "monomial_to_chebyshev", "multiply",
    "multiply_basis", "simple_to_T",
    "DegenerateScalar", "DependentCurves", "DivisionByZero", "ModeMismatch", "ParityMismatch",
    "ParseError", "SkeinError", "ZeroCurve",
    "CommutatorCertificate", "ParityClass", "QuotientVector", "class_representative",
    "commutator_witness", "parity_class", "phi_map", "pick_independent_direction",
    "reduce_mod_commutators", "trace", "verify_certificate",
    "EXACT", "LaurentPoly", "Mode", "NumericScalar", "RationalScalar", "ScalarContext",
    "monomial", "scalar_add", "scalar_div", "scalar_eval", "scalar_mul",
]
