"""Text and JSON renderings of scalars, elements, quotient vectors and certificates.

The text form is accepted back by :mod:`torusskein.parser`; the JSON form
round-trips bit-exactly through the ``*_from_json`` functions.
"""

from __future__ import annotations

import json
from typing import Optional

from .algebra import PHI, CurveIndex, SimpleElement, SkeinElement
from .quotient import CertWitness, CommutatorCertificate, QuotientVector, Witness
from .scalars import (EXACT, NumericScalar, RationalScalar, Scalar, ScalarContext,
                      format_complex)


# ----------------------------------------------------------------------------
# text
# ----------------------------------------------------------------------------

def format_scalar(s: Scalar) -> str:
    return str(s)


def _signed_coeff(s: Scalar):
    """Split a coefficient into (negative?, text of magnitude or None for 1)."""
    if isinstance(s, NumericScalar):
        return False, format_complex(s.value)
    if s.den.is_one() and s.num.is_monomial():
        c = s.num.coeffs[0]
        mag = RationalScalar._raw(s.num.scale(-1)) if c < 0 else s
        text = str(mag)
        return c < 0, (None if text == "1" else text)
    if s.den.is_one():
        return False, f"({s.num})"
    return False, str(s)


def _join(pieces) -> str:
    out = []
    for neg, body in pieces:
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out) if out else "0"


def format_element(e: SkeinElement, output: str = "text") -> str:
    """Deterministic rendering; terms follow lexicographic (p, q) order."""
    if output == "json":
        return json.dumps(element_to_json(e), separators=(",", ":"))
    pieces = []
    for idx, s in e.terms.items():
        neg, coeff = _signed_coeff(s)
        atom = "phi" if idx == PHI else f"({idx.p},{idx.q})_T"
        pieces.append((neg, atom if coeff is None else f"{coeff}*{atom}"))
    return _join(pieces)


def format_simple(s: SimpleElement, output: str = "text") -> str:
    if output == "json":
        return json.dumps(simple_to_json(s), separators=(",", ":"))
    pieces = []
    for (curve, n), c in s.terms.items():
        neg, coeff = _signed_coeff(c)
        atom = "phi" if curve == PHI else f"({curve.p},{curve.q})^{n}"
        pieces.append((neg, atom if coeff is None else f"{coeff}*{atom}"))
    return _join(pieces)


def format_quotient(v: QuotientVector) -> str:
    return ", ".join(f"{c.value}={format_scalar(s)}" for c, s in v.components())


def format_certificate(cert: CommutatorCertificate) -> str:
    lines = [f"residual: {format_quotient(cert.residual)}",
             f"witnesses: {len(cert.witnesses)}"]
    for w in cert.witnesses:
        lines.append(f"  ({format_scalar(w.lam)}) * [{w.left}_T, {w.right}_T]")
    return "\n".join(lines)


def format_witness(w: Witness) -> str:
    return (f"lambda = {format_scalar(w.lam)}\n"
            f"left = {w.left}\nright = {w.right}\nalpha = {w.alpha}")


# ----------------------------------------------------------------------------
# JSON
# ----------------------------------------------------------------------------

def scalar_to_json(s: Scalar) -> dict:
    return s.to_json()


def scalar_from_json(data: dict, ctx: Optional[ScalarContext] = None) -> Scalar:
    if "num" in data:
        s = RationalScalar.from_json(data)
    else:
        s = NumericScalar.from_json(data)
    return ctx.coerce(s) if ctx is not None else s


def _infer_ctx(terms, ctx: Optional[ScalarContext]) -> ScalarContext:
    if ctx is not None:
        return ctx
    if any("num" not in t["coeff"] for t in terms):
        raise ValueError("numeric coefficients need an explicit numeric context")
    return EXACT


def element_to_json(e: SkeinElement) -> dict:
    return {"basis": "T",
            "terms": [{"p": k.p, "q": k.q, "coeff": v.to_json()} for k, v in e.terms.items()]}


def element_from_json(data: dict, ctx: Optional[ScalarContext] = None) -> SkeinElement:
    if data.get("basis") != "T":
        raise ValueError(f"expected basis 'T', got {data.get('basis')!r}")
    ctx = _infer_ctx(data["terms"], ctx)
    terms = {}
    for t in data["terms"]:
        key = (int(t["p"]), int(t["q"]))
        if key in terms:
            raise ValueError(f"duplicate term {key}")
        terms[key] = scalar_from_json(t["coeff"], ctx)
    return SkeinElement(terms, ctx)


def simple_to_json(s: SimpleElement) -> dict:
    return {"basis": "simple",
            "terms": [{"p": k.curve.p, "q": k.curve.q, "n": k.n, "coeff": v.to_json()}
                      for k, v in s.terms.items()]}


def simple_from_json(data: dict, ctx: Optional[ScalarContext] = None) -> SimpleElement:
    if data.get("basis") != "simple":
        raise ValueError(f"expected basis 'simple', got {data.get('basis')!r}")
    ctx = _infer_ctx(data["terms"], ctx)
    return SimpleElement({(int(t["p"]), int(t["q"]), int(t["n"])): scalar_from_json(t["coeff"], ctx)
                          for t in data["terms"]}, ctx)


def quotient_to_json(v: QuotientVector) -> dict:
    return {c.value: s.to_json() for c, s in v.components()}


def quotient_from_json(data: dict, ctx: Optional[ScalarContext] = None) -> QuotientVector:
    return QuotientVector(*(scalar_from_json(data[k], ctx) for k in ("phi", "ee", "eo", "oe", "oo")))


def _index_json(c: CurveIndex) -> dict:
    return {"p": c.p, "q": c.q}


def certificate_to_json(cert: CommutatorCertificate) -> dict:
    return {"residual": quotient_to_json(cert.residual),
            "witnesses": [{"lambda": w.lam.to_json(), "left": _index_json(w.left),
                           "right": _index_json(w.right)} for w in cert.witnesses]}


def certificate_from_json(data: dict, ctx: Optional[ScalarContext] = None) -> CommutatorCertificate:
    return CommutatorCertificate(
        quotient_from_json(data["residual"], ctx),
        [CertWitness(scalar_from_json(w["lambda"], ctx),
                     CurveIndex(int(w["left"]["p"]), int(w["left"]["q"])),
                     CurveIndex(int(w["right"]["p"]), int(w["right"]["q"])))
         for w in data["witnesses"]])


def witness_to_json(w: Witness) -> dict:
    return {"lambda": w.lam.to_json(), "left": _index_json(w.left),
            "right": _index_json(w.right), "alpha": w.alpha}


def dumps(obj: dict) -> str:
    """Single-line JSON."""
    return json.dumps(obj, separators=(",", ":"))
