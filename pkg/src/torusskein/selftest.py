"""Seeded randomized checks of the algebraic invariants.

Each suite draws its cases from its own ``random.Random`` seeded with
``"<seed>:<suite name>"``, so reports depend only on the configuration and
suites may be run in any order (or concurrently) without changing results.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .algebra import (SimpleElement, SkeinElement, T_to_simple, canonicalize, gcd_split,
                      multiply, simple_to_T)
from .formatting import element_from_json, element_to_json, format_element
from .parser import evaluate_text
from .quotient import (CLASSES, commutator_witness, phi_map, reduce_mod_commutators,
                       verify_certificate)
from .scalars import EXACT, LaurentPoly, Mode, RationalScalar, ScalarContext, scalar_eval

DEFAULT_T = complex(0.7, 0.3)
AGREEMENT_TOL = 1e-9


@dataclass(frozen=True)
class RunConfig:
    mode: Mode = Mode.EXACT
    t: Optional[complex] = None
    output: str = "text"
    seed: int = 42
    case_count: int = 100
    max_index: int = 8

    def __post_init__(self):
        if self.max_index < 1:
            raise ValueError("max_index must be at least 1")
        if self.case_count < 1:
            raise ValueError("case_count must be at least 1")
        if self.mode is Mode.NUMERIC and self.t is None:
            raise ValueError("numeric mode needs t")

    @property
    def ctx(self) -> ScalarContext:
        if self.mode is Mode.NUMERIC:
            return ScalarContext.numeric(self.t)
        return EXACT


# ----------------------------------------------------------------------------
# random inputs
# ----------------------------------------------------------------------------

def random_laurent(rng: random.Random, max_terms: int = 3, max_exp: int = 3,
                   max_coeff: int = 9) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randint(-max_exp, max_exp)] = rng.choice(
            [c for c in range(-max_coeff, max_coeff + 1) if c])
    return LaurentPoly(terms)


def random_scalar(rng: random.Random, rational: bool = False) -> RationalScalar:
    num = random_laurent(rng)
    while not num:
        num = random_laurent(rng)
    if rational and rng.random() < 0.5:
        den = random_laurent(rng, max_terms=2, max_exp=2, max_coeff=4)
        if den:
            return RationalScalar(num, den)
    return RationalScalar(num)


def random_index(rng: random.Random, max_index: int):
    return canonicalize(rng.randint(-max_index, max_index), rng.randint(-max_index, max_index))


def random_element(rng: random.Random, max_terms: int = 5, max_index: int = 9,
                   rational: bool = False) -> SkeinElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_index(rng, max_index)] = random_scalar(rng, rational)
    return SkeinElement(terms)


def random_witness_quadruple(rng: random.Random, bound: int = 20):
    """Random (x, y, z, w) with x+z, y+w even and xw - yz != 0."""
    while True:
        x, y, z, w = (rng.randint(-bound, bound) for _ in range(4))
        if (x + z) % 2 == 0 and (y + w) % 2 == 0 and x * w - y * z != 0:
            return x, y, z, w


def numeric_image(e: SkeinElement, ctx: ScalarContext) -> SkeinElement:
    """Specialize every coefficient of an exact element."""
    return SkeinElement({k: scalar_eval(v, ctx.t_value, ctx.tolerance)
                         for k, v in e.terms.items()}, ctx)


def elements_close(a: SkeinElement, b: SkeinElement, tol: float = AGREEMENT_TOL) -> bool:
    for k in set(a.terms) | set(b.terms):
        x = complex(a.terms.get(k, 0j))
        y = complex(b.terms.get(k, 0j))
        if abs(x - y) > tol * max(1.0, abs(x), abs(y)):
            return False
    return True


# ----------------------------------------------------------------------------
# suites
# ----------------------------------------------------------------------------

Multiply = Callable[[SkeinElement, SkeinElement], SkeinElement]


def _suite_associativity(rng, cfg, mul: Multiply) -> bool:
    a, b, c = (random_element(rng, 3, cfg.max_index) for _ in range(3))
    return mul(mul(a, b), c) == mul(a, mul(b, c))


def _suite_sign_independence(rng, cfg, mul: Multiply) -> bool:
    m = cfg.max_index
    p, q, r, s = (rng.randint(-m, m) for _ in range(4))
    ref = mul(SkeinElement.basis(p, q), SkeinElement.basis(r, s))
    for sa in (1, -1):
        for sb in (1, -1):
            # build with raw (possibly non-canonical) keys via dict construction
            a = SkeinElement({(sa * p, sa * q): 1})
            b = SkeinElement({(sb * r, sb * s): 1})
            if mul(a, b) != ref:
                return False
    return True


def _suite_trace_symmetry(rng, cfg, mul: Multiply) -> bool:
    a = random_element(rng, 5, cfg.max_index)
    b = random_element(rng, 5, cfg.max_index)
    va, vb = phi_map(mul(a, b)), phi_map(mul(b, a))
    return all(va[c] == vb[c] for c in CLASSES)


def _suite_kernel_containment(rng, cfg, mul: Multiply) -> bool:
    a = random_element(rng, 5, cfg.max_index)
    b = random_element(rng, 5, cfg.max_index)
    return phi_map(mul(a, b) - mul(b, a)).is_zero()


def _suite_witness_soundness(rng, cfg, mul: Multiply) -> bool:
    x, y, z, w = random_witness_quadruple(rng, 2 * cfg.max_index)
    wit = commutator_witness(x, y, z, w)
    p, q, r, s = (x + z) // 2, (y + w) // 2, (x - z) // 2, (y - w) // 2
    if 2 * (p * s - q * r) != y * z - x * w or wit.alpha != p * s - q * r:
        return False
    left, right = SkeinElement.basis(*wit.left), SkeinElement.basis(*wit.right)
    lhs = SkeinElement.basis(x, y) - SkeinElement.basis(z, w)
    return (mul(left, right) - mul(right, left)).scale(wit.lam) == lhs


def _suite_certificate_roundtrip(rng, cfg, mul: Multiply) -> bool:
    e = random_element(rng, 5, cfg.max_index, rational=True)
    cert = reduce_mod_commutators(e)
    if not verify_certificate(e, cert) or phi_map(cert.residual.as_element()) != phi_map(e):
        return False
    k = e - phi_map(e).as_element()
    return reduce_mod_commutators(k).residual.is_zero()


def _suite_chebyshev_roundtrip(rng, cfg, mul: Multiply) -> bool:
    m = min(cfg.max_index, 5)
    while True:
        a, b = rng.randint(-m, m), rng.randint(-m, m)
        if (a, b) != (0, 0) and gcd_split((a, b))[0] == 1:
            break
    n = rng.randint(1, 8)
    s = SimpleElement({(a, b, n): 1})
    e = SkeinElement.basis(n * a, n * b)
    if T_to_simple(simple_to_T(s)) != s or simple_to_T(T_to_simple(e)) != e:
        return False
    # n-fold product of the primitive curve must match the parallel copies
    k = rng.randint(1, 6)
    prod = SkeinElement.phi()
    for _ in range(k):
        prod = mul(prod, SkeinElement.basis(a, b))
    return simple_to_T(SimpleElement({(a, b, k): 1})) == prod


def _suite_numeric_exact_agreement(rng, cfg, mul: Multiply) -> bool:
    t0 = cfg.t if cfg.t is not None else DEFAULT_T
    nctx = ScalarContext.numeric(t0)
    a = random_element(rng, 4, cfg.max_index)
    b = random_element(rng, 4, cfg.max_index)
    exact = numeric_image(mul(a, b), nctx)
    numeric = mul(numeric_image(a, nctx), numeric_image(b, nctx))
    return elements_close(exact, numeric)


def _suite_text_roundtrip(rng, cfg, mul: Multiply) -> bool:
    e = random_element(rng, 5, cfg.max_index, rational=True)
    return (evaluate_text(format_element(e)) == e
            and element_from_json(element_to_json(e)) == e)


SUITES: Dict[str, Callable] = {
    "associativity": _suite_associativity,
    "sign_independence": _suite_sign_independence,
    "trace_symmetry": _suite_trace_symmetry,
    "kernel_containment": _suite_kernel_containment,
    "witness_soundness": _suite_witness_soundness,
    "certificate_roundtrip": _suite_certificate_roundtrip,
    "chebyshev_roundtrip": _suite_chebyshev_roundtrip,
    "numeric_exact_agreement": _suite_numeric_exact_agreement,
    "text_roundtrip": _suite_text_roundtrip,
}


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    errors: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SelftestReport:
    seed: int
    case_count: int
    max_index: int
    mode: str
    suites: List[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def to_json(self) -> dict:
        return {"seed": self.seed, "cases": self.case_count, "max_index": self.max_index,
                "mode": self.mode, "ok": self.ok,
                "suites": {s.name: {"passed": s.passed, "failed": s.failed, "errors": s.errors}
                           for s in self.suites}}

    def to_text(self) -> str:
        lines = [f"selftest seed={self.seed} cases={self.case_count} "
                 f"max_index={self.max_index} mode={self.mode}"]
        for s in self.suites:
            status = "PASS" if s.ok else "FAIL"
            lines.append(f"{s.name:<26} {s.passed:>5}/{s.passed + s.failed:<5} {status}")
            for err in s.errors[:3]:
                lines.append(f"    {err}")
        lines.append("ALL PASS" if self.ok else "FAILURES")
        return "\n".join(lines)


def _run_suite(name: str, cfg: RunConfig, mul: Multiply) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}:{name}")
    res = SuiteResult(name)
    for i in range(cfg.case_count):
        try:
            ok = SUITES[name](rng, cfg, mul)
        except Exception as exc:  # a crash counts as a failed case
            ok = False
            res.errors.append(f"case {i}: {type(exc).__name__}: {exc}")
        if ok:
            res.passed += 1
        else:
            res.failed += 1
    return res


def run_selftest(cfg: RunConfig, multiply_fn: Multiply = multiply,
                 suites: Optional[List[str]] = None, workers: int = 1) -> SelftestReport:
    """Run the seeded suites; ``multiply_fn`` can be swapped for fault injection."""
    names = sorted(suites or SUITES)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda n: _run_suite(n, cfg, multiply_fn), names))
    else:
        results = [_run_suite(n, cfg, multiply_fn) for n in names]
    results.sort(key=lambda r: r.name)
    return SelftestReport(cfg.seed, cfg.case_count, cfg.max_index, cfg.mode.value, results)
