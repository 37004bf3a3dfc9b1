import random

import pytest

from helpers import B, elem, lp, mono
from torusskein.algebra import SkeinElement, commutator, det, multiply
from torusskein.errors import DegenerateScalar, DependentCurves, ParityMismatch
from torusskein.quotient import (CLASSES, CertWitness, CommutatorCertificate, ParityClass,
                                 QuotientVector, class_representative, commutator_witness,
                                 parity_class, phi_map, pick_independent_direction,
                                 reduce_mod_commutators, trace, verify_certificate)
from torusskein.scalars import RationalScalar, ScalarContext
from torusskein.selftest import random_element, random_witness_quadruple


def test_parity_class():
    assert parity_class((0, 0)) is ParityClass.PHI
    assert parity_class((2, 0)) is ParityClass.EE
    assert parity_class((0, 1)) is ParityClass.EO
    assert parity_class((1, 0)) is ParityClass.OE
    assert parity_class((1, 1)) is ParityClass.OO
    assert parity_class((3, 2)) is ParityClass.OE
    assert parity_class((-3, -2)) is ParityClass.OE


def test_class_representatives():
    assert class_representative(ParityClass.EE) == (2, 0)
    assert class_representative(ParityClass.PHI) == (0, 0)
    assert class_representative(ParityClass.OO) == (1, 1)
    for c in CLASSES:
        assert parity_class(class_representative(c)) is c


def test_phi_map_examples():
    e = elem({(0, 0): 3, (2, 0): mono(1), (4, 2): mono(-1)})
    v = phi_map(e)
    assert v == QuotientVector(lp({0: 3}), lp({1: 1, -1: 1}), *(RationalScalar(0),) * 3)
    assert phi_map(SkeinElement.zero()).is_zero()
    z = RationalScalar(0)
    assert phi_map(multiply(B(1, 0), B(0, 1))) == QuotientVector(z, z, z, z, lp({1: 1, -1: 1}))


def test_trace_examples():
    assert trace(SkeinElement.phi(), "phi") == RationalScalar(1)
    assert trace(multiply(B(1, 0), B(1, 0)), ParityClass.PHI) == RationalScalar(2)


def test_traces_vanish_on_commutators():
    rng = random.Random(3)
    for _ in range(100):
        a, b = random_element(rng), random_element(rng)
        c = commutator(a, b)
        for cls in CLASSES:
            assert not trace(c, cls)


# ---------------------------------------------------------------- witnesses

def test_witness_example():
    w = commutator_witness(2, 0, 0, 2)
    assert (w.left, w.right, w.alpha) == ((1, 1), (1, -1), -2)
    assert w.lam == RationalScalar(1) / (mono(-2) - mono(2))
    expanded = commutator(B(1, 1), B(1, -1)).scale(w.lam)
    assert expanded == B(2, 0) - B(0, 2)


def test_witness_errors():
    with pytest.raises(ParityMismatch):
        commutator_witness(1, 0, 0, 1)
    with pytest.raises(DependentCurves):
        commutator_witness(2, 0, 4, 0)


def test_witness_degenerate_at_root_of_unity():
    with pytest.raises(DegenerateScalar):
        commutator_witness(2, 0, 0, 2, ScalarContext.numeric(1))
    # t = i: t^2 - t^-2 = 0, so alpha = -2 is also degenerate
    with pytest.raises(DegenerateScalar):
        commutator_witness(2, 0, 0, 2, ScalarContext.numeric(1j))


def test_witness_soundness_random():
    rng = random.Random(5)
    for _ in range(200):
        x, y, z, w = random_witness_quadruple(rng)
        wit = commutator_witness(x, y, z, w)
        p, q, r, s = (x + z) // 2, (y + w) // 2, (x - z) // 2, (y - w) // 2
        # the determinant flips sign under this change of variables
        assert 2 * (p * s - q * r) == -(x * w - y * z) == 2 * wit.alpha
        got = commutator(B(*wit.left), B(*wit.right)).scale(wit.lam)
        assert got == B(x, y) - B(z, w)


# ---------------------------------------------------------------- directions

def test_pick_independent_direction_examples():
    assert pick_independent_direction(ParityClass.EE, {(2, 0)}) == (0, 2)
    assert pick_independent_direction(ParityClass.OE, set()) == (1, 2)
    assert pick_independent_direction(ParityClass.OO, {(1, 1), (1, -1)}) == (1, 3)


@pytest.mark.parametrize("cls", [c for c in CLASSES if c is not ParityClass.PHI])
def test_pick_independent_direction_is_valid(cls):
    rng = random.Random(cls.value)
    for _ in range(30):
        avoid = [(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(rng.randint(0, 6))]
        avoid = [a for a in avoid if a != (0, 0)]
        d = pick_independent_direction(cls, avoid)
        assert parity_class(d) is cls
        for a in avoid + [class_representative(cls)]:
            assert det(d, a) != 0
        assert pick_independent_direction(cls, avoid) == d


# ---------------------------------------------------------------- reduction

def test_reduce_examples():
    e = B(2, 0) - B(0, 2)
    cert = reduce_mod_commutators(e)
    assert cert.residual.is_zero()
    assert len(cert.witnesses) == 1
    assert cert.witnesses[0] == (RationalScalar(1) / (mono(-2) - mono(2)), (1, 1), (1, -1))
    assert verify_certificate(e, cert)

    cert = reduce_mod_commutators(SkeinElement.scalar(5))
    assert cert.residual == QuotientVector(RationalScalar(5), *(RationalScalar(0),) * 4)
    assert cert.witnesses == []

    e = B(4, 0)
    cert = reduce_mod_commutators(e)
    assert cert.residual.ee == RationalScalar(1)
    assert len(cert.witnesses) == 2
    assert verify_certificate(e, cert)


def test_reduce_witness_written_directly():
    # the witness for (2,0) - (0,2) written directly
    w = commutator_witness(2, 0, 0, 2)
    cert = CommutatorCertificate(QuotientVector.zero(), [CertWitness(w.lam, w.left, w.right)])
    assert verify_certificate(B(2, 0) - B(0, 2), cert)


def test_verify_rejects_perturbation():
    e = B(4, 1, mono(3)) + B(0, 5)
    cert = reduce_mod_commutators(e)
    assert verify_certificate(e, cert)
    lam, left, right = cert.witnesses[0]
    cert.witnesses[0] = CertWitness(lam + 1, left, right)
    assert not verify_certificate(e, cert)


def test_verify_empty_certificate():
    assert verify_certificate(SkeinElement.zero(), CommutatorCertificate(QuotientVector.zero()))


def test_reduce_random_rational_coefficients():
    rng = random.Random(9)
    for _ in range(60):
        e = random_element(rng, 5, 9, rational=True)
        cert = reduce_mod_commutators(e)
        assert verify_certificate(e, cert)
        assert phi_map(cert.residual.as_element()) == phi_map(e)
        k = e - phi_map(e).as_element()
        assert phi_map(k).is_zero()
        assert reduce_mod_commutators(k).residual.is_zero()


def test_classes_independent():
    for i, ci in enumerate(CLASSES):
        for cj in CLASSES[i + 1:]:
            d = SkeinElement({class_representative(ci): 1}) - \
                SkeinElement({class_representative(cj): 1})
            assert not reduce_mod_commutators(d).residual.is_zero()


def test_reduce_numeric_mode():
    ctx = ScalarContext.numeric(0.7 + 0.3j)
    e = SkeinElement({(4, 0): 2.5, (3, 3): 1j, (0, 0): 1, (5, 2): -1}, ctx)
    cert = reduce_mod_commutators(e)
    assert verify_certificate(e, cert)
    assert abs(cert.residual.oo.value - 1j) < 1e-12
