import random

import numpy as np
import pytest

from cl12 import (
    Multivector,
    SimilarityReason,
    SingularElement,
    conjugate_by,
    conjugation_matrix,
    e0,
    e1,
    e2,
    e3,
    e4,
    e6,
    e7,
    is_similar,
    left_matrix,
    right_matrix,
    inverse,
    witness_candidates,
)
from support import random_invertible, random_multivector


def test_conjugate_by_examples():
    q = 2 * e0 + e1 + e3  # P = 16, invertible
    assert conjugate_by(q, e0) == e0
    s_t = 3 * e0 - 2 * e7
    assert conjugate_by(q, s_t).isclose(s_t, 1e-12)
    assert conjugate_by(e2 + e6, e2) == e6


def test_conjugate_by_rejects_singular():
    with pytest.raises(SingularElement):
        conjugate_by(e1 + e2, e3)


def test_conjugation_fixes_central_and_quadratic_forms():
    rng = random.Random(41)
    for _ in range(100):
        q = random_invertible(rng)
        x = random_multivector(rng)
        y = conjugate_by(q, x)
        assert y.cre().isclose(x.cre(), 1e-9)
        assert y.cim().isclose(conjugate_by(q, x.cim()), 1e-9)
        fx, fy = x.functionals(), y.functionals()
        bound = 1e-9 * (1.0 + max(x.norm(), y.norm()) ** 2)
        assert abs(fx.N - fy.N) <= bound
        assert abs(fx.T - fy.T) <= bound


def test_conjugation_ignores_scaling():
    rng = random.Random(43)
    for _ in range(50):
        q = random_invertible(rng)
        x = random_multivector(rng)
        assert conjugate_by(q, x).isclose(conjugate_by(2 * q, x), 1e-9)
        assert conjugate_by(q, x).isclose(conjugate_by(-3 * q, x), 1e-9)


def test_conjugation_matrix_identity():
    cm = conjugation_matrix(e0)
    assert np.array_equal(cm.full, np.eye(8))
    assert np.array_equal(cm.block, np.eye(6))


def test_conjugation_matrix_structure():
    q = e0 + e2 + e4
    cm = conjugation_matrix(q)
    assert np.allclose(cm.full, left_matrix(q) @ right_matrix(inverse(q)))
    ident = np.eye(8)
    for idx in ((0, slice(None)), (7, slice(None)), (slice(None), 0), (slice(None), 7)):
        assert np.max(np.abs(cm.full[idx] - ident[idx])) <= 1e-9
    assert abs(np.linalg.det(cm.block)) > 1e-6


def test_conjugation_matrix_block_invertible_randomly():
    rng = random.Random(47)
    for _ in range(100):
        cm = conjugation_matrix(random_invertible(rng))
        ident = np.eye(8)
        for idx in ((0, slice(None)), (7, slice(None)), (slice(None), 0), (slice(None), 7)):
            assert np.max(np.abs(cm.full[idx] - ident[idx])) <= 1e-9
        det = np.linalg.det(cm.block)
        assert abs(det) > 1e-6
        assert det == pytest.approx(1.0, abs=1e-6)  # det(full) = P(q)^2 P(1/q)^2 = 1


def test_is_similar_reflexive():
    rng = random.Random(53)
    for _ in range(20):
        a = random_multivector(rng)
        r = is_similar(a, a)
        assert r.similar and r.witness == e0


def test_central_pairs():
    r = is_similar(e7, -e7)
    assert not r.similar and r.reason is SimilarityReason.CRE_MISMATCH
    r = is_similar(3 * e0 - 2 * e7, 3 * e0 - 2 * e7)
    assert r.similar and r.reason is SimilarityReason.CENTRAL_EQUAL and r.witness == e0


def test_mixed_centrality_is_never_similar():
    # all three invariants of 0 and e1+e2 coincide, yet they are not similar
    r = is_similar(Multivector.zero(), e1 + e2)
    assert not r.similar and r.reason is SimilarityReason.CENTRAL_UNEQUAL
    r = is_similar(e1 + e2, Multivector.zero())
    assert not r.similar and r.reason is SimilarityReason.CENTRAL_UNEQUAL


def test_basis_pair_witness():
    r = is_similar(e2, e6)
    assert r.similar and r.reason is SimilarityReason.INVARIANTS_MATCH
    assert r.witness == e2 + e6
    assert (e2 + e6) * e2 == e6 * (e2 + e6) == -e0 + e4
    assert not r.witness.is_singular()


def test_mismatch_reasons():
    assert is_similar(e1, e1 + e0).reason is SimilarityReason.CRE_MISMATCH
    assert is_similar(e1, 2 * e1).reason is SimilarityReason.N_MISMATCH
    # e1 + e6 and e1 - e6 share the central part and N, differ exactly in T
    a, b = e1 + e6, e1 - e6
    assert a.functionals().N == b.functionals().N == 0.0
    assert a.functionals().T != b.functionals().T
    assert is_similar(a, b).reason is SimilarityReason.T_MISMATCH


def test_witness_solves_equation_for_conjugated_pairs():
    rng = random.Random(59)
    for _ in range(150):
        a = random_multivector(rng)
        q = random_invertible(rng)
        b = conjugate_by(q, a)
        r = is_similar(a, b)
        assert r.similar
        assert not r.witness.is_singular()
        bound = 1e-9 * (1.0 + max(a.norm(), b.norm()) ** 2)
        assert (r.witness * a - b * r.witness).norm() <= bound


def test_witness_comes_from_candidate_scan():
    rng = random.Random(61)
    for _ in range(100):
        a = random_multivector(rng)
        b = conjugate_by(random_invertible(rng), a)
        r = is_similar(a, b)
        assert r.similar
        scale = 1e-12 * (1.0 + r.witness.norm())
        candidates = [e0] + witness_candidates(a, b)
        assert any(
            all(abs(x - y) <= scale for x, y in zip(r.witness.coeffs, c.coeffs))
            for c in candidates
        )


def _singular_imaginary(rng):
    # pure e1..e6 parts with N = T = 0, found by rejection
    while True:
        c = [0, rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3),
             rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3), 0]
        m = Multivector(c)
        f = m.functionals()
        if not m.is_zero() and f.N == 0 and f.T == 0:
            return m


def test_candidate_completeness():
    # among the first four candidates at least one is invertible, both for
    # invertible imaginary parts with matching forms and for the doubly
    # singular configuration
    rng = random.Random(67)
    checked_invertible = checked_singular = 0
    while checked_invertible < 250 or checked_singular < 250:
        if checked_invertible < 250:
            a = random_multivector(rng)
            if not a.cim().is_singular():
                b = conjugate_by(random_invertible(rng), a)
                if not b.cim().isclose(a.cim(), 1e-9):
                    cands = witness_candidates(a, b)[:4]
                    assert any(not w.is_singular() for w in cands)
                    checked_invertible += 1
        if checked_singular < 250:
            ca, cb = _singular_imaginary(rng), _singular_imaginary(rng)
            if ca != cb:
                cands = witness_candidates(ca, cb)[:4]
                assert any(not w.is_singular() for w in cands)
                checked_singular += 1


def test_candidate_identity():
    # cim(b) * x = x * cim(a) for every candidate x = cim(b) p + p cim(a),
    # granted matching quadratic forms
    rng = random.Random(71)
    for _ in range(100):
        a = random_multivector(rng)
        b = conjugate_by(random_invertible(rng), a)
        ca, cb = a.cim(), b.cim()
        p = random_multivector(rng)
        x = cb * p + p * ca
        bound = 1e-9 * (1.0 + (1.0 + a.norm() ** 2) * p.norm())
        assert (cb * x - x * ca).norm() <= bound


def test_witness_exact_on_integer_pairs():
    # integer pairs with equal invariants produce exact integer witnesses
    pairs = [(e2, e6), (e1, e1 * 1.0), (e3 + e4, conjugate_by(e2 + e6, e3 + e4))]
    for a, b in pairs:
        r = is_similar(a, b)
        if r.similar and all(float(c).is_integer() for c in a.coeffs + b.coeffs):
            assert r.witness * a == b * r.witness
