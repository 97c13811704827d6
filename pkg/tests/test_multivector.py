import math
import random

import pytest
from hypothesis import given

from cl12 import BASIS, Functionals, Multivector, e0, e1, e2, e3, e4, e5, e6, e7
from cl12.multivector import MUL_INDEX, MUL_SIGN
from cl12 import oracle
from support import multivectors, random_multivector, random_singular, small_scalars


def test_table_matches_generator_construction():
    # the hand-transcribed table must agree with the one derived from
    # i1^2 = +1, i2^2 = i3^2 = -1 and anticommutation
    assert [list(row) for row in MUL_SIGN] == oracle.GEN_SIGN
    assert [list(row) for row in MUL_INDEX] == oracle.GEN_INDEX


def test_basis_products():
    assert e1 * e2 == e3
    assert e1 * e1 == e0
    assert e2 * e2 == -e0
    assert e4 * e4 == -e0
    assert e2 * e1 == -e3
    assert (e1 + e2) * (e1 - e2) == 2 * e0 - 2 * e3


@given(multivectors)
def test_identity_element(a):
    assert e0 * a == a
    assert a * e0 == a


def test_add_and_scale():
    assert e1 + e2 == Multivector((0, 1, 1, 0, 0, 0, 0, 0))
    assert 0 * (e1 + 3 * e5) == Multivector.zero()
    assert 2 * (e0 + e7) == Multivector((2, 0, 0, 0, 0, 0, 0, 2))
    assert (e0 + e1) / 2 == Multivector((0.5, 0.5, 0, 0, 0, 0, 0, 0))


def test_conjugate_examples():
    assert (e0 + e1 + e7).conjugate() == e0 - e1 + e7
    a = e0 + e2 + e4
    assert a * a.conjugate() == 3 * e0  # N = 3, T = 0


def test_prime_examples():
    assert (e6 + e7).prime() == -e6 - e7
    assert (e1 + e2).prime() == e1 - e2


@given(multivectors)
def test_involutions_are_involutions(a):
    assert a.conjugate().conjugate() == a
    assert a.prime().prime() == a


def test_cre_cim_examples():
    a = Multivector((1, -1, 1, 1, 0, 0, 0, -1))
    assert a.cre() == e0 - e7
    assert e7.cim() == Multivector.zero()
    # central part of a product is symmetric in the factors
    assert (e1 * e2).cre() == (e2 * e1).cre() == Multivector.zero()


@given(multivectors)
def test_cre_plus_cim(a):
    assert a.cre() + a.cim() == a
    assert 2 * a.cre() == a + a.conjugate()


def test_functionals_examples():
    f = Multivector((1, -1, 1, 1, 0, 0, 0, -1)).functionals()
    assert f.N == -1.0 and f.T == -1.0
    assert (e0 + e2 + e4).functionals().P == 9.0
    z = Multivector.zero().functionals()
    assert z == Functionals(0, 0, 0, 0, 0, 0, 0)


@given(multivectors)
def test_p_is_n_squared_plus_4t_squared(a):
    f = a.functionals()
    assert f.P == f.N * f.N + 4.0 * f.T * f.T


def test_split_examples():
    a = e0 + e1 + e4 + e5
    a_h, a_big = a.split_h()
    assert a_h == e0 + e1 and a_big == e0 + e1
    assert e3.split_h() == (e3, Multivector.zero())
    assert e7.split_h() == (Multivector.zero(), e3)


@given(multivectors)
def test_split_reconstructs(a):
    a_h, a_big = a.split_h()
    span = {0, 1, 2, 3}
    assert all(c == 0 for t, c in enumerate(a_h.coeffs) if t not in span)
    assert all(c == 0 for t, c in enumerate(a_big.coeffs) if t not in span)
    assert a_h + a_big * e4 == a


def test_is_central():
    assert (3 * e0 - 2 * e7).is_central()
    assert not e1.is_central()
    assert (e0 + 1e-15 * e2).is_central(1e-12)
    assert not (e0 + 1e-15 * e2).is_central(0.0)
    # e2 genuinely fails centrality: it does not commute with e1
    assert e2 * e1 != e1 * e2


def test_centrality_matches_commutation():
    rng = random.Random(5)
    for _ in range(200):
        a = random_multivector(rng)
        commutes = all(a * e == e * a for e in BASIS[1:7])
        assert a.is_central(0.0) == commutes
        s, t = rng.randint(-5, 5), rng.randint(-5, 5)
        z = Multivector((s, 0, 0, 0, 0, 0, 0, t))
        assert z.is_central(0.0)
        assert all(z * e == e * z for e in BASIS)


def test_is_singular():
    assert (e1 + e2).is_singular()
    assert not (e0 + e2 + e4).is_singular()
    assert Multivector.zero().is_singular()
    with pytest.raises(ValueError):
        e0.is_singular(-1.0)


@given(multivectors, multivectors, multivectors)
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(multivectors, multivectors)
def test_involution_antihomomorphisms(a, b):
    assert (a * b).conjugate() == b.conjugate() * a.conjugate()
    assert (a * b).prime() == b.prime() * a.prime()


@given(multivectors)
def test_conjugate_product_is_central(a):
    f = a.functionals()
    expected = Multivector((f.N, 0, 0, 0, 0, 0, 0, 2 * f.T))
    assert a * a.conjugate() == expected
    assert a.conjugate() * a == expected


@given(multivectors, multivectors)
def test_functional_product_identities(a, b):
    fa, fb, fab = a.functionals(), b.functionals(), (a * b).functionals()
    assert fab.T == fa.N * fb.T + fb.N * fa.T
    assert fab.N == fa.N * fb.N - 4.0 * fa.T * fb.T
    assert fab.P == fa.P * fb.P


@given(multivectors)
def test_quartic_form_factorization(a):
    f = a.functionals()
    central = Multivector((f.N, 0, 0, 0, 0, 0, 0, -2 * f.T))
    want = Multivector.scalar(f.P)
    assert a * a.conjugate() * central == want
    assert a * central * a.conjugate() == want


@given(multivectors, multivectors)
def test_cre_of_products_is_symmetric(a, b):
    assert (a * b).cre() == (b * a).cre()


@given(multivectors)
def test_functionals_under_involutions(a):
    f = a.functionals()
    fc = a.conjugate().functionals()
    fp = a.prime().functionals()
    assert fc.T == f.T and fp.T == -f.T
    assert fc.N == f.N and fp.N == f.N


@given(multivectors, small_scalars)
def test_scaling_is_linear(a, lam):
    assert lam * a == a * lam
    assert (lam * a).coeffs == tuple(lam * c for c in a.coeffs)


def test_singular_structure():
    rng = random.Random(11)
    for _ in range(300):
        a = random_singular(rng)
        f = a.functionals()
        total = sum(c * c for c in a.coeffs)
        # prime(a) * a collapses onto 1, e1, e3, e5
        assert a.prime() * a == Multivector((total, 2 * f.T1, 0, 2 * f.T3, 0, 2 * f.T5, 0, 0))
        assert f.T1 ** 2 + f.T3 ** 2 + f.T5 ** 2 == f.K ** 2
        assert f.K > 0
        assert f.K == total / 2


def test_immutability_and_validation():
    a = e1 + e2
    with pytest.raises(AttributeError):
        a._c = None
    with pytest.raises(ValueError):
        Multivector((1, 2, 3))
    with pytest.raises(ValueError):
        Multivector((math.nan,) * 8)
    with pytest.raises(ValueError):
        Multivector((math.inf,) + (0.0,) * 7)
    with pytest.raises(ValueError):
        Multivector.basis(8)


def test_equality_and_hash():
    assert e1 + e2 == e2 + e1
    assert hash(e1 + e2) == hash(e2 + e1)
    assert e1 != e2
    assert (e1 == "e1") is False
