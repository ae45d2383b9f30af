from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from slicegap.algebra import QQ, ZZ, CyclotomicDyadic, CyclotomicMod2, FiniteField, LaurentRing, PrimeField
from slicegap.algebra.rings import first_irreducible, is_irreducible_mod_p, RingError


def _elements(R, seed, n=12):
    rng = random.Random(seed)
    return [R.random_element(rng) for _ in range(n)]


RINGS = [ZZ, QQ, PrimeField(7), FiniteField(2, 3), FiniteField(3, 2), CyclotomicMod2(3, 8), CyclotomicMod2(1, 5)]


@pytest.mark.parametrize("R", RINGS, ids=repr)
@given(seed=st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_ring_axioms(R, seed):
    a, b, c = _elements(R, seed, 3)
    assert R.add(a, b) == R.add(b, a)
    assert R.mul(a, b) == R.mul(b, a)
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.is_zero(R.sub(a, a))
    assert R.mul(a, R.one) == a


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (5, 2), (2, 4)])
def test_finite_field_unit_group_is_cyclic_of_full_order(p, n):
    F = FiniteField(p, n)
    q = p**n
    units = [x for x in F.elements() if not F.is_zero(x)]
    assert len(units) == q - 1
    for x in units:
        assert F.mul(x, F.inv(x)) == F.one
        assert F.pow(x, q - 1) == F.one
    # some element generates
    orders = []
    for x in units:
        k, y = 1, x
        while y != F.one:
            y, k = F.mul(y, x), k + 1
        orders.append(k)
    assert max(orders) == q - 1


def test_irreducibility_by_root_count_for_quadratics():
    # a monic quadratic over F_p is irreducible iff it has no root
    p = 5
    for b in range(p):
        for c in range(p):
            has_root = any((x * x + b * x + c) % p == 0 for x in range(p))
            assert is_irreducible_mod_p([c, b, 1], p) == (not has_root)
    assert first_irreducible(2, 2) == (1, 1, 1)


def test_cyclotomic_zeta_has_order_2d():
    for e in (1, 2, 3):
        A = CyclotomicMod2(e, 10)
        d = 2 ** (e - 1)
        z = A.zeta
        assert A.pow(z, d) == A.neg(A.one)
        assert A.pow(z, 2 * d) == A.one
        assert A.mul(z, A.zeta_pow(-1)) == A.one


def test_cyclotomic_units_invert_and_pi_is_not_a_unit():
    A = CyclotomicMod2(3, 12)
    rng = random.Random(3)
    for _ in range(30):
        x = A.random_element(rng)
        if A.residue(x):
            assert A.mul(x, A.inv(x)) == A.one
    with pytest.raises(RingError):
        A.inv(A.pi)


def test_dyadic_inverse_of_pi_needs_a_half():
    D = CyclotomicDyadic(3)
    pinv = D.inv(D.pi)
    assert D.mul(pinv, D.pi) == D.one
    assert not D.is_integral(pinv)
    assert D.is_integral(D.mul(pinv, D.from_int(2)))
    assert D.from_fraction(Fraction(3, 4)) == D.mul(D.from_int(3), D.inv(D.from_int(4)))


def test_dyadic_reduction_is_a_ring_map():
    D = CyclotomicDyadic(2)
    A = CyclotomicMod2(2, 9)
    x = D.add(D.zeta, D.from_int(3))
    y = D.mul(D.zeta, D.zeta)
    assert D.to_mod2(D.mul(x, y), A) == A.mul(D.to_mod2(x, A), D.to_mod2(y, A))


def test_laurent_monomials():
    R = LaurentRing(ZZ)
    u = R.monomial(1, 1)
    assert R.mul(u, R.inv(u)) == R.one
    assert R.mul(R.monomial(3, -2), R.monomial(2, 5)) == R.monomial(6, 3)
