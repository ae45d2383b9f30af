import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from slicegap import cyclic as C


def _brute_orders(m, t, gamma, s):
    """|H^s| by enumerating (Z/t)^r directly from ker/im of 1 - gamma and the norm."""
    r = len(gamma)
    elems = list(itertools.product(range(t), repeat=r))

    def apply(M, v):
        return tuple(sum(M[i][j] * v[j] for j in range(r)) % t for i in range(r))

    g = [[int(i == j) for j in range(r)] for i in range(r)]
    powers = []
    for _ in range(m):
        powers.append(g)
        g = [[sum(gamma[i][k] * g[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
    omg = [[int(i == j) - gamma[i][j] for j in range(r)] for i in range(r)]
    N = [[sum(P[i][j] for P in powers) for j in range(r)] for i in range(r)]
    zero = (0,) * r
    ker = lambda M: {v for v in elems if apply(M, v) == zero}
    img = lambda M: {apply(M, v) for v in elems}
    if s == 0:
        return len(ker(omg))
    if s % 2 == 0:
        return len(ker(omg)) // len(img(N))
    return len(ker(N)) // len(img(omg))


def test_fixtures_on_integers():
    Z = C.trivial_module(2)
    assert C.periodic_cohomology(Z, 0).describe() == "Z"
    assert C.periodic_cohomology(Z, 1).is_zero()
    assert C.periodic_cohomology(Z, 2).torsion == [2]
    S = C.sign_module(2)
    assert C.periodic_cohomology(S, 1).torsion == [2]
    assert C.periodic_cohomology(S, 2).is_zero()


def test_cyclotomic_coefficients_with_sign_action():
    X = C.cyclotomic_module(4, 8, 3)
    H = C.periodic_cohomology(X, 1)
    assert H.torsion == [2, 2, 2, 2] and H.betti == 0


@pytest.mark.parametrize("j", range(4, 11))
def test_kervaire_target_is_eightfold(j):
    T = C.kervaire_target(j)
    assert T.group.torsion == [8, 8, 8, 8]
    assert T.nonzero and T.in_range


def test_kervaire_target_below_range():
    T = C.kervaire_target(3)
    assert T.group.is_zero() and not T.in_range


@given(st.sampled_from([2, 3, 4, 5, 6, 8]), st.integers(2, 12), st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_trivial_torsion_coefficients(m, t, s):
    X = C.trivial_module(m, torsion=t)
    g = math.gcd(m, t)
    H = C.periodic_cohomology(X, s)
    assert H.order() == g


MODULES = [
    (4, 4, [[0, -1], [1, 0]]),
    (2, 3, [[0, 1], [1, 0]]),
    (4, 2, [[1, 1], [0, 1]]),
    (3, 3, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
    (6, 2, [[0, 1], [1, 1]]),
]


@pytest.mark.parametrize("m,t,gamma", MODULES)
def test_finite_modules_against_enumeration(m, t, gamma):
    r = len(gamma)
    X = C.CyclicModule(m, r, gamma, [[t * int(i == j) for i in range(r)] for j in range(r)])
    for s in range(0, 7):
        assert C.periodic_cohomology(X, s).order() == _brute_orders(m, t, gamma, s)
    # periodicity and Herbrand quotient 1 on finite modules
    for s in range(1, 5):
        assert C.periodic_cohomology(X, s).torsion == C.periodic_cohomology(X, s + 2).torsion
    assert C.herbrand_quotient(X, 1) == C.herbrand_quotient(X, 2) == 1


def test_gamma_must_have_order_dividing_m():
    with pytest.raises(C.CohomologyError):
        C.CyclicModule(3, 1, [[-1]], [])


def test_cup_on_mod_two_cohomology_of_c2_is_polynomial():
    X = C.trivial_module(2, torsion=2)
    x = [1]
    for e in range(1, 9):
        assert not C.is_coboundary(X, e, C.cup_power(X, 1, x, e))


@pytest.mark.parametrize("p", [3, 5])
def test_exterior_and_polynomial_generators(p):
    rep = C.detection_pattern_check(p, smax=8)
    assert rep.dims == [p - 1] * 9
    assert rep.h_squared_zero and rep.b_powers_nonzero and rep.hb_nonzero and rep.ok


def _cocycles(X, s):
    H = C.periodic_cohomology(X, s)
    return H.cycles


@pytest.mark.parametrize("X", [C.trivial_module(4, torsion=4), C.finite_field_module(3, 3, 2),
                               C.trivial_module(2, torsion=2), C.trivial_module(6, torsion=6)],
                         ids=["Z4", "F9", "F2", "Z6"])
def test_cup_graded_commutative_and_associative(X):
    for p in range(0, 5):
        for q in range(0, 5):
            for f in _cocycles(X, p):
                for g in _cocycles(X, q):
                    fg = C.cup(X, p, f, q, g)
                    gf = C.cup(X, q, g, p, f)
                    sign = -1 if p * q % 2 else 1
                    diff = [a - sign * b for a, b in zip(fg, gf)]
                    assert C.is_coboundary(X, p + q, diff)
                    assert C.is_cocycle(X, p + q, fg)
    for p, q, r in itertools.product(range(4), repeat=3):
        for f in _cocycles(X, p)[:1]:
            for g in _cocycles(X, q)[:1]:
                for h in _cocycles(X, r)[:1]:
                    lhs = C.cup(X, p + q, C.cup(X, p, f, q, g), r, h)
                    rhs = C.cup(X, p, f, q + r, C.cup(X, q, g, r, h))
                    assert C.is_coboundary(X, p + q + r, [a - b for a, b in zip(lhs, rhs)])


def test_detection_symbols():
    s = C.detection_image(5, 0)
    assert (s.s, s.t, s.uexp) == (2, 40, -20)
    assert C.detection_image(3, 1).uexp == -18
    h = C.detection_h0(5)
    assert (h.s, h.t, h.uexp) == (1, 8, -4)
    for p in (3, 5):
        for j in range(4):
            assert C.detection_image(p, j).consistent()
    m = C.monomial_image(3, (1, 2))
    assert m.s == 1 + 2 * 3 and m.consistent()


@pytest.mark.parametrize("p,exps", [(5, (1,)), (5, ()), (3, (2,)), (3, (1, 1, 1)), (5, (0, 2, 3))])
def test_monomials_survive(p, exps):
    assert C.monomial_nonvanishing(p, exps)
