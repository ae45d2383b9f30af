import random

import pytest
from hypothesis import given, settings, strategies as st

from slicegap import classes as K
from slicegap.equivariant import RealRep, all_genuine_reps, divisors, rep_fixed, rep_ind, rep_res


def test_norm_degree_fixtures():
    assert K.norm_degree(2, RealRep.rho(2, 15), 8) == RealRep.rho(8, 15)
    assert K.norm_degree(4, RealRep.rho(4, 3), 8) == RealRep.rho(8, 3)
    assert K.norm_degree(2, RealRep(2), 8).is_zero()
    with pytest.raises(K.DegreeError):
        K.norm_degree(2, RealRep.sigma(2), 8)


@pytest.mark.parametrize("h,g", [(1, 2), (2, 4), (2, 8), (4, 8)])
def test_strict_and_induced_norms_agree_on_rho(h, g):
    for j in range(-3, 4):
        d = RealRep.rho(h, j)
        assert K.norm_degree(h, d, g) == K.norm_degree_ind(h, d, g)


def test_fixed_degree():
    assert K.fixed_degree(2, 2, 5) == 5
    assert K.fixed_degree(2, 8, 1) == 4
    assert K.fixed_degree(2, 8, 0) == 0
    # the geometric fixed points of S^{m rho_G} under C_h have dimension dim (rho_G)^{C_h} m
    for g in (2, 4, 8):
        for h in divisors(g):
            assert K.fixed_degree(h, g, 3) == rep_fixed(RealRep.rho(g, 3), h)


def test_class_fixtures():
    u = K.make_class("u", 8, V=RealRep.sigma(8, 2))
    assert K.format_degree(u.degree) == "2 - 2*sigma" and u.s == 0
    a = K.make_class("a", 8)
    assert K.format_degree(a.degree) == "-1*sigma" and a.s == 1
    f = K.f_class(3, 8)
    assert (f.s, f.t.dim) == (21, 24)
    with pytest.raises(K.DegreeError):
        K.u_class(RealRep.sigma(8))
    assert K.a_class(RealRep.rho(8)).s is None


def test_euler_class_null_when_fixed_vectors_exist():
    assert K.a_is_null(RealRep(8, 1, 1))
    assert not K.a_is_null(RealRep.sigma(8, 3))


def test_orientation_identities():
    s2 = RealRep.sigma(8, 2)
    assert K.format_degree((K.u_class(s2) * K.u_class(s2)).degree) == "4 - 4*sigma"
    assert K.orientation_identity_check(s2, s2)
    assert K.orientation_identity_check(RealRep.rho(8, 2), s2, W=RealRep.rho(4, 2), group=8)


@given(st.sampled_from([2, 4, 8]).flatmap(lambda m: st.tuples(
    st.sampled_from([V * 2 for V in all_genuine_reps(m, 3)]),
    st.sampled_from([V * 2 for V in all_genuine_reps(m, 3)]))))
@settings(max_examples=40, deadline=None)
def test_orientation_identities_on_doubled_reps(pair):
    U, V = pair
    assert K.orientation_identity_check(U, V)


@pytest.mark.parametrize("h,g", [(2, 4), (2, 8), (4, 8)])
def test_induction_identity_for_doubled_reps(h, g):
    for W in all_genuine_reps(h, 3):
        assert K.orientation_identity_check(RealRep.sigma(g, 2), RealRep.sigma(g, 2), W=W * 2, group=g)


def test_u_rho_factorization_exponents():
    assert K.u_rho_factorization_holds(4, 2)
    assert K.u_rho_factorization_holds(8, 4)
    assert not K.u_rho_factorization_holds(8, 8)


@pytest.mark.parametrize("e", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_differential_bidegrees(e, k):
    assert K.differential_consistency(e, k)


def test_differential_lengths():
    # r = 1 + 2n(2^k - 1)
    for e, k, r in ((3, 1, 9), (1, 1, 3)):
        G = 2 ** e
        src = K.u_class(RealRep.sigma(G, 2)) ** (2 ** (k - 1))
        tgt = K.a_class(RealRep.sigma(G)) ** (2 ** k) * K.f_class(2 ** k - 1, G)
        assert tgt.s - src.s == r


def test_D_and_omega():
    D = K.build_D()
    assert K.format_degree(D.degree) == "19*rho_8"
    assert D.degree.dim == 152
    assert K.format_degree(K.build_omega(4).degree) == "256"
    assert K.format_degree(K.build_omega(0).degree) == "16"
    assert K.build_omega(5).degree.dim == 512
    assert K.divisibility_certificate(D) == {2: [4], 4: [2], 8: [1]}


def test_periodicity():
    assert K.periodicity_requirements(4, 2, 1) == 4
    assert K.periodicity_requirements(1, 1, 1) == 1
    assert K.periodicity_requirements(5, 2, 1) == 5
    assert K.periodicity_requirements(0, 2, 1) == "FAIL"
    assert K.certified_periodicity() == 4


@given(st.integers(1, 12), st.integers(1, 12), st.integers(1, 12))
def test_periodicity_is_minimal(k1, k2, k3):
    k = K.periodicity_requirements(k1, k2, k3)
    assert k1 <= k and k2 <= k + 2 and k3 <= k + 3
    assert k == 0 or not (k1 <= k - 1 and k2 <= k + 1 and k3 <= k + 2)


def test_deduction():
    assert K.skeleton_deduction(8)
    assert not K.skeleton_deduction(7)
    assert not K.skeleton_deduction(1)
    assert all(K.skeleton_deduction(j) == (j >= 8) for j in range(1, 30))
    assert K.deduction_consistent()


def test_adams_fixtures():
    fx = K.adams_fixtures(20)
    names = {r["name"]: r["t"] for r in fx["two_line"]}
    assert names == {"h0^2": 2, "h1^2": 4, "h0h2": 5, "h2^2": 8, "h0h3": 9, "h1h3": 10,
                     "h3^2": 16, "h0h4": 17, "h1h4": 18, "h2h4": 20}
    assert K.hopf_invariant_one_dimensions() == [0, 1, 3, 7]
    assert K.d2(4) == "h0*h3^2"
    assert K.d2(3) == "0"
    surv = {r["name"] for r in K.adams_fixtures(200)["two_line"] if r["survives_E3"]}
    assert {"h0h2", "h0h3", "h2h4", "h2h5", "h3h6"} <= surv
    assert "h0h4" not in surv


def test_two_line_basis_count():
    # pairs i <= j with j != i + 1: C(n+1, 2) - n elements with both 2^i, 2^j <= 2^(n-1)
    for n in range(1, 9):
        fx = K.adams_fixtures(2 ** n)
        expected = sum(1 for i in range(n + 1) for j in range(i, n + 1)
                       if j != i + 1 and 2 ** i + 2 ** j <= 2 ** n)
        assert len(fx["two_line"]) == expected


@given(st.integers(0, 10**6))
@settings(max_examples=50, deadline=None)
def test_products_add_degrees_and_filtrations(seed):
    rng = random.Random(seed)
    pool = [K.u_class(RealRep.sigma(8, 2)), K.a_class(RealRep.sigma(8)), K.b_class(8),
            K.f_class(rng.randint(1, 5), 8), K.delta(1, 8), K.g_class(rng.randint(1, 4), 8)]
    xs = [rng.choice(pool) for _ in range(rng.randint(1, 5))]
    prod = xs[0]
    for x in xs[1:]:
        prod = prod * x
    assert prod.degree == sum((x.degree for x in xs[1:]), xs[0].degree)
    assert prod.s == sum(x.s for x in xs)


@pytest.mark.parametrize("h,g", [(2, 8), (4, 8), (2, 4)])
def test_res_of_norm_counts_double_cosets(h, g):
    for j in range(0, 4):
        N = K.norm_degree(h, RealRep.rho(h, j), g)
        assert K.res_degree(N, h) == RealRep.rho(h, j * (g // h))
        assert rep_res(rep_ind(RealRep.rho(h, j), g), h) == K.res_degree(N, h)
