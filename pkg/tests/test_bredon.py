import pytest
from hypothesis import given, settings, strategies as st

from slicegap import bredon as B
from slicegap.equivariant import MackeyCoefficient, RealRep, all_genuine_reps, divisors

Z8 = MackeyCoefficient("ConstantZ", 8)


def _Z(m):
    return MackeyCoefficient("ConstantZ", m)


def _nz(groups):
    return {k: (b, tuple(t)) for k, (b, t) in groups.items() if b or t}


def virtual_reps(m, bound=2):
    nl = max(m // 2 - 1, 0)
    return st.builds(lambda a, b, c: RealRep(m, a, b if m > 1 else 0, tuple(c)),
                     st.integers(-bound, bound), st.integers(-bound, bound),
                     st.lists(st.integers(-1, 1), min_size=nl, max_size=nl)).filter(
        lambda V: sum(abs(x) for x in (V.a, V.b) + V.c) <= 4)


def test_census_of_rho8():
    cen = B.cell_census(RealRep.rho(8))
    assert cen == {0: (8, 1), 1: (8, 1), 2: (4, 1), 3: (1, 1), 4: (1, 1), 5: (1, 1), 6: (1, 1),
                   7: (2, 1), 8: (2, 1)}


def test_small_censuses():
    assert B.cell_census(RealRep.sigma(2)) == {0: (2, 1), 1: (1, 1)}
    assert B.cell_census(RealRep(4)) == {0: (4, 1)}


@pytest.mark.parametrize("V", [RealRep.rho(8), RealRep.lam(4, 1), RealRep(8, 2, 1, (0, 1, 0)),
                               RealRep.rho(2, 3), RealRep.sigma(4, 2)], ids=repr)
def test_boundary_squares_to_zero(V):
    C = B.chain_model(V)
    C.check()
    B.dual(C).check()


def test_sphere_examples():
    C = B.chain_model(RealRep.lam(4, 1))
    U = B.underlying_complex(C)
    assert [U.homology(k) for k in range(0, 4)] == [(0, []), (0, []), (1, []), (0, [])]
    S = B.underlying_complex(B.chain_model(RealRep.sigma(2)))
    assert S.homology(1) == (1, [])
    D = B.chain_model(-RealRep.rho(2))
    assert set(D.degrees()) <= {-2, -1, 0}


@given(st.sampled_from([2, 4, 8]).flatmap(lambda m: st.sampled_from(all_genuine_reps(m, 5))))
@settings(max_examples=40, deadline=None)
def test_underlying_and_fixed_points_are_spheres(V):
    assert all(B.sphere_checks(V).values())


@given(st.sampled_from([2, 4, 8]).flatmap(virtual_reps))
@settings(max_examples=40, deadline=None)
def test_virtual_spheres(V):
    assert all(B.sphere_checks(V).values())


def test_shifted_spheres():
    assert all(B.sphere_checks(RealRep.rho(4), shift_by=-1).values())


def test_point_has_coefficient_group_in_degree_zero():
    for kind in ("ConstantZ", "Burnside"):
        Mc = MackeyCoefficient(kind, 8)
        groups = _nz(B.bredon(B.chain_model(RealRep(8)), Mc))
        assert groups == {0: (Mc.level_rank(8), ())}


def test_cohomology_of_rho2_sphere_in_low_degrees():
    C = B.chain_model(RealRep.rho(2))
    for k in (1, 2, 3):
        assert B.bredon(C, _Z(2), "cohomology", k) in ((0, ()), (0, []))


def test_orbit_complex_of_sign_sphere_is_acyclic():
    O = B.orbit_complex(B.chain_model(RealRep.sigma(2)))
    assert all(O.cohomology(k) == (0, []) for k in range(-1, 3))


@pytest.mark.parametrize("V", [RealRep.sigma(2), RealRep.lam(4, 1), RealRep.rho(4), RealRep(8, 1, 0, (0, 1, 0))],
                         ids=repr)
def test_oracle_examples(V):
    assert B.compare_with_oracle(V)


def test_oracle_guard():
    with pytest.raises(B.SizeGuardError):
        B.simplicial_oracle(RealRep.rho(8), _Z(8))


@given(st.sampled_from([2, 4, 8]).flatmap(lambda m: st.sampled_from(all_genuine_reps(m, 6))))
@settings(max_examples=30, deadline=None)
def test_orbit_identity(V):
    assert B.orbit_identity_holds(B.chain_model(V))


@given(st.sampled_from([2, 4, 8]).flatmap(lambda m: st.sampled_from(all_genuine_reps(m, 5))))
@settings(max_examples=30, deadline=None)
def test_duality(V):
    hom = _nz(B.bredon(B.chain_model(-V), _Z(V.m), "homology"))
    coh = _nz(B.bredon(B.chain_model(V), _Z(V.m), "cohomology"))
    assert hom == {-k: g for k, g in coh.items()}


@pytest.mark.parametrize("k,m_big", [(2, 8), (2, 4), (4, 8), (8, 8)])
def test_induction_preserves_constant_coefficient_homology(k, m_big):
    for V in (RealRep.rho(k), RealRep.rho(k, -1), RealRep.sigma(k, 2)):
        C = B.chain_model(V, window=(-4, 4))
        assert _nz(B.bredon(B.induce(C, m_big), _Z(m_big))) == _nz(B.bredon(C, _Z(k)))


def test_induction_then_forget_gives_a_wedge():
    C = B.chain_model(RealRep.rho(2))
    U = B.underlying_complex(B.induce(C, 8))
    assert U.homology(2) == (4, [])
    assert B.induce(C, 2).diffs == C.diffs


def test_induce_rejects_non_subgroup():
    with pytest.raises(B.BredonError):
        B.induce(B.chain_model(RealRep.rho(4)), 2)


@pytest.mark.parametrize("V", [RealRep.rho(4, -3), RealRep.rho(4, -2), RealRep.rho(2, 4), RealRep.rho(4, 2) - RealRep.sigma(4, 1)],
                         ids=repr)
def test_windowed_model_agrees_with_full_model(V):
    lo, hi = -3, -1
    full = B.bredon(B.chain_model(V), _Z(V.m))
    win = B.bredon(B.chain_model(V, window=(lo, hi)), _Z(V.m))
    for j in range(lo, hi + 1):
        b1, t1 = win.get(j, (0, ()))
        b2, t2 = full.get(j, (0, ()))
        assert (b1, tuple(t1)) == (b2, tuple(t2))


@pytest.mark.parametrize("G,K,m", [(2, 2, -1), (8, 4, -2), (8, 8, -4), (4, 2, -3), (8, 2, 3), (4, 4, 0)])
def test_cell_lemma_instances(G, K, m):
    assert B.cell_lemma_check(G, K, m)


def test_gap_needs_isotropy():
    # the free cell S^{-rho_1} = S^{-1} has homology in degree -1
    groups = B.slice_sphere_homology(8, 1, -1)
    assert groups[-1] != (0, ())
    with pytest.raises(B.BredonError):
        B.cell_lemma_check(8, 1, -1)
    with pytest.raises(B.SizeGuardError):
        B.cell_lemma_check(8, 4, -5)


def test_fault_injection_breaks_the_cell_lemma():
    with B.inject_fault():
        results = [B.cell_lemma_check(G, K, m) for G in (2, 4, 8) for K in divisors(G) if K > 1
                   for m in range(-4, 0)]
    assert not all(results)
    assert B.cell_lemma_check(2, 2, -1)
