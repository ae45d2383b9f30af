import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from slicegap import slices as S
from slicegap.bredon import SizeGuardError, cell_census
from slicegap.equivariant import RealRep, divisors
from slicegap.slices import SliceCell, Wedge


def cells(group):
    return st.builds(lambda k, m: SliceCell(group, k, m), st.sampled_from(divisors(group)), st.integers(-3, 3))


def test_dimension_fixtures():
    assert S.dimension(SliceCell(8, 2, 3)) == 6
    assert S.dimension(SliceCell(8, 4, 1, regular=False)) == 3
    assert S.dimension(SliceCell(8, 1, 0)) == 0
    assert SliceCell(8, 2, 1).isotropic and not SliceCell(8, 1, 1).isotropic


def test_cw_range_fixtures():
    assert S.cw_range_for(6, 8) == (0, 6)
    assert S.cw_range_for(-8, 8) == (-8, -1)
    assert S.cw_range_for(0, 8) == (0, 0)


@pytest.mark.parametrize("G", [2, 4, 8])
def test_cell_dimensions_stay_in_the_window(G):
    for k in divisors(G):
        for m in range(-4, 5):
            for regular in (True, False):
                if not regular and m == 0:
                    continue
                assert S.check_cw_range(SliceCell(G, k, m, regular))


def test_cell_dimensions_follow_the_census():
    # S^{rho_8}: reduced cells in dimensions 1..8
    assert S.cell_dimensions(SliceCell(8, 8, 1)) == sorted(set(cell_census(RealRep.rho(8))) - {0})
    assert S.cell_dimensions(SliceCell(8, 8, -1)) == [-8, -7, -6, -5, -4, -3, -2, -1]


def test_support_fixtures():
    assert S.slice_ss_support(8, 0, 0)
    assert not S.slice_ss_support(8, 8, 9)
    assert S.slice_ss_support(8, 7, 8)
    assert not S.slice_ss_support(8, -1, 0)
    assert S.slice_ss_support(8, -7, -8)


def test_smash_fixtures():
    w = S.smash(SliceCell(4, 2, 1), SliceCell(4, 2, 1))
    assert w == Wedge({SliceCell(4, 2, 2): 2})
    X = SliceCell(8, 4, -2)
    assert S.smash(SliceCell(8, 8, 0), X) == Wedge([X])


def test_smash_rejects_irregular_cells():
    with pytest.raises(S.SliceError):
        S.smash(SliceCell(4, 2, 1, regular=False), SliceCell(4, 2, 1))


@given(st.sampled_from([2, 4, 8]).flatmap(lambda G: st.tuples(cells(G), cells(G))))
@settings(max_examples=100, deadline=None)
def test_smash_is_dimension_additive_and_matches_enumeration(pair):
    A, B = pair
    W = S.smash(A, B)
    assert W == S.smash_brute(A, B)
    assert W.dimensions() == [A.dimension + B.dimension]
    assert W.underlying_count() == A.index * B.index


@given(st.sampled_from([2, 4, 8]).flatmap(lambda G: st.tuples(cells(G), st.sampled_from(divisors(G)))))
@settings(max_examples=100, deadline=None)
def test_restriction_keeps_dimension_and_sphere_count(args):
    X, d = args
    W = S.restrict(X, d)
    assert W.underlying_count() == X.index
    assert W.dimensions() == [X.dimension]


def test_norm_wedge_from_c2_to_c4():
    W = S.norm_wedge(4, 2, range(4))
    diag = Wedge({SliceCell(4, 4, i): 1 for i in range(4)})
    off = Wedge(Counter(SliceCell(4, 2, i + j) for i, j in itertools.combinations(range(4), 2)))
    assert W == diag + off
    assert len(W) == 10
    assert S.norm_wedge(4, 2, [0]) == Wedge([SliceCell(4, 4, 0)])


@pytest.mark.parametrize("G,h", [(4, 2), (8, 4), (8, 2), (16, 4), (4, 1)])
def test_norm_wedge_matches_enumeration(G, h):
    for size in range(1, 5):
        degs = list(range(size))
        assert S.norm_wedge(G, h, degs) == S.norm_wedge_brute(G, h, degs)
    assert S.norm_wedge(G, h, [1, 2, 3], dmax=6) == S.norm_wedge_brute(G, h, [1, 2, 3], dmax=6)


def _census_oracle(e, dmax):
    """Every function G/C2 -> monomials (partitions), orbits found by applying the rotation."""
    G = 2 ** e
    n = G // 2
    D = dmax // 2
    mons = [p for w in range(D + 1) for p in S.partitions(w)]
    funcs = [f for f in itertools.product(mons, repeat=n) if sum(map(sum, f)) <= D]
    seen = set()
    out = Counter()
    for f in funcs:
        if f in seen:
            continue
        orb = {f[i:] + f[:i] for i in range(n)}
        seen |= orb
        stab = G // len(orb)
        w = sum(map(sum, f)) * len(orb) // n
        out[SliceCell(G, stab, w)] += 1
    return Wedge(out).by_dimension()


@pytest.mark.parametrize("e,dmax", [(1, 12), (2, 10), (3, 8)])
def test_census_against_enumeration(e, dmax):
    assert S.refinement_census(e, dmax) == _census_oracle(e, dmax)


def test_census_fixtures():
    cen = S.refinement_census(1, 16)
    assert cen[4] == Wedge({SliceCell(2, 2, 2): 2})
    for d in range(0, 9):
        assert len(cen[2 * d]) == len(list(S.partitions(d)))
    for e in (1, 2, 3):
        assert all(c.isotropic and c.regular for w in S.refinement_census(e, 12).values() for c, _ in w)


@pytest.mark.parametrize("e", [1, 2, 3])
def test_census_sphere_counts_match_generating_function(e):
    assert S.census_matches_series(e, 20)


def test_census_guard():
    with pytest.raises(SizeGuardError):
        S.refinement_census(3, 34)


@given(st.integers(1, 3), st.integers(-3, 3))
@settings(max_examples=20, deadline=None)
def test_rho_shift_relabels_dimensions(e, mm):
    G = 2 ** e
    cen = S.refinement_census(e, 8)
    for dim, W in cen.items():
        for c, _ in W:
            assert c.twist(mm).dimension == dim + mm * G


def test_hmu_series_small_values():
    # prod (1 - x^j)^{-1}: partition numbers
    assert S.hmu_series(1, 8) == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    # (1 - x)^{-2}(1 - x^2)^{-2}...: 1, 2, 5, 10, 20
    assert S.hmu_series(2, 4) == [1, 2, 5, 10, 20]


def test_gap_check_small_and_cell_instance():
    rep = S.gap_check(2, 3, 6)
    assert rep.ok and rep.cells > 0
    single = {-8: Wedge([SliceCell(8, 4, -2)])}
    assert S.gap_check(3, 19, 0, census=single).ok


def test_gap_check_flags_free_cells():
    free = {-2: Wedge([SliceCell(8, 1, -2)])}
    rep = S.gap_check(3, 1, 0, census=free)
    assert not rep.ok
    assert rep.failures[0]["degree"] == -2
