import random

import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from slicegap.algebra import ChainComplexZ, IntMatrix, invariant_factors, rank, snf
from slicegap.algebra.matrices import ChainError
import pytest

small = st.integers(-6, 6)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def _sympy_factors(rows):
    S = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    return [abs(int(S[i, i])) for i in range(min(S.shape)) if S[i, i] != 0]


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_invariant_factors_match_sympy(rows):
    M = IntMatrix.from_dense(rows)
    assert invariant_factors(M) == sorted(_sympy_factors(rows))
    assert rank(M) == sympy.Matrix(rows).rank()


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_snf_certificate(rows):
    M = IntMatrix.from_dense(rows)
    U, D, V = snf(M)
    assert U @ M @ V == D
    diag = [D[i, i] for i in range(min(D.rows, D.cols)) if D[i, i]]
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    assert abs(sympy.Matrix(U.to_dense()).det()) == 1
    assert abs(sympy.Matrix(V.to_dense()).det()) == 1


def test_sparse_path_on_a_large_permutation_like_matrix():
    rng = random.Random(5)
    n = 60
    entries = {}
    for i in range(n):
        entries[(i, i)] = 1
        entries[(i, (i + 1) % n)] = -1
    M = IntMatrix(n, n, entries)
    assert invariant_factors(M) == [1] * (n - 1)
    # multiply in a random unimodular change and check stability
    P = IntMatrix(n, n, {(i, i): 1 for i in range(n)} | {(i, rng.randrange(n)): 0 for i in range(3)})
    assert invariant_factors(P @ M) == [1] * (n - 1)


def _rp2():
    # cellular chains of RP^2: Z <-0- Z <-2- Z
    return ChainComplexZ({0: 1, 1: 1, 2: 1}, {1: IntMatrix(1, 1, {}), 2: IntMatrix(1, 1, {(0, 0): 2})})


def test_real_projective_plane():
    C = _rp2()
    assert C.homology(0) == (1, [])
    assert C.homology(1) == (0, [2])
    assert C.homology(2) == (0, [])
    assert C.cohomology(1) == (0, [])
    assert C.cohomology(2) == (0, [2])


def test_dual_swaps_homology_and_cohomology():
    C = _rp2()
    D = C.dual()
    for k in range(0, 3):
        assert D.homology(-k) == C.cohomology(k)


def test_dd_check():
    with pytest.raises(ChainError):
        ChainComplexZ({0: 1, 1: 1, 2: 1}, {1: IntMatrix(1, 1, {(0, 0): 1}), 2: IntMatrix(1, 1, {(0, 0): 1})})


def test_torus_and_shift():
    # minimal CW torus
    C = ChainComplexZ({0: 1, 1: 2, 2: 1}, {1: IntMatrix(1, 2), 2: IntMatrix(2, 1)})
    assert [C.homology(k) for k in range(3)] == [(1, []), (2, []), (1, [])]
    S = C.shift(3)
    assert S.homology(5) == (1, [])
