import random

import sympy
from hypothesis import given, settings, strategies as st

from slicegap.algebra import QQ, ZZ, PrimeField, TruncSeries, series_compose, series_inverse, series_reverse

N = 8


def _uni(R, coeffs, cut=N):
    return TruncSeries.from_univariate(R, coeffs, cut)


coeff_lists = st.lists(st.integers(-5, 5), min_size=1, max_size=N)


def _sympy_poly(coeffs):
    t = sympy.Symbol("t")
    return sum(c * t**i for i, c in enumerate(coeffs)), t


@given(coeff_lists, coeff_lists)
@settings(max_examples=60, deadline=None)
def test_product_matches_sympy(a, b):
    f, g = _uni(ZZ, a), _uni(ZZ, b)
    pa, t = _sympy_poly(a)
    pb, _ = _sympy_poly(b)
    expected = sympy.Poly(sympy.expand(pa * pb), t)
    got = (f * g).univariate_list()
    for i in range(N):
        assert got[i] == expected.coeff_monomial(t**i)


@given(coeff_lists, st.lists(st.integers(-4, 4), min_size=1, max_size=N))
@settings(max_examples=60, deadline=None)
def test_composition_matches_sympy(a, b):
    b = [0] + b  # g(0) = 0
    f, g = _uni(ZZ, a), _uni(ZZ, b)
    pa, t = _sympy_poly(a)
    pb, _ = _sympy_poly(b)
    expected = sympy.Poly(sympy.expand(pa.subs(t, pb)), t)
    got = series_compose(f, g).univariate_list()
    for i in range(N):
        assert got[i] == expected.coeff_monomial(t**i)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=N - 1))
@settings(max_examples=60, deadline=None)
def test_reverse_is_a_two_sided_inverse(rest):
    f = _uni(ZZ, [0, 1] + rest)
    g = series_reverse(f)
    t = TruncSeries.var(ZZ, ("t",), N)
    assert series_compose(f, g) == t
    assert series_compose(g, f) == t


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=N - 1))
@settings(max_examples=40, deadline=None)
def test_multiplicative_inverse(rest):
    f = _uni(QQ, [3] + rest)
    assert (f * series_inverse(f)) == TruncSeries.constant(QQ, ("t",), N, QQ.one)


def test_geometric_series_and_integration_raise_cutoff():
    f = _uni(ZZ, [1, -1])
    inv = series_inverse(f)
    assert inv.univariate_list() == [1] * (N + 1)
    g = _uni(QQ, [1] * (N + 1))
    G = g.integrate(0)
    assert G.cutoff == N + 1
    assert G.univariate_list()[N + 1] == sympy.Rational(1, N + 1)


def test_two_variable_substitution_and_symmetry():
    R = PrimeField(5)
    xy = ("x", "y")
    x = TruncSeries.var(R, xy, 6, 0)
    y = TruncSeries.var(R, xy, 6, 1)
    F = x + y + x * y
    swapped = F.substitute([y, x])
    assert swapped == F
    rng = random.Random(0)
    c = R.random_element(rng)
    assert F.scale(c)[(1, 1)] == R.mul(c, R.one)


def test_truncate_keeps_terms_up_to_cutoff_and_never_raises_it():
    f = _uni(ZZ, [1, 2, 3], cut=4)
    assert f.truncate(10).cutoff == 4
    assert f.truncate(1).univariate_list() == [1, 2]
