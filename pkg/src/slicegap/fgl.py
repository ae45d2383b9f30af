"""Formal group laws, k-series, heights, logarithms and Hazewinkel formal A-modules.

A law is stored as a two-variable TruncSeries F(x, y).  The graded laws over
R_* = A[u, 1/u] use LaurentRing coefficients, so each homogeneous
coefficient carries its own u-exponent and the generator of the cyclic group
acts by u^k -> zeta^k u^k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log

from .algebra.rings import (QQ, CyclotomicDyadic, CyclotomicMod2, LaurentRing, PrimeField, Ring,
                            RingError)
from .algebra.series import SeriesError, TruncSeries, series_compose, series_inverse, series_reverse

XY = ("x", "y")
XYZ = ("x", "y", "z")
T = ("t",)

INFINITE = "INFINITE"


class FGLError(ValueError):
    pass


class HeightCertificationError(FGLError):
    """The cutoff is too small to decide the height up to the requested bound."""


class IntegralityError(FGLError):
    pass


class FormalGroupLaw:
    def __init__(self, F: TruncSeries, name: str = "F"):
        if F.vars != XY:
            F = F.rename(XY)
        self.F = F
        self.name = name

    @property
    def ring(self) -> Ring:
        return self.F.ring

    @property
    def cutoff(self) -> int:
        return self.F.cutoff

    def __call__(self, a: TruncSeries, b: TruncSeries) -> TruncSeries:
        return self.F.substitute([a, b])

    def __eq__(self, other):
        return isinstance(other, FormalGroupLaw) and self.F == other.F

    def __repr__(self):
        return f"FormalGroupLaw({self.name}: {self.F!r})"

    def map_coefficients(self, fn, ring, name=None):
        return FormalGroupLaw(self.F.map_coefficients(fn, ring), name or self.name)


def additive(ring: Ring, cutoff: int) -> FormalGroupLaw:
    x = TruncSeries.var(ring, XY, cutoff, 0)
    y = TruncSeries.var(ring, XY, cutoff, 1)
    return FormalGroupLaw(x + y, "G_a")


def multiplicative(ring: Ring, cutoff: int, u=None) -> FormalGroupLaw:
    """G_m(x, y) = x + y - u x y."""
    u = ring.one if u is None else u
    x = TruncSeries.var(ring, XY, cutoff, 0)
    y = TruncSeries.var(ring, XY, cutoff, 1)
    return FormalGroupLaw(x + y - (x * y).scale(u), "G_m")


def _first_nonzero_degree(s: TruncSeries):
    return s.order()


@dataclass
class FGLReport:
    unit: TruncSeries
    commutativity: TruncSeries
    associativity: TruncSeries

    @property
    def ok(self) -> bool:
        return self.unit.is_zero() and self.commutativity.is_zero() and self.associativity.is_zero()

    def failing(self):
        out = {}
        for name in ("unit", "commutativity", "associativity"):
            s = getattr(self, name)
            if not s.is_zero():
                out[name] = _first_nonzero_degree(s)
        return out


def fgl_verify(law: FormalGroupLaw) -> FGLReport:
    F, ring, cut = law.F, law.ring, law.cutoff
    x = TruncSeries.var(ring, XY, cut, 0)
    y = TruncSeries.var(ring, XY, cut, 1)
    zero = TruncSeries.zero(ring, XY, cut)
    unit = (F.substitute([x, zero]) - x) + (F.substitute([zero, y]) - y)
    comm = F - F.substitute([y, x])
    X = TruncSeries.var(ring, XYZ, cut, 0)
    Y = TruncSeries.var(ring, XYZ, cut, 1)
    Z = TruncSeries.var(ring, XYZ, cut, 2)
    assoc = F.substitute([X, F.substitute([Y, Z])]) - F.substitute([F.substitute([X, Y]), Z])
    return FGLReport(unit, comm, assoc)


def _t(ring, cut):
    return TruncSeries.var(ring, T, cut)


def inverse_series(law: FormalGroupLaw) -> TruncSeries:
    """The series i(t) = [-1](t) with F(t, i(t)) = 0, solved degree by degree."""
    ring, cut = law.ring, law.cutoff
    t = _t(ring, cut)
    coeffs = {(1,): ring.neg(ring.one)}
    i = TruncSeries(ring, T, cut, coeffs)
    for n in range(2, cut + 1):
        err = law.F.truncate(n).substitute([t.truncate(n), i.truncate(n)])[(n,)]
        if not ring.is_zero(err):
            # dF/dy(t, 0) = 1 + O(t), so the degree-n error moves one-for-one
            coeffs[(n,)] = ring.neg(err)
            i = TruncSeries(ring, T, cut, coeffs)
    return i


def k_series(law: FormalGroupLaw, k: int) -> TruncSeries:
    """[k](t): [0] = 0, [k] = F([k-1](t), t), and [-k] = [k](i(t))."""
    ring, cut = law.ring, law.cutoff
    t = _t(ring, cut)
    if k == 0:
        return TruncSeries.zero(ring, T, cut)
    if k < 0:
        return series_compose(k_series(law, -k), inverse_series(law))
    result = t
    for _ in range(k - 1):
        result = law(result, t)
    return result


def height(law: FormalGroupLaw, p: int | None = None, bound: int | None = None):
    """Height of a law over a field of characteristic p.

    Returns the least n such that [p](t) starts in degree p^n, or INFINITE if
    [p](t) vanishes through the cutoff.  `bound` is the largest height we
    promise to detect; the cutoff must reach p^bound.
    """
    ring = law.ring
    p = p or getattr(ring, "characteristic", 0)
    if not p or isinstance(ring, CyclotomicMod2):
        raise FGLError("height needs a field of positive characteristic")
    cut = law.cutoff
    if bound is None:
        bound = int(log(cut, p) + 1e-9) if cut >= 1 else 0
    if p**bound > cut:
        raise HeightCertificationError(f"cutoff {cut} cannot certify heights up to {bound} (need {p**bound})")
    ps = k_series(law, p)
    d = ps.order()
    if d is None:
        return INFINITE
    n = 0
    while p**n < d:
        n += 1
    if p**n != d:
        raise FGLError(f"[p](t) starts in degree {d}, which is not a power of {p}")
    return n


def logarithm(law: FormalGroupLaw) -> TruncSeries:
    """log(t) = integral of dt / F_y(t, 0); coefficients must live in a Q-algebra."""
    ring, cut = law.ring, law.cutoff
    dy = {}
    for (i, j), c in law.F.coeffs.items():
        if j == 1 and i + 1 <= cut:
            dy[(i,)] = c
    try:
        inv = series_inverse(TruncSeries(ring, T, cut, dy))
        return inv.truncate(cut - 1).integrate(0) if cut else inv
    except (RingError, SeriesError) as exc:
        raise FGLError(f"logarithm needs division by integers: {exc}") from None


def from_log(l: TruncSeries, name="F") -> FormalGroupLaw:
    """l^{-1}(l(x) + l(y))."""
    ring, cut = l.ring, l.cutoff
    if not ring.is_zero(l[(0,)]) or l[(1,)] != ring.one:
        raise FGLError("a logarithm must be t + higher terms")
    inv = series_reverse(l)
    x = TruncSeries.var(ring, XY, cut, 0)
    y = TruncSeries.var(ring, XY, cut, 1)
    return FormalGroupLaw(inv.substitute([l.substitute([x]) + l.substitute([y])]), name)


def conjugate_fgl(law: FormalGroupLaw):
    """F-bar(x, y) = -F(-x, -y) and the strict isomorphism g = -[-1]_F carrying F to F-bar.

    Returns (F-bar, g, ok) where ok records both the carrying identity and strictness.
    """
    ring, cut = law.ring, law.cutoff
    x = TruncSeries.var(ring, XY, cut, 0)
    y = TruncSeries.var(ring, XY, cut, 1)
    Fbar = FormalGroupLaw(-law.F.substitute([-x, -y]), law.name + "-bar")
    g = -inverse_series(law)
    lhs = g.substitute([law.F])
    rhs = Fbar.F.substitute([g.substitute([x]), g.substitute([y])])
    strict = g[(1,)] == ring.one and ring.is_zero(g[(0,)])
    return Fbar, g, (lhs == rhs) and strict


def conjugation_act(f: TruncSeries, law: FormalGroupLaw) -> FormalGroupLaw:
    """^fF(x, y) = f(F(f^{-1}x, f^{-1}y)) for strict f."""
    ring = law.ring
    if not ring.is_zero(f[(0,)]) or f[(1,)] != ring.one:
        raise FGLError("conjugation needs a strict series f = t + ...")
    cut = min(f.cutoff, law.cutoff)
    f = f.truncate(cut)
    finv = series_reverse(f)
    x = TruncSeries.var(ring, XY, cut, 0)
    y = TruncSeries.var(ring, XY, cut, 1)
    inner = law.F.truncate(cut).substitute([finv.substitute([x]), finv.substitute([y])])
    return FormalGroupLaw(f.substitute([inner]), "^f" + law.name)


# ---------------------------------------------------------------------------
# Hazewinkel formal A-modules over A = Z_2[zeta_{2^e}]


def hazewinkel_log(e: int, cutoff: int) -> TruncSeries:
    """l(t) = sum_i t^{2^i} / pi^i with pi = zeta - 1, exact over Z[zeta][1/2]."""
    D = CyclotomicDyadic(e)
    pinv = D.inv(D.pi)
    coeffs = {}
    i, c = 0, D.one
    while 2**i <= cutoff:
        coeffs[(2**i,)] = c
        c = D.mul(c, pinv)
        i += 1
    return TruncSeries(D, T, cutoff, coeffs)


def functional_equation_residual(l: TruncSeries) -> TruncSeries:
    """l(t) - t - pi^{-1} l(t^2), which telescopes to zero."""
    D = l.ring
    t = TruncSeries.var(D, T, l.cutoff)
    return l - t - l.substitute([t * t]).scale(D.inv(D.pi))


def _reduce(s: TruncSeries, A: CyclotomicMod2, what: str) -> TruncSeries:
    D = s.ring
    out = {}
    for ex, c in s.coeffs.items():
        if not D.is_integral(c):
            raise IntegralityError(f"{what}: coefficient of {ex} is {D.fmt(c)}, not integral")
        out[ex] = A._red(c[0])
    return TruncSeries(A, s.vars, s.cutoff, out)


def gamma_act(s: TruncSeries, A: CyclotomicMod2, k: int = 1) -> TruncSeries:
    """gamma^k on a series over A[u, 1/u]: u^j -> zeta^{jk} u^j."""
    R = s.ring
    mul = A.mul

    def act(c):
        out = ((j, mul(A.zeta_pow(j * k), a)) for j, a in c)
        return tuple((j, a) for j, a in out if not A.is_zero(a))
    return s.map_coefficients(act, R)


def _grade(s: TruncSeries, R: LaurentRing, shift: int) -> TruncSeries:
    """Attach u^{deg + shift} to every coefficient (deg = total degree)."""
    return s.map_terms(lambda ex, c: ((sum(ex) + shift, c),), R)


@dataclass
class FormalAModule:
    e: int
    cutoff: int
    precision: int
    A: CyclotomicMod2
    R: LaurentRing
    log: TruncSeries
    F0: FormalGroupLaw
    zeta_series: TruncSeries
    F: FormalGroupLaw
    theta: TruncSeries
    _dyadic: dict = field(default_factory=dict, repr=False)

    @property
    def n(self):
        return 2 ** (self.e - 1)

    def a_series(self, a_dyadic) -> TruncSeries:
        """[a](t) = l^{-1}(a l(t)) reduced into A; a given in Z[zeta][1/2]."""
        linv = self._dyadic["linv"]
        l = self.log
        return _reduce(linv.substitute([l.scale(a_dyadic)]), self.A, "[a](t)")

    def zeta_power_series(self, k: int) -> TruncSeries:
        D = self.log.ring
        return self.a_series(D.pow(D.zeta, k % (2 * self.n)))

    def theta_k(self, k: int) -> TruncSeries:
        """theta for gamma^k: zeta^{-k} u^{-1} [zeta^k](u t)."""
        zk = self.zeta_power_series(k)
        zinv = self.A.zeta_pow(-k)
        return zk.map_terms(lambda ex, c: ((ex[0] - 1, self.A.mul(zinv, c)),), self.R)

    def reduction(self) -> FormalGroupLaw:
        """Image of F0 in the residue field A/pi = F_2."""
        F2 = PrimeField(2)
        return self.F0.map_coefficients(self.A.residue, F2, "F0 mod pi")


def formal_A_module(e: int, cutoff: int, precision: int = 16) -> FormalAModule:
    l = hazewinkel_log(e, cutoff)
    D = l.ring
    linv = series_reverse(l)
    A = CyclotomicMod2(e, precision)
    R = LaurentRing(A)
    x = TruncSeries.var(D, XY, cutoff, 0)
    y = TruncSeries.var(D, XY, cutoff, 1)
    F0d = linv.substitute([l.substitute([x]) + l.substitute([y])])
    F0 = FormalGroupLaw(_reduce(F0d, A, "F0"), "F0")
    zs = _reduce(linv.substitute([l.scale(D.zeta)]), A, "[zeta](t)")
    # F(x, y) = u^{-1} F0(ux, uy): coefficient of x^i y^j picks up u^{i+j-1}
    F = FormalGroupLaw(_grade(F0.F, R, -1), "F")
    zinv = A.zeta_pow(-1)
    theta = zs.map_terms(lambda ex, c: ((ex[0] - 1, A.mul(zinv, c)),), R)
    return FormalAModule(e, cutoff, precision, A, R, l, F0, zs, F, theta, {"linv": linv})


@dataclass
class MuCnReport:
    e: int
    cutoff: int
    precision: int
    gamma_n_conjugate: bool
    theta_composite: bool
    cocycle: bool
    failures: list

    @property
    def ok(self):
        return self.gamma_n_conjugate and self.theta_composite and self.cocycle

    def to_json(self):
        return {"e": self.e, "cutoff": self.cutoff, "precision": self.precision,
                "gammaNConjugate": self.gamma_n_conjugate, "thetaComposite": self.theta_composite,
                "cocycle": self.cocycle, "failures": [list(f) for f in self.failures], "ok": self.ok}


def mu_cn_check(e: int, cutoff: int = 10, precision: int = 16, cocycle: bool = True) -> MuCnReport:
    """gamma^n F = F-bar, the theta composite equals -[-1]_F, and the theta cocycle law."""
    M = formal_A_module(e, cutoff, precision)
    A, R, n = M.A, M.R, M.n
    failures = []
    xs = TruncSeries.var(R, XY, cutoff, 0)
    ys = TruncSeries.var(R, XY, cutoff, 1)
    Fbar = -M.F.F.substitute([-xs, -ys])
    res1 = gamma_act(M.F.F, A, n) - Fbar
    ok1 = res1.is_zero()
    if not ok1:
        failures.append(("gamma^n F = F-bar", res1.order()))

    comp = M.theta
    for k in range(1, n):
        comp = series_compose(gamma_act(M.theta, A, k), comp)
    target = -inverse_series(M.F)
    res2 = comp - target
    ok2 = res2.is_zero()
    if not ok2:
        failures.append(("theta composite = -[-1]_F", res2.order()))

    ok3 = True
    if cocycle:
        m = 2 * n
        thetas = [M.theta_k(k) for k in range(m)]
        t = TruncSeries.var(R, T, cutoff)
        if thetas[0] != t:
            ok3 = False
            failures.append(("theta_1 = id", thetas[0].order()))
        for k1 in range(m):
            for k2 in range(m):
                lhs = thetas[(k1 + k2) % m]
                rhs = series_compose(gamma_act(thetas[k2], A, k1), thetas[k1])
                if lhs != rhs:
                    ok3 = False
                    failures.append((f"cocycle g1=gamma^{k1}, g2=gamma^{k2}", (lhs - rhs).order()))
    return MuCnReport(e, cutoff, precision, ok1, ok2, ok3, failures)


def hazewinkel_height(e: int, cutoff: int | None = None, precision: int = 16):
    """Height of the reduction mod pi; [2] is built as l^{-1}(2 l(t)) in one variable."""
    n_expected_bound = 2 ** (e - 1)
    cutoff = cutoff or 2 ** (n_expected_bound + 1)
    l = hazewinkel_log(e, cutoff)
    D = l.ring
    two = series_reverse(l).substitute([l.scale(D.from_int(2))])
    A = CyclotomicMod2(e, precision)
    red = _reduce(two, A, "[2](t)").map_coefficients(A.residue, PrimeField(2))
    d = red.order()
    if d is None:
        return INFINITE
    k = d.bit_length() - 1
    if 2**k != d:
        raise FGLError(f"[2](t) mod pi starts in degree {d}")
    return k


def series_to_json(s: TruncSeries):
    return s.to_json()


__all__ = [
    "INFINITE", "FGLError", "HeightCertificationError", "IntegralityError", "FormalGroupLaw",
    "additive", "multiplicative", "fgl_verify", "inverse_series", "k_series", "height", "logarithm",
    "from_log", "conjugate_fgl", "conjugation_act", "hazewinkel_log", "functional_equation_residual",
    "formal_A_module", "mu_cn_check", "gamma_act", "hazewinkel_height", "QQ",
]
