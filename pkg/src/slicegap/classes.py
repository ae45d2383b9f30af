"""RO(G)-graded bookkeeping for named classes: degrees, filtrations, norms.

Classes carry a degree (a virtual RealRep, read as the stem in RO(G)) and
a slice filtration s, or None where no filtration is assigned.  Nothing
here computes homotopy; it checks that identities balance in degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .equivariant import RealRep, check_subgroup, divisors, is_orientable, rep_fixed, rep_ind, rep_res


class DegreeError(ValueError):
    pass


def ro_dim(d: RealRep) -> int:
    return d.dim


def ro_fixed(d: RealRep, h: int) -> int:
    return rep_fixed(d, h)


def rho_multiple(d: RealRep):
    """j when d = j rho, else None."""
    if d.m == 1:
        return d.a
    j = d.a
    return j if d == RealRep.rho(d.m, j) else None


def format_degree(d: RealRep) -> str:
    j = rho_multiple(d)
    if j is not None and j != 0 and d.m > 1:
        return f"{j}*rho_{d.m}"
    terms = []
    if d.a:
        terms.append(str(d.a))
    if d.b:
        terms.append(f"{d.b}*sigma")
    for k, x in enumerate(d.c, start=1):
        if x:
            terms.append(f"{x}*lambda{k}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


# norms and fixed points ------------------------------------------------------------


def norm_degree(h: int, d: RealRep, g: int) -> RealRep:
    """N_H^G on degrees, restricted to multiples of rho_H: j rho_H -> j rho_G."""
    check_subgroup(g, h)
    if d.m != h:
        raise DegreeError("degree does not live over H")
    j = rho_multiple(d)
    if j is None:
        raise DegreeError("norm_degree is only defined on multiples of rho_H")
    return RealRep.rho(g, j)


def norm_degree_ind(h: int, d: RealRep, g: int) -> RealRep:
    """Norm on arbitrary degrees via N S^V = S^{Ind V}; agrees with norm_degree on rho multiples."""
    if d.m != h:
        raise DegreeError("degree does not live over H")
    return rep_ind(d, g)


def res_degree(d: RealRep, h: int) -> RealRep:
    return rep_res(d, h)


def fixed_degree(h: int, g: int, m: int) -> int:
    """dim of the geometric H-fixed points of S^{m rho_G}: m [G:H]."""
    check_subgroup(g, h)
    return m * (g // h)


# classes ---------------------------------------------------------------------------------


def _add_s(a, b):
    return None if a is None or b is None else a + b


@dataclass(frozen=True)
class NamedClass:
    symbol: str
    group: int
    degree: RealRep
    s: int | None = 0
    factors: tuple = field(default=(), compare=False)

    def __mul__(self, other: "NamedClass") -> "NamedClass":
        if other.group != self.group:
            raise DegreeError("product of classes over different groups")
        return NamedClass(f"{self.symbol}*{other.symbol}", self.group, self.degree + other.degree,
                          _add_s(self.s, other.s), self.factors + other.factors)

    def __pow__(self, k: int) -> "NamedClass":
        if k < 0:
            raise DegreeError("negative powers are not tracked")
        out = NamedClass("1", self.group, RealRep(self.group), 0)
        for _ in range(k):
            out = out * self
        return NamedClass(f"({self.symbol})^{k}", self.group, out.degree, out.s, out.factors)

    @property
    def t(self):
        """t = stem + s (only meaningful when s is known)."""
        return None if self.s is None else self.degree + RealRep(self.group, self.s)

    def to_json(self):
        return {"symbol": self.symbol, "group": self.group, "degree": format_degree(self.degree),
                "dim": self.degree.dim, "s": self.s}


def u_class(V: RealRep) -> NamedClass:
    """u_V in degree dim V - V, filtration 0."""
    if not V.is_genuine():
        raise DegreeError("u_V needs a genuine representation")
    if not is_orientable(V):
        raise DegreeError(f"{V} is not orientable")
    return NamedClass(f"u[{format_degree(V)}]", V.m, RealRep(V.m, V.dim) - V, 0)


def a_class(V: RealRep) -> NamedClass:
    """a_V in degree -V; a filtration only for multiples of sigma (a_sigma has s = 1)."""
    if not V.is_genuine():
        raise DegreeError("a_V needs a genuine representation")
    pure_sigma = V.a == 0 and not any(V.c)
    s = V.b if pure_sigma else None
    return NamedClass(f"a[{format_degree(V)}]", V.m, -V, s)


def a_is_null(V: RealRep) -> bool:
    """The Euler class is forced null when V has a nonzero fixed vector."""
    return rep_fixed(V, V.m) > 0


def rbar(j: int) -> NamedClass:
    """rbar_j over C_2 in degree j rho_2."""
    return NamedClass(f"rbar{j}", 2, RealRep.rho(2, j), 0)


def g_class(j: int, group: int) -> NamedClass:
    deg = norm_degree(2, rbar(j).degree, group)
    return NamedClass(f"g{j}", group, deg, 0, (("N", 2, j),))


def delta(k: int, level: int) -> NamedClass:
    """Delta_k^(level) in degree (2^k - 1) rho_level."""
    return NamedClass(f"Delta_{k}^({level})", level, RealRep.rho(level, 2 ** k - 1), 0, (("Delta", level, k),))


def normed_delta(k: int, level: int, group: int) -> NamedClass:
    deg = norm_degree(level, delta(k, level).degree, group)
    name = f"N_{level}^{group}(Delta_{k}^({level}))" if level != group else f"Delta_{k}^({level})"
    return NamedClass(name, group, deg, 0, (("Delta", level, k),))


def b_class(group: int) -> NamedClass:
    """b = 1 ^ a_rhobar in degree 1 - rho_G; filtration group - 1, forced by f_j = g_j b^j."""
    return NamedClass("b", group, RealRep(group, 1) - RealRep.rho(group), group - 1)


def f_class(j: int, group: int) -> NamedClass:
    """f_j in E_2^{(2n-1)j, 2nj}: integer degree j."""
    return NamedClass(f"f{j}", group, RealRep(group, j), (group - 1) * j)


def v_class(k: int) -> NamedClass:
    return NamedClass(f"v{k}", 8, (RealRep(8, 8) - RealRep.rho(8)) * (2 ** (k + 1)), 0)


def make_class(symbol: str, group: int = 8, **kw) -> NamedClass:
    sym = symbol.lower()
    if sym == "u":
        return u_class(kw["V"])
    if sym == "a":
        return a_class(kw.get("V", RealRep.sigma(group)))
    if sym == "rbar":
        return rbar(kw["j"])
    if sym == "g":
        return g_class(kw["j"], group)
    if sym == "delta":
        return normed_delta(kw["k"], kw.get("level", group), group)
    if sym == "b":
        return b_class(group)
    if sym == "f":
        return f_class(kw["j"], group)
    if sym == "v":
        return v_class(kw["k"])
    if sym == "d":
        return build_D()
    if sym == "omega":
        return build_omega(kw["k"])
    raise DegreeError(f"unknown class symbol {symbol!r}")


# identities ------------------------------------------------------------------------------


def orientation_identity_check(U: RealRep, V: RealRep, W: RealRep | None = None, group: int | None = None) -> bool:
    """Degree-level check of u_{U+V} = u_U u_V, Res u_V = u_{Res V} and the induction identity."""
    lhs = u_class(U + V)
    rhs = u_class(U) * u_class(V)
    ok = lhs.degree == rhs.degree and lhs.s == rhs.s
    for X in (U, V):
        for d in divisors(X.m):
            ok &= res_degree(u_class(X).degree, d) == u_class(rep_res(X, d)).degree
    if W is not None:
        g = group if group is not None else U.m
        h = W.m
        IW = rep_ind(W, g)
        trivial = rep_ind(RealRep(h, W.dim), g)
        lhs = u_class(IW)
        rhs = u_class(trivial).degree + norm_degree_ind(h, u_class(W).degree, g)
        ok &= lhs.degree == rhs
    return bool(ok)


def u_rho_factorization_holds(level: int, sigma_power: int) -> bool:
    """Does u_{2 rho} = u_{2 sigma}^p * N u_{2 rho'} balance in degree (rho' over half the group)?"""
    if level < 4:
        raise DegreeError("needs a proper index-2 subgroup")
    lhs = u_class(RealRep.rho(level, 2)).degree
    half = level // 2
    rhs = u_class(RealRep.sigma(level, 2)).degree * sigma_power
    rhs = rhs + norm_degree_ind(half, u_class(RealRep.rho(half, 2)).degree, level)
    return lhs == rhs


def differential_consistency(e: int, k: int) -> bool:
    """d_r u_{2 sigma}^{2^{k-1}} = a^{2^k} f_{2^k - 1} with r = 1 + 2n(2^k - 1)."""
    if e < 1 or k < 1:
        raise DegreeError("e and k must be positive")
    G = 2 ** e
    r = 1 + G * (2 ** k - 1)
    src = u_class(RealRep.sigma(G, 2)) ** (2 ** (k - 1))
    tgt = a_class(RealRep.sigma(G)) ** (2 ** k) * f_class(2 ** k - 1, G)
    filtration_ok = tgt.s - src.s == r
    degree_ok = tgt.degree == src.degree - RealRep(G, 1)
    return filtration_ok and degree_ok


def build_D() -> NamedClass:
    """D = N_2^8 Delta_4^(2) * N_4^8 Delta_2^(4) * Delta_1^(8)."""
    return normed_delta(4, 2, 8) * normed_delta(2, 4, 8) * normed_delta(1, 8, 8)


def build_omega(k: int) -> NamedClass:
    """omega = (Delta_1^(8))^{2^{k+1}} v with v in degree 2^{k+1}(8 - rho_8)."""
    if k < 0:
        raise DegreeError("k must be non-negative")
    w = delta(1, 8) ** (2 ** (k + 1)) * v_class(k)
    return NamedClass(f"omega{k}", 8, w.degree, w.s)


def divisibility_certificate(D: NamedClass, group: int = 8):
    """For each subgroup order 2m: the k with Delta_k^(2m) known to divide Res_{2m} D.

    The only rule used: Delta_k^(2m) divides Res_{2m} N_{2m}^G Delta_k^(2m),
    and divisibility of one factor gives divisibility of the product.
    """
    out = {d: [] for d in divisors(group) if d > 1}
    for kind, level, k in D.factors:
        if kind == "Delta":
            out[level].append(k)
    return {d: sorted(v) for d, v in out.items()}


def periodicity_requirements(k1: int, k2: int, k3: int):
    """Least k with k1 <= k, k2 <= k + 2, k3 <= k + 3, or "FAIL" on invalid input."""
    if min(k1, k2, k3) < 1:
        return "FAIL"
    return max(k1, k2 - 2, k3 - 3, 0)


def certified_periodicity():
    """k read off the divisibility certificate of build_D, level by level."""
    cert = divisibility_certificate(build_D())
    if not all(cert[d] for d in (2, 4, 8)):
        return "FAIL"
    return periodicity_requirements(min(cert[2]), min(cert[4]), min(cert[8]))


OPEN_DIMENSIONS = (2, 6, 14, 30, 62, 126)


def skeleton_deduction(j: int) -> bool:
    """Is 2^j - 2 congruent to -2 mod 256, so that 256-periodicity moves it onto pi_{-2} = 0?"""
    if j < 1:
        raise DegreeError("j must be positive")
    return (2 ** j - 2) % 256 == 254


def deduction_consistent(jmax: int = 16) -> bool:
    for j in range(2, jmax + 1):
        if skeleton_deduction(j) == ((2 ** j - 2) in OPEN_DIMENSIONS):
            return False
    return not skeleton_deduction(1)


# Adams spectral sequence low lines ----------------------------------------------------------------


E3_SURVIVORS = {(0, 2), (0, 3), (2, 4), (2, 5), (3, 6)}


def _survives(i, j):
    return i == j or i == 1 or (i, j) in E3_SURVIVORS


def adams_fixtures(tmax: int):
    """1-line and 2-line of Ext over the Steenrod algebra with t <= tmax."""
    one_line = []
    j = 0
    while 2 ** j <= tmax:
        rec = {"name": f"h{j}", "s": 1, "t": 2 ** j, "stem": 2 ** j - 1, "permanent": j <= 3}
        if j > 3:
            rec["d2"] = f"h0*h{j - 1}^2"
        one_line.append(rec)
        j += 1
    two_line = []
    top = j
    for i in range(top):
        for jj in range(i, top):
            if jj != i and jj <= i + 1:
                continue
            t = 2 ** i + 2 ** jj
            if t > tmax:
                continue
            name = f"h{i}^2" if i == jj else f"h{i}h{jj}"
            two_line.append({"name": name, "s": 2, "t": t, "stem": t - 2, "survives_E3": _survives(i, jj)})
    two_line.sort(key=lambda r: (r["t"], r["name"]))
    return {"one_line": one_line, "two_line": two_line}


def hopf_invariant_one_dimensions(tmax: int = 1 << 12):
    return [r["stem"] for r in adams_fixtures(tmax)["one_line"] if r["permanent"]]


def d2(j: int):
    """d_2 h_j = h_0 h_{j-1}^2 for j > 3, else 0."""
    return f"h0*h{j - 1}^2" if j > 3 else "0"
