"""Cohomology of cyclic groups with coefficients in finitely generated modules.

A module is Z^r modulo a relation lattice L, with the generator gamma acting
by an integer matrix preserving L.  Cochains come from the periodic
resolution, where the coboundaries alternate between 1 - gamma and the norm
N = 1 + gamma + ... + gamma^{m-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra.matrices import IntMatrix, snf, snf_diagonal
from .algebra.rings import FiniteField


class CohomologyError(ValueError):
    pass


# small dense integer linear algebra ------------------------------------------


def _mat(rows, r, c):
    return IntMatrix(r, c, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v})


def _mm(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def _mv(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def _identity(r):
    return [[int(i == j) for j in range(r)] for i in range(r)]


def _cols(vectors, r):
    """Column matrix (r x k) from a list of k vectors."""
    return [[v[i] for v in vectors] for i in range(r)]


def lattice_basis(gens, r):
    """A Z-basis of the lattice spanned by `gens` in Z^r (list of vectors)."""
    gens = [list(g) for g in gens if any(g)]
    if not gens:
        return []
    G = _mat(_cols(gens, r), r, len(gens))
    U, D, V = snf(G)
    # G V = U^{-1} D; the nonzero columns of U^{-1} D form a basis of the span
    gv = _mm(_cols(gens, r), V.to_dense())
    d = snf_diagonal(D)
    return [[gv[i][j] for i in range(r)] for j in range(len(d)) if d[j]]


def solve_in_lattice(basis, v, r):
    """Integer coordinates of v in the given basis, or None if v is outside the lattice."""
    if not basis:
        return [] if not any(v) else None
    B = _cols(basis, r)
    U, D, V = snf(_mat(B, r, len(basis)))
    uv = _mv(U.to_dense(), v)
    d = snf_diagonal(D)
    y = []
    for i, x in enumerate(uv):
        if i < len(d) and d[i]:
            if x % d[i]:
                return None
            y.append(x // d[i])
        elif x:
            return None
    y += [0] * (len(basis) - len(y))
    return _mv(V.to_dense(), y[: len(basis)])


def integer_kernel(A, ncols):
    """Basis of {x in Z^ncols : A x = 0} for a dense integer matrix A."""
    if not A:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    U, D, V = snf(_mat(A, len(A), ncols))
    d = snf_diagonal(D)
    rk = sum(1 for x in d if x)
    Vd = V.to_dense()
    return [[Vd[i][j] for i in range(ncols)] for j in range(rk, ncols)]


# modules ----------------------------------------------------------------------


@dataclass
class CyclicModule:
    """Z^rank / <relations> with gamma acting by `gamma`; optional bilinear product."""

    m: int
    rank: int
    gamma: list
    relations: list = field(default_factory=list)
    mult: dict | None = None  # (i, j) -> vector; product of basis elements
    t: int | None = None
    name: str = "M"

    def __post_init__(self):
        r = self.rank
        self.gamma = [list(row) for row in self.gamma]
        if len(self.gamma) != r or any(len(row) != r for row in self.gamma):
            raise CohomologyError("gamma must be a rank x rank matrix")
        self._L = lattice_basis(self.relations, r)
        for v in self._L:
            if solve_in_lattice(self._L, _mv(self.gamma, v), r) is None:
                raise CohomologyError("gamma does not preserve the relations")
        gm = _identity(r)
        for _ in range(self.m):
            gm = _mm(self.gamma, gm)
        for j in range(r):
            diff = [gm[i][j] - int(i == j) for i in range(r)]
            if not self.in_relations(diff):
                raise CohomologyError(f"gamma^{self.m} is not the identity")

    def in_relations(self, v):
        return solve_in_lattice(self._L, list(v), self.rank) is not None

    def gamma_power(self, k):
        g = _identity(self.rank)
        for _ in range(k % self.m):
            g = _mm(self.gamma, g)
        return g

    def one_minus_gamma(self):
        r = self.rank
        return [[int(i == j) - self.gamma[i][j] for j in range(r)] for i in range(r)]

    def norm(self):
        r = self.rank
        acc = [[0] * r for _ in range(r)]
        g = _identity(r)
        for _ in range(self.m):
            acc = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(acc, g)]
            g = _mm(self.gamma, g)
        return acc

    def multiply(self, a, b):
        if self.mult is None:
            raise CohomologyError(f"{self.name} carries no product")
        out = [0] * self.rank
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        w = self.mult.get((i, j))
                        if w:
                            for k, c in enumerate(w):
                                out[k] += x * y * c
        return out


def trivial_module(m, rank=1, torsion=None, name=None):
    """Z^rank (or (Z/torsion)^rank) with trivial action and the coordinatewise product."""
    rel = [] if not torsion else [[torsion * int(i == j) for i in range(rank)] for j in range(rank)]
    mult = {(i, i): [int(k == i) for k in range(rank)] for i in range(rank)}
    return CyclicModule(m, rank, _identity(rank), rel, mult, name=name or "Z")


def sign_module(m):
    if m % 2:
        raise CohomologyError("the sign action needs even order")
    return CyclicModule(m, 1, [[-1]], [], {(0, 0): [1]}, name="Z(-1)")


def finite_field_module(m, p, n, modulus=None):
    """F_{p^n} as an F_p-vector space with trivial action and its field product."""
    K = FiniteField(p, n, modulus)
    basis = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    mult = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            mult[(i, j)] = list(K.mul(a, b))
    rel = [[p * int(i == j) for i in range(n)] for j in range(n)]
    return CyclicModule(m, n, _identity(n), rel, mult, name=f"F_{p}^{n}")


def cyclotomic_module(k, m=8, e=3, t=None):
    """A = Z[z]/(z^d + 1), d = 2^(e-1), with gamma acting by multiplication by zeta^k."""
    d = 2 ** (e - 1)
    k %= 2 * d
    mat = [[0] * d for _ in range(d)]
    for j in range(d):
        pos = j + k
        sign = 1
        while pos >= d:
            pos -= d
            sign = -sign
        mat[pos][j] = sign
    mult = {}
    for i in range(d):
        for j in range(d):
            v = [0] * d
            pos, sign = i + j, 1
            if pos >= d:
                pos, sign = pos - d, -1
            v[pos] = sign
            mult[(i, j)] = v
    return CyclicModule(m, d, mat, [], mult, t=t, name=f"A*zeta^{k}")


# cohomology -------------------------------------------------------------------


@dataclass
class CohomologyGroup:
    s: int
    betti: int
    torsion: list
    cycles: list       # basis of the cocycle lattice (contains the relations)
    boundaries: list   # basis of coboundaries + relations

    def is_zero(self):
        return self.betti == 0 and not self.torsion

    def order(self):
        if self.betti:
            return None
        o = 1
        for t in self.torsion:
            o *= t
        return o

    def describe(self):
        parts = (["Z"] * self.betti) + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"degree": self.s, "betti": self.betti, "torsion": list(self.torsion),
                "group": self.describe()}


def _coboundary_maps(X: CyclicModule, s):
    """(outgoing map delta^s, incoming map delta^{s-1}) as endomorphisms of M."""
    omg = X.one_minus_gamma()
    N = X.norm()
    # delta^s: C^s -> C^{s+1} is (1 - gamma) up to sign when s is even, N when s is odd
    out = omg if s % 2 == 0 else N
    inc = None if s == 0 else (omg if (s - 1) % 2 == 0 else N)
    return out, inc


def periodic_cohomology(X: CyclicModule, s: int) -> CohomologyGroup:
    if s < 0:
        raise CohomologyError("degree must be >= 0")
    r = X.rank
    out, inc = _coboundary_maps(X, s)
    L = X._L
    # cocycles: x with out(x) in L, i.e. kernel of [out | -L] projected to x
    aug = [row + [-v[i] for v in L] for i, row in enumerate(out)]
    ker = integer_kernel(aug, r + len(L))
    cycles = lattice_basis([k[:r] for k in ker] + L, r)
    img = [] if inc is None else [[inc[i][j] for i in range(r)] for j in range(r)]
    boundaries = lattice_basis(img + L, r)
    coords = []
    for b in boundaries:
        c = solve_in_lattice(cycles, b, r)
        if c is None:
            raise CohomologyError("coboundary outside cocycles (internal error)")
        coords.append(c)
    k = len(cycles)
    if coords:
        U, D, V = snf(_mat(_cols(coords, k), k, len(coords)))
        d = [x for x in snf_diagonal(D) if x]
    else:
        d = []
    betti = k - len(d)
    torsion = sorted(x for x in d if x > 1)
    return CohomologyGroup(s, betti, torsion, cycles, boundaries)


def is_coboundary(X: CyclicModule, s: int, cochain) -> bool:
    H = periodic_cohomology(X, s)
    return solve_in_lattice(H.boundaries, list(cochain), X.rank) is not None


def is_cocycle(X: CyclicModule, s: int, cochain) -> bool:
    out, _ = _coboundary_maps(X, s)
    return X.in_relations(_mv(out, cochain))


def cup(X: CyclicModule, p: int, f, q: int, g):
    """Cup product of cochains f in C^p and g in C^q via the cyclic diagonal approximation."""
    if X.mult is None:
        raise CohomologyError("cup products need a module with a product")
    if p % 2 == 0:
        return X.multiply(f, g)
    if q % 2 == 0:
        return X.multiply(f, _mv(X.gamma, g))
    out = [0] * X.rank
    m = X.m
    gp = [X.gamma_power(i) for i in range(m)]
    for i in range(m):
        gi_f = _mv(gp[i], f)
        for j in range(i + 1, m):
            prod = X.multiply(gi_f, _mv(gp[j], g))
            out = [a + b for a, b in zip(out, prod)]
    return out


def cup_power(X, s, f, e):
    """f^e for a class f of degree s (f^0 is the unit class 1 in degree 0)."""
    acc_deg, acc = s, list(f)
    if e == 0:
        raise CohomologyError("use the unit class directly for e = 0")
    for _ in range(e - 1):
        acc = cup(X, acc_deg, acc, s, f)
        acc_deg += s
    return acc


def cohomology_dims_fp(X: CyclicModule, p: int, smax: int):
    """F_p-dimension of H^s for s <= smax (module must be p-torsion)."""
    out = []
    for s in range(smax + 1):
        H = periodic_cohomology(X, s)
        if H.betti or any(t != p for t in H.torsion):
            raise CohomologyError("module is not an F_p-vector space in this degree")
        out.append(len(H.torsion))
    return out


# detection bookkeeping ----------------------------------------------------------


@dataclass(frozen=True)
class DetectionSymbol:
    name: str
    s: int
    t: int
    uexp: int

    def __mul__(self, other):
        return DetectionSymbol(f"{self.name}*{other.name}", self.s + other.s, self.t + other.t,
                               self.uexp + other.uexp)

    def consistent(self):
        # |u| = -2 and h, b have internal degree 0, so t is carried by the u-power
        return self.s >= 0 and self.t == -2 * self.uexp

    def to_json(self):
        return {"name": self.name, "s": self.s, "t": self.t, "uexp": self.uexp}


def detection_image(p: int, j: int) -> DetectionSymbol:
    """Image of b_j: u^{-n p^{j+1}} b in bidegree (2, 2(p-1)p^{j+1}), n = p - 1."""
    n = p - 1
    k = n * p ** (j + 1)
    return DetectionSymbol(f"u^{-k}*b", 2, 2 * (p - 1) * p ** (j + 1), -k)


def detection_h0(p: int) -> DetectionSymbol:
    n = p - 1
    return DetectionSymbol(f"u^{-n}*h", 1, 2 * p - 2, -n)


def detection_module(p: int):
    return finite_field_module(p, p, p - 1)


@dataclass
class PatternReport:
    p: int
    dims: list
    h_squared_zero: bool
    b_powers_nonzero: bool
    hb_nonzero: bool

    @property
    def ok(self):
        n = self.p - 1
        return all(d == n for d in self.dims) and self.h_squared_zero and self.b_powers_nonzero and self.hb_nonzero


def detection_pattern_check(p: int, smax: int = 8, emax: int = 10) -> PatternReport:
    X = detection_module(p)
    n = p - 1
    dims = cohomology_dims_fp(X, p, smax)
    one = [1] + [0] * (n - 1)
    h, b = one, one
    h2 = cup(X, 1, h, 1, h)
    h2_zero = is_coboundary(X, 2, h2)
    bpow_ok = True
    for e in range(1, emax + 1):
        if is_coboundary(X, 2 * e, cup_power(X, 2, b, e)):
            bpow_ok = False
    hb_ok = not is_coboundary(X, 3, cup(X, 1, h, 2, b))
    return PatternReport(p, dims, h2_zero, bpow_ok, hb_ok)


def monomial_nonvanishing(p: int, exponents) -> bool:
    """Whether h0 b_0^{i_0} ... b_k^{i_k} maps to a nonzero class u^(...) h b^e."""
    e = sum(exponents)
    X = detection_module(p)
    one = [1] + [0] * (p - 2)
    cls = one
    deg = 1
    for _ in range(e):
        cls = cup(X, deg, cls, 2, one)
        deg += 2
    # the u-power is a unit, so vanishing is decided by h b^e alone
    return not is_coboundary(X, deg, cls)


def monomial_image(p: int, exponents) -> DetectionSymbol:
    sym = detection_h0(p)
    for j, i in enumerate(exponents):
        for _ in range(i):
            sym = sym * detection_image(p, j)
    return sym


@dataclass
class KervaireTarget:
    j: int
    group: CohomologyGroup
    action_power: int
    in_range: bool

    @property
    def nonzero(self):
        return not self.group.is_zero()

    def to_json(self):
        return {"j": self.j, "group": self.group.describe(), "torsion": self.group.torsion,
                "betti": self.group.betti, "nonzero": self.nonzero, "inRange": self.in_range,
                "gammaActsBy": f"zeta^{self.action_power}"}


def kervaire_target(j: int) -> KervaireTarget:
    """H^2(C_8; A u^{-2^{j-1}}) with gamma acting on the coefficient by zeta^{-2^{j-1}}."""
    if j < 1:
        raise CohomologyError("j must be positive")
    k = -(2 ** (j - 1))
    X = cyclotomic_module(k, 8, 3, t=2**j)
    H = periodic_cohomology(X, 2)
    return KervaireTarget(j, H, k % 8, j >= 4)


def herbrand_quotient(X: CyclicModule, i: int = 1):
    """|H^{2i}| / |H^{2i-1}| as a Fraction for finite groups."""
    from fractions import Fraction
    a = periodic_cohomology(X, 2 * i).order()
    b = periodic_cohomology(X, 2 * i - 1).order()
    if a is None or b is None:
        return None
    return Fraction(a, b)
