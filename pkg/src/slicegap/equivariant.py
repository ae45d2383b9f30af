"""Finite cyclic 2-groups: G-sets, Burnside rings, Mackey data and real representations.

Throughout, G = C_m with m a power of two and generator gamma; the subgroup
C_d is identified with the divisor d (it is generated by gamma^(m/d)).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

import numpy as np


class EquivariantError(ValueError):
    pass


def is_power_of_two(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


def check_group(m: int):
    if not is_power_of_two(m):
        raise EquivariantError(f"group order {m} is not a power of two")
    return m


def divisors(m: int):
    return [d for d in range(1, m + 1) if m % d == 0]


def lcm(a, b):
    return a * b // gcd(a, b)


def check_subgroup(m, d):
    check_group(m)
    if d < 1 or m % d:
        raise EquivariantError(f"{d} is not the order of a subgroup of C_{m}")
    return d


# G-sets -------------------------------------------------------------------------


class GSet:
    """A finite C_m-set recorded as a multiset of orbit types G/C_d."""

    def __init__(self, m: int, orbits=None):
        self.m = check_group(m)
        cnt = Counter()
        if orbits:
            items = orbits.items() if isinstance(orbits, (dict, Counter)) else ((d, 1) for d in orbits)
            for d, k in items:
                check_subgroup(m, d)
                if k < 0:
                    raise EquivariantError("negative multiplicity in a G-set")
                if k:
                    cnt[d] += k
        self.orbits = cnt

    @classmethod
    def orbit(cls, m, d, count=1):
        return cls(m, {d: count})

    def __add__(self, other):
        if other.m != self.m:
            raise EquivariantError("G-sets over different groups")
        return GSet(self.m, self.orbits + other.orbits)

    def __eq__(self, other):
        return isinstance(other, GSet) and self.m == other.m and self.orbits == other.orbits

    def __hash__(self):
        return hash((self.m, frozenset(self.orbits.items())))

    def size(self):
        return sum(self.m // d * k for d, k in self.orbits.items())

    def marks(self):
        return [sum(k * mark(self.m, a, d) for d, k in self.orbits.items()) for a in divisors(self.m)]

    def __repr__(self):
        inner = " + ".join(f"{k}*[C{self.m}/C{d}]" for d, k in sorted(self.orbits.items()))
        return f"GSet({inner or '0'})"

    def to_json(self):
        return {"group": self.m, "orbits": [{"subgroup": d, "count": k} for d, k in sorted(self.orbits.items())]}


def mark(m, a, b):
    """|(G/C_b)^{C_a}|: all of G/C_b if C_a is inside C_b, else nothing."""
    return m // b if b % a == 0 else 0


def table_of_marks(m):
    ds = divisors(check_group(m))
    return [[mark(m, a, b) for b in ds] for a in ds]


def brute_force_mark(m, a, b):
    """Count cosets x + C_b fixed by the generator of C_a, working in Z/m."""
    sub_b = set(range(0, m, m // b))
    ga = m // a
    cosets = {frozenset((x + s) % m for s in sub_b) for x in range(m)}
    return sum(1 for c in cosets if frozenset((y + ga) % m for y in c) == c)


def _orbits_of_action(points, act):
    """Orbit decomposition under a single generator; returns list of orbit sizes."""
    seen = set()
    sizes = []
    for p in points:
        if p in seen:
            continue
        orbit = [p]
        seen.add(p)
        q = act(p)
        while q != p:
            orbit.append(q)
            seen.add(q)
            q = act(q)
        sizes.append(len(orbit))
    return sizes


def burnside_product(m, X: GSet, Y: GSet) -> GSet:
    """X x Y: G/C_a x G/C_b is m/lcm(a, b) copies of G/C_gcd(a, b)."""
    out = Counter()
    for a, ka in X.orbits.items():
        for b, kb in Y.orbits.items():
            out[gcd(a, b)] += ka * kb * (m // lcm(a, b))
    return GSet(m, out)


def brute_force_product(m, a, b) -> GSet:
    pts = [(x, y) for x in range(m // a) for y in range(m // b)]
    sizes = _orbits_of_action(pts, lambda p: ((p[0] + 1) % (m // a), (p[1] + 1) % (m // b)))
    return GSet(m, Counter(m // s for s in sizes))


def double_coset_restrict(m, h, k, X: GSet) -> GSet:
    """Res^G_K Ind^G_H X for an H-set X: [G:HK] copies of Ind_{H cap K}^K Res^H_{H cap K} X."""
    check_subgroup(m, h)
    check_subgroup(m, k)
    if X.m != h:
        raise EquivariantError("X must be a set over H")
    inter = gcd(h, k)
    copies = m // lcm(h, k)
    out = Counter()
    for c, cnt in X.orbits.items():
        # Res^H_{H cap K}(H/C_c): (h/c) / (inter / gcd(inter, c)) orbits of type C_gcd(inter, c)
        g = gcd(inter, c)
        n_orb = (h // c) * g // inter
        out[g] += copies * n_orb * cnt
    return GSet(k, out)


def brute_force_restrict_induced(m, h, k, X: GSet) -> GSet:
    """Enumerate the points of Ind_H^G X and let the generator of C_k act on them."""
    out = Counter()
    for c, cnt in X.orbits.items():
        # Ind_H^G(H/C_c) = G/C_c; points are residues mod m/c
        size = m // c
        step = m // k
        sizes = _orbits_of_action(range(size), lambda p: (p + step) % size)
        for s in sizes:
            out[k // s] += cnt
    return GSet(k, out)


# Mackey data ----------------------------------------------------------------------


class MackeyCoefficient:
    """Levels, restrictions and transfers for the constant functor Z or the Burnside functor.

    Matrices act on column vectors: res(big, small) has shape
    rank(small) x rank(big).  Conjugations are identities since G is abelian
    and the Burnside classes of a cyclic group are conjugation invariant.
    """

    def __init__(self, kind: str, m: int):
        kind = {"constz": "ConstantZ", "constantz": "ConstantZ", "z": "ConstantZ",
                "burnside": "Burnside", "a": "Burnside"}.get(kind.lower(), kind)
        if kind not in ("ConstantZ", "Burnside"):
            raise EquivariantError(f"unknown coefficient system {kind}")
        self.kind = kind
        self.m = check_group(m)

    def __repr__(self):
        return f"MackeyCoefficient({self.kind}, C{self.m})"

    def level_rank(self, d):
        check_subgroup(self.m, d)
        return 1 if self.kind == "ConstantZ" else len(divisors(d))

    def level_basis(self, d):
        """Names of the basis elements of level(d)."""
        if self.kind == "ConstantZ":
            return ["1"]
        return [f"[C{d}/C{j}]" for j in divisors(d)]

    def res(self, big, small):
        if big % small:
            raise EquivariantError("restriction needs small | big")
        if self.kind == "ConstantZ":
            return [[1]]
        rows = divisors(small)
        cols = divisors(big)
        M = [[0] * len(cols) for _ in rows]
        for cj, j in enumerate(cols):
            # C_small acting on C_big/C_j: stabiliser C_gcd(small, j)
            g = gcd(small, j)
            count = (big // j) * g // small
            M[rows.index(g)][cj] += count
        return M

    def tr(self, small, big):
        if big % small:
            raise EquivariantError("transfer needs small | big")
        if self.kind == "ConstantZ":
            return [[big // small]]
        rows = divisors(big)
        cols = divisors(small)
        M = [[0] * len(cols) for _ in rows]
        for cj, j in enumerate(cols):
            M[rows.index(j)][cj] = 1  # induction C_small/C_j -> C_big/C_j
        return M

    def conj(self, d, g=1):
        r = self.level_rank(d)
        return [[int(i == j) for j in range(r)] for i in range(r)]

    def to_json(self):
        return {"kind": self.kind, "group": self.m}


def mackey_transfer(Mc: MackeyCoefficient, d, d2):
    if d2 % d or Mc.m % d2:
        raise EquivariantError("need d | d' | |G|")
    return Mc.tr(d, d2)


def mackey_restriction(Mc: MackeyCoefficient, d2, d):
    if d2 % d or Mc.m % d2:
        raise EquivariantError("need d | d' | |G|")
    return Mc.res(d2, d)


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def _madd(A, B):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def mackey_axiom_holds(Mc: MackeyCoefficient, big, h, k) -> bool:
    """res^big_K tr^big_H = sum over K\\big/H of tr^K_{K cap H} c_g res^H_{K cap H}."""
    lhs = _matmul(Mc.res(big, k), Mc.tr(h, big))
    inter = gcd(h, k)
    n_dc = big // lcm(h, k)
    term = _matmul(Mc.tr(inter, k), _matmul(Mc.conj(inter), Mc.res(h, inter)))
    rhs = [[n_dc * x for x in row] for row in term]
    return lhs == rhs


def mackey_axiom_all(Mc: MackeyCoefficient) -> bool:
    ds = divisors(Mc.m)
    for big in ds:
        for h in divisors(big):
            for k in divisors(big):
                if not mackey_axiom_holds(Mc, big, h, k):
                    return False
    return True


# real representations -----------------------------------------------------------


@dataclass(frozen=True)
class RealRep:
    """a*eps + b*sigma + sum c_k lambda(k) for C_m; negative entries make it virtual.

    gamma rotates lambda(k) by 2*pi*k/m, 1 <= k < m/2.
    """

    m: int
    a: int = 0
    b: int = 0
    c: tuple = ()

    def __post_init__(self):
        check_group(self.m)
        c = tuple(self.c)
        nl = max(self.m // 2 - 1, 0)
        if len(c) < nl:
            c = c + (0,) * (nl - len(c))
        if len(c) != nl:
            raise EquivariantError(f"C_{self.m} has {nl} lambda summands, got {len(self.c)}")
        object.__setattr__(self, "c", c)
        if self.m == 1 and self.b:
            raise EquivariantError("the trivial group has no sign representation")

    # constructors
    @classmethod
    def trivial(cls, m, k=1):
        return cls(m, k)

    @classmethod
    def sigma(cls, m, k=1):
        return cls(m, 0, k)

    @classmethod
    def lam(cls, m, k, mult=1):
        n = m // 2
        k %= m
        if k == 0:
            return cls(m, 2 * mult)
        if k == n:
            return cls(m, 0, 2 * mult)
        if k > n:
            k = m - k
        c = [0] * (n - 1)
        c[k - 1] = mult
        return cls(m, 0, 0, tuple(c))

    @classmethod
    def rho(cls, m, k=1):
        if m == 1:
            return cls(1, k)
        return cls(m, k, k, tuple([k] * (m // 2 - 1)))

    @classmethod
    def from_json(cls, m, obj):
        return cls(m, int(obj.get("a", 0)), int(obj.get("b", 0)), tuple(int(x) for x in obj.get("c", [])))

    def to_json(self):
        return {"a": self.a, "b": self.b, "c": list(self.c)}

    # arithmetic
    def __add__(self, other):
        self._same(other)
        return RealRep(self.m, self.a + other.a, self.b + other.b, tuple(x + y for x, y in zip(self.c, other.c)))

    def __neg__(self):
        return RealRep(self.m, -self.a, -self.b, tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return RealRep(self.m, k * self.a, k * self.b, tuple(k * x for x in self.c))

    __rmul__ = __mul__

    def _same(self, other):
        if not isinstance(other, RealRep) or other.m != self.m:
            raise EquivariantError("representations of different groups")

    def is_genuine(self):
        return self.a >= 0 and self.b >= 0 and all(x >= 0 for x in self.c)

    def is_zero(self):
        return self.a == 0 and self.b == 0 and not any(self.c)

    def positive_part(self):
        return RealRep(self.m, max(self.a, 0), max(self.b, 0), tuple(max(x, 0) for x in self.c))

    def negative_part(self):
        return (-self).positive_part()

    @property
    def dim(self):
        return self.a + self.b + 2 * sum(self.c)

    def lambda_kernel(self, k):
        """Order of the kernel of the action on lambda(k)."""
        return gcd(self.m, k)

    def summands(self):
        """Irreducible summands as labels ('eps',), ('sigma',), ('lambda', k), with multiplicity."""
        out = []
        if self.a:
            out.append((("eps",), self.a))
        if self.b:
            out.append((("sigma",), self.b))
        for k, x in enumerate(self.c, start=1):
            if x:
                out.append((("lambda", k), x))
        return out

    def __repr__(self):
        parts = []
        if self.a:
            parts.append(f"{self.a}eps")
        if self.b:
            parts.append(f"{self.b}sigma")
        for k, x in enumerate(self.c, start=1):
            if x:
                parts.append(f"{x}lambda({k})")
        return f"RealRep[C{self.m}](" + (" + ".join(parts) or "0") + ")"


def rep_fixed(V: RealRep, d: int) -> int:
    """dim V^{C_d} (virtual dimension for virtual V)."""
    m = V.m
    check_subgroup(m, d)
    total = V.a
    if (m // d) % 2 == 0:
        total += V.b
    for k, x in enumerate(V.c, start=1):
        if k % d == 0:
            total += 2 * x
    return total


def rep_res(V: RealRep, d: int) -> RealRep:
    """Restriction to C_d, whose generator is gamma^(m/d)."""
    m = V.m
    check_subgroup(m, d)
    idx = m // d
    out = RealRep(d, V.a)
    if V.b:
        out = out + (RealRep(d, V.b) if idx % 2 == 0 else RealRep.sigma(d, V.b))
    for k, x in enumerate(V.c, start=1):
        if x:
            out = out + RealRep.lam(d, k, x) if d > 1 else out + RealRep(1, 2 * x)
    return out


def _end_dim(label):
    return 2 if label[0] == "lambda" else 1


def _irreducibles(m):
    out = [RealRep(m, 1)]
    if m > 1:
        out.append(RealRep.sigma(m))
    out += [RealRep.lam(m, k) for k in range(1, m // 2)]
    return out


def hom_dim(V: RealRep, W: RealRep) -> int:
    """dim Hom_G(V, W) for genuine (or virtual, bilinearly extended) reps of the same group."""
    V._same(W)
    wd = dict(W.summands())
    return sum(x * wd.get(lab, 0) * _end_dim(lab) for lab, x in V.summands())


def rep_ind(W: RealRep, m: int) -> RealRep:
    """Induction from C_h (h = W.m) to C_m via Frobenius reciprocity."""
    h = W.m
    check_subgroup(m, h)
    out = RealRep(m)
    for U in _irreducibles(m):
        lab = U.summands()[0][0]
        hd = hom_dim(W, rep_res(U, h))
        if hd % _end_dim(lab):
            raise EquivariantError("non-integral multiplicity in induction")
        out = out + U * (hd // _end_dim(lab))
    return out


def is_orientable(V: RealRep) -> bool:
    """det(gamma) = (-1)^b, each lambda contributing a rotation."""
    return V.b % 2 == 0


# matrix representations -----------------------------------------------------------


def rotation(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def rep_matrix(V: RealRep) -> np.ndarray:
    """A block-diagonal orthogonal matrix for gamma acting on a genuine V."""
    if not V.is_genuine():
        raise EquivariantError("only genuine representations have matrices")
    blocks = [np.eye(1)] * V.a + [-np.eye(1)] * V.b
    for k, x in enumerate(V.c, start=1):
        blocks += [rotation(2 * np.pi * k / V.m)] * x
    n = V.dim
    M = np.zeros((n, n))
    pos = 0
    for b in blocks:
        s = b.shape[0]
        M[pos:pos + s, pos:pos + s] = b
        pos += s
    return M


def regular_matrix(m):
    """gamma as the cyclic shift on R[C_m]."""
    M = np.zeros((m, m))
    for i in range(m):
        M[(i + 1) % m, i] = 1.0
    return M


def rep_decompose(m: int, mat, tol=1e-8) -> RealRep:
    """Decompose an orthogonal matrix of order dividing m by the eigenvalues of gamma."""
    check_group(m)
    A = np.asarray(mat, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise EquivariantError("matrix must be square")
    if not np.allclose(A.T @ A, np.eye(n), atol=tol):
        raise EquivariantError("matrix is not orthogonal")
    if not np.allclose(np.linalg.matrix_power(A, m), np.eye(n), atol=1e-6):
        raise EquivariantError(f"matrix does not have order dividing {m}")
    eig = np.linalg.eigvals(A)
    counts = Counter()
    for z in eig:
        k = int(round(np.angle(z) / (2 * np.pi) * m)) % m
        if abs(z - np.exp(2j * np.pi * k / m)) > 1e-6:
            raise EquivariantError("eigenvalue is not an m-th root of unity")
        counts[k] += 1
    a, b = counts[0], counts.get(m // 2, 0) if m > 1 else 0
    c = []
    for k in range(1, m // 2):
        if counts[k] != counts[m - k]:
            raise EquivariantError("unpaired complex eigenvalues")
        c.append(counts[k])
    return RealRep(m, a, b, tuple(c))


def rep_fixed_numeric(V: RealRep, d: int) -> int:
    """dim V^{C_d} by averaging the projector over C_d; an independent check of rep_fixed."""
    M = rep_matrix(V)
    g = np.linalg.matrix_power(M, V.m // d) if V.dim else M
    P = sum(np.linalg.matrix_power(g, j) for j in range(d)) / d if V.dim else np.zeros((0, 0))
    return int(round(np.trace(P))) if V.dim else 0


def all_genuine_reps(m, max_dim):
    """Every genuine representation of C_m with 0 < dim <= max_dim."""
    nl = max(m // 2 - 1, 0)
    out = []

    def rec(prefix, budget):
        if len(prefix) == nl:
            yield tuple(prefix)
            return
        for x in range(budget // 2 + 1):
            yield from rec(prefix + [x], budget - 2 * x)

    for c in rec([], max_dim):
        rest = max_dim - 2 * sum(c)
        for b in range(rest + 1 if m > 1 else 1):
            for a in range(rest - b + 1):
                V = RealRep(m, a, b, c)
                if V.dim > 0:
                    out.append(V)
    return out
