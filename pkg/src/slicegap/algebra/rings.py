"""Exact coefficient rings.

Elements are plain hashable Python values (ints, Fractions, tuples) and every
ring operation goes through the ring object.  Keeping elements unwrapped keeps
the power-series inner loops cheap.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


class RingError(ArithmeticError):
    pass


class Ring:
    """Base class; subclasses supply add/mul/neg/zero/one/from_int."""

    name = "ring"
    characteristic = 0

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def sum(self, items):
        total = self.zero
        for x in items:
            total = self.add(total, x)
        return total

    def inv(self, a):
        raise RingError(f"{self.name}: no inverse available for {a!r}")

    def div_int(self, a, k):
        """Divide by the integer k, if k is invertible in the ring."""
        return self.mul(a, self.inv(self.from_int(k)))

    def fmt(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "ZZ"

    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, k):
        return int(k)

    def inv(self, a):
        if a in (1, -1):
            return a
        raise RingError(f"{a} is not a unit in ZZ")

    def div_int(self, a, k):
        if a % k:
            raise RingError(f"{a} not divisible by {k} in ZZ")
        return a // k

    def random_element(self, rng, bound=9):
        return rng.randint(-bound, bound)


class RationalField(Ring):
    name = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, k):
        return Fraction(k)

    def inv(self, a):
        if a == 0:
            raise RingError("division by zero")
        return 1 / Fraction(a)

    def div_int(self, a, k):
        return Fraction(a) / k

    def random_element(self, rng, bound=9):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


class PrimeField(Ring):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def from_int(self, k):
        return int(k) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise RingError("division by zero")
        return pow(a, -1, self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)


def _poly_divmod_p(num, den, p):
    """Remainder of num by monic den over F_p; lists low->high."""
    num = list(num)
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i] % p
        if c:
            for j in range(d + 1):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    return [c % p for c in num[:d]]


def is_irreducible_mod_p(modulus, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    n = len(modulus) - 1
    for deg in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            if not any(_poly_divmod_p(modulus, list(tail) + [1], p)):
                return False
    return True


def first_irreducible(p: int, n: int):
    for tail in itertools.product(range(p), repeat=n):
        cand = list(tail) + [1]
        if cand[0] and is_irreducible_mod_p(cand, p):
            return tuple(cand)
    raise ValueError(f"no irreducible polynomial of degree {n} over F_{p}")


class FiniteField(Ring):
    """F_{p^n} as F_p[x]/(modulus); elements are coefficient tuples low->high."""

    def __init__(self, p: int, n: int, modulus=None):
        PrimeField(p)
        if modulus is None:
            modulus = first_irreducible(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not is_irreducible_mod_p(modulus, p):
            raise ValueError(f"{modulus} is reducible over F_{p}")
        self.p, self.n, self.modulus = p, n, modulus
        self.characteristic = p
        self.name = f"F{p}^{n}"
        self.zero = (0,) * n
        self.one = (1,) + (0,) * (n - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        prod += [0] * (self.n + 1 - len(prod))
        return tuple(_poly_divmod_p(prod, self.modulus, self.p))

    def from_int(self, k):
        return (int(k) % self.p,) + (0,) * (self.n - 1)

    def inv(self, a):
        if a == self.zero:
            raise RingError("division by zero")
        # multiplicative group has order p^n - 1
        return self.pow(a, self.p**self.n - 2)

    def elements(self):
        return [tuple(t) for t in itertools.product(range(self.p), repeat=self.n)]

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.n))


def _negacyclic_mul(a, b, d):
    """Product in Z[z]/(z^d + 1) on coefficient sequences of length d."""
    out = [0] * d
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                k = i + j
                if k < d:
                    out[k] += x * y
                else:
                    out[k - d] -= x * y
    return out


class CyclotomicMod2(Ring):
    """Z[z]/(Phi_{2^e}(z), 2^N), a finite-precision model of Z_2[zeta_{2^e}].

    Phi_{2^e}(z) = z^d + 1 with d = 2^(e-1) (so z + 1 when e = 1, where the
    ring is Z/2^N and zeta = -1).
    """

    def __init__(self, e: int, N: int = 16):
        if e < 1 or N < 1:
            raise ValueError("need e >= 1 and N >= 1")
        self.e, self.N = e, N
        self.d = 2 ** (e - 1)
        self.mod = 2**N
        self.characteristic = self.mod
        self.name = f"Z[zeta_{2**e}]/2^{N}"
        self.zero = (0,) * self.d
        self.one = (1,) + (0,) * (self.d - 1)

    def _red(self, seq):
        m = self.mod
        return tuple(c % m for c in seq)

    def add(self, a, b):
        m = self.mod
        return tuple((x + y) % m for x, y in zip(a, b))

    def sub(self, a, b):
        m = self.mod
        return tuple((x - y) % m for x, y in zip(a, b))

    def neg(self, a):
        m = self.mod
        return tuple(-x % m for x in a)

    def mul(self, a, b):
        return self._red(_negacyclic_mul(a, b, self.d))

    def from_int(self, k):
        return ((int(k) % self.mod),) + (0,) * (self.d - 1)

    @property
    def zeta(self):
        if self.d == 1:
            return self.from_int(-1)
        return (0, 1) + (0,) * (self.d - 2)

    @property
    def pi(self):
        """The uniformizer zeta - 1."""
        return self.sub(self.zeta, self.one)

    def zeta_pow(self, k):
        """zeta^k for any integer k (zeta has order 2^e)."""
        k %= 2 * self.d
        sign = 1
        if k >= self.d:
            k -= self.d
            sign = -1
        out = [0] * self.d
        out[k] = sign
        return self._red(out)

    def inv(self, a):
        # a is a unit iff its image in the residue field F_2 (z -> 1) is 1
        if sum(a) % 2 == 0:
            raise RingError(f"{a} is not a unit in {self.name}")
        # Newton iteration x <- x(2 - a x) doubles 2-adic precision
        x = self.one
        for _ in range(self.N.bit_length() + 2):
            x = self.mul(x, self.sub(self.from_int(2), self.mul(a, x)))
        return x

    def residue(self, a) -> int:
        """Image in A/(pi) = F_2."""
        return sum(a) % 2

    def random_element(self, rng):
        return tuple(rng.randrange(self.mod) for _ in range(self.d))

    def fmt(self, a):
        terms = []
        for i, c in enumerate(a):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        return " + ".join(terms) if terms else "0"


class CyclotomicDyadic(Ring):
    """Exact arithmetic in Z[zeta_{2^e}][1/2].

    An element is (coefficients, v) standing for coefficients / 2^v, kept
    normalised so that v >= 0 and v == 0 unless some coefficient is odd.
    This ring contains pi^{-1} (the norm of pi is 2), which is all the
    Hazewinkel logarithm needs.
    """

    def __init__(self, e: int):
        if e < 1:
            raise ValueError("need e >= 1")
        self.e = e
        self.d = 2 ** (e - 1)
        self.name = f"Z[zeta_{2**e}][1/2]"
        self.zero = ((0,) * self.d, 0)
        self.one = ((1,) + (0,) * (self.d - 1), 0)

    def _norm(self, coeffs, v):
        while v > 0 and all(c % 2 == 0 for c in coeffs):
            coeffs = [c // 2 for c in coeffs]
            v -= 1
        if not any(coeffs):
            return self.zero
        if v < 0:
            coeffs = [c << -v for c in coeffs]
            v = 0
        return (tuple(coeffs), v)

    def add(self, a, b):
        (x, u), (y, v) = a, b
        if u == v:
            return self._norm([p + q for p, q in zip(x, y)], u)
        if u < v:
            s = v - u
            return self._norm([(p << s) + q for p, q in zip(x, y)], v)
        s = u - v
        return self._norm([p + (q << s) for p, q in zip(x, y)], u)

    def neg(self, a):
        return (tuple(-c for c in a[0]), a[1])

    def mul(self, a, b):
        return self._norm(_negacyclic_mul(a[0], b[0], self.d), a[1] + b[1])

    def from_int(self, k):
        return self._norm([int(k)] + [0] * (self.d - 1), 0)

    def from_fraction(self, q: Fraction):
        den = q.denominator
        if den & (den - 1):
            raise RingError(f"{q} has a non-dyadic denominator")
        return self._norm([q.numerator] + [0] * (self.d - 1), den.bit_length() - 1)

    @property
    def zeta(self):
        if self.d == 1:
            return self.from_int(-1)
        return ((0, 1) + (0,) * (self.d - 2), 0)

    @property
    def pi(self):
        return self.sub(self.zeta, self.one)

    def inv(self, a):
        """Invert through the multiplication matrix over QQ; the inverse must be dyadic."""
        d = self.d
        cols = []
        for j in range(d):
            basis = [0] * d
            basis[j] = 1
            cols.append(_negacyclic_mul(a[0], basis, d))
        mat = [[Fraction(cols[j][i]) for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for c in range(d):
            piv = next((r for r in range(c, d) if mat[r][c] != 0), None)
            if piv is None:
                raise RingError("element is not invertible")
            mat[c], mat[piv] = mat[piv], mat[c]
            pv = mat[c][c]
            mat[c] = [x / pv for x in mat[c]]
            for r in range(d):
                if r != c and mat[r][c] != 0:
                    f = mat[r][c]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[c])]
        sol = [mat[i][d] for i in range(d)]
        den = 1
        for q in sol:
            den = den * q.denominator // gcd(den, q.denominator)
        if den & (den - 1):
            raise RingError("inverse is not dyadic")
        v = den.bit_length() - 1
        res = self._norm([int(q * den) for q in sol], 0)
        return self._norm(list(res[0]), v)

    def is_integral(self, a) -> bool:
        return a[1] == 0

    def to_mod2(self, a, target: CyclotomicMod2):
        if a[1] != 0:
            raise RingError(f"non-integral coefficient {self.fmt(a)}")
        return target._red(a[0])

    def fmt(self, a):
        coeffs, v = a
        terms = []
        for i, c in enumerate(coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        body = " + ".join(terms) if terms else "0"
        return body if v == 0 else f"({body})/2^{v}"


class LaurentRing(Ring):
    """base[u, u^-1]; an element is a sorted tuple of (u-exponent, coefficient)."""

    def __init__(self, base: Ring):
        self.base = base
        self.name = f"{base.name}[u,1/u]"
        self.characteristic = base.characteristic
        self.zero = ()
        self.one = ((0, base.one),)

    def _clean(self, d):
        bz = self.base.is_zero
        return tuple(sorted((k, c) for k, c in d.items() if not bz(c)))

    def monomial(self, coef, uexp: int):
        return () if self.base.is_zero(coef) else ((uexp, coef),)

    def add(self, a, b):
        acc = dict(a)
        badd = self.base.add
        for k, c in b:
            acc[k] = badd(acc[k], c) if k in acc else c
        return self._clean(acc)

    def neg(self, a):
        bn = self.base.neg
        return tuple((k, bn(c)) for k, c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        acc = {}
        bm, badd = self.base.mul, self.base.add
        for k1, c1 in a:
            for k2, c2 in b:
                k = k1 + k2
                t = bm(c1, c2)
                acc[k] = badd(acc[k], t) if k in acc else t
        return self._clean(acc)

    def from_int(self, k):
        return self.monomial(self.base.from_int(k), 0)

    def inv(self, a):
        if len(a) != 1:
            raise RingError("only monomials are invertible here")
        k, c = a[0]
        return ((-k, self.base.inv(c)),)

    def fmt(self, a):
        if not a:
            return "0"
        return " + ".join(f"({self.base.fmt(c)})*u^{k}" for k, c in a)


ZZ = IntegerRing()
QQ = RationalField()
