"""Truncated multivariate power series over an exact ring.

A series is a dict from exponent tuples to nonzero coefficients, together
with a total-degree cutoff.  Anything of total degree above the cutoff is
thrown away as soon as it is produced.
"""

from __future__ import annotations

from collections import defaultdict

from .rings import Ring, RingError


class SeriesError(ValueError):
    pass


class TruncSeries:
    __slots__ = ("ring", "vars", "cutoff", "coeffs", "_by_deg")

    def __init__(self, ring: Ring, vars, cutoff: int, coeffs=None):
        if cutoff < 0:
            raise SeriesError("cutoff must be >= 0")
        self.ring = ring
        self.vars = tuple(vars)
        self.cutoff = cutoff
        nv = len(self.vars)
        clean = {}
        if coeffs:
            isz = ring.is_zero
            for exp, c in coeffs.items():
                exp = tuple(exp)
                if len(exp) != nv:
                    raise SeriesError(f"exponent {exp} does not match variables {self.vars}")
                if sum(exp) <= cutoff and not isz(c):
                    clean[exp] = c
        self.coeffs = clean
        self._by_deg = None

    # construction helpers -------------------------------------------------
    @classmethod
    def zero(cls, ring, vars, cutoff):
        return cls(ring, vars, cutoff)

    @classmethod
    def constant(cls, ring, vars, cutoff, c):
        return cls(ring, vars, cutoff, {(0,) * len(tuple(vars)): c})

    @classmethod
    def var(cls, ring, vars, cutoff, i=0):
        vars = tuple(vars)
        if isinstance(i, str):
            i = vars.index(i)
        exp = [0] * len(vars)
        exp[i] = 1
        return cls(ring, vars, cutoff, {tuple(exp): ring.one})

    @classmethod
    def from_univariate(cls, ring, coeffs, cutoff, var="t"):
        """Build a one-variable series from a list [c0, c1, ...]."""
        return cls(ring, (var,), cutoff, {(i,): c for i, c in enumerate(coeffs)})

    def _like(self, coeffs, cutoff=None):
        return TruncSeries(self.ring, self.vars, self.cutoff if cutoff is None else cutoff, coeffs)

    # inspection ------------------------------------------------------------
    @property
    def nvars(self):
        return len(self.vars)

    def __getitem__(self, exp):
        if isinstance(exp, int):
            exp = (exp,)
        return self.coeffs.get(tuple(exp), self.ring.zero)

    def coefficient(self, *exp):
        return self[exp]

    def univariate_list(self):
        if self.nvars != 1:
            raise SeriesError("not a one-variable series")
        return [self[(i,)] for i in range(self.cutoff + 1)]

    def is_zero(self):
        return not self.coeffs

    def constant_term(self):
        return self[(0,) * self.nvars]

    def order(self):
        """Smallest total degree present (None for zero)."""
        return min((sum(e) for e in self.coeffs), default=None)

    def by_degree(self):
        if self._by_deg is None:
            groups = defaultdict(list)
            for e, c in self.coeffs.items():
                groups[sum(e)].append((e, c))
            self._by_deg = dict(groups)
        return self._by_deg

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries")
        if other.ring is not self.ring and repr(other.ring) != repr(self.ring):
            raise SeriesError(f"ring mismatch {self.ring} vs {other.ring}")
        if other.vars != self.vars:
            raise SeriesError(f"variable mismatch {self.vars} vs {other.vars}")
        return min(self.cutoff, other.cutoff)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        cut = min(self.cutoff, other.cutoff)
        return self.vars == other.vars and self.truncate(cut).coeffs == other.truncate(cut).coeffs

    def __hash__(self):
        return hash((self.vars, self.cutoff, frozenset(self.coeffs.items())))

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        cut = self._check(other)
        add = self.ring.add
        acc = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc[e] = add(acc[e], c) if e in acc else c
        return self._like(acc, cut)

    def __neg__(self):
        neg = self.ring.neg
        return self._like({e: neg(c) for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        mul = self.ring.mul
        return self._like({e: mul(c, v) for e, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        cut = self._check(other)
        mul, add = self.ring.mul, self.ring.add
        acc = {}
        bdeg = other.by_degree()
        bdegs = sorted(bdeg)
        for da, terms_a in self.by_degree().items():
            room = cut - da
            if room < 0:
                continue
            for db in bdegs:
                if db > room:
                    break
                for eb, cb in bdeg[db]:
                    for ea, ca in terms_a:
                        e = tuple(x + y for x, y in zip(ea, eb))
                        t = mul(ca, cb)
                        acc[e] = add(acc[e], t) if e in acc else t
        return self._like(acc, cut)

    def __pow__(self, k: int):
        if k < 0:
            raise SeriesError("negative powers are not supported")
        result = TruncSeries.constant(self.ring, self.vars, self.cutoff, self.ring.one)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def truncate(self, cutoff):
        """Drop terms above `cutoff`; never raises the recorded precision."""
        if cutoff >= self.cutoff:
            return self
        return self._like(self.coeffs, cutoff)

    def map_coefficients(self, fn, ring=None):
        return TruncSeries(ring or self.ring, self.vars, self.cutoff,
                           {e: fn(c) for e, c in self.coeffs.items()})

    def map_terms(self, fn, ring=None):
        """fn(exp, coef) -> new coef; used for grading-dependent twists."""
        return TruncSeries(ring or self.ring, self.vars, self.cutoff,
                           {e: fn(e, c) for e, c in self.coeffs.items()})

    def rename(self, vars):
        return TruncSeries(self.ring, vars, self.cutoff, self.coeffs)

    def embed(self, vars, positions):
        """View self as a series in `vars`, sending variable i to vars[positions[i]]."""
        n = len(vars)
        out = {}
        for e, c in self.coeffs.items():
            new = [0] * n
            for i, k in enumerate(e):
                new[positions[i]] += k
            out[tuple(new)] = c
        return TruncSeries(self.ring, vars, self.cutoff, out)

    def derivative(self, i=0):
        mul, fi = self.ring.mul, self.ring.from_int
        out = {}
        for e, c in self.coeffs.items():
            if e[i]:
                new = list(e)
                new[i] -= 1
                out[tuple(new)] = mul(fi(e[i]), c)
        return self._like(out)

    def integrate(self, i=0):
        """Antiderivative in variable i; needs the ring to divide by integers.

        Integration raises the order of the error term, so the cutoff goes up by one.
        """
        div = self.ring.div_int
        out = {}
        for e, c in self.coeffs.items():
            new = list(e)
            new[i] += 1
            out[tuple(new)] = div(c, new[i])
        return self._like(out, self.cutoff + 1)

    # substitution ----------------------------------------------------------
    def substitute(self, values):
        """Evaluate self(values[0], ..., values[k-1]).

        Every value must be a series (in a common set of variables) with zero
        constant term, unless self is a polynomial of degree within cutoff in
        which case constants are allowed too.
        """
        if len(values) != self.nvars:
            raise SeriesError("wrong number of substitution values")
        if not values:
            return self
        target = values[0]
        cut = min([self.cutoff] + [v.cutoff for v in values])
        for v in values:
            target._check(v)
            if not v.ring.is_zero(v.constant_term()):
                raise SeriesError("substituted series must have zero constant term")
        ring = self.ring
        if self.nvars == 1:
            return _horner(self, values[0].truncate(cut), cut)
        powers = [[TruncSeries.constant(ring, target.vars, cut, ring.one)] for _ in values]

        def power(i, k):
            pw = powers[i]
            while len(pw) <= k:
                pw.append(pw[-1] * values[i].truncate(cut))
            return pw[k]

        total = {}
        add = ring.add
        for e, c in self.coeffs.items():
            if sum(e) > cut:
                continue
            m = None
            for i, k in enumerate(e):
                if k:
                    p = power(i, k)
                    m = p if m is None else m * p
            if m is None:
                m = powers[0][0]
            for te, tc in m.coeffs.items():
                v = ring.mul(c, tc)
                total[te] = add(total[te], v) if te in total else v
        return TruncSeries(ring, target.vars, cut, total)

    def __call__(self, *values):
        return self.substitute(list(values))

    def to_json(self):
        return {",".join(map(str, e)): self.ring.fmt(c) for e, c in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return f"0 + O({self.cutoff + 1})"
        terms = []
        for e, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            cs = self.ring.fmt(c)
            terms.append(cs if not mono else (mono if cs == "1" else f"({cs})*{mono}"))
        return " + ".join(terms) + f" + O({self.cutoff + 1})"


def _horner(f, g, cut):
    ring = f.ring
    coeffs = f.univariate_list() if f.cutoff <= cut else [f[(i,)] for i in range(cut + 1)]
    coeffs = coeffs[: cut + 1]
    nv = g.nvars
    zero_exp = (0,) * nv
    acc = TruncSeries(ring, g.vars, cut)
    for c in reversed(coeffs):
        acc = acc * g
        if not ring.is_zero(c):
            acc = acc + TruncSeries(ring, g.vars, cut, {zero_exp: c})
    return acc


def series_compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f(g) for one-variable f; g must have zero constant term."""
    if f.nvars != 1:
        raise SeriesError("outer series must be in one variable")
    if not g.ring.is_zero(g.constant_term()):
        raise SeriesError("inner series has a nonzero constant term")
    return f.substitute([g])


def series_reverse(f: TruncSeries) -> TruncSeries:
    """Compositional inverse of f = a t + ..., a a unit, solved degree by degree."""
    if f.nvars != 1:
        raise SeriesError("series_reverse needs a one-variable series")
    ring = f.ring
    if not ring.is_zero(f[(0,)]):
        raise SeriesError("series has a nonzero constant term")
    try:
        a_inv = ring.inv(f[(1,)])
    except RingError as exc:
        raise SeriesError(f"linear coefficient is not a unit: {exc}") from None
    cut = f.cutoff
    coeffs = {(1,): a_inv}
    g = TruncSeries(ring, f.vars, cut, coeffs)
    for n in range(2, cut + 1):
        err = f.truncate(n).substitute([g.truncate(n)])[(n,)]
        if not ring.is_zero(err):
            coeffs[(n,)] = ring.neg(ring.mul(err, a_inv))
            g = TruncSeries(ring, f.vars, cut, coeffs)
    return g


def series_inverse(f: TruncSeries) -> TruncSeries:
    """Multiplicative inverse of a series whose constant term is a unit."""
    ring = f.ring
    c0 = f.constant_term()
    try:
        inv0 = ring.inv(c0)
    except RingError as exc:
        raise SeriesError(f"constant term is not a unit: {exc}") from None
    if f.nvars != 1:
        raise SeriesError("series_inverse is implemented for one variable")
    a = f.univariate_list()
    b = [inv0]
    for n in range(1, f.cutoff + 1):
        acc = ring.zero
        for k in range(1, n + 1):
            if not ring.is_zero(a[k]):
                acc = ring.add(acc, ring.mul(a[k], b[n - k]))
        b.append(ring.neg(ring.mul(acc, inv0)))
    return TruncSeries.from_univariate(ring, b, f.cutoff, f.vars[0])
