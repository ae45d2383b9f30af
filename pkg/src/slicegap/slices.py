"""Slice cells Ind_K^G S^{m rho_K} (and their S^{-1} shifts) for cyclic 2-groups.

Cells, wedges of cells, the smash and norm formulas, the census of the
refinement W(n), slice spectral sequence support, and the gap check that
runs the Cell Lemma over twisted census cells.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import gcd

from .bredon import SizeGuardError, reduced_census, slice_sphere_homology, GAP
from .equivariant import (
    GSet,
    RealRep,
    _orbits_of_action,
    check_group,
    check_subgroup,
    double_coset_restrict,
    lcm,
    rep_res,
)


class SliceError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SliceCell:
    """Ind_{C_k}^{C_group} S^{m rho_k}, desuspended once when regular is False."""

    group: int
    k: int
    m: int
    regular: bool = True

    def __post_init__(self):
        check_group(self.group)
        check_subgroup(self.group, self.k)

    @property
    def dimension(self) -> int:
        d = self.m * self.k
        return d if self.regular else d - 1

    @property
    def isotropic(self) -> bool:
        return self.k > 1

    @property
    def index(self) -> int:
        return self.group // self.k

    def twist(self, mm: int) -> "SliceCell":
        """Smash with S^{mm rho_G}; rho_G restricts to [G:K] rho_K."""
        return SliceCell(self.group, self.k, self.m + mm * self.index, self.regular)

    def to_json(self):
        return {"group": self.group, "k": self.k, "m": self.m, "regular": self.regular}

    def __str__(self):
        core = f"Ind_{self.k}^{self.group} S^({self.m}rho_{self.k})"
        return core if self.regular else "S^-1 ^ " + core


def dimension(S: SliceCell) -> int:
    return S.dimension


class Wedge:
    """A finite multiset of slice cells."""

    def __init__(self, cells=None):
        self.cells = Counter()
        if cells:
            items = cells.items() if isinstance(cells, (dict, Counter)) else ((c, 1) for c in cells)
            for c, n in items:
                if n:
                    self.cells[c] += n

    def __add__(self, other):
        return Wedge(self.cells + other.cells)

    def __eq__(self, other):
        return isinstance(other, Wedge) and self.cells == other.cells

    def __len__(self):
        return sum(self.cells.values())

    def __iter__(self):
        for c, n in sorted(self.cells.items()):
            yield c, n

    def dimensions(self):
        return sorted({c.dimension for c in self.cells})

    def underlying_count(self):
        """Number of spheres after restricting to the trivial group."""
        return sum(n * c.index for c, n in self.cells.items())

    def by_dimension(self):
        out = {}
        for c, n in self.cells.items():
            out.setdefault(c.dimension, Counter())[c] += n
        return {d: Wedge(v) for d, v in sorted(out.items())}

    def to_json(self):
        return [{"k": c.k, "m": c.m, "regular": c.regular, "count": n} for c, n in self]

    def __repr__(self):
        return "Wedge(" + ", ".join(f"{n}x{c}" for c, n in self) + ")"


# dimension windows ---------------------------------------------------------------


def cw_range_for(n: int, order: int):
    """Cell dimensions allowed for an n-dimensional slice cell of a group of the given order."""
    if n >= 0:
        return (n // order, n)
    return (n, n // order)


def cw_range(S: SliceCell):
    return cw_range_for(S.dimension, S.group)


def cell_dimensions(S: SliceCell):
    """Cell dimensions of the cone-filtration model of S (duals for m < 0)."""
    if S.k == 1 or S.m == 0:
        dims = {S.m * S.k}
    else:
        cen = reduced_census(RealRep.rho(S.k, abs(S.m)))
        dims = set(cen) if S.m > 0 else {-d for d in cen}
    if not S.regular:
        dims = {d - 1 for d in dims}
    return sorted(dims)


def check_cw_range(S: SliceCell) -> bool:
    lo, hi = cw_range(S)
    return all(lo <= d <= hi for d in cell_dimensions(S))


def slice_homotopy_range(n: int, order: int):
    """Degrees k where an n-slice can have nonzero homotopy Mackey functors."""
    if n >= 0:
        return (n // order, n)
    return (n, (n + 1) // order)


def slice_ss_support(order: int, s: int, t: int) -> bool:
    """Whether E_2^{s,t} may be nonzero for a pure spectrum: two wedges of slopes 0 and order-1."""
    stem = t - s
    if stem >= 0:
        return 0 <= s <= (order - 1) * stem
    return (order - 1) * stem <= s <= 0


# smash, restriction, norm ------------------------------------------------------------


def smash(S1: SliceCell, S2: SliceCell) -> Wedge:
    """[G:HK] copies of Ind_{H cap K}^G S^{c rho}, c = a[H:H cap K] + b[K:H cap K]."""
    if not (S1.regular and S2.regular):
        raise SliceError("smash products of irregular slice cells are not wedges of slice cells")
    if S1.group != S2.group:
        raise SliceError("cells over different groups")
    G, h, k = S1.group, S1.k, S2.k
    inter = gcd(h, k)
    c = S1.m * (h // inter) + S2.m * (k // inter)
    return Wedge({SliceCell(G, inter, c): G // lcm(h, k)})


def smash_brute(S1: SliceCell, S2: SliceCell) -> Wedge:
    """Orbits of G/H x G/K enumerated point by point; exponents from restricting the reps."""
    G, h, k = S1.group, S1.k, S2.k
    A, B = G // h, G // k
    pts = [(x, y) for x in range(A) for y in range(B)]
    sizes = _orbits_of_action(pts, lambda p: ((p[0] + 1) % A, (p[1] + 1) % B))
    out = Counter()
    for size in sizes:
        L = G // size
        V = rep_res(RealRep.rho(h, S1.m), L) + rep_res(RealRep.rho(k, S2.m), L)
        c = V.dim // L
        if V != RealRep.rho(L, c):
            raise SliceError(f"restricted sum is not a multiple of rho_{L}")
        out[SliceCell(G, L, c)] += 1
    return Wedge(out)


def restrict(S: SliceCell, d: int) -> Wedge:
    """Res to C_d: one cell Ind_{C_d cap K}^{C_d} S^{m[K:C_d cap K] rho} per double coset."""
    check_subgroup(S.group, d)
    inter = gcd(d, S.k)
    orbits = double_coset_restrict(S.group, S.k, d, GSet.orbit(S.k, S.k))
    if orbits.orbits != Counter({inter: S.group // lcm(d, S.k)}):
        raise SliceError("double coset count mismatch")
    cell = SliceCell(d, inter, S.m * (S.k // inter), S.regular)
    return Wedge({cell: orbits.orbits[inter]})


def _min_rotation(f):
    n = len(f)
    return min(f[i:] + f[:i] for i in range(n))


def _period(f):
    n = len(f)
    for p in range(1, n + 1):
        if n % p == 0 and f[p:] + f[:p] == f:
            return p
    return n


def norm_wedge(group: int, h: int, degrees, dmax=None) -> Wedge:
    """N_H^G of the wedge of S^{i rho_H}, i in degrees.

    A function f: G/H -> degrees with period p (G acting by translation)
    has stabilizer of order group/p and gives Ind_Stab^G S^{|f| rho_Stab},
    |f| the sum of f over one period.
    """
    check_group(group)
    check_subgroup(group, h)
    n = group // h
    degrees = list(degrees)
    out = Counter()
    for f in itertools.product(range(len(degrees)), repeat=n):
        if _min_rotation(f) != f:
            continue
        p = _period(f)
        w = sum(degrees[i] for i in f[:p])
        cell = SliceCell(group, group // p, w)
        if dmax is not None and cell.dimension > dmax:
            continue
        out[cell] += 1
    return Wedge(out)


def norm_wedge_brute(group: int, h: int, degrees, dmax=None) -> Wedge:
    """Direct orbit enumeration of all functions, no canonical forms."""
    n = group // h
    degrees = list(degrees)
    funcs = list(itertools.product(range(len(degrees)), repeat=n))
    seen = set()
    out = Counter()
    for f in funcs:
        if f in seen:
            continue
        orbit = {f}
        g = f[-1:] + f[:-1]
        while g not in orbit:
            orbit.add(g)
            g = g[-1:] + g[:-1]
        seen |= orbit
        stab = group // len(orbit)
        # |f| = sum over G/Stab = total / (number of Stab-cosets per orbit point)
        total = sum(degrees[i] for i in f)
        w = total * len(orbit) // n
        cell = SliceCell(group, stab, w)
        if dmax is None or cell.dimension <= dmax:
            out[cell] += 1
    return Wedge(out)


# the refinement W(n) ------------------------------------------------------------------------


def partitions(w: int, largest=None):
    """Partitions of w as non-increasing tuples (monomials in r_1, r_2, ... of weight w)."""
    if largest is None:
        largest = w
    if w == 0:
        yield ()
        return
    for first in range(min(w, largest), 0, -1):
        for rest in partitions(w - first, first):
            yield (first,) + rest


def _monomials_by_weight(D):
    return {w: list(partitions(w)) for w in range(D + 1)}


def refinement_census(e: int, dmax: int, guard: int = 2_000_000):
    """Cells of W(n) = N_2^{2n}(smash_j wedge_i S^{ij rho_2}) up to dimension dmax, by dimension.

    Monomials are partitions (r_j <-> a part j), each of dimension 2 * weight.
    A function from G/C_2 to monomials is kept when it is the least rotation
    in its orbit.
    """
    if e < 1:
        raise SliceError("e must be at least 1")
    if dmax > 32:
        raise SizeGuardError("census is limited to dimension 32")
    G = 2 ** e
    n = G // 2
    D = dmax // 2
    mons = _monomials_by_weight(D)
    labelled = [(w, p) for w in range(D + 1) for p in mons[w]]
    out = Counter()
    count = 0

    def rec(prefix, budget):
        nonlocal count
        if len(prefix) == n:
            count += 1
            if count > guard:
                raise SizeGuardError("census enumeration guard exceeded")
            f = tuple(prefix)
            if _min_rotation(f) != f:
                return
            p = _period(f)
            w = sum(labelled[i][0] for i in f[:p])
            stab = G // p
            cell = SliceCell(G, stab, w)
            if not cell.isotropic:
                raise SliceError("census produced a free cell")
            out[cell] += 1
            return
        for i, (w, _) in enumerate(labelled):
            if w <= budget:
                prefix.append(i)
                rec(prefix, budget - w)
                prefix.pop()

    rec([], D)
    return Wedge(out).by_dimension()


def hmu_series(e: int, D: int):
    """Coefficients of prod_j (1 - x^j)^{-n} to x^D: underlying sphere counts in dimension 2d."""
    n = 2 ** (e - 1)
    coeffs = [1] + [0] * D
    for j in range(1, D + 1):
        for _ in range(n):
            # multiply by 1/(1 - x^j)
            for d in range(j, D + 1):
                coeffs[d] += coeffs[d - j]
    return coeffs


def census_matches_series(e: int, dmax: int) -> bool:
    cen = refinement_census(e, dmax)
    ser = hmu_series(e, dmax // 2)
    for d in range(dmax // 2 + 1):
        got = cen[2 * d].underlying_count() if 2 * d in cen else 0
        if got != ser[d]:
            return False
    return all(dim % 2 == 0 for dim in cen)


# the gap check ---------------------------------------------------------------------------------


@dataclass
class GapReport:
    ok: bool
    cells: int
    twists: int
    computed: int
    failures: list

    def to_json(self):
        return {"ok": self.ok, "cells": self.cells, "twists": self.twists,
                "computed": self.computed, "failures": self.failures}


def _gap_groups(S: SliceCell, jrange, cache):
    key = (S.group, S.k, S.m, S.regular, tuple(jrange))
    if key not in cache:
        shift_by = 0 if S.regular else -1
        cache[key] = slice_sphere_homology(S.group, S.k, S.m, degrees=tuple(jrange), shift_by=shift_by)
    return cache[key]


def gap_check(e: int, l: int, tmax: int, jrange=GAP, census=None) -> GapReport:
    """H^G_j(twisted census cells; Z) for j in jrange, over every twist -k l rho_G.

    Twisting lowers m by k*l*[G:K]; once m <= min(jrange) - 1 every cell
    of the dual model lies below jrange, and so does everything after it.
    """
    G = 2 ** e
    if census is None:
        census = refinement_census(e, tmax)
    cells = [c for wedge in census.values() for c, _ in wedge if c.dimension <= tmax]
    lowest = min(jrange)
    cache = {}
    failures = []
    twists = 0
    for cell in cells:
        k = 0
        while True:
            S = cell.twist(-k * l)
            twists += 1
            groups = _gap_groups(S, jrange, cache)
            for j in jrange:
                b, t = groups.get(j, (0, ()))
                if b or t:
                    failures.append({"cell": S.to_json(), "degree": j})
            if S.m <= lowest - 1:
                break
            k += 1
    return GapReport(not failures, len(cells), twists, len(cache), failures)
