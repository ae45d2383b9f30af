"""Quadratic refinements of symplectic forms over F_2 and their Arf invariant.

Vectors are tuples of bits or plain ints read as bit masks (bit i = e_i).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass


class ArfError(ValueError):
    pass


def _mask(x, dim):
    if isinstance(x, int):
        if x < 0 or x >> dim:
            raise ArfError(f"vector {x} does not fit in dimension {dim}")
        return x
    x = tuple(x)
    if len(x) != dim:
        raise ArfError(f"vector of length {len(x)} in a space of dimension {dim}")
    return sum((b & 1) << i for i, b in enumerate(x))


@dataclass(frozen=True)
class QuadraticSpace:
    """q on a basis plus the alternating form B; q(x+y) = q(x)+q(y)+B(x,y) fixes the rest."""

    dim: int
    q_basis: tuple
    B: tuple  # tuple of row bit-masks

    def __post_init__(self):
        if self.dim % 2:
            raise ArfError("dimension must be even")
        if len(self.q_basis) != self.dim or len(self.B) != self.dim:
            raise ArfError("q and B must match the dimension")
        for i in range(self.dim):
            if (self.B[i] >> i) & 1:
                raise ArfError("B must have zero diagonal")
            for j in range(self.dim):
                if ((self.B[i] >> j) & 1) != ((self.B[j] >> i) & 1):
                    raise ArfError("B must be symmetric")

    @classmethod
    def from_lists(cls, q_basis, B):
        B = [list(r) for r in B]
        rows = tuple(sum((v & 1) << j for j, v in enumerate(r)) for r in B)
        return cls(len(q_basis), tuple(int(b) & 1 for b in q_basis), rows)

    @property
    def g(self):
        return self.dim // 2

    def bilinear(self, x, y) -> int:
        x, y = _mask(x, self.dim), _mask(y, self.dim)
        acc = 0
        i = 0
        while x:
            if x & 1:
                acc ^= bin(self.B[i] & y).count("1") & 1
            x >>= 1
            i += 1
        return acc

    def b_matrix(self):
        return [[(self.B[i] >> j) & 1 for j in range(self.dim)] for i in range(self.dim)]

    def is_nondegenerate(self) -> bool:
        return _rank_f2(list(self.B)) == self.dim

    def to_json(self):
        return {"g": self.g, "qBasis": list(self.q_basis), "B": self.b_matrix()}


def _rank_f2(rows):
    rows = [r for r in rows]
    rank = 0
    for bit in range(max((r.bit_length() for r in rows), default=0)):
        piv = next((k for k in range(rank, len(rows)) if (rows[k] >> bit) & 1), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for k in range(len(rows)):
            if k != rank and (rows[k] >> bit) & 1:
                rows[k] ^= rows[rank]
        rank += 1
    return rank


def eval_q(Q: QuadraticSpace, x) -> int:
    """q(x) by expanding over the support of x with the refinement law."""
    x = _mask(x, Q.dim)
    support = [i for i in range(Q.dim) if (x >> i) & 1]
    val = 0
    for i in support:
        val ^= Q.q_basis[i]
    for a, b in itertools.combinations(support, 2):
        val ^= (Q.B[a] >> b) & 1
    return val


def value_table(Q: QuadraticSpace):
    """q on all 2^dim vectors, built incrementally along Gray-code style doubling."""
    table = [0]
    for i in range(Q.dim):
        qi = Q.q_basis[i]
        row = Q.B[i]
        table = table + [t ^ qi ^ (bin(row & v).count("1") & 1) for v, t in enumerate(table)]
    return table


def value_histogram(Q: QuadraticSpace):
    c = Counter(value_table(Q))
    return {0: c.get(0, 0), 1: c.get(1, 0)}


def _require_nondegenerate(Q):
    if not Q.is_nondegenerate():
        raise ArfError("B is degenerate")


def arf(Q: QuadraticSpace) -> int:
    """The value taken by q more often (2^{2g-1} + 2^{g-1} times)."""
    _require_nondegenerate(Q)
    h = value_histogram(Q)
    if h[0] == h[1]:
        raise ArfError("tie in the value count")  # impossible for nondegenerate B
    return 0 if h[0] > h[1] else 1


def gauss_sum(Q: QuadraticSpace) -> int:
    """Sum over x of (-1)^q(x); equals +-2^g for nondegenerate B."""
    return sum(1 - 2 * v for v in value_table(Q))


def witt_class(Q: QuadraticSpace) -> int:
    """Split off hyperbolic planes until nothing isotropic is left."""
    _require_nondegenerate(Q)
    basis = [1 << i for i in range(Q.dim)]
    while basis:
        x = None
        for coeffs in range(1, 1 << len(basis)):
            v = 0
            for k, b in enumerate(basis):
                if (coeffs >> k) & 1:
                    v ^= b
            if eval_q(Q, v) == 0:
                x = v
                break
        if x is None:
            return 1
        y = next(b for b in basis if Q.bilinear(x, b))
        # project the basis onto the orthogonal complement of <x, y>
        proj = []
        for b in basis:
            p = b
            if Q.bilinear(b, y):
                p ^= x
            if Q.bilinear(b, x):
                p ^= y
            proj.append(p)
        basis = _independent(proj)
    return 0


def _independent(vectors):
    out = []
    reduced = []
    for v in vectors:
        w = v
        for r in reduced:
            w = min(w, w ^ r)
        if w:
            reduced.append(w)
            reduced.sort(reverse=True)
            out.append(v)
    return out


# constructors -------------------------------------------------------------


def hyperbolic() -> QuadraticSpace:
    return QuadraticSpace.from_lists([0, 0], [[0, 1], [1, 0]])


def arf_one_plane() -> QuadraticSpace:
    return QuadraticSpace.from_lists([1, 1], [[0, 1], [1, 0]])


def orthogonal_sum(Q1: QuadraticSpace, Q2: QuadraticSpace) -> QuadraticSpace:
    d1 = Q1.dim
    rows = tuple(Q1.B) + tuple(r << d1 for r in Q2.B)
    return QuadraticSpace(Q1.dim + Q2.dim, Q1.q_basis + Q2.q_basis, rows)


def standard_form(g: int):
    """Rows of the standard symplectic form: e_{2i} paired with e_{2i+1}."""
    rows = []
    for i in range(g):
        rows.append(1 << (2 * i + 1))
        rows.append(1 << (2 * i))
    return tuple(rows)


def all_alternating_forms(dim: int, nondegenerate=True):
    pairs = list(itertools.combinations(range(dim), 2))
    for bits in range(1 << len(pairs)):
        rows = [0] * dim
        for k, (i, j) in enumerate(pairs):
            if (bits >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        if not nondegenerate or _rank_f2(list(rows)) == dim:
            yield tuple(rows)


def all_spaces(g: int, forms=None):
    """Every q on every nondegenerate B of genus g (or on the given forms)."""
    dim = 2 * g
    forms = all_alternating_forms(dim) if forms is None else forms
    for rows in forms:
        for q in itertools.product((0, 1), repeat=dim):
            yield QuadraticSpace(dim, q, rows)


def change_basis(Q: QuadraticSpace, new_basis) -> QuadraticSpace:
    """Express Q in a new basis (list of bit masks forming a basis)."""
    dim = Q.dim
    if _rank_f2(list(new_basis)) != dim:
        raise ArfError("not a basis")
    q = tuple(eval_q(Q, v) for v in new_basis)
    rows = []
    for i in range(dim):
        r = 0
        for j in range(dim):
            if Q.bilinear(new_basis[i], new_basis[j]):
                r |= 1 << j
        rows.append(r)
    return QuadraticSpace(dim, q, tuple(rows))


def random_basis(dim: int, rng):
    while True:
        vecs = [rng.randrange(1, 1 << dim) for _ in range(dim)]
        if _rank_f2(list(vecs)) == dim:
            return vecs


def random_space(g: int, rng) -> QuadraticSpace:
    dim = 2 * g
    while True:
        rows = [0] * dim
        for i in range(dim):
            for j in range(i + 1, dim):
                if rng.random() < 0.5:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        if _rank_f2(list(rows)) == dim:
            return QuadraticSpace(dim, tuple(rng.randrange(2) for _ in range(dim)), tuple(rows))


def _parity_matrix(dim):
    import numpy as np

    x = np.arange(1 << dim)
    masks = np.bitwise_and.outer(x, x)
    bits = np.zeros_like(masks)
    for i in range(dim):
        bits ^= (masks >> i) & 1
    return bits.astype(np.uint8)


def exhaustive_invariants(g: int, forms=None, chunk=512):
    """Arf and Gauss sums of every q on every nondegenerate B of genus g, vectorised.

    q with basis values l differs from the q_0 with zero basis values by the
    linear form x -> parity(x & l); rows of the result are indexed by l.
    Returns (forms, arf array [form, l], gauss array [form, l]).
    """
    import numpy as np

    dim = 2 * g
    forms = list(all_alternating_forms(dim)) if forms is None else list(forms)
    zero = (0,) * dim
    base = np.array([value_table(QuadraticSpace(dim, zero, B)) for B in forms], dtype=np.uint8)
    P = _parity_matrix(dim)
    arfs, gauss = [], []
    for start in range(0, len(forms), chunk):
        T = base[start:start + chunk, None, :] ^ P[None, :, :]
        ones = T.sum(axis=2, dtype=np.int64)
        zeros = (1 << dim) - ones
        arfs.append((ones > zeros).astype(np.int64))
        gauss.append(zeros - ones)
    return forms, np.concatenate(arfs), np.concatenate(gauss)
