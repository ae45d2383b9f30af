"""Sparse integer matrices, Smith normal form and homology of chain complexes over Z."""

from __future__ import annotations

from math import gcd


class MatrixError(ValueError):
    pass


class IntMatrix:
    """A rows x cols integer matrix stored as {(i, j): nonzero value}."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows, self.cols = rows, cols
        clean = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise MatrixError(f"index ({i},{j}) out of bounds for {rows}x{cols}")
                if v:
                    clean[(i, j)] = int(v)
        self.entries = clean

    @classmethod
    def from_dense(cls, rows):
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        return cls(nr, nc, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self):
        return IntMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    T = property(transpose)

    def row_dicts(self):
        rows = {}
        for (i, j), v in self.entries.items():
            rows.setdefault(i, {})[j] = v
        return rows

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise MatrixError(f"shape mismatch {self.shape} @ {other.shape}")
        orows = other.row_dicts()
        acc = {}
        for (i, k), v in self.entries.items():
            r = orows.get(k)
            if r:
                for j, w in r.items():
                    acc[(i, j)] = acc.get((i, j), 0) + v * w
        return IntMatrix(self.rows, other.cols, acc)

    def __add__(self, other):
        if self.shape != other.shape:
            raise MatrixError("shape mismatch")
        acc = dict(self.entries)
        for ij, v in other.entries.items():
            acc[ij] = acc.get(ij, 0) + v
        return IntMatrix(self.rows, self.cols, acc)

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, {ij: -v for ij, v in self.entries.items()})

    def scale(self, k):
        return IntMatrix(self.rows, self.cols, {ij: k * v for ij, v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, frozenset(self.entries.items())))

    def nnz(self):
        return len(self.entries)

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())]}


def block_matrix(row_sizes, col_sizes, blocks):
    """Assemble a matrix from {(block_row, block_col): IntMatrix or dense list}."""
    roff = [0]
    for s in row_sizes:
        roff.append(roff[-1] + s)
    coff = [0]
    for s in col_sizes:
        coff.append(coff[-1] + s)
    entries = {}
    for (bi, bj), blk in blocks.items():
        if isinstance(blk, IntMatrix):
            items = blk.entries.items()
        else:
            items = (((i, j), v) for i, r in enumerate(blk) for j, v in enumerate(r) if v)
        for (i, j), v in items:
            key = (roff[bi] + i, coff[bj] + j)
            entries[key] = entries.get(key, 0) + v
    return IntMatrix(roff[-1], coff[-1], entries)


# ---------------------------------------------------------------------------
# Smith normal form (dense, with transforms)


def snf(M: IntMatrix):
    """Return (U, D, V) with U*M*V = D diagonal, d1 | d2 | ..., U and V unimodular.

    Pivots are always the entry of least absolute value in the active block,
    which keeps intermediate entries small on the matrices we meet.
    """
    m, n = M.rows, M.cols
    A = M.to_dense()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        if k:
            A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        if k:
            for row in A:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                # a smaller remainder appeared in row/column t; promote it
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return IntMatrix.from_dense(U) if m else IntMatrix(0, 0), _dense_to(A, m, n), (
        IntMatrix.from_dense(V) if n else IntMatrix(0, 0))


def _dense_to(A, m, n):
    return IntMatrix(m, n, {(i, j): v for i, r in enumerate(A) for j, v in enumerate(r) if v})


def snf_diagonal(D: IntMatrix):
    return [D[(i, i)] for i in range(min(D.rows, D.cols))]


def _dense_invariant_factors(rows):
    """Nonzero invariant factors of a small dense matrix (no transforms kept)."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    m, n = len(A), len(A[0])
    out = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        A[t], A[bi] = A[bi], A[t]
        if bj != t:
            for row in A:
                row[t], row[bj] = row[bj], row[t]
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    clean = False
            if not clean:
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                if j == t:
                    A[t], A[i] = A[i], A[t]
                else:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        out.append(abs(A[t][t]))
        t += 1
    return out


def invariant_factors(M: IntMatrix):
    """Nonzero invariant factors of M in ascending (divisibility) order.

    Unit entries are eliminated first on the sparse representation, choosing
    the pivot whose column is shortest; whatever is left over (typically a
    tiny block) goes through dense SNF.
    """
    rows = M.row_dicts()
    cols = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    ones = 0
    while True:
        pivot = None
        best = None
        # scan rows by length; a unit in a short row and short column keeps fill-in down
        for i, r in rows.items():
            lr = len(r)
            if best is not None and lr - 1 >= best:
                continue
            for j, v in r.items():
                if v == 1 or v == -1:
                    cost = (lr - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best:
                        best = cost
                        pivot = (i, j)
                        if cost == 0:
                            break
            if best == 0:
                break
        if pivot is None:
            break
        pi, pj = pivot
        prow = rows.pop(pi)
        pv = prow[pj]
        for j in prow:
            cols[j].discard(pi)
        for i in list(cols[pj]):
            r = rows[i]
            f = r[pj] * pv  # pv = +-1 so this is r[pj] / pv
            for j, v in prow.items():
                nv = r.get(j, 0) - f * v
                if nv:
                    if j not in r:
                        cols[j].add(i)
                    r[j] = nv
                else:
                    if j in r:
                        del r[j]
                        cols[j].discard(i)
            if not r:
                del rows[i]
        del cols[pj]
        ones += 1
    if not rows:
        return [1] * ones
    rest_cols = sorted({j for r in rows.values() for j in r})
    cidx = {j: k for k, j in enumerate(rest_cols)}
    dense = []
    for r in rows.values():
        row = [0] * len(rest_cols)
        for j, v in r.items():
            row[cidx[j]] = v
        dense.append(row)
    facs = _dense_invariant_factors(dense)
    return [1] * ones + sorted(facs)


def rank(M: IntMatrix) -> int:
    return len(invariant_factors(M))


# ---------------------------------------------------------------------------
# chain complexes


class ChainError(ValueError):
    pass


class ChainComplexZ:
    """Free chain complex over Z: ranks[k] and diffs[k]: C_k -> C_{k-1}."""

    def __init__(self, ranks, diffs=None, check=True):
        self.ranks = {k: r for k, r in ranks.items() if r}
        self.diffs = {}
        for k, D in (diffs or {}).items():
            if D.rows != self.rank(k - 1) or D.cols != self.rank(k):
                raise ChainError(f"differential {k} has shape {D.shape}, expected "
                                 f"{(self.rank(k - 1), self.rank(k))}")
            if not D.is_zero():
                self.diffs[k] = D
        self._facs = {}
        if check:
            self.check()

    @classmethod
    def from_cochains(cls, ranks, codiffs, check=True):
        """Encode a cochain complex (delta^k: C^k -> C^{k+1}) as a chain complex in degree -k."""
        return cls({-k: r for k, r in ranks.items()},
                   {-k: D for k, D in codiffs.items()}, check=check)

    def rank(self, k):
        return self.ranks.get(k, 0)

    def diff(self, k):
        return self.diffs.get(k) or IntMatrix(self.rank(k - 1), self.rank(k))

    def degrees(self):
        return sorted(self.ranks)

    def check(self):
        for k in self.diffs:
            if k - 1 in self.diffs:
                if not (self.diffs[k - 1] @ self.diffs[k]).is_zero():
                    raise ChainError(f"d{k - 1} o d{k} != 0")
        return True

    def factors(self, k):
        if k not in self._facs:
            D = self.diffs.get(k)
            self._facs[k] = [] if D is None else invariant_factors(D)
        return self._facs[k]

    def homology(self, k):
        """(betti number, ascending torsion factors) of H_k."""
        r_out = len(self.factors(k))
        inc = self.factors(k + 1)
        betti = self.rank(k) - r_out - len(inc)
        return betti, sorted(f for f in inc if f > 1)

    def cohomology(self, k):
        """H^k of Hom(C, Z); torsion comes from the incoming differential's cokernel."""
        r_out = len(self.factors(k + 1))
        inc = self.factors(k)
        betti = self.rank(k) - r_out - len(inc)
        return betti, sorted(f for f in inc if f > 1)

    def shift(self, s):
        """C[s]_k = C_{k-s} with differentials negated when s is odd."""
        sign = -1 if s % 2 else 1
        return ChainComplexZ({k + s: r for k, r in self.ranks.items()},
                             {k + s: D.scale(sign) for k, D in self.diffs.items()}, check=False)

    def dual(self):
        """Hom(C, Z) regraded as a chain complex: degree -k, d_{-k} = d_{k+1}^T."""
        return ChainComplexZ({-k: r for k, r in self.ranks.items()},
                             {-k: D.transpose() for k, D in ((k - 1, D) for k, D in self.diffs.items())},
                             check=False)

    def all_homology(self):
        out = {}
        for k in range(min(self.ranks, default=0) - 1, max(self.ranks, default=0) + 2):
            b, t = self.homology(k)
            if b or t:
                out[k] = (b, t)
        return out


def homology(C: ChainComplexZ, k):
    return C.homology(k)


def cohomology(C: ChainComplexZ, k):
    return C.cohomology(k)


def format_group(betti, torsion):
    parts = (["Z"] if betti == 1 else [f"Z^{betti}"] if betti else []) + [f"Z/{t}" for t in torsion]
    return " + ".join(parts) if parts else "0"


def group_order(betti, torsion):
    if betti:
        return None
    out = 1
    for t in torsion:
        out *= t
    return out


def gcd_list(xs):
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
