"""Smith normal form over the integers (Python ints, no overflow).

Two routes:
  * ``smith_normal_form`` - dense, keeps the unimodular transforms U, V
    with U M V = D.  Meant for small matrices and for solving systems.
  * ``invariant_factors`` - only the nonzero diagonal.  Clears unit pivots
    on a sparse row representation first (each costs nothing to the
    invariants), then finishes the leftover block with the dense routine.
"""
from dataclasses import dataclass, field

import numpy as np


def as_int_rows(m):
    """Dense list-of-lists of Python ints from a list, ndarray or scipy sparse matrix."""
    if hasattr(m, "toarray"):
        m = m.toarray()
    if isinstance(m, np.ndarray):
        return [[int(v) for v in row] for row in m]
    return [[int(v) for v in row] for row in m]


def shape_of(m):
    if hasattr(m, "shape"):
        return tuple(m.shape)
    r = len(m)
    return (r, len(m[0]) if r else 0)


@dataclass
class SmithDecomposition:
    invariants: list
    rank: int
    U: list = field(repr=False)
    V: list = field(repr=False)
    shape: tuple = (0, 0)

    def diagonal(self):
        r, c = self.shape
        D = [[0] * c for _ in range(r)]
        for i, d in enumerate(self.invariants):
            D[i][i] = d
        return D


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A or not B:
        cols = len(B[0]) if B else 0
        return [[0] * cols for _ in range(len(A))]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def det(M):
    """Exact integer determinant (fraction-free Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _snf(A, U=None, V=None):
    """In-place diagonalisation of the list-of-lists A; optional transforms.

    Row operations are mirrored on U, column operations on V, so at the end
    U_orig_rowops * M * V_colops = A (diagonal, divisibility chain, >= 0).
    """
    m = len(A)
    n = len(A[0]) if m else 0

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        rs, rd = A[src], A[dst]
        for k in range(n):
            if rs[k]:
                rd[k] += q * rs[k]
        if U is not None:
            us, ud = U[src], U[dst]
            for k in range(len(us)):
                if us[k]:
                    ud[k] += q * us[k]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        # pivot of minimal absolute value in the trailing block
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        while True:
            p = A[t][t]
            moved = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(i, t)
                        moved = True
                        break
            if moved:
                continue
            p = A[t][t]
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(j, t)
                        moved = True
                        break
            if moved:
                continue
            # row and column clear; enforce divisibility on the rest
            p = A[t][t]
            bad = None
            for i in range(t + 1, m):
                row = A[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            if U is not None:
                U[t] = [-v for v in U[t]]
        t += 1
    return [A[i][i] for i in range(min(m, n)) if A[i][i]]


def smith_normal_form(M):
    """Smith decomposition with transforms; U*M*V equals the padded diagonal."""
    rows, cols = shape_of(M)
    A = as_int_rows(M) if rows and cols else [[0] * cols for _ in range(rows)]
    U, V = _eye(rows), _eye(cols)
    if rows == 0 or cols == 0:
        return SmithDecomposition([], 0, U, V, (rows, cols))
    inv = _snf(A, U, V)
    return SmithDecomposition(inv, len(inv), U, V, (rows, cols))


# ---- invariants only, sparse unit-pivot pre-reduction ------------------

def _sparse_rows(M):
    if hasattr(M, "tocsr"):
        M = M.tocsr()
        M.sum_duplicates()
        rows = {}
        ip, ix, dv = M.indptr, M.indices, M.data
        for r in range(M.shape[0]):
            d = {int(ix[k]): int(dv[k]) for k in range(ip[r], ip[r + 1]) if dv[k]}
            if d:
                rows[r] = d
        return rows
    rows = {}
    for r, row in enumerate(as_int_rows(M)):
        d = {c: v for c, v in enumerate(row) if v}
        if d:
            rows[r] = d
    return rows


def invariant_factors(M):
    """Nonzero Smith invariants (with multiplicity, sorted, 1s included)."""
    rows = _sparse_rows(M)
    cols = {}
    for r, d in rows.items():
        for c in d:
            cols.setdefault(c, set()).add(r)
    ones = 0
    progress = True
    while progress and rows:
        progress = False
        for r in sorted(rows, key=lambda k: len(rows[k])):
            prow = rows.get(r)
            if prow is None:
                continue
            best = None
            for c, v in prow.items():
                if v == 1 or v == -1:
                    k = len(cols[c])
                    if best is None or k < best[0]:
                        best = (k, c)
                        if k == 1:
                            break
            if best is None:
                continue
            c = best[1]
            p = prow[c]
            for r2 in list(cols[c]):
                if r2 == r:
                    continue
                row2 = rows[r2]
                f = row2[c] * p
                for c2, v in prow.items():
                    nv = row2.get(c2, 0) - f * v
                    if nv:
                        if c2 not in row2:
                            cols[c2].add(r2)
                        row2[c2] = nv
                    elif c2 in row2:
                        del row2[c2]
                        cols[c2].discard(r2)
                if not row2:
                    del rows[r2]
            for c2 in prow:
                cols[c2].discard(r)
                if not cols[c2]:
                    del cols[c2]
            del rows[r]
            ones += 1
            progress = True
    if not rows:
        return [1] * ones
    cidx = {c: i for i, c in enumerate(sorted(cols))}
    A = []
    for r in sorted(rows):
        line = [0] * len(cidx)
        for c, v in rows[r].items():
            line[cidx[c]] = v
        A.append(line)
    rest = _snf(A)
    return [1] * ones + sorted(rest)


def rank(M):
    return len(invariant_factors(M))
