"""Text formats: magma tables, Leibniz data, cocycles, YB operators, weights."""
from fractions import Fraction

import numpy as np

from .extensions import FiberGroup, TwoCocycle
from .leibniz import LeibnizAlgebraData
from .magma import FiniteMagma, ParseError
from .yang_baxter import LinearYBOperator, SetYBOperator


def _lines(text):
    """(line number, stripped content) skipping blanks and # comments."""
    for i, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield i, s


def _ints(s, ln):
    try:
        return [int(v) for v in s.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {s!r}", ln) from None


def _header(lines, word):
    if not lines:
        raise ParseError(f"empty input, expected '{word} ...' header")
    ln, s = lines[0]
    parts = s.split()
    if parts[0] != word:
        raise ParseError(f"expected '{word}' header, got {parts[0]!r}", ln)
    return ln, parts[1:]


def _size(v, ln):
    try:
        n = int(v)
    except ValueError:
        raise ParseError(f"bad size {v!r}", ln) from None
    if n < 1:
        raise ParseError("size must be positive", ln)
    return n


def header_word(text):
    for _, s in _lines(text):
        return s.split()[0]
    return None


# ---- magma ------------------------------------------------------------------

def read_magma(text, name=None):
    lines = list(_lines(text))
    ln, rest = _header(lines, "magma")
    if len(rest) != 1:
        raise ParseError("header must be 'magma <n>'", ln)
    n = _size(rest[0], ln)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} table rows, got {len(body)}", body[-1][0] if body else ln)
    rows = []
    for ln, s in body:
        r = _ints(s, ln)
        if len(r) != n:
            raise ParseError(f"row has {len(r)} entries, expected {n}", ln)
        for c, v in enumerate(r):
            if not 0 <= v < n:
                raise ParseError(f"entry {v} outside 0..{n - 1}", ln, c + 1)
        rows.append(r)
    return FiniteMagma(rows, name=name)


def write_magma(m):
    return f"magma {m.size}\n" + "".join(" ".join(map(str, r)) + "\n" for r in m.rows())


# ---- Leibniz ----------------------------------------------------------------

def read_leibniz(text):
    """``leibniz <dim>`` then ``i j : c0 .. c_{dim-1}``; optional ``module <k>``
    followed by ``action p i : v0 .. v_{k-1}`` lines."""
    lines = list(_lines(text))
    ln, rest = _header(lines, "leibniz")
    if len(rest) != 1:
        raise ParseError("header must be 'leibniz <dim>'", ln)
    dim = _size(rest[0], ln)
    B = np.zeros((dim, dim, dim), dtype=np.int64)
    mdim, acts = 1, []
    for ln, s in lines[1:]:
        if s.startswith("module"):
            mdim = _size(s.split()[1] if len(s.split()) > 1 else "", ln)
            continue
        if ":" not in s:
            raise ParseError("expected 'i j : vector'", ln)
        lhs, rhs = s.split(":", 1)
        vec = _ints(rhs, ln)
        if lhs.split()[0] == "action":
            acts.append((ln, _ints(" ".join(lhs.split()[1:]), ln), vec))
            continue
        ij = _ints(lhs, ln)
        if len(ij) != 2 or not all(0 <= v < dim for v in ij):
            raise ParseError("bad basis index pair", ln)
        if len(vec) != dim:
            raise ParseError(f"bracket vector needs {dim} entries", ln)
        B[ij[0], ij[1]] = vec
    A = np.zeros((mdim, dim, mdim), dtype=np.int64)
    for ln, pi, vec in acts:
        if len(pi) != 2 or not (0 <= pi[0] < mdim and 0 <= pi[1] < dim) or len(vec) != mdim:
            raise ParseError("bad action line", ln)
        A[pi[0], pi[1]] = vec
    return LeibnizAlgebraData(dim, B, mdim, A)


def write_leibniz(l):
    out = [f"leibniz {l.dim}"]
    for i in range(l.dim):
        for j in range(l.dim):
            if np.any(l.bracket[i, j]):
                out.append(f"{i} {j} : " + " ".join(map(str, l.bracket[i, j])))
    if np.any(l.action) or l.module_dim != 1:
        out.append(f"module {l.module_dim}")
        for p in range(l.module_dim):
            for i in range(l.dim):
                if np.any(l.action[p, i]):
                    out.append(f"action {p} {i} : " + " ".join(map(str, l.action[p, i])))
    return "\n".join(out) + "\n"


# ---- cocycles ---------------------------------------------------------------

def read_cocycle(text, base):
    """``cocycle <|X|> <fiber>``, optional ``t : row ; row``, then ``x1 x2 : vector``."""
    lines = list(_lines(text))
    ln, rest = _header(lines, "cocycle")
    if len(rest) != 2:
        raise ParseError("header must be 'cocycle <n> <fiber>'", ln)
    n = _size(rest[0], ln)
    try:
        fib = FiberGroup.parse(rest[1])
    except ValueError as e:
        raise ParseError(str(e), ln) from None
    if base.size != n:
        raise ParseError(f"cocycle is over {n} elements but the base has {base.size}", ln)
    t = None
    F = np.zeros((n, n, fib.rank), dtype=np.int64)
    seen = set()
    for ln, s in lines[1:]:
        if ":" not in s:
            raise ParseError("expected 'x1 x2 : vector'", ln)
        lhs, rhs = s.split(":", 1)
        if lhs.strip() == "t":
            t = [_ints(r, ln) for r in rhs.split(";")]
            continue
        xy = _ints(lhs, ln)
        vec = _ints(rhs, ln)
        if len(xy) != 2 or not all(0 <= v < n for v in xy):
            raise ParseError("bad element pair", ln)
        if len(vec) != fib.rank:
            raise ParseError(f"vector needs {fib.rank} entries", ln)
        F[xy[0], xy[1]] = vec
        seen.add(tuple(xy))
    if len(seen) != n * n:
        raise ParseError(f"cocycle table needs all {n * n} pairs, got {len(seen)}")
    return TwoCocycle(base, fib, F, t)


def write_cocycle(c):
    n = c.base.size
    out = [f"cocycle {n} {c.fiber!r}"]
    if not c.is_identity_t():
        out.append("t : " + " ; ".join(" ".join(map(str, r)) for r in c.t))
    for a in range(n):
        for b in range(n):
            out.append(f"{a} {b} : " + " ".join(map(str, c.f[a, b])))
    return "\n".join(out) + "\n"


# ---- YB operators and weights ------------------------------------------------

def read_ybop(text):
    lines = list(_lines(text))
    ln, rest = _header(lines, "ybop")
    n = _size(rest[0] if rest else "", ln)
    r1 = np.full((n, n), -1, dtype=np.int64)
    r2 = np.full((n, n), -1, dtype=np.int64)
    for ln, s in lines[1:]:
        if ":" not in s:
            raise ParseError("expected 'x y : r1 r2'", ln)
        lhs, rhs = s.split(":", 1)
        xy, rr = _ints(lhs, ln), _ints(rhs, ln)
        if len(xy) != 2 or len(rr) != 2 or not all(0 <= v < n for v in xy + rr):
            raise ParseError("entries must lie in 0..n-1", ln)
        r1[xy[0], xy[1]], r2[xy[0], xy[1]] = rr
    if np.any(r1 < 0):
        raise ParseError(f"operator table needs all {n * n} pairs")
    return SetYBOperator(n, r1, r2)


def write_ybop(r):
    out = [f"ybop {r.size}"]
    for x in range(r.size):
        for y in range(r.size):
            out.append(f"{x} {y} : {r.r1[x, y]} {r.r2[x, y]}")
    return "\n".join(out) + "\n"


def read_matrix(text):
    """``matrix <n>`` then n^2 rows of n^2 integers: entry [(c,d),(a,b)] = R^{ab}_{cd}."""
    lines = list(_lines(text))
    ln, rest = _header(lines, "matrix")
    n = _size(rest[0] if rest else "", ln)
    rows = [_ints(s, ln) for ln, s in lines[1:]]
    if len(rows) != n * n or any(len(r) != n * n for r in rows):
        raise ParseError(f"matrix needs {n * n} rows of {n * n} integers")
    return LinearYBOperator(n, rows)


def write_matrix(op):
    out = [f"matrix {op.dim}"]
    out += [" ".join(str(int(v)) for v in row) for row in op.matrix]
    return "\n".join(out) + "\n"


def exact_inverse(M):
    """Inverse of an integer matrix with Fractions; integer entries when possible."""
    n = len(M)
    A = [[Fraction(int(v)) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        A[c], A[p] = A[p], A[c]
        pv = A[c][c]
        A[c] = [v / pv for v in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    inv = [row[n:] for row in A]
    if all(v.denominator == 1 for row in inv for v in row):
        return [[int(v) for v in row] for row in inv]
    return inv


def read_weights(text):
    """``weights <n>`` with ``R a b c d : v`` / ``Rbar a b c d : v`` lines
    (missing entries are 0), or a ``matrix`` block whose inverse gives Rbar."""
    from .knots import weights_from_matrix
    word = header_word(text)
    if word == "matrix":
        op = read_matrix(text)
        inv = exact_inverse(op.matrix.tolist())
        n = op.dim
        return (weights_from_matrix(np.array(op.matrix, dtype=object), n),
                weights_from_matrix(np.array(inv, dtype=object), n))
    lines = list(_lines(text))
    ln, rest = _header(lines, "weights")
    n = _size(rest[0] if rest else "", ln)
    R = np.zeros((n,) * 4, dtype=object)
    Rb = None
    for ln, s in lines[1:]:
        if ":" not in s:
            raise ParseError("expected 'R a b c d : value'", ln)
        lhs, rhs = s.split(":", 1)
        parts = lhs.split()
        if not parts or parts[0] not in ("R", "Rbar"):
            raise ParseError("weight lines start with R or Rbar", ln)
        idx = _ints(" ".join(parts[1:]), ln)
        if len(idx) != 4 or not all(0 <= v < n for v in idx):
            raise ParseError("four indices in 0..n-1 expected", ln)
        val = _ints(rhs, ln)
        if len(val) != 1:
            raise ParseError("one value expected", ln)
        if parts[0] == "R":
            R[tuple(idx)] = val[0]
        else:
            if Rb is None:
                Rb = np.zeros((n,) * 4, dtype=object)
            Rb[tuple(idx)] = val[0]
    return R, (R if Rb is None else Rb)
