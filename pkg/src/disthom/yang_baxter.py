"""Set-theoretic and linear Yang-Baxter operators and the two-sided YB complex."""
from dataclasses import dataclass

import numpy as np

from .chain import FaceSystem, assemble, tuples
from .magma import FiniteMagma, ValidationError


@dataclass
class SetYBOperator:
    size: int
    r1: np.ndarray  # r1[x, y]
    r2: np.ndarray

    def __post_init__(self):
        n = self.size
        self.r1 = np.asarray(self.r1, dtype=np.int64)
        self.r2 = np.asarray(self.r2, dtype=np.int64)
        for t in (self.r1, self.r2):
            if t.shape != (n, n) or np.any((t < 0) | (t >= n)):
                raise ValidationError("operator table must map X x X into X x X")

    def __call__(self, x, y):
        return int(self.r1[x, y]), int(self.r2[x, y])

    @property
    def invertible(self):
        img = self.r1 * self.size + self.r2
        return len(np.unique(img)) == self.size ** 2

    def inverse(self):
        if not self.invertible:
            raise ValidationError("operator is not a bijection of X x X")
        n = self.size
        i1 = np.zeros((n, n), dtype=np.int64)
        i2 = np.zeros((n, n), dtype=np.int64)
        for x in range(n):
            for y in range(n):
                c, d = self(x, y)
                i1[c, d], i2[c, d] = x, y
        return SetYBOperator(n, i1, i2)


@dataclass
class LinearYBOperator:
    dim: int
    matrix: np.ndarray  # matrix[(c,d), (a,b)] = R^{a,b}_{c,d}, pairs indexed a*dim+b

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=object)
        if self.matrix.shape != (self.dim ** 2, self.dim ** 2):
            raise ValidationError(f"matrix must be {self.dim ** 2} x {self.dim ** 2}")


def transposition(n):
    a = np.arange(n)
    return SetYBOperator(n, np.tile(a, (n, 1)), np.tile(a[:, None], (1, n)))


def from_shelf(m):
    """R(a, b) = (b, a*b)."""
    n = m.size
    a = np.arange(n)
    return SetYBOperator(n, np.tile(a, (n, 1)), m.table.copy())


def lyubashenko(sigma, tau):
    """R(x, y) = (sigma(y), tau(x)); a solution when sigma and tau commute."""
    s, t = np.asarray(sigma), np.asarray(tau)
    n = len(s)
    X, Y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return SetYBOperator(n, s[Y], t[X])


def linearize(r):
    n = r.size
    M = np.zeros((n * n, n * n), dtype=object)
    for a in range(n):
        for b in range(n):
            c, d = r(a, b)
            M[c * n + d, a * n + b] = 1
    return LinearYBOperator(n, M)


def check_ybe(r):
    """Returns (ok, witness).  Set case: witness (x, y, z); linear: (row, col)."""
    if isinstance(r, LinearYBOperator):
        M = r.matrix
        I = np.eye(r.dim, dtype=object)
        A = np.kron(M, I)
        B = np.kron(I, M)
        lhs = A.dot(B).dot(A)
        rhs = B.dot(A).dot(B)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return False, tuple(int(v) for v in bad[0])
        return True, None
    n = r.size
    R1, R2 = r.r1, r.r2
    x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")

    def left(x, y, z):  # R x Id
        return R1[x, y], R2[x, y], z

    def right(x, y, z):  # Id x R
        return x, R1[y, z], R2[y, z]

    lhs = left(*right(*left(x, y, z)))
    rhs = right(*left(*right(x, y, z)))
    ok = (lhs[0] == rhs[0]) & (lhs[1] == rhs[1]) & (lhs[2] == rhs[2])
    bad = np.argwhere(~ok)
    if len(bad):
        return False, tuple(int(v) for v in bad[0])
    return True, None


def d_left(r, g, i):
    """Thread coordinate i (1-based) leftward, keeping the R2 outputs."""
    R1, R2 = r.r1, r.r2
    out = list(g)
    c = g[i - 1]
    for k in range(i - 2, -1, -1):
        out[k], c = int(R2[g[k], c]), int(R1[g[k], c])
    return tuple(out[:i - 1] + out[i:])


def d_right(r, g, i):
    """Thread coordinate i (1-based) rightward, keeping the R1 outputs."""
    R1, R2 = r.r1, r.r2
    out = list(g)
    c = g[i - 1]
    for k in range(i, len(g)):
        out[k], c = int(R1[c, g[k]]), int(R2[c, g[k]])
    return tuple(out[:i - 1] + out[i:])


def yb_faces(r, lo=1, hi=4, side="both", check=True):
    """Face k (0-based) of X^n is d^l_{k+1} - d^r_{k+1}, or one side alone."""
    if check:
        ok, w = check_ybe(r)
        if not ok:
            raise ValidationError(f"Yang-Baxter equation fails at {w}", w)

    def face(n, k, g):
        out = {}
        if side in ("both", "left"):
            h = d_left(r, g, k + 1)
            out[h] = out.get(h, 0) + 1
        if side in ("both", "right"):
            h = d_right(r, g, k + 1)
            out[h] = out.get(h, 0) - 1
        return {h: v for h, v in out.items() if v}

    return FaceSystem(lo, hi, basis=lambda n: tuples(r.size, n), face=face,
                      nfaces=lambda n: n, name=f"yb-{side}")


def yb_complex(r, max_degree=3, side="both"):
    return assemble(yb_faces(r, 1, max_degree + 1, side), verify=True, name=f"yb-{side}")


def anticommutator_witness(r, max_degree=3):
    """First generator where d^l d^r + d^r d^l is nonzero, or None."""
    cl = yb_complex(r, max_degree, "left")
    cr = yb_complex(r, max_degree, "right")
    for n in range(3, max_degree + 2):
        S = (cl.boundary[n - 1] @ cr.boundary[n] + cr.boundary[n - 1] @ cl.boundary[n]).tocsc()
        S.eliminate_zeros()
        if S.nnz:
            col = int(np.nonzero(np.diff(S.indptr))[0][0])
            return n, cl.basis[n][col]
    return None
