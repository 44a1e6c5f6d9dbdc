"""Leibniz algebras from structure constants and their chain complex.

Generators of degree n are (m, x0, ..., xn) with m a basis index of the
module M and xi basis indices of V; degree -1 is M itself.  Face
d_i (0 <= i <= n) removes x_i and brackets it into every earlier slot j
(j = -1 meaning the module slot), summing the results.
"""
from dataclasses import dataclass
from itertools import product

import numpy as np

from .chain import FaceSystem, assemble, verify_simplicial_axioms
from .magma import ValidationError


@dataclass
class LeibnizAlgebraData:
    dim: int
    bracket: np.ndarray  # bracket[i, j] = [e_i, e_j] as a vector
    module_dim: int = 1
    action: np.ndarray = None  # action[p, i] = [m_p, e_i] as a vector in M

    def __post_init__(self):
        self.bracket = np.asarray(self.bracket, dtype=np.int64)
        if self.bracket.shape != (self.dim, self.dim, self.dim):
            raise ValidationError("bracket must have shape (dim, dim, dim)")
        if self.action is None:
            self.action = np.zeros((self.module_dim, self.dim, self.module_dim), dtype=np.int64)
        self.action = np.asarray(self.action, dtype=np.int64)
        if self.action.shape != (self.module_dim, self.dim, self.module_dim):
            raise ValidationError("action must have shape (module_dim, dim, module_dim)")

    def br(self, u, v):
        """Bilinear bracket of coefficient vectors in V."""
        return np.einsum("i,j,ijk->k", u, v, self.bracket)

    def act(self, m, v):
        return np.einsum("p,i,pik->k", m, v, self.action)


def from_brackets(dim, entries, module_dim=1, action_entries=None):
    """entries: {(i, j): vector}; action_entries: {(p, i): vector}."""
    B = np.zeros((dim, dim, dim), dtype=np.int64)
    for (i, j), v in entries.items():
        B[i, j] = v
    A = np.zeros((module_dim, dim, module_dim), dtype=np.int64)
    for (p, i), v in (action_entries or {}).items():
        A[p, i] = v
    return LeibnizAlgebraData(dim, B, module_dim, A)


def abelian(dim):
    return from_brackets(dim, {})


def sl2():
    """Basis e, f, h: [e,f]=h, [h,e]=2e, [h,f]=-2f, antisymmetrised."""
    e, f, h = np.eye(3, dtype=np.int64)
    return from_brackets(3, {(0, 1): h, (1, 0): -h, (2, 0): 2 * e, (0, 2): -2 * e,
                             (2, 1): -2 * f, (1, 2): 2 * f})


def nonlie_example():
    """Two-dimensional, [e2, e2] = e1 and every other bracket zero."""
    return from_brackets(2, {(1, 1): [1, 0]})


@dataclass
class LeibnizReport:
    algebra_ok: bool
    algebra_witness: tuple
    module_ok: bool
    module_witness: tuple

    @property
    def ok(self):
        return self.algebra_ok and self.module_ok


def check_leibniz(l):
    """Exhaustive basis-triple check; witnesses are (i, j, k, defect vector)."""
    B = l.bracket
    # [x,[y,z]] - [[x,y],z] + [[x,z],y]
    lhs = np.einsum("jkq,iqr->ijkr", B, B)
    t1 = np.einsum("ijq,qkr->ijkr", B, B)
    t2 = np.einsum("ikq,qjr->ijkr", B, B)
    D = lhs - t1 + t2
    aw = None
    bad = np.argwhere(np.any(D != 0, axis=-1))
    if len(bad):
        i, j, k = map(int, bad[0])
        aw = (i, j, k, tuple(int(v) for v in D[i, j, k]))
    A = l.action
    lhs = np.einsum("jkq,pqr->pjkr", B, A)
    t1 = np.einsum("pjq,qkr->pjkr", A, A)
    t2 = np.einsum("pkq,qjr->pjkr", A, A)
    D = lhs - t1 + t2
    mw = None
    bad = np.argwhere(np.any(D != 0, axis=-1))
    if len(bad):
        p, j, k = map(int, bad[0])
        mw = (p, j, k, tuple(int(v) for v in D[p, j, k]))
    return LeibnizReport(aw is None, aw, mw is None, mw)


def _vec_terms(v):
    return [(int(i), int(c)) for i, c in enumerate(v) if c]


def leibniz_faces(l, lo=-1, hi=4, check=True, degen=None):
    if check:
        r = check_leibniz(l)
        if not r.ok:
            raise ValidationError(f"Leibniz identity fails: algebra {r.algebra_witness}, "
                                  f"module {r.module_witness}", r)
    B, A = l.bracket, l.action

    def basis(n):
        for m in range(l.module_dim):
            for xs in product(range(l.dim), repeat=n + 1):
                yield (m,) + xs

    def face(n, i, g):
        p = i + 1  # tuple position of x_i
        xi = g[p]
        rest = g[:p] + g[p + 1:]
        out = {}
        for j in range(-1, i):
            q = j + 1
            vec = A[g[0], xi] if j == -1 else B[g[q], xi]
            for k, c in _vec_terms(vec):
                h = rest[:q] + (k,) + rest[q + 1:]
                out[h] = out.get(h, 0) + c
        return {h: v for h, v in out.items() if v}

    degen_fn = None
    if degen == "doubling":
        def degen_fn(n, i, g):
            return g[:i + 2] + g[i + 1:]

    return FaceSystem(lo, hi, basis=basis, face=face, degen=degen_fn, name="leibniz")


def leibniz_complex(l, max_degree=3):
    return assemble(leibniz_faces(l, -1, max_degree + 1), verify=True, name="leibniz")


def doubling_axioms(l, max_degree=2):
    """Which simplicial axioms hold for the doubling degeneracies."""
    f = leibniz_faces(l, -1, max_degree + 1, degen="doubling")
    return verify_simplicial_axioms(f, mode="full", lo=0, hi=max_degree)


def squares_vanish(l):
    return not np.any(l.bracket[np.arange(l.dim), np.arange(l.dim)])


def split_unital_faces(l, unit, epsilon, lo=-1, hi=3):
    """Faces with M = Z acted on by [1, x] = epsilon(x), and the primitive
    degeneracies: x_i -> (1, x_i) + (x_i, 1) for x_i != unit, unit -> (unit, unit)."""
    B = l.bracket
    if np.any(B[unit]) or np.any(B[:, unit]):
        raise ValidationError(f"basis element {unit} is not central")
    eps = np.asarray(epsilon, dtype=np.int64)
    if np.any(np.einsum("ijk,k->ij", B, eps)):
        raise ValidationError("epsilon must vanish on brackets")
    act = np.zeros((1, l.dim, 1), dtype=np.int64)
    act[0, :, 0] = eps
    lm = LeibnizAlgebraData(l.dim, B, 1, act)
    f = leibniz_faces(lm, lo, hi)

    def degen(n, i, g):
        p = i + 1
        x = g[p]
        if x == unit:
            return g[:p] + (unit, unit) + g[p + 1:]
        a = g[:p] + (unit, x) + g[p + 1:]
        b = g[:p] + (x, unit) + g[p + 1:]
        return {a: 1, b: 1} if a != b else {a: 2}

    return FaceSystem(lo, hi, basis=f._basis, face=f._face, degen=degen, name="leibniz-split")


def split_unital_axioms(l, unit, epsilon, max_degree=2):
    f = split_unital_faces(l, unit, epsilon, -1, max_degree + 1)
    return verify_simplicial_axioms(f, mode="full", lo=0, hi=max_degree)
