"""Extensions A x X -> X: dynamical cocycles, Alexander extensions, hulls.

Elements (a, x) of A x X are encoded as the integer a + |A| * x.
"""
from dataclasses import dataclass
from itertools import product

import numpy as np

from .magma import (FiniteMagma, ValidationError, entropic_witness, is_associative,
                    shelf_witness)
from .smith import smith_normal_form

KINDS = ("associative", "distributive", "entropic")
EXHAUSTIVE_LIMIT = 10 ** 6


# ---- dynamical cocycles ------------------------------------------------

@dataclass
class DynamicalCocycle:
    base: FiniteMagma
    fiber_size: int
    phi: np.ndarray  # phi[a1, a2, x1, x2]

    def __post_init__(self):
        k, n = self.fiber_size, self.base.size
        self.phi = np.asarray(self.phi, dtype=np.int64)
        if self.phi.shape != (k, k, n, n):
            raise ValidationError(f"phi must have shape {(k, k, n, n)}, got {self.phi.shape}")
        if np.any((self.phi < 0) | (self.phi >= k)):
            raise ValidationError("phi takes values outside the fiber")


def extension_table(c):
    k, n = c.fiber_size, c.base.size
    T = c.base.table
    a1, a2, x1, x2 = np.meshgrid(np.arange(k), np.arange(k), np.arange(n), np.arange(n),
                                 indexing="ij")
    E = np.zeros((k * n, k * n), dtype=np.int64)
    E[a1 + k * x1, a2 + k * x2] = c.phi + k * T[x1, x2]
    return FiniteMagma(E, name="extension")


def _first_false(mask, axes):
    bad = np.argwhere(~mask)
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in bad[0])


def cocycle_identity(c, kind):
    """Exhaustive check of the dynamical cocycle identity for ``kind``.

    The base structure is part of the verdict, since A x X can only have the
    property when X has it.  Returns (ok, witness).
    """
    k, n = c.fiber_size, c.base.size
    T, P = c.base.table, c.phi
    if kind == "associative":
        w = is_associative(c.base)
        if w is not None:
            return False, ("base",) + tuple(w)
        a1, a2, a3, x1, x2, x3 = np.meshgrid(*[np.arange(k)] * 3, *[np.arange(n)] * 3, indexing="ij")
        lhs = P[P[a1, a2, x1, x2], a3, T[x1, x2], x3]
        rhs = P[a1, P[a2, a3, x2, x3], x1, T[x2, x3]]
    elif kind == "distributive":
        w = shelf_witness(c.base)
        if w is not None:
            return False, ("base",) + tuple(w)
        a1, a2, a3, x1, x2, x3 = np.meshgrid(*[np.arange(k)] * 3, *[np.arange(n)] * 3, indexing="ij")
        lhs = P[P[a1, a2, x1, x2], a3, T[x1, x2], x3]
        rhs = P[P[a1, a3, x1, x3], P[a2, a3, x2, x3], T[x1, x3], T[x2, x3]]
    elif kind == "entropic":
        w = entropic_witness(c.base)
        if w is not None:
            return False, ("base",) + tuple(w)
        g = np.meshgrid(*[np.arange(k)] * 4, *[np.arange(n)] * 4, indexing="ij")
        a1, a2, a3, a4, x1, x2, x3, x4 = g
        lhs = P[P[a1, a2, x1, x2], P[a3, a4, x3, x4], T[x1, x2], T[x3, x4]]
        rhs = P[P[a1, a3, x1, x3], P[a2, a4, x2, x4], T[x1, x3], T[x2, x4]]
    else:
        raise ValidationError(f"unknown kind {kind!r}")
    w = _first_false(lhs == rhs, None)
    return w is None, w


def magma_axiom(m, kind):
    """The plain axiom of the built magma, via the magma module."""
    fn = {"associative": is_associative, "distributive": shelf_witness,
          "entropic": entropic_witness}[kind]
    w = fn(m)
    return w is None, w


@dataclass
class ExtensionResult:
    magma: FiniteMagma
    kind: str
    identity: bool
    identity_witness: tuple
    axiom: bool
    axiom_witness: tuple

    @property
    def agree(self):
        return self.identity == self.axiom

    @property
    def verdict(self):
        return self.identity and self.axiom


def extend(c, kind):
    if kind not in KINDS:
        raise ValidationError(f"unknown kind {kind!r}; choose from {KINDS}")
    E = extension_table(c)
    ok, w = cocycle_identity(c, kind)
    ax, aw = magma_axiom(E, kind)
    return ExtensionResult(E, kind, ok, w, ax, aw)


def random_cocycle(base, k, rng):
    n = base.size
    return DynamicalCocycle(base, k, rng.integers(0, k, size=(k, k, n, n)))


# ---- abelian fibers ---------------------------------------------------------

class FiberGroup:
    """Z_{m1} x ... x Z_{mr}; elements are tuples."""

    def __init__(self, moduli):
        self.moduli = tuple(int(m) for m in moduli)
        if not self.moduli or any(m < 1 for m in self.moduli):
            raise ValidationError(f"bad fiber moduli {moduli}")
        self.m = np.array(self.moduli, dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, FiberGroup) and self.moduli == other.moduli

    def __repr__(self):
        return "x".join(f"Z{m}" for m in self.moduli)

    @classmethod
    def parse(cls, text):
        parts = text.replace("Z", "").split("x")
        try:
            return cls([int(p) for p in parts])
        except ValueError:
            raise ValidationError(f"bad fiber group {text!r}") from None

    @property
    def rank(self):
        return len(self.moduli)

    @property
    def size(self):
        return int(np.prod(self.m))

    def elements(self):
        return list(product(*[range(m) for m in self.moduli]))

    def index(self, v):
        i = 0
        for x, m in zip(v, self.moduli):
            i = i * m + x
        return i

    def zero(self):
        return (0,) * self.rank

    def reduce(self, v):
        return tuple(int(x) % m for x, m in zip(v, self.moduli))

    def add(self, u, v):
        return tuple(int((a + b) % m) for a, b, m in zip(u, v, self.moduli))

    def neg(self, u):
        return tuple(int((-a) % m) for a, m in zip(u, self.moduli))

    def check_endo(self, M):
        M = np.asarray(M, dtype=np.int64)
        r = self.rank
        if M.shape != (r, r):
            raise ValidationError(f"endomorphism matrix must be {r}x{r}")
        for i in range(r):
            for j in range(r):
                if (M[i, j] * self.moduli[j]) % self.moduli[i]:
                    raise ValidationError(f"matrix entry ({i},{j}) is not well defined on the fiber",
                                          (i, j))
        return M

    def apply(self, M, V):
        """Apply M to the last axis of the array V, reduced mod the moduli."""
        return np.einsum("ij,...j->...i", M, V) % self.m

    def is_automorphism(self, M):
        M = self.check_endo(M)
        if self.size > EXHAUSTIVE_LIMIT:
            raise ValidationError("fiber too large to verify invertibility")
        E = np.array(self.elements(), dtype=np.int64)
        img = self.apply(M, E)
        return len({tuple(r) for r in img.tolist()}) == len(E)


@dataclass
class TwoCocycle:
    base: FiniteMagma = None
    fiber: FiberGroup = None
    f: np.ndarray = None  # f[x1, x2, :]
    t: np.ndarray = None

    def __post_init__(self):
        n, r = self.base.size, self.fiber.rank
        F = np.asarray(self.f, dtype=np.int64)
        if F.shape == (n, n) and r == 1:
            F = F[:, :, None]
        if F.shape != (n, n, r):
            raise ValidationError(f"cocycle table must have shape {(n, n, r)}")
        self.f = F % self.fiber.m
        if self.t is None:
            self.t = np.eye(r, dtype=np.int64)
        self.t = self.fiber.check_endo(np.atleast_2d(self.t))
        if not self.fiber.is_automorphism(self.t):
            raise ValidationError("t is not invertible on the fiber")

    def value(self, x1, x2):
        return tuple(int(v) for v in self.f[x1, x2])

    def is_identity_t(self):
        return np.array_equal(self.t % self.fiber.m[:, None],
                              np.eye(self.fiber.rank, dtype=np.int64) % self.fiber.m[:, None])

    def one_minus_t(self):
        return (np.eye(self.fiber.rank, dtype=np.int64) - self.t)

    def is_quandle_cocycle(self):
        return not np.any(self.f[np.arange(self.base.size), np.arange(self.base.size)])

    def __sub__(self, other):
        return TwoCocycle(self.base, self.fiber, self.f - other.f, self.t)


def zero_cocycle(base, fiber, t=None):
    return TwoCocycle(base, fiber, np.zeros((base.size, base.size, fiber.rank), dtype=np.int64), t)


def _witness(D, fib):
    bad = np.argwhere(np.any(D % fib.m != 0, axis=-1))
    if len(bad) == 0:
        return True, None
    return False, tuple(int(v) for v in bad[0])


def check_two_cocycle(c, kind, s=None, action=None):
    """Exhaustive cocycle condition.  Returns (ok, witness tuple).

    kind 'group': x1.f(x2,x3) - f(x1x2,x3) + f(x1,x2x3) - f(x1,x2); the action
    defaults to trivial, otherwise ``action[x]`` is a fiber matrix.
    kind 'twisted_rack': uses c.t.  kind 'entropic': uses t = c.t and s
    (default 1 - t).
    """
    fib, F, T = c.fiber, c.f, c.base.table
    n = c.base.size
    if kind == "group":
        w = is_associative(c.base)
        if w is not None:
            raise ValidationError(f"group cocycles need an associative base, fails at {w}", w)
        i, j, k = np.meshgrid(*[np.arange(n)] * 3, indexing="ij")
        acted = F[j, k]
        if action is not None:
            A = np.array([fib.check_endo(a) for a in action])
            acted = np.einsum("...ij,...j->...i", A[i], F[j, k])
        D = acted - F[T[i, j], k] + F[i, T[j, k]] - F[i, j]
    elif kind == "twisted_rack":
        w = shelf_witness(c.base)
        if w is not None:
            raise ValidationError(f"rack cocycles need a shelf base, fails at {w}", w)
        i, j, k = np.meshgrid(*[np.arange(n)] * 3, indexing="ij")
        D = (fib.apply(c.t, F[j, k] - F[i, k] + F[i, j]) - F[j, k]
             + F[T[i, j], k] - F[T[i, k], T[j, k]])
    elif kind == "entropic":
        w = entropic_witness(c.base)
        if w is not None:
            raise ValidationError(f"entropic cocycles need an entropic base, fails at {w}", w)
        t = c.t
        s = c.one_minus_t() if s is None else fib.check_endo(np.atleast_2d(s))
        if not np.array_equal((t @ s) % fib.m[:, None], (s @ t) % fib.m[:, None]):
            raise ValidationError("t and s must commute")
        x1, x2, x3, x4 = np.meshgrid(*[np.arange(n)] * 4, indexing="ij")
        D = (fib.apply(t, F[x1, x2] - F[x1, x3]) + fib.apply(s, F[x3, x4] - F[x2, x4])
             + F[T[x1, x2], T[x3, x4]] - F[T[x1, x3], T[x2, x4]])
    else:
        raise ValidationError(f"unknown cocycle kind {kind!r}")
    return _witness(D, fib)


def coboundary(base, fiber, c_values, t=None):
    """(dc)(x1,x2) = t c(x1) + (1-t) c(x2) - c(x1*x2)."""
    n = base.size
    C = np.asarray(c_values, dtype=np.int64).reshape(n, fiber.rank)
    tt = np.eye(fiber.rank, dtype=np.int64) if t is None else np.atleast_2d(np.asarray(t))
    T = base.table
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    one = np.eye(fiber.rank, dtype=np.int64)
    F = fiber.apply(tt, C[i]) + fiber.apply(one - tt, C[j]) - C[T[i, j]]
    return TwoCocycle(base, fiber, F, tt)


def alexander_extension(c, a0=None):
    """Dynamical cocycle phi = t a1 + (1-t) a2 + f(x1,x2) + a0 on the fiber group.

    a0 is a constant fiber element (default zero), carried as given.
    """
    fib = c.fiber
    shift = fib.zero() if a0 is None else fib.reduce(np.asarray(a0, dtype=np.int64))
    els = np.array(fib.elements(), dtype=np.int64)
    k, n = len(els), c.base.size
    one_t = c.one_minus_t()
    ta = fib.apply(c.t, els)
    sa = fib.apply(one_t, els)
    idx = np.zeros(fib.m.shape, dtype=np.int64)
    stride = 1
    for p in reversed(range(fib.rank)):
        idx[p] = stride
        stride *= fib.moduli[p]
    V = (ta[:, None, None, None, :] + sa[None, :, None, None, :]
         + c.f[None, None, :, :, :] + shift) % fib.m
    phi = V @ idx
    return DynamicalCocycle(c.base, k, phi)


def is_coboundary(f1, f2, method="auto"):
    """Find c with f1 - f2 = dc.  Returns (c as (n, r) array or None, method used)."""
    if f1.base != f2.base or f1.fiber != f2.fiber or not np.array_equal(f1.t, f2.t):
        raise ValidationError("cocycles must share base, fiber and t")
    fib, n = f1.fiber, f1.base.size
    D = (f1.f - f2.f) % fib.m
    space = fib.size ** n
    if method == "auto":
        method = "exhaustive" if space <= EXHAUSTIVE_LIMIT else "linear"
    if method == "exhaustive":
        return _coboundary_search(f1, D), "exhaustive"
    return _coboundary_solve(f1, D), "linear"


def _coboundary_search(c, D, chunk=20000):
    fib, n = c.fiber, c.base.size
    els = np.array(fib.elements(), dtype=np.int64)
    k = len(els)
    T = c.base.table
    one = np.eye(fib.rank, dtype=np.int64)
    total = k ** n
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    for start in range(0, total, chunk):
        ids = np.arange(start, min(total, start + chunk))
        digits = np.stack(np.unravel_index(ids, (k,) * n), axis=1) if n else ids[:, None]
        C = els[digits]  # (N, n, r)
        F = (fib.apply(c.t, C[:, i]) + fib.apply(one - c.t, C[:, j]) - C[:, T[i, j]]) % fib.m
        hit = np.nonzero(np.all((F - D[None]) % fib.m == 0, axis=(1, 2, 3)))[0]
        if len(hit):
            return C[hit[0]]
    return None


def _coboundary_solve(c, D):
    """Integer linear system with slack multiples of the moduli, solved through SNF."""
    fib, n, r = c.fiber, c.base.size, c.fiber.rank
    T = c.base.table
    t = c.t
    nu = n * r
    rows = []
    rhs = []
    eqs = [(x1, x2, i) for x1 in range(n) for x2 in range(n) for i in range(r)]
    for e, (x1, x2, i) in enumerate(eqs):
        row = [0] * (nu + len(eqs))
        for j in range(r):
            row[x1 * r + j] += int(t[i, j])
            row[x2 * r + j] += int((i == j) - t[i, j])
        row[T[x1, x2] * r + i] -= 1
        row[nu + e] = fib.moduli[i]
        rows.append(row)
        rhs.append(int(D[x1, x2, i]))
    sd = smith_normal_form(rows)
    Ub = [sum(u * b for u, b in zip(urow, rhs)) for urow in sd.U]
    y = [0] * len(rows[0])
    for p, b in enumerate(Ub):
        if p < sd.rank:
            if b % sd.invariants[p]:
                return None
            y[p] = b // sd.invariants[p]
        elif b:
            return None
    sol = [sum(v * yy for v, yy in zip(vrow, y)) for vrow in sd.V]
    C = np.array(sol[:nu], dtype=np.int64).reshape(n, r) % fib.m
    return C


def quandle_cocycles(q, fiber, t=None):
    """Every quandle 2-cocycle (f(x,x)=0) over the fiber, by exhaustive search."""
    n = q.size
    off = [(a, b) for a in range(n) for b in range(n) if a != b]
    els = fiber.elements()
    if len(els) ** len(off) > EXHAUSTIVE_LIMIT:
        raise ValidationError("search space too large")
    for vals in product(els, repeat=len(off)):
        F = np.zeros((n, n, fiber.rank), dtype=np.int64)
        for (a, b), v in zip(off, vals):
            F[a, b] = v
        c = TwoCocycle(q, fiber, F, t)
        if check_two_cocycle(c, "twisted_rack")[0]:
            yield c


def nontrivial_quandle_cocycle(q, fiber):
    """First quandle cocycle (t = 1) that is not a coboundary, or None."""
    zero = zero_cocycle(q, fiber)
    for c in quandle_cocycles(q, fiber):
        if is_coboundary(c, zero)[0] is None:
            return c
    return None


# ---- hulls ------------------------------------------------------------------

def indexed_distributivity_witness(ops, base=None):
    """(a,b,c,x,y) violating (a *_x b) *_y c = (a *_y c) *_{x'} (b *_y c).

    x' = x for the plain hull, x' = x * y (base operation) when ``base`` is given.
    """
    O = np.array([op.table for op in ops])
    nx, k = O.shape[0], O.shape[1]
    a, b, c, x, y = np.meshgrid(np.arange(k), np.arange(k), np.arange(k),
                                np.arange(nx), np.arange(nx), indexing="ij")
    xp = x if base is None else base.table[x, y]
    lhs = O[y, O[x, a, b], c]
    rhs = O[xp, O[y, a, c], O[y, b, c]]
    return _first_false(lhs == rhs, None)


def hull(a_ops, base, twisted=False):
    """Shelf on A x X: (a1,x1)*(a2,x2) = (a1 *_{x2} a2, x1 or x1*x2)."""
    ops = list(a_ops)
    if len(ops) != base.size:
        raise ValidationError("need one operation on A per element of X")
    k = ops[0].size
    w = indexed_distributivity_witness(ops, base if twisted else None)
    if w is not None:
        raise ValidationError(f"indexed distributivity fails at (a,b,c,x,y)={w}", w)
    O = np.array([op.table for op in ops])
    n = base.size
    a1, a2, x1, x2 = np.meshgrid(np.arange(k), np.arange(k), np.arange(n), np.arange(n),
                                 indexing="ij")
    xo = base.table[x1, x2] if twisted else x1
    E = np.zeros((k * n, k * n), dtype=np.int64)
    E[a1 + k * x1, a2 + k * x2] = O[x2, a1, a2] + k * xo
    m = FiniteMagma(E, name="twisted-hull" if twisted else "hull")
    sw = shelf_witness(m)
    if sw is not None:
        raise ValidationError(f"hull failed the shelf check at {sw}", sw)
    return m


def joyce_family(group, autos):
    """g1 *_x g2 = x(g1 g2^-1) g2 for each automorphism x (given as an array)."""
    from .magma import joyce1
    return [joyce1(group, x) for x in autos]


def automorphism_conjugation_base(autos):
    """x * y = y x y^-1 on a list of permutations closed under that operation."""
    autos = [tuple(int(v) for v in a) for a in autos]
    idx = {a: i for i, a in enumerate(autos)}
    n = len(autos)
    T = np.zeros((n, n), dtype=np.int64)
    for i, x in enumerate(autos):
        for j, y in enumerate(autos):
            yinv = [0] * len(y)
            for p, v in enumerate(y):
                yinv[v] = p
            prod = tuple(y[x[yinv[v]]] for v in range(len(y)))
            if prod not in idx:
                raise ValidationError("automorphism list not closed under conjugation")
            T[i, j] = idx[prod]
    return FiniteMagma(T, name="aut-conjugation")
