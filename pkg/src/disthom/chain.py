"""Chain complexes with labelled bases, face systems and integer homology.

Conventions
-----------
* A ``ChainComplex`` has degrees lo..hi and boundary matrices
  ``boundary[n]`` (rows = basis[n-1], cols = basis[n]) for lo < n <= hi.
  Builders that truncate an infinite complex produce one degree more than
  the caller asks for, so homology is exact up to ``hi - 1``.  Complexes
  that really stop at ``hi`` are flagged ``bounded=True``.
* A ``FaceSystem`` keeps the face maps symbolic: ``face(n, i, g)`` returns a
  formal combination (dict generator -> int) in degree n-1, for
  0 <= i < nfaces(n) (default n+1).  ``degen(n, i, g)`` is optional.
"""
from collections import defaultdict
from dataclasses import dataclass
from itertools import product

import numpy as np
import scipy.sparse as sp

from .smith import invariant_factors


class BoundaryError(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int
    torsion: tuple = ()

    def is_zero(self):
        return self.free_rank == 0 and not self.torsion

    def primary(self):
        """Torsion as a sorted list of prime powers (for comparing direct sums)."""
        out = []
        for d in self.torsion:
            p = 2
            while d > 1:
                if p * p > d:
                    p = d
                if d % p == 0:
                    q = 1
                    while d % p == 0:
                        d //= p
                        q *= p
                    out.append(q)
                p += 1
        return sorted(out)

    def __add__(self, other):
        # direct sum; torsion recombined into invariant-factor form
        prim = self.primary() + other.primary()
        return HomologyGroup(self.free_rank + other.free_rank, tuple(_invariant_form(prim)))

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def as_dict(self):
        return {"free": self.free_rank, "torsion": list(self.torsion)}


def _invariant_form(prime_powers):
    by_p = defaultdict(list)
    for q in prime_powers:
        p = 2
        while q % p:
            p += 1
        by_p[p].append(q)
    for p in by_p:
        by_p[p].sort(reverse=True)
    k = max((len(v) for v in by_p.values()), default=0)
    out = []
    for i in range(k):
        d = 1
        for v in by_p.values():
            if i < len(v):
                d *= v[i]
        out.append(d)
    return sorted(out)


class ChainComplex:
    def __init__(self, basis, boundary, bounded=False, name=""):
        self.basis = {n: list(b) for n, b in basis.items()}
        degs = sorted(self.basis)
        if not degs:
            raise ValueError("empty complex")
        self.lo, self.hi = degs[0], degs[-1]
        if degs != list(range(self.lo, self.hi + 1)):
            raise ValueError("degrees must be contiguous")
        self.boundary = {}
        for n in range(self.lo + 1, self.hi + 1):
            shape = (len(self.basis[n - 1]), len(self.basis[n]))
            M = boundary.get(n)
            M = sp.csr_matrix(shape, dtype=np.int64) if M is None else sp.csr_matrix(M, dtype=np.int64)
            if M.shape != shape:
                raise ValueError(f"boundary {n} has shape {M.shape}, expected {shape}")
            M.eliminate_zeros()
            self.boundary[n] = M
        self.bounded = bounded
        self.name = name
        self._inv = {}

    @property
    def degrees(self):
        return range(self.lo, self.hi + 1)

    def dim(self, n):
        return len(self.basis.get(n, ()))

    def dense(self, n):
        return self.boundary[n].toarray()

    def d2_witness(self):
        """(n, column index, generator) with boundary[n-1] boundary[n] != 0, or None."""
        for n in range(self.lo + 2, self.hi + 1):
            P = (self.boundary[n - 1] @ self.boundary[n]).tocsc()
            P.eliminate_zeros()
            if P.nnz:
                col = int(np.nonzero(np.diff(P.indptr))[0][0])
                return (n, col, self.basis[n][col])
        return None

    def invariants(self, n):
        if n not in self._inv:
            if n not in self.boundary:
                self._inv[n] = []
            else:
                self._inv[n] = invariant_factors(self.boundary[n])
        return self._inv[n]

    def homology(self, n):
        if n < self.lo or n > self.hi:
            raise ValueError(f"degree {n} outside {self.lo}..{self.hi}")
        if n == self.hi and not self.bounded:
            raise ValueError(f"degree {n} is the truncation degree; build one degree higher")
        r_in = len(self.invariants(n + 1)) if n + 1 <= self.hi else 0
        r_out = len(self.invariants(n)) if n > self.lo else 0
        free = self.dim(n) - r_out - r_in
        tors = tuple(d for d in self.invariants(n + 1) if d > 1) if n + 1 <= self.hi else ()
        return HomologyGroup(free, tuple(sorted(tors)))

    def homology_range(self):
        top = self.hi if self.bounded else self.hi - 1
        return range(self.lo, top + 1)

    def all_homology(self):
        return {n: self.homology(n) for n in self.homology_range()}

    def subcomplex(self, keep, bounded=None):
        """Complex on the generators selected by ``keep(n, g)`` in every degree.

        Rows and columns are both restricted, which is the subcomplex when
        the span is closed under the boundary and the quotient when the
        complementary span is.
        """
        basis, idx = {}, {}
        for n in self.degrees:
            sel = [i for i, g in enumerate(self.basis[n]) if keep(n, g)]
            idx[n] = sel
            basis[n] = [self.basis[n][i] for i in sel]
        bd = {n: self.boundary[n][idx[n - 1]][:, idx[n]] for n in range(self.lo + 1, self.hi + 1)}
        return ChainComplex(basis, bd, bounded=self.bounded if bounded is None else bounded)

    def shifted(self, k):
        return ChainComplex({n + k: b for n, b in self.basis.items()},
                            {n + k: M for n, M in self.boundary.items()},
                            bounded=self.bounded, name=self.name)

    def permuted(self, rng):
        """Same complex with every basis randomly reordered."""
        perms = {n: rng.permutation(self.dim(n)) for n in self.degrees}
        basis = {n: [self.basis[n][i] for i in perms[n]] for n in self.degrees}
        bd = {n: self.boundary[n][perms[n - 1]][:, perms[n]] for n in range(self.lo + 1, self.hi + 1)}
        return ChainComplex(basis, bd, bounded=self.bounded)

    def dump(self):
        """Text dump: per degree ``deg n dim k`` then the boundary rows."""
        out = []
        for n in self.degrees:
            out.append(f"deg {n} dim {self.dim(n)}")
            if n in self.boundary:
                for row in self.boundary[n].toarray():
                    out.append(" ".join(str(int(v)) for v in row))
        return "\n".join(out) + "\n"


def parse_dump(text):
    """Inverse of ``ChainComplex.dump`` (labels become indices)."""
    lines = [l for l in text.splitlines() if l.strip()]
    basis, bd = {}, {}
    i = 0
    prev = None
    while i < len(lines):
        tok = lines[i].split()
        if tok[0] != "deg" or tok[2] != "dim":
            raise ValueError(f"line {i + 1}: expected 'deg <n> dim <k>'")
        n, k = int(tok[1]), int(tok[3])
        basis[n] = list(range(k))
        i += 1
        if prev is not None:
            rows = [list(map(int, lines[i + r].split())) for r in range(len(basis[prev]))]
            i += len(basis[prev])
            bd[n] = np.array(rows, dtype=np.int64).reshape(len(basis[prev]), k)
        prev = n
    return ChainComplex(basis, bd)


# ---- formal combinations -------------------------------------------------

def comb(x):
    """Normalise a face value: a bare generator means coefficient 1."""
    if isinstance(x, dict):
        return x
    return {x: 1}


def add_into(acc, c, k=1):
    for g, v in c.items():
        nv = acc.get(g, 0) + k * v
        if nv:
            acc[g] = nv
        elif g in acc:
            del acc[g]
    return acc


def lin(f, c):
    """Extend a generator-level map f (returning a combination) linearly."""
    out = {}
    for g, v in c.items():
        add_into(out, comb(f(g)), v)
    return out


def sub(a, b):
    return add_into(dict(a), b, -1)


class FaceSystem:
    """Symbolic presimplicial data.

    basis: dict degree -> list of generators (the materialised range) or a
    callable degree -> iterable.  ``face(n, i, g)``; ``degen(n, i, g)``.
    """

    def __init__(self, lo, hi, basis, face, nfaces=None, degen=None, ndegen=None, name=""):
        self.lo, self.hi = lo, hi
        self._basis = basis
        self._face = face
        self.nfaces = nfaces or (lambda n: n + 1)
        self._degen = degen
        self.ndegen = ndegen or (lambda n: n + 1)
        self.name = name

    def basis(self, n):
        b = self._basis(n) if callable(self._basis) else self._basis[n]
        return list(b)

    def d(self, n, i, g):
        return comb(self._face(n, i, g))

    def s(self, n, i, g):
        return comb(self._degen(n, i, g))

    @property
    def has_degeneracies(self):
        return self._degen is not None

    def boundary_of(self, n, g):
        out = {}
        for i in range(self.nfaces(n)):
            add_into(out, self.d(n, i, g), -1 if i % 2 else 1)
        return out

    def dual(self):
        """Faces and degeneracies read from the other end: d^_i = d_{n-i}, s^_i = s_{n-i}."""
        f = self
        face = lambda n, i, g: f._face(n, f.nfaces(n) - 1 - i, g)
        degen = None
        if f._degen is not None:
            degen = lambda n, i, g: f._degen(n, f.ndegen(n) - 1 - i, g)
        return FaceSystem(f.lo, f.hi, f._basis, face, f.nfaces, degen, f.ndegen, name=f.name + "^")


def presimplicial_witness(f, degrees=None):
    """(n, i, j, g) violating d_i d_j = d_{j-1} d_i (i<j), or None."""
    for n in degrees or range(f.lo + 2, f.hi + 1):
        k = f.nfaces(n)
        for g in f.basis(n):
            faces = [f.d(n, j, g) for j in range(k)]
            for j in range(k):
                for i in range(j):
                    lhs = lin(lambda h: f.d(n - 1, i, h), faces[j])
                    rhs = lin(lambda h: f.d(n - 1, j - 1, h), faces[i])
                    if lhs != rhs:
                        return (n, i, j, g)
    return None


def assemble(f, verify=True, shift=0, bounded=False, name=""):
    """Materialise a FaceSystem as a ChainComplex with boundary sum (-1)^i d_i."""
    if verify:
        w = presimplicial_witness(f)
        if w is not None:
            n, i, j, g = w
            raise BoundaryError(f"d_{i} d_{j} != d_{j - 1} d_{i} on {g} (degree {n})", w)
    basis = {n: f.basis(n) for n in range(f.lo, f.hi + 1)}
    index = {n: {g: k for k, g in enumerate(b)} for n, b in basis.items()}
    bd = {}
    for n in range(f.lo + 1, f.hi + 1):
        rows, cols, vals = [], [], []
        idx = index[n - 1]
        for c, g in enumerate(basis[n]):
            for h, v in f.boundary_of(n, g).items():
                if h not in idx:
                    raise BoundaryError(f"face of {g} leaves the basis: {h}", (n, g, h))
                rows.append(idx[h])
                cols.append(c)
                vals.append(v)
        bd[n] = sp.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)),
                              shape=(len(basis[n - 1]), len(basis[n])))
    cx = ChainComplex({n + shift: b for n, b in basis.items()},
                      {n + shift: M for n, M in bd.items()}, bounded=bounded, name=name)
    w = cx.d2_witness()
    if w is not None:
        raise BoundaryError(f"boundary squared is nonzero on generator {w[2]} (degree {w[0]})", w)
    return cx


# ---- simplicial axioms -------------------------------------------------

AXIOMS = ("1", "2", "3", "4'", "4")
MODES = {
    "presimplicial": ("1",),
    "very_weak": ("1", "2", "3"),
    "weak": ("1", "2", "3", "4'"),
    "full": ("1", "2", "3", "4'", "4"),
}


@dataclass
class AxiomCheck:
    holds: dict
    witnesses: dict

    def satisfies(self, mode):
        return all(self.holds[a] for a in MODES[mode])

    def strongest(self):
        best = None
        for mode in ("presimplicial", "very_weak", "weak", "full"):
            if self.satisfies(mode):
                best = mode
        return best


def verify_simplicial_axioms(f, mode="full", lo=None, hi=None):
    """Check axioms (1), (2), (3), (4'), (4) on every generator of degrees lo..hi.

    Degeneracies go from degree n to n+1; the generator sets are taken from
    f.basis, and the targets need not lie inside lo..hi.
    """
    lo = f.lo if lo is None else lo
    hi = f.hi if hi is None else hi
    wanted = MODES[mode] if mode in MODES else AXIOMS
    holds = {a: True for a in AXIOMS}
    wit = {}

    def fail(ax, w):
        if holds[ax]:
            holds[ax] = False
            wit[ax] = w

    d = lambda n: (lambda i: (lambda h: f.d(n, i, h)))
    s = lambda n: (lambda i: (lambda h: f.s(n, i, h)))
    if "1" in wanted:
        w = presimplicial_witness(f, range(max(lo, f.lo + 2), hi + 1))
        if w is not None:
            fail("1", w)
    need_s = [a for a in wanted if a != "1"]
    if need_s and not f.has_degeneracies:
        raise ValueError("degeneracies required for this mode")
    for n in range(lo, hi + 1):
        if not need_s:
            break
        nd = f.ndegen(n)
        for g in f.basis(n):
            sg = {i: f.s(n, i, g) for i in range(nd)}
            if "2" in wanted:
                for i in range(nd):
                    for j in range(i, nd):
                        lhs = lin(s(n + 1)(i), sg[j])
                        rhs = lin(s(n + 1)(j + 1), sg[i])
                        if lhs != rhs:
                            fail("2", (n, i, j, g))
            if n + 1 < f.lo + 1:
                continue
            nf = f.nfaces(n + 1)
            faces_of_s = {(i, j): lin(d(n + 1)(i), sg[j]) for j in range(nd) for i in range(nf)}
            if "3" in wanted and n - 1 >= f.lo:
                for j in range(nd):
                    for i in range(nf):
                        if i < j:
                            rhs = lin(s(n - 1)(j - 1), f.d(n, i, g))
                        elif i > j + 1:
                            rhs = lin(s(n - 1)(j), f.d(n, i - 1, g))
                        else:
                            continue
                        if faces_of_s[(i, j)] != rhs:
                            fail("3", (n, i, j, g))
            for i in range(nd):
                a, b = faces_of_s[(i, i)], faces_of_s[(i + 1, i)]
                if "4'" in wanted and a != b:
                    fail("4'", (n, i, g))
                if "4" in wanted and (a != {g: 1} or b != {g: 1}):
                    fail("4", (n, i, g))
    holds = {a: holds[a] for a in AXIOMS if a in wanted}
    return AxiomCheck(holds, wit)


# ---- degenerate filtrations ---------------------------------------------

def degenerate_positions(g):
    return [q for q in range(len(g) - 1) if g[q] == g[q + 1]]


def filtration_witness(f, side="left", lo=None, hi=None, level=None):
    """Check d(F^p_n) in F^p_{n-1} for the tuple filtration by repeat positions.

    Works for face systems on plain tuples where s_q doubles entry q, so
    F^p_n is spanned by tuples with a repeat at some position q <= p (left)
    or q >= len-2-p (right, the dual numbering s^_i = s_{n-i}).
    ``level`` maps a generator to the offset of its tuple part.
    """
    off = level or (lambda g: 0)
    lo = f.lo + 1 if lo is None else lo
    hi = f.hi if hi is None else hi

    def member(g, p):
        k = off(g)
        pos = degenerate_positions(g[k:])
        L = len(g) - k
        if side == "left":
            return any(q <= p for q in pos)
        return any(q >= L - 2 - p for q in pos)

    for n in range(lo, hi + 1):
        for g in f.basis(n):
            k = off(g)
            pos = degenerate_positions(g[k:])
            if not pos:
                continue
            L = len(g) - k
            p = min(pos) if side == "left" else (L - 2 - max(pos))
            for h in f.boundary_of(n, g):
                if not member(h, p):
                    return (n, p, g, h)
    return None


def tuples(k, length):
    return product(range(k), repeat=length)
