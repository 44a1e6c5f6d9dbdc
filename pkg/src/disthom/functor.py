"""Abstract simplicial complexes, functor coefficients, and the Khovanov cube.

Cube conventions: a state is a subset s of crossings; s(v) = 1 means the
smoothing pairing PD positions (0,1),(2,3) at v when ``smoothing='A'``.
The cube map goes s -> s + {v} with sign (-1)^{#{j < v : j in s}}.  It is
stored as a ChainComplex in degree -|s| so that cube degree k is
``homology(-k)``.
"""
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np
import scipy.sparse as sp

from .chain import BoundaryError, ChainComplex, FaceSystem, assemble
from .magma import ValidationError


# ---- simplicial complexes --------------------------------------------------

class SimplicialComplex:
    def __init__(self, vertex_count, facets):
        self.vertex_count = vertex_count
        simp = set((v,) for v in range(vertex_count))
        for f in facets:
            f = tuple(sorted(set(int(v) for v in f)))
            if any(v < 0 or v >= vertex_count for v in f):
                raise ValidationError(f"facet {f} uses a vertex outside 0..{vertex_count - 1}")
            for k in range(1, len(f) + 1):
                simp.update(combinations(f, k))
        self.simplices = simp

    def of_dim(self, n):
        return sorted(s for s in self.simplices if len(s) == n + 1)

    @property
    def dimension(self):
        return max(len(s) for s in self.simplices) - 1

    def __contains__(self, s):
        return tuple(sorted(set(s))) in self.simplices


def simplex(n):
    return SimplicialComplex(n + 1, [range(n + 1)])


def boundary_of_simplex(n):
    return SimplicialComplex(n + 1, list(combinations(range(n + 1), n)))


def _delete(g, i):
    return g[:i] + g[i + 1:]


def asc_faces(k, variant, lo=0, hi=4):
    V = range(k.vertex_count)

    if variant == "oriented":
        basis = lambda n: k.of_dim(n)
    else:
        def basis(n):
            return [g for g in product(V, repeat=n + 1) if tuple(sorted(set(g))) in k.simplices]

    return FaceSystem(lo, hi, basis=basis, face=lambda n, i, g: _delete(g, i),
                      degen=lambda n, i, g: g[:i + 1] + g[i:], name=f"asc-{variant}")


def is_degenerate_tuple(g):
    return any(g[i] == g[i + 1] for i in range(len(g) - 1))


def asc_complex(k, variant="oriented", max_degree=3):
    if variant not in ("ordered", "normalized", "oriented"):
        raise ValidationError(f"unknown variant {variant!r}")
    c = assemble(asc_faces(k, variant, 0, max_degree + 1), verify=True, name=f"asc-{variant}")
    if variant == "normalized":
        c = c.subcomplex(lambda n, g: not is_degenerate_tuple(g))
    return c


def asc_homology(k, variant="oriented", max_degree=3):
    c = asc_complex(k, variant, max_degree)
    return {n: c.homology(n) for n in range(0, max_degree + 1)}


def ordered_degenerate_subcomplex(k, max_degree=3):
    c = asc_complex(k, "ordered", max_degree)
    return c.subcomplex(lambda n, g: is_degenerate_tuple(g))


# ---- functor coefficients -----------------------------------------------

@dataclass
class FunctorData:
    """rank(s) -> int; restriction(s, i) -> matrix from F(s) to F(s minus its i-th vertex)."""
    rank: object
    restriction: object


def constant_functor(r=1):
    I = np.eye(r, dtype=np.int64)
    return FunctorData(lambda s: r, lambda s, i: I)


def zero_functor():
    return FunctorData(lambda s: 0, lambda s, i: np.zeros((0, 0), dtype=np.int64))


def _simplices(k, augmented):
    out = {}
    for s in k.simplices:
        out.setdefault(len(s) - 1, []).append(s)
    if augmented:
        out[-1] = [()]
    return {n: sorted(v) for n, v in out.items()}


def functoriality_witness(k, f, augmented=False):
    """(s, i, j) where the two routes from F(s) to F(s - s_i - s_j) differ, or None."""
    lo = 1 if augmented else 2
    for s in sorted(k.simplices):
        if len(s) < lo:
            continue
        for i, j in combinations(range(len(s)), 2):
            a = np.asarray(f.restriction(_delete(s, j), i), dtype=object).dot(
                np.asarray(f.restriction(s, j), dtype=object))
            b = np.asarray(f.restriction(_delete(s, i), j - 1), dtype=object).dot(
                np.asarray(f.restriction(s, i), dtype=object))
            if a.shape != b.shape or np.any(a != b):
                return s, i, j
    return None


def functor_complex(k, f, max_degree=None, augmented=False, check=True):
    """C_n = sum over n-simplices of F(s); boundary sum_i (-1)^i F(s > s - s_i)."""
    if check:
        w = functoriality_witness(k, f, augmented)
        if w is not None:
            raise ValidationError(f"restrictions do not compose at simplex {w[0]}, "
                                  f"vertices {w[1]},{w[2]}", w)
    simp = _simplices(k, augmented)
    top = max(simp) if max_degree is None else max_degree + 1
    lo = -1 if augmented else 0
    basis, index = {}, {}
    for n in range(lo, top + 1):
        basis[n] = [(s, a) for s in simp.get(n, []) for a in range(f.rank(s))]
        index[n] = {g: i for i, g in enumerate(basis[n])}
    bd = {}
    for n in range(lo + 1, top + 1):
        rows, cols, vals = [], [], []
        offs = {}
        for i, (s, a) in enumerate(basis[n - 1]):
            offs.setdefault(s, i)
        col0 = {}
        for c, (s, a) in enumerate(basis[n]):
            col0.setdefault(s, c)
        for s in simp.get(n, []):
            if f.rank(s) == 0:
                continue
            for i in range(len(s)):
                t = _delete(s, i)
                if f.rank(t) == 0:
                    continue
                M = np.asarray(f.restriction(s, i), dtype=np.int64)
                r, c = np.nonzero(M)
                rows.extend(offs[t] + r)
                cols.extend(col0[s] + c)
                vals.extend((-1 if i % 2 else 1) * M[r, c])
        bd[n] = sp.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)),
                              shape=(len(basis[n - 1]), len(basis[n])))
    cx = ChainComplex(basis, bd, bounded=max_degree is None, name="functor")
    w = cx.d2_witness()
    if w is not None:
        raise BoundaryError(f"boundary squared nonzero at {w[2]}", w)
    return cx


# ---- Frobenius algebra Z[x]/(x^m) ----------------------------------------

class FrobeniusAlgebraData:
    def __init__(self, m, delta_override=None):
        if m < 2:
            raise ValidationError("the algebra rank m must be at least 2")
        self.m = m
        self._delta = {}
        for k in range(m):
            self._delta[k] = {(i, m - 1 + k - i): 1 for i in range(m)
                              if 0 <= m - 1 + k - i < m}
        for (k, i, j), v in (delta_override or {}).items():
            d = self._delta[k]
            d[(i, j)] = v
            if not v:
                del d[(i, j)]

    def mu(self, i, j):
        return {i + j: 1} if i + j < self.m else {}

    def delta(self, k):
        return dict(self._delta[k])

    def frobenius_witness(self):
        """(i, j) with  delta mu != (mu x Id)(Id x delta)  on x^i x x^j, or None."""
        m = self.m
        for i in range(m):
            for j in range(m):
                lhs = {}
                for k, v in self.mu(i, j).items():
                    for p, w in self.delta(k).items():
                        lhs[p] = lhs.get(p, 0) + v * w
                rhs = {}
                for (a, b), w in self.delta(j).items():
                    for k, v in self.mu(i, a).items():
                        rhs[(k, b)] = rhs.get((k, b), 0) + v * w
                if {p: v for p, v in lhs.items() if v} != {p: v for p, v in rhs.items() if v}:
                    return i, j
        return None

    def commutative(self):
        return all(self.mu(i, j) == self.mu(j, i) for i in range(self.m) for j in range(self.m))

    def cocommutative(self):
        return all(self.delta(k) == {(j, i): v for (i, j), v in self.delta(k).items()}
                   for k in range(self.m))


# ---- Kauffman states and the cube -------------------------------------------

def state_circles(d, s, smoothing="A"):
    """Circles of the state s as sorted label tuples (then one per extra unknot)."""
    pairs_on = ((0, 1), (2, 3)) if smoothing == "A" else ((0, 3), (1, 2))
    pairs_off = ((0, 3), (1, 2)) if smoothing == "A" else ((0, 1), (2, 3))
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v, q in enumerate(d.crossings):
        for p1, p2 in (pairs_on if v in s else pairs_off):
            a, b = find(q[p1]), find(q[p2])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for l in d.semiarcs:
        groups.setdefault(find(l), []).append(l)
    circles = sorted(tuple(g) for g in groups.values())
    return circles + [("unknot", i) for i in range(d.unknots)]


def _edge_map(frob, src, dst):
    """Matrix from A^{x len(src)} to A^{x len(dst)} for circle lists differing at one crossing."""
    m = frob.m
    common = [c for c in src if c in dst]
    s_only = [i for i, c in enumerate(src) if c not in dst]
    d_only = [i for i, c in enumerate(dst) if c not in src]
    pos = {c: i for i, c in enumerate(dst)}
    ns, nd = len(src), len(dst)
    M = np.zeros((m ** nd, m ** ns), dtype=np.int64)
    wd = [m ** (nd - 1 - i) for i in range(nd)]
    if len(s_only) == 2 and len(d_only) == 1:
        kind = "mu"
    elif len(s_only) == 1 and len(d_only) == 2:
        kind = "delta"
    else:
        raise ValidationError("a cube edge must merge two circles or split one")
    for col, e in enumerate(product(range(m), repeat=ns)):
        base = sum(e[i] * wd[pos[src[i]]] for i in range(ns) if src[i] in pos)
        if kind == "mu":
            for k, v in frob.mu(e[s_only[0]], e[s_only[1]]).items():
                M[base + k * wd[d_only[0]], col] += v
        else:
            for (a, b), v in frob.delta(e[s_only[0]]).items():
                M[base + a * wd[d_only[0]] + b * wd[d_only[1]], col] += v
    return M


def khovanov_cube(d, m=2, smoothing="A", frob=None):
    frob = frob or FrobeniusAlgebraData(m)
    c = len(d.crossings)
    states = {k: [tuple(s) for s in combinations(range(c), k)] for k in range(c + 1)}
    circ = {s: state_circles(d, set(s), smoothing) for k in states for s in states[k]}
    m = frob.m
    basis, offset = {}, {}
    for k in range(c + 1):
        b = []
        for s in states[k]:
            offset[s] = len(b)
            b.extend((s, e) for e in product(range(m), repeat=len(circ[s])))
        basis[-k] = b
    bd = {}
    for k in range(c):
        rows, cols, vals = [], [], []
        for s in states[k]:
            for v in range(c):
                if v in s:
                    continue
                t = tuple(sorted(s + (v,)))
                sign = -1 if sum(1 for j in s if j < v) % 2 else 1
                M = _edge_map(frob, circ[s], circ[t])
                r, cc = np.nonzero(M)
                rows.extend(offset[t] + r)
                cols.extend(offset[s] + cc)
                vals.extend(sign * M[r, cc])
        bd[-k] = sp.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)),
                               shape=(len(basis[-k - 1]), len(basis[-k])))
    cx = ChainComplex(basis, bd, bounded=True, name="khovanov-cube")
    w = cx.d2_witness()
    if w is not None:
        raise BoundaryError(f"cube maps do not square to zero at {w[2]}", w)
    return cx


def cube_homology(d, m=2, smoothing="A", frob=None):
    """{cube degree k: HomologyGroup}."""
    cx = khovanov_cube(d, m, smoothing, frob)
    return {-n: cx.homology(n) for n in sorted(cx.degrees, reverse=True)}


def khovanov_functor(d, m=2, smoothing="A", frob=None):
    """Cube data as a functor on the full simplex on the crossings (plus the empty simplex)."""
    frob = frob or FrobeniusAlgebraData(m)
    c = len(d.crossings)
    cache = {}

    def circles(s):
        if s not in cache:
            cache[s] = state_circles(d, set(s), smoothing)
        return cache[s]

    def rank(s):
        return frob.m ** len(circles(s))

    def restriction(s, i):
        return _edge_map(frob, circles(s), circles(_delete(s, i)))

    k = SimplicialComplex(c, [range(c)]) if c else SimplicialComplex(0, [])
    return k, FunctorData(rank, restriction)
