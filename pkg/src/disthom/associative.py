"""Bar-type complexes of semigroups and monoids, with walls, and Hochschild.

Generators of degree n are tuples (x1..xn), with a leading wall element
e0 and/or a trailing wall element ew when walls are given.  Faces:
d_0 absorbs x1 into the left wall (or deletes it), d_i multiplies
x_i x_{i+1}, d_n absorbs x_n into the right wall (or deletes it).
"""
from dataclasses import dataclass

import numpy as np

from .chain import FaceSystem, assemble, presimplicial_witness, tuples
from .magma import FiniteMagma, ValidationError, is_associative


@dataclass
class SemigroupData:
    magma: FiniteMagma
    identity: int = None

    def __post_init__(self):
        if not isinstance(self.magma, FiniteMagma):
            self.magma = FiniteMagma(self.magma)
        w = is_associative(self.magma)
        if w is not None:
            raise ValidationError(f"not associative at {w}", w)
        if self.identity is not None:
            T = self.magma.table
            e = self.identity
            ar = np.arange(self.magma.size)
            if not (np.all(T[e] == ar) and np.all(T[:, e] == ar)):
                raise ValidationError(f"{e} is not a two-sided identity", e)

    @property
    def size(self):
        return self.magma.size


def find_identity(m):
    T = m.table
    ar = np.arange(m.size)
    for e in range(m.size):
        if np.all(T[e] == ar) and np.all(T[:, e] == ar):
            return e
    return None


def monoid(table):
    m = table if isinstance(table, FiniteMagma) else FiniteMagma(table)
    return SemigroupData(m, find_identity(m))


@dataclass
class WallAction:
    """side 'right': table[e][x] = e*x (E0, acted on from the right by X).
    side 'left': table[x][e] = x*e (Ew, acted on from the left).
    side 'bi': right[e][x] and left[x][e] together."""
    side: str
    size: int
    right: list = None
    left: list = None


def right_wall(table):
    t = [list(map(int, r)) for r in table]
    return WallAction("right", len(t), right=t)


def left_wall(table, size):
    t = [list(map(int, r)) for r in table]
    return WallAction("left", size, left=t)


def biset(right, left):
    r = [list(map(int, row)) for row in right]
    return WallAction("bi", len(r), right=r, left=[list(map(int, row)) for row in left])


def regular_biset(s):
    """X acting on itself by multiplication from both sides."""
    T = s.magma.table.tolist()
    return biset(T, T)


def wall_witness(w, s):
    T = s.magma.table.tolist()
    k = s.size
    for e in range(w.size):
        for a in range(k):
            for b in range(k):
                if w.right is not None and w.right[w.right[e][a]][b] != w.right[e][T[a][b]]:
                    return ("right", e, a, b)
                if w.left is not None and w.left[T[a][b]][e] != w.left[a][w.left[b][e]]:
                    return ("left", a, b, e)
                if w.side == "bi" and w.right[w.left[a][e]][b] != w.left[a][w.right[e][b]]:
                    return ("bi", a, e, b)
    return None


def _check_wall(w, s, need):
    if w is None:
        return
    if need == "right" and w.right is None:
        raise ValidationError("left-end wall needs a right action")
    if need == "left" and w.left is None:
        raise ValidationError("right-end wall needs a left action")
    if need == "bi" and (w.right is None or w.left is None):
        raise ValidationError("Hochschild coefficients need a biset")
    wit = wall_witness(w, s)
    if wit is not None:
        raise ValidationError(f"wall axiom fails at {wit}", wit)


def bar_faces(s, e0=None, ew=None, lo=0, hi=4, drop=None, check=True):
    """Two-wall face system; ``drop`` in {None,'left','right'} zeroes d_0 or d_n."""
    if check:
        _check_wall(e0, s, "right")
        _check_wall(ew, s, "left")
    T = s.magma.table.tolist()
    k = s.size
    R = e0.right if e0 is not None else None
    L = ew.left if ew is not None else None
    a = 1 if R is not None else 0
    b = 1 if L is not None else 0
    E0 = range(e0.size) if R is not None else [None]
    EW = range(ew.size) if L is not None else [None]

    def basis(n):
        for x0 in E0:
            for xs in tuples(k, n):
                for xw in EW:
                    yield (() if x0 is None else (x0,)) + xs + (() if xw is None else (xw,))

    def face(n, i, g):
        head, xs, tail = g[:a], g[a:len(g) - b], g[len(g) - b:]
        if i == 0:
            if drop == "left":
                return {}
            if R is not None:
                return (R[head[0]][xs[0]],) + xs[1:] + tail
            return head + xs[1:] + tail
        if i == n:
            if drop == "right":
                return {}
            if L is not None:
                return head + xs[:-1] + (L[xs[-1]][tail[0]],)
            return head + xs[:-1] + tail
        return head + xs[:i - 1] + (T[xs[i - 1]][xs[i]],) + xs[i + 1:] + tail

    degen = None
    if s.identity is not None:
        one = s.identity

        def degen(n, i, g):
            return g[:a + i] + (one,) + g[a + i:]

    return FaceSystem(lo, hi, basis=basis, face=face, degen=degen, name="bar")


def bar_complex(s, e0=None, ew=None, max_degree=3):
    return assemble(bar_faces(s, e0, ew, 0, max_degree + 1), verify=True, name="bar")


def magma_bar_witness(m, hi=3):
    """Faces of the bar complex built from an arbitrary magma; returns the first
    presimplicial failure (n, i, j, generator) or None.  Fails iff * is not associative."""
    s = SemigroupData.__new__(SemigroupData)
    s.magma, s.identity = m, None
    return presimplicial_witness(bar_faces(s, lo=0, hi=hi, check=False))


def hochschild_faces(s, e, lo=0, hi=4, check=True):
    if check:
        _check_wall(e, s, "bi")
    T = s.magma.table.tolist()
    k = s.size
    R, L = e.right, e.left

    def basis(n):
        for x in range(e.size):
            for xs in tuples(k, n):
                yield (x,) + xs

    def face(n, i, g):
        x, xs = g[0], g[1:]
        if i == 0:
            return (R[x][xs[0]],) + xs[1:]
        if i == n:
            return (L[xs[-1]][x],) + xs[:-1]
        return (x,) + xs[:i - 1] + (T[xs[i - 1]][xs[i]],) + xs[i + 1:]

    return FaceSystem(lo, hi, basis=basis, face=face, name="hochschild")


def hochschild_complex(s, e, max_degree=3):
    return assemble(hochschild_faces(s, e, 0, max_degree + 1), verify=True, name="hochschild")


def product_biset(e0, ew):
    """E = Ew x E0 with x acting on Ew from the left and on E0 from the right.

    Pair (w, z) is stored as index w * |E0| + z.
    """
    n0 = e0.size
    nw = ew.size
    k = len(e0.right[0])
    right = [[0] * k for _ in range(nw * n0)]
    left = [[0] * (nw * n0) for _ in range(k)]
    for w in range(nw):
        for z in range(n0):
            for x in range(k):
                right[w * n0 + z][x] = w * n0 + e0.right[z][x]
                left[x][w * n0 + z] = ew.left[x][w] * n0 + z
    return biset(right, left)


def two_wall_to_hochschild(g, n0):
    """(e0, x1..xn, ew) -> ((ew, e0), x1..xn)."""
    return (g[-1] * n0 + g[0],) + g[1:-1]


def truncated_complex(s, side="left", max_degree=3):
    f = bar_faces(s, lo=0, hi=max_degree + 1, drop=side)
    return assemble(f, verify=True, name=f"truncated-{side}")


def truncated_acyclicity(s, side="left", max_degree=3):
    """Homology of the complex with d_0 (left) or d_n (right) removed.

    For monoids every computed group should vanish; for semigroups without
    identity the groups are only reported.
    """
    c = truncated_complex(s, side, max_degree)
    hom = {n: c.homology(n) for n in range(0, max_degree + 1)}
    acyclic = all(h.is_zero() for h in hom.values())
    return {"homology": hom, "acyclic": acyclic, "monoid": s.identity is not None,
            "asserted": s.identity is not None}


def degenerate_subcomplex(s, max_degree=3):
    """Span of tuples containing the identity, inside the plain bar complex."""
    if s.identity is None:
        raise ValidationError("degeneracies need an identity element")
    c = bar_complex(s, max_degree=max_degree)
    one = s.identity
    return c.subcomplex(lambda n, g: one in g)
