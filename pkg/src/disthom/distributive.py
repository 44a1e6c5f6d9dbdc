"""Distributive homology: one-term, multi-term, rack/quandle, shelf-set.

Internal grading follows the one-term convention: degree n has basis
X^{n+1} (tuples (x0..xn)), face d_i acts by x_i on the entries to its left
and deletes x_i, so d_0 deletes x0.  Rack complexes use basis X^n in degree
n, i.e. the one-term grading shifted up by one.
"""
from dataclasses import dataclass, field

from .chain import (FaceSystem, assemble, add_into, lin, comb, sub, tuples,
                    degenerate_positions, verify_simplicial_axioms, filtration_witness)
from .magma import (FiniteMagma, MagmaSet, ValidationError, shelf_witness, check_axioms,
                    weak_distributivity_witness, trivial)


def _require_shelf(m):
    w = shelf_witness(m)
    if w is not None:
        a, b, c = w
        raise ValidationError(f"not a shelf: ({a}*{b})*{c} != ({a}*{c})*({b}*{c})", w)


def _act(T, g, i):
    """Face d_i of the one-term complex on the tuple g."""
    xi = g[i]
    return tuple(T[x][xi] for x in g[:i]) + g[i + 1:]


def _double(g, i):
    return g[:i + 1] + g[i:]


def one_term_faces(m, lo=0, hi=4, check=True):
    """FaceSystem of the one-term complex; lo=-1 gives the augmented version."""
    if check:
        _require_shelf(m)
    T = m.table.tolist()
    k = m.size
    return FaceSystem(
        lo, hi,
        basis=lambda n: tuples(k, n + 1),
        face=lambda n, i, g: _act(T, g, i),
        degen=lambda n, i, g: _double(g, i),
        name=f"one-term({m.name or k})",
    )


def one_term_complex(shelf, max_degree=3, augmented=False):
    f = one_term_faces(shelf, -1 if augmented else 0, max_degree + 1)
    return assemble(f, verify=False, name="one-term")


@dataclass
class DistributiveTheory:
    ops: MagmaSet
    coefficients: list
    xset: object = None

    def __post_init__(self):
        if not isinstance(self.ops, MagmaSet):
            self.ops = MagmaSet(self.ops)
        if len(self.coefficients) != len(self.ops):
            raise ValidationError("one coefficient per operation")


def weak_distributivity_failure(ops):
    ops = list(ops)
    for i, p in enumerate(ops):
        for j, q in enumerate(ops):
            if j < i:
                continue
            w = weak_distributivity_witness(p, q)
            if w is not None:
                return (i, j, w)
    return None


def multi_term_faces(theory, lo=0, hi=4, check=True):
    if check:
        w = weak_distributivity_failure(theory.ops)
        if w is not None:
            i, j, t = w
            raise ValidationError(f"operations {i},{j} not weakly distributive at (a,b,c)={t}", w)
    tabs = [op.table.tolist() for op in theory.ops]
    coef = list(theory.coefficients)
    k = theory.ops.carrier_size

    def face(n, i, g):
        out = {}
        for T, a in zip(tabs, coef):
            if a:
                add_into(out, {_act(T, g, i): 1}, a)
        return out

    return FaceSystem(lo, hi, basis=lambda n: tuples(k, n + 1), face=face,
                      degen=lambda n, i, g: _double(g, i), name="multi-term")


def multi_term_complex(theory, max_degree=3):
    return assemble(multi_term_faces(theory, 0, max_degree + 1), verify=True, name="multi-term")


# ---- rack / degenerate / quandle --------------------------------------

def rack_faces(m, lo=1, hi=4, check=True):
    """Rack complex on X^n written directly: d_k = (act by x_k) - (delete x_k)."""
    if check:
        _require_shelf(m)
    T = m.table.tolist()
    k = m.size

    def face(n, i, g):
        acted = tuple(T[x][g[i]] for x in g[:i]) + g[i + 1:]
        deleted = g[:i] + g[i + 1:]
        if acted == deleted:
            return {}
        return {acted: 1, deleted: -1}

    return FaceSystem(lo, hi, basis=lambda n: tuples(k, n), face=face,
                      nfaces=lambda n: n, degen=lambda n, i, g: _double(g, i),
                      ndegen=lambda n: n, name="rack")


def is_degenerate(g):
    return any(g[q] == g[q + 1] for q in range(len(g) - 1))


def rack_quandle_complexes(q, max_degree=3):
    """{'rack', 'degenerate', 'quandle'} in rack grading, degrees 1..max_degree+1.

    The split needs a spindle; for other shelves only 'rack' is returned.
    """
    rack = assemble(rack_faces(q, 1, max_degree + 1), verify=False, name="rack")
    out = {"rack": rack}
    if not check_axioms(q).spindle:
        return out
    deg = rack.subcomplex(lambda n, g: is_degenerate(g))
    quo = rack.subcomplex(lambda n, g: not is_degenerate(g))
    # degenerate span must be closed under the boundary
    for n in range(rack.lo + 1, rack.hi + 1):
        nd = [i for i, g in enumerate(rack.basis[n - 1]) if not is_degenerate(g)]
        dg = [i for i, g in enumerate(rack.basis[n]) if is_degenerate(g)]
        if rack.boundary[n][nd][:, dg].nnz:
            raise ValidationError(f"degenerate part not a subcomplex in degree {n}")
    out["degenerate"] = deg
    out["quandle"] = quo
    return out


def split_map(g):
    """x1 (x) (x2 - x1) (x) ... (x) (xn - x_{n-1}) as a combination of tuples."""
    terms = {(g[0],): 1}
    for k in range(1, len(g)):
        nxt = {}
        for t, v in terms.items():
            add_into(nxt, {t + (g[k],): 1}, v)
            add_into(nxt, {t + (g[k - 1],): 1}, -v)
        terms = nxt
    return terms


def split_map_report(q, max_degree=3):
    """Split map checks on the normalized (quandle) complex.

    Returns witnesses for (a) quotient o split != id and (b) split failing
    to commute with the boundaries.
    """
    f = rack_faces(q, 1, max_degree + 1)
    bad_id, bad_chain = [], []
    for n in range(1, max_degree + 1):
        for g in f.basis(n):
            if is_degenerate(g):
                continue
            img = split_map(g)
            normal = {h: v for h, v in img.items() if not is_degenerate(h)}
            if normal != {g: 1}:
                bad_id.append((n, g))
            if n >= 2:
                lhs = lin(lambda h: f.boundary_of(n, h), img)
                dq = {h: v for h, v in f.boundary_of(n, g).items() if not is_degenerate(h)}
                rhs = lin(split_map, dq)
                if lhs != rhs:
                    bad_chain.append((n, g))
    return {"identity": bad_id, "chain_map": bad_chain}


# ---- shelf-sets ----------------------------------------------------------

def shelf_set_witness(shelf, xset):
    """(y, x1, x2) with (y*x1)*x2 != (y*x2)*(x1*x2), or None."""
    T = shelf.table
    Y = xset
    for y in range(len(Y)):
        for x1 in range(shelf.size):
            for x2 in range(shelf.size):
                if Y[Y[y][x1]][x2] != Y[Y[y][x2]][T[x1][x2]]:
                    return (y, x1, x2)
    return None


def _xset_table(xset, k):
    Y = xset.table.tolist() if isinstance(xset, FiniteMagma) else [list(map(int, r)) for r in xset]
    for y, row in enumerate(Y):
        if len(row) != k or any(not 0 <= v < len(Y) for v in row):
            raise ValidationError(f"action row {y} malformed", y)
    return Y


def shelf_set_faces(shelf, xset, lo=0, hi=4):
    _require_shelf(shelf)
    k = shelf.size
    Y = _xset_table(xset, k)
    w = shelf_set_witness(shelf, Y)
    if w is not None:
        raise ValidationError(f"shelf-set axiom fails at (y,x1,x2)={w}", w)
    T = shelf.table.tolist()
    ny = len(Y)

    def basis(n):
        return ((y,) + t for y in range(ny) for t in tuples(k, n + 1))

    def face(n, i, g):
        y, xs = g[0], g[1:]
        return (Y[y][xs[i]],) + _act(T, xs, i)

    return FaceSystem(lo, hi, basis=basis, face=face,
                      degen=lambda n, i, g: g[:i + 2] + g[i + 1:], name="shelf-set")


def shelf_set_complex(shelf, xset, max_degree=3):
    return assemble(shelf_set_faces(shelf, xset, 0, max_degree + 1), verify=False, name="shelf-set")


# ---- structural maps -------------------------------------------------------

def t_map(f, n, i, g):
    """t_i = d_i s_i - d_{i+1} s_i on a degree-n generator."""
    s = f.s(n, i, g)
    return sub(lin(lambda h: f.d(n + 1, i, h), s), lin(lambda h: f.d(n + 1, i + 1, h), s))


def integration_map(T, g, i, p):
    """u^_i on a tuple in hat coordinates (entries read from the right).

    Entry i travels to position p+1; the entries it passes are acted on by
    it.  With z = reversed(g): z -> (z_0..z_{i-1}, z_{i+1}*z_i, ..., z_{p+1}*z_i, z_i, z_{p+2}, ...).
    """
    z = g[::-1]
    zi = z[i]
    w = z[:i] + tuple(T[x][zi] for x in z[i + 1:p + 2]) + (zi,) + z[p + 2:]
    return w[::-1]


def structural_maps_report(q, max_degree=3):
    """Generator-exhaustive checks of the one-term structural identities.

    Keys map to lists of failure witnesses (empty list = identity holds).
    """
    f = one_term_faces(q, 0, max_degree + 1)
    T = q.table.tolist()
    rep = {}
    s0 = lambda h: _double(h, 0)
    d0 = lambda h: h[1:]
    p = lambda h: h[1:]

    bad = []
    for n in range(1, max_degree + 1):
        for g in f.basis(n):
            lhs = add_into(f.boundary_of(n + 1, s0(g)), lin(s0, f.boundary_of(n, g)))
            rhs = {s0(d0(g)): 1}
            if lhs != rhs:
                bad.append((n, g))
    rep["s0_identity"] = bad

    bad = []
    for n in range(2, max_degree + 1):
        for g in f.basis(n):
            lhs = add_into(lin(p, f.boundary_of(n, g)), f.boundary_of(n - 1, p(g)))
            rhs = {p(d0(g)): 1}
            if lhs != rhs:
                bad.append((n, g))
    rep["p_identity"] = bad

    nonzero_t, d_t_same, d_t_table, t_commute = [], [], [], []
    for n in range(0, max_degree + 1):
        for g in f.basis(n):
            t = {i: t_map(f, n, i, g) for i in range(n + 1)}
            for i in range(n + 1):
                if t[i]:
                    nonzero_t.append((n, i, g))
            for i in range(n + 1):
                for j in range(n + 1):
                    if i < j:
                        tij = lin(lambda h: t_map(f, n, i, h), t[j])
                        tji = lin(lambda h: t_map(f, n, j, h), t[i])
                        if tij != tji:
                            t_commute.append((n, i, j, g))
            if n == 0:
                continue
            for i in range(n + 1):
                for j in range(n + 1):
                    lhs = lin(lambda h: f.d(n, i, h), t[j])
                    if i == j:
                        if lhs:
                            d_t_same.append((n, i, g))
                        continue
                    if i < j:
                        rhs = lin(lambda h: t_map(f, n - 1, j - 1, h), f.d(n, i, g))
                    else:
                        rhs = lin(lambda h: t_map(f, n - 1, j, h), f.d(n, i, g))
                    if lhs != rhs:
                        d_t_table.append((n, i, j, g))
    rep["t_nonzero"] = nonzero_t
    rep["t_di_ti_zero"] = d_t_same
    rep["t_di_tj_table"] = d_t_table
    rep["t_commute"] = t_commute

    orig = verify_simplicial_axioms(f, "full", 0, max_degree)
    dual = verify_simplicial_axioms(f.dual(), "full", 0, max_degree)
    rep["duality"] = [] if orig.holds == dual.holds else [(orig.holds, dual.holds)]
    rep["axioms"] = orig.holds

    filt = []
    if check_axioms(q).spindle:
        for side in ("left", "right"):
            w = filtration_witness(f, side, 1, max_degree)
            if w is not None:
                filt.append((side,) + w)
    rep["filtrations"] = filt

    # integration identities (hat coordinates, y in image of s^_p)
    integ = []
    if check_axioms(q).spindle:
        fd = f.dual()
        for n in range(2, max_degree + 1):
            L = n + 1
            for g in f.basis(n):
                z = g[::-1]
                for pp in range(0, n):
                    if z[pp] != z[pp + 1]:
                        continue
                    u = lambda h, i, lev=pp: integration_map(T, h, i, lev)
                    for i in range(pp):
                        if fd.d(n, i, g) != fd.d(n, pp + 1, u(g, i)):
                            integ.append(("1", n, pp, i, g))
                    for i2 in range(pp):
                        for i1 in range(i2):
                            # u^_{i1} lands in F^{p-1}; the next map is taken at that level
                            y = u(u(g, i1), i2 - 1, pp - 1)
                            if fd.d(n, pp + 1, y) != fd.d(n, i1, u(g, i2)):
                                integ.append(("2", n, pp, i1, i2, g))
                            if fd.d(n, pp, y) != fd.d(n, i2 - 1, u(g, i1)):
                                integ.append(("2'", n, pp, i1, i2, g))
    rep["integration"] = integ
    return rep


STRUCTURAL_KEYS = ("s0_identity", "p_identity", "t_di_ti_zero", "t_di_tj_table", "t_commute",
                   "duality", "filtrations")
