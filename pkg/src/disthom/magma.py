"""Finite magmas as operation tables.

A magma on {0..n-1} is stored as an n x n integer table with
``table[a, b] = a * b``.  Everything here is exhaustive: identities are
checked on every tuple of the carrier (vectorised with numpy).
"""
from dataclasses import dataclass
from itertools import product
from math import gcd

import numpy as np


class ValidationError(ValueError):
    """Input refused; ``witness`` carries the offending data when there is one."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class ParseError(ValueError):
    """Malformed input text."""

    def __init__(self, msg, line=None, col=None):
        where = f" (line {line}" + (f", column {col}" if col is not None else "") + ")" \
            if line is not None else ""
        super().__init__(msg + where)
        self.line, self.col = line, col


class FiniteMagma:
    __slots__ = ("table", "size", "name")

    def __init__(self, table, name=None):
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
            raise ValidationError(f"table must be a nonempty square array, got shape {t.shape}")
        n = t.shape[0]
        bad = np.argwhere((t < 0) | (t >= n))
        if len(bad):
            a, b = map(int, bad[0])
            raise ValidationError(f"entry {a}*{b}={int(t[a, b])} outside carrier 0..{n - 1}", (a, b))
        t.setflags(write=False)
        self.table = t
        self.size = n
        self.name = name

    def __call__(self, a, b):
        return int(self.table[a, b])

    def __eq__(self, other):
        return isinstance(other, FiniteMagma) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FiniteMagma{label} n={self.size}>"

    def rows(self):
        return [[int(v) for v in row] for row in self.table]


@dataclass(frozen=True)
class AxiomReport:
    shelf: bool
    left_distributive: bool
    spindle: bool
    rack: bool
    quandle: bool
    kei: bool
    entropic: bool
    idempotent: bool = False
    witnesses: tuple = ()

    def flags(self):
        names = ["shelf", "left_distributive", "spindle", "rack", "quandle", "kei", "entropic"]
        return {k: getattr(self, k) for k in names}

    def true_flags(self):
        return [k for k, v in self.flags().items() if v]


def _first(mask):
    """First index where boolean ``mask`` is False, or None."""
    bad = np.argwhere(~mask)
    return None if len(bad) == 0 else tuple(int(v) for v in bad[0])


def _grid(n, k):
    return np.indices((n,) * k)


def shelf_witness(m):
    """(a, b, c) with (a*b)*c != (a*c)*(b*c), or None."""
    T = m.table
    A, B, C = _grid(m.size, 3)
    return _first(T[T[A, B], C] == T[T[A, C], T[B, C]])


def left_distributive_witness(m):
    T = m.table
    A, B, C = _grid(m.size, 3)
    return _first(T[A, T[B, C]] == T[T[A, B], T[A, C]])


def entropic_witness(m):
    T = m.table
    n = m.size
    B, C, D = _grid(n, 3)
    # loop over the outer variable to keep memory at n^3
    for a in range(n):
        w = _first(T[T[a, B], T[C, D]] == T[T[a, C], T[B, D]])
        if w is not None:
            return (a,) + w
    return None


def is_associative(m):
    T = m.table
    A, B, C = _grid(m.size, 3)
    return _first(T[T[A, B], C] == T[A, T[B, C]])


def check_axioms(m):
    T = m.table
    n = m.size
    ar = np.arange(n)
    wit = {}
    w = shelf_witness(m)
    shelf = w is None
    if w is not None:
        wit["shelf"] = w
    w = left_distributive_witness(m)
    if w is not None:
        wit["left_distributive"] = w
    idem = bool(np.all(T[ar, ar] == ar))
    cols_bij = bool(np.all(np.sort(T, axis=0) == ar[:, None]))
    A, B = _grid(n, 2)
    invol = bool(np.all(T[T[A, B], B] == A))
    w = entropic_witness(m)
    if w is not None:
        wit["entropic"] = w
    rack = shelf and cols_bij
    quandle = rack and idem
    return AxiomReport(
        shelf=shelf,
        left_distributive="left_distributive" not in wit,
        spindle=shelf and idem,
        rack=rack,
        quandle=quandle,
        kei=quandle and invol,
        entropic="entropic" not in wit,
        idempotent=idem,
        witnesses=tuple(sorted(wit.items())),
    )


# ---- Bin(X) -----------------------------------------------------------

def trivial(n):
    """Right-trivial operation a*b = a, the identity of Bin(X)."""
    return FiniteMagma(np.repeat(np.arange(n)[:, None], n, axis=1), name=f"trivial({n})")


def compose(op1, op2):
    """a (op1 op2) b = (a op1 b) op2 b."""
    if op1.size != op2.size:
        raise ValidationError(f"size mismatch {op1.size} vs {op2.size}")
    n = op1.size
    B = np.arange(n)[None, :]
    return FiniteMagma(op2.table[op1.table, B])


def invert(m):
    n = m.size
    inv = np.empty_like(m.table)
    for b in range(n):
        col = m.table[:, b]
        if len(set(col.tolist())) != n:
            raise ValidationError(f"not a rack: column map a -> a*{b} is not a bijection", b)
        inv[col, b] = np.arange(n)
    return FiniteMagma(inv)


def closure(ops, max_len=4):
    """All operations expressible as composites of ``ops`` of length <= max_len."""
    seen = {}
    layer = []
    for op in ops:
        if op not in seen:
            seen[op] = op
            layer.append(op)
    for _ in range(max_len - 1):
        nxt = []
        for w in layer:
            for g in ops:
                c = compose(w, g)
                if c not in seen:
                    seen[c] = c
                    nxt.append(c)
        if not nxt:
            break
        layer = nxt
    return list(seen)


# ---- sets of operations -----------------------------------------------

class MagmaSet:
    def __init__(self, ops):
        ops = list(ops)
        if not ops:
            raise ValidationError("empty operation set")
        n = ops[0].size
        for op in ops:
            if op.size != n:
                raise ValidationError("operations must share one carrier")
        self.ops = ops
        self.carrier_size = n

    def __iter__(self):
        return iter(self.ops)

    def __len__(self):
        return len(self.ops)


def distributive_witness(op1, op2):
    """Witness (a,b,c) against (a op1 b) op2 c = (a op2 c) op1 (b op2 c)."""
    S, T = op1.table, op2.table
    A, B, C = _grid(op1.size, 3)
    return _first(T[S[A, B], C] == S[T[A, C], T[B, C]])


def entropic_pair_witness(op1, op2):
    """Witness against (a op1 b) op2 (c op1 d) = (a op2 c) op1 (b op2 d)."""
    S, T = op1.table, op2.table
    n = op1.size
    B, C, D = _grid(n, 3)
    for a in range(n):
        w = _first(T[S[a, B], S[C, D]] == S[T[a, C], T[B, D]])
        if w is not None:
            return (a,) + w
    return None


def is_distributive_set(s):
    ops = s.ops if isinstance(s, MagmaSet) else list(s)
    return all(distributive_witness(p, q) is None for p in ops for q in ops)


def is_entropic_set(s):
    ops = s.ops if isinstance(s, MagmaSet) else list(s)
    return all(entropic_pair_witness(p, q) is None for p in ops for q in ops)


def weak_distributivity_witness(op1, op2):
    """Multiset form of {(a1b)2c, (a2b)1c} = {(a2c)1(b2c), (a1c)2(b1c)}."""
    S, T = op1.table, op2.table
    A, B, C = _grid(op1.size, 3)
    l1, l2 = T[S[A, B], C], S[T[A, B], C]
    r1, r2 = S[T[A, C], T[B, C]], T[S[A, C], S[B, C]]
    ok = (np.minimum(l1, l2) == np.minimum(r1, r2)) & (np.maximum(l1, l2) == np.maximum(r1, r2))
    return _first(ok)


def is_weakly_distributive_pair(op1, op2):
    return weak_distributivity_witness(op1, op2) is None


# ---- constructions ----------------------------------------------------

def validate_group(g):
    """Check a multiplication table is a group; return (identity, inverse array)."""
    m = g if isinstance(g, FiniteMagma) else FiniteMagma(g)
    w = is_associative(m)
    if w is not None:
        raise ValidationError(f"group table not associative at {w}", w)
    T = m.table
    n = m.size
    ar = np.arange(n)
    ids = [e for e in range(n) if np.all(T[e] == ar) and np.all(T[:, e] == ar)]
    if not ids:
        raise ValidationError("group table has no identity")
    e = ids[0]
    inv = np.full(n, -1)
    for a in range(n):
        hits = np.nonzero(T[a] == e)[0]
        if len(hits) == 0 or T[hits[0], a] != e:
            raise ValidationError(f"element {a} has no inverse", a)
        inv[a] = hits[0]
    return m, e, inv


def _check_endo(T, t):
    t = np.asarray(t, dtype=np.int64)
    n = T.shape[0]
    if t.shape != (n,) or np.any((t < 0) | (t >= n)):
        raise ValidationError("endomorphism must map the carrier into itself")
    A, B = _grid(n, 2)
    w = _first(t[T[A, B]] == T[t[A], t[B]])
    if w is not None:
        raise ValidationError(f"t is not an endomorphism: t({w[0]}{w[1]}) != t({w[0]})t({w[1]})", w)
    return t


def takasaki(n):
    a = np.arange(n)
    return FiniteMagma((2 * a[None, :] - a[:, None]) % n, name=f"takasaki({n})")


def alexander(n, t):
    a = np.arange(n)
    return FiniteMagma((t * a[:, None] + (1 - t) * a[None, :]) % n, name=f"alexander({n},{t})")


def conjugation(group):
    m, e, inv = validate_group(group)
    T = m.table
    A, B = _grid(m.size, 2)
    return FiniteMagma(T[T[inv[B], A], B], name="conjugation")


def core(group):
    m, e, inv = validate_group(group)
    T = m.table
    A, B = _grid(m.size, 2)
    return FiniteMagma(T[T[B, inv[A]], B], name="core")


def joyce1(group, t):
    """a * b = t(a b^-1) b."""
    m, e, inv = validate_group(group)
    T = m.table
    t = _check_endo(T, t)
    A, B = _grid(m.size, 2)
    return FiniteMagma(T[t[T[A, inv[B]]], B], name="joyce1")


def joyce2(group, t):
    """a * b = t(b^-1 a) b."""
    m, e, inv = validate_group(group)
    T = m.table
    t = _check_endo(T, t)
    A, B = _grid(m.size, 2)
    return FiniteMagma(T[t[T[inv[B], A]], B], name="joyce2")


def half_conjugacy(group, g):
    """a *_g b = a b^-1 g b."""
    m, e, inv = validate_group(group)
    T = m.table
    A, B = _grid(m.size, 2)
    return FiniteMagma(T[T[T[A, inv[B]], g], B], name=f"half_conjugacy({g})")


def _gf4_mul_w(a):
    # elements b0 + b1*w of GF(4) stored as b0 + 2*b1, with w^2 = w + 1
    b0, b1 = a & 1, a >> 1
    return b1 | ((b0 ^ b1) << 1)


def tetrahedral():
    """Alexander quandle on GF(4) with t = w:  a*b = w a + w^2 b."""
    T = [[_gf4_mul_w(a) ^ _gf4_mul_w(_gf4_mul_w(b)) for b in range(4)] for a in range(4)]
    return FiniteMagma(T, name="tetrahedral")


def construct(family, *params):
    fam = {
        "takasaki": takasaki,
        "alexander": alexander,
        "conjugation": conjugation,
        "core": core,
        "joyce1": joyce1,
        "joyce2": joyce2,
        "half_conjugacy": half_conjugacy,
        "trivial": trivial,
        "tetrahedral": tetrahedral,
    }
    if family not in fam:
        raise ValidationError(f"unknown family {family!r}")
    return fam[family](*params)


def cyclic_group(n):
    a = np.arange(n)
    return (a[:, None] + a[None, :]) % n


def permutation_group(perms):
    """Multiplication table of a list of permutations, (p q)(x) = p(q(x))."""
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    T = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            T[i, j] = index[tuple(p[x] for x in q)]
    return T


def symmetric_group(k):
    from itertools import permutations
    return permutation_group(sorted(permutations(range(k))))


SCHROEDER = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]


def schroeder():
    return FiniteMagma(SCHROEDER, name="schroeder")


def units_mod(n):
    return [t for t in range(1, n) if gcd(t, n) == 1] if n > 1 else [0]


def random_magma(n, rng):
    return FiniteMagma(rng.integers(0, n, size=(n, n)))


def all_magmas(n):
    """Every table on n elements (n <= 2 or 3 only, there are n^(n^2))."""
    for vals in product(range(n), repeat=n * n):
        yield FiniteMagma(np.array(vals).reshape(n, n))
