"""Hand-assembled Khovanov cube for small diagrams, dense and independent of the package.

Algebra Z[x]/(x^2) with basis 1 (exponent 0) and x (exponent 1).
"""
from itertools import product

from conftest import sympy_invariants


def circles(quads, state):
    adj = {}
    for v, (a, b, c, d) in enumerate(quads):
        pairs = ((a, b), (c, d)) if v in state else ((a, d), (b, c))
        for p, q in pairs:
            adj.setdefault(p, set()).add(q)
            adj.setdefault(q, set()).add(p)
    seen, out = set(), []
    for start in sorted(adj):
        if start in seen:
            continue
        comp, stack = [], [start]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            comp.append(u)
            stack.extend(adj[u])
        out.append(frozenset(comp))
    return out


def mult(i, j):
    return [] if i + j > 1 else [(i + j, 1)]


def comult(k):
    return [((0, 1), 1), ((1, 0), 1)] if k == 0 else [((1, 1), 1)]


def edge(src, dst):
    """Dense matrix between labelings of src circles and dst circles."""
    sb = list(product((0, 1), repeat=len(src)))
    db = list(product((0, 1), repeat=len(dst)))
    didx = {b: i for i, b in enumerate(db)}
    M = [[0] * len(sb) for _ in db]
    common = [c for c in src if c in dst]
    gone = [c for c in src if c not in dst]
    new = [c for c in dst if c not in src]
    for col, lab in enumerate(sb):
        val = dict(zip(src, lab))
        if len(gone) == 2:  # merge
            for e, w in mult(val[gone[0]], val[gone[1]]):
                out = {c: val[c] for c in common}
                out[new[0]] = e
                M[didx[tuple(out[c] for c in dst)]][col] += w
        else:  # split
            for (e1, e2), w in comult(val[gone[0]]):
                out = {c: val[c] for c in common}
                out[new[0]], out[new[1]] = e1, e2
                M[didx[tuple(out[c] for c in dst)]][col] += w
    return M


def cube_cohomology(quads):
    """{k: (free rank, torsion)} for cube degrees k = 0..#crossings."""
    c = len(quads)
    states = {k: [s for s in product((0, 1), repeat=c) if sum(s) == k] for k in range(c + 1)}
    circ = {s: circles(quads, {v for v in range(c) if s[v]}) for k in states for s in states[k]}
    dims = {k: sum(2 ** len(circ[s]) for s in states[k]) for k in states}
    d = {}
    for k in range(c):
        rows_off, off = {}, 0
        for t in states[k + 1]:
            rows_off[t] = off
            off += 2 ** len(circ[t])
        M = [[0] * dims[k] for _ in range(dims[k + 1])]
        col = 0
        for s in states[k]:
            w = 2 ** len(circ[s])
            for v in range(c):
                if s[v]:
                    continue
                t = tuple(1 if (u == v or s[u]) else 0 for u in range(c))
                sign = (-1) ** sum(s[:v])
                E = edge(circ[s], circ[t])
                for r, row in enumerate(E):
                    for cc, x in enumerate(row):
                        if x:
                            M[rows_off[t] + r][col + cc] += sign * x
            col += w
        d[k] = M
    out = {}
    for k in range(c + 1):
        inv_out = sympy_invariants(d[k]) if k in d else []
        inv_in = sympy_invariants(d[k - 1]) if k - 1 in d else []
        out[k] = (dims[k] - len(inv_out) - len(inv_in), tuple(sorted(x for x in inv_in if x > 1)))
    return out
