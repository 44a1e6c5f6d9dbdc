"""PD codes, magma colorings of link diagrams, cocycle and Boltzmann state sums.

PD convention: X[a,b,c,d] lists the four semi-arcs counterclockwise starting
at the incoming under-strand, so a -> c is the under-strand.  The crossing is
positive when the over-strand runs d -> b and negative when it runs b -> d.

Coloring rule at a crossing with over-arc colour y: the under-arc on the
right of the over-strand (the incoming one at a positive crossing, the
outgoing one at a negative crossing) carries x, the other carries x*y.
"""
import re
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .magma import ParseError, ValidationError, invert


class PDParseError(ParseError):
    pass


class _UF:
    def __init__(self):
        self.p = {}

    def find(self, x):
        p = self.p
        p.setdefault(x, x)
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.p[rb] = ra


@dataclass
class LinkDiagram:
    crossings: list
    unknots: int = 0
    signs: list = field(default_factory=list)
    over_in: list = field(default_factory=list)
    over_out: list = field(default_factory=list)
    arc_of: dict = field(default_factory=dict)
    arcs: list = field(default_factory=list)
    components: list = field(default_factory=list)

    @property
    def semiarcs(self):
        return sorted(self.arc_of)

    @property
    def n_arcs(self):
        return len(self.arcs) + self.unknots

    @property
    def n_components(self):
        return len(self.components) + self.unknots

    @property
    def writhe(self):
        return sum(self.signs)

    def relations(self):
        """Per crossing: (source arc, over arc, target arc) with target = source * over."""
        out = []
        for k, (a, b, c, d) in enumerate(self.crossings):
            over = self.arc_of[b]
            if self.signs[k] > 0:
                out.append((self.arc_of[a], over, self.arc_of[c]))
            else:
                out.append((self.arc_of[c], over, self.arc_of[a]))
        return out

    def to_pd(self):
        s = " ".join("X[%d,%d,%d,%d]" % x for x in self.crossings)
        s = (s + " " + " ".join(["unknot"] * self.unknots)).strip()
        return s

    def relabel_crossings(self, perm):
        return build_diagram([self.crossings[i] for i in perm], self.unknots)


_TOKEN = re.compile(r"\s*(?:(X\[\s*([^\]]*)\])|(unknot)|(\S+))")


def parse_pd(text):
    quads, unknots = [], 0
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            if not line[pos:].strip():
                break
            m = _TOKEN.match(line, pos)
            col = m.start() + len(m.group(0)) - len(m.group(0).lstrip()) + 1
            if m.group(1):
                parts = [p.strip() for p in m.group(2).split(",")]
                if len(parts) != 4 or not all(p.isdigit() and int(p) > 0 for p in parts):
                    raise PDParseError(f"malformed quadruple {m.group(1)!r}", ln, col)
                quads.append(tuple(int(p) for p in parts))
            elif m.group(3):
                unknots += 1
            else:
                raise PDParseError(f"unexpected token {m.group(4)!r}", ln, col)
            pos = m.end()
    if not quads and not unknots:
        raise PDParseError("empty diagram; use the 'unknot' token for a trivial component")
    return build_diagram(quads, unknots)


def _orient(quads):
    """Over-strand direction per crossing: True when it runs b -> d."""
    occ = {}
    for k, q in enumerate(quads):
        for p, lab in enumerate(q):
            occ.setdefault(lab, []).append((k, p))
    for lab, o in occ.items():
        if len(o) != 2:
            raise PDParseError(f"label {lab} appears {len(o)} times (must be 2)")
    state = {}  # (k, p) -> 'in' / 'out'

    def setv(key, v, queue):
        if key in state:
            if state[key] != v:
                raise PDParseError(f"inconsistent orientation at crossing {key[0] + 1}")
            return
        state[key] = v
        queue.append(key)

    def run(queue):
        while queue:
            k, p = queue.pop()
            v = state[(k, p)]
            lab = quads[k][p]
            other = [o for o in occ[lab] if o != (k, p)][0]
            setv(other, "out" if v == "in" else "in", queue)
            if p in (1, 3):
                setv((k, 4 - p), "out" if v == "in" else "in", queue)

    q = []
    for k in range(len(quads)):
        setv((k, 0), "in", q)
        setv((k, 2), "out", q)
    run(q)
    for k, (a, b, c, d) in enumerate(quads):
        if (k, 1) not in state:
            # component that never passes under: orient by label order
            b_to_d = (d - b == 1) or (b - d > 1)
            q = []
            setv((k, 1), "in" if b_to_d else "out", q)
            run(q)
    return [state[(k, 1)] == "in" for k in range(len(quads))]


def build_diagram(quads, unknots=0):
    quads = [tuple(int(v) for v in q) for q in quads]
    b_to_d = _orient(quads)
    signs, oin, oout = [], [], []
    arcs_uf, comp_uf = _UF(), _UF()
    for k, (a, b, c, d) in enumerate(quads):
        signs.append(-1 if b_to_d[k] else 1)
        oin.append(b if b_to_d[k] else d)
        oout.append(d if b_to_d[k] else b)
        for lab in (a, b, c, d):
            arcs_uf.find(lab)
            comp_uf.find(lab)
        arcs_uf.union(b, d)
        comp_uf.union(a, c)
        comp_uf.union(b, d)
    labels = sorted({l for q in quads for l in q})
    classes = {}
    for l in labels:
        classes.setdefault(arcs_uf.find(l), []).append(l)
    arcs = sorted(classes.values(), key=lambda v: v[0])
    arc_of = {l: i for i, arc in enumerate(arcs) for l in arc}
    comps = {}
    for l in labels:
        comps.setdefault(comp_uf.find(l), []).append(l)
    return LinkDiagram(quads, unknots, signs, oin, oout, arc_of, arcs,
                       sorted(comps.values(), key=lambda v: v[0]))


# ---- diagram generators ------------------------------------------------

def closure_pd(word, strands=None):
    """PD code of the closure of a braid word (generators +-i, 1-based).

    sigma_i (positive) lets the left strand cross over to the right.
    """
    strands = strands or (max(abs(g) for g in word) + 1)
    nxt = [1]

    def fresh():
        nxt[0] += 1
        return nxt[0] - 1

    bottom = [fresh() for _ in range(strands)]
    cur = list(bottom)
    quads = []
    for g in word:
        i = abs(g) - 1
        p_in, q_in = cur[i], cur[i + 1]
        p_out, q_out = fresh(), fresh()
        if g > 0:
            quads.append([q_in, p_out, q_out, p_in])
        else:
            quads.append([p_in, q_in, p_out, q_out])
        cur[i], cur[i + 1] = q_out, p_out
    ren = {}
    unknots = 0
    for j in range(strands):
        if cur[j] == bottom[j]:
            unknots += 1
        else:
            ren[cur[j]] = bottom[j]
    quads = [[ren.get(l, l) for l in q] for q in quads]
    used = sorted({l for q in quads for l in q})
    compact = {l: i + 1 for i, l in enumerate(used)}
    return [tuple(compact[l] for l in q) for q in quads], unknots


def add_kink(diagram, label, positive=True):
    """Reidemeister I: insert a curl on semi-arc ``label``."""
    quads = [list(q) for q in diagram.crossings]
    top = max(l for q in quads for l in q)
    loop, rest = top + 1, top + 2
    # the occurrence where ``label`` enters a crossing becomes ``rest``
    for k, q in enumerate(quads):
        a, b, c, d = q
        for p, lab in enumerate(q):
            if lab != label:
                continue
            entering = (p == 0) or (p == 1 and diagram.over_in[k] == b) or \
                       (p == 3 and diagram.over_in[k] == d)
            if entering:
                q[p] = rest
                break
        else:
            continue
        break
    if positive:
        quads.append([label, rest, loop, loop])
    else:
        quads.append([label, loop, loop, rest])
    return build_diagram([tuple(q) for q in quads], diagram.unknots)


# ---- colorings -------------------------------------------------------------

def colorings(d, q):
    """All arc colorings by the magma q, as tuples indexed by arc id."""
    n_arc = d.n_arcs
    k = q.size
    T = q.table.tolist()
    try:
        Tinv = invert(q).table.tolist()
    except ValidationError:
        Tinv = None
    rel = d.relations()
    touching = [[] for _ in range(n_arc)]
    for r in rel:
        for a in set(r):
            touching[a].append(r)
    col = [None] * n_arc

    def assign(a, v, trail):
        stack = [(a, v)]
        while stack:
            a, v = stack.pop()
            if col[a] is not None:
                if col[a] != v:
                    return False
                continue
            col[a] = v
            trail.append(a)
            for s, o, t in touching[a]:
                cs, co, ct = col[s], col[o], col[t]
                if cs is not None and co is not None:
                    w = T[cs][co]
                    if ct is None:
                        stack.append((t, w))
                    elif ct != w:
                        return False
                elif Tinv is not None and ct is not None and co is not None and cs is None:
                    stack.append((s, Tinv[ct][co]))
        return True

    def rec(a):
        while a < n_arc and col[a] is not None:
            a += 1
        if a == n_arc:
            yield tuple(col)
            return
        for v in range(k):
            trail = []
            if assign(a, v, trail):
                yield from rec(a + 1)
            for x in trail:
                col[x] = None

    yield from rec(0)


def color_count(d, q):
    return sum(1 for _ in colorings(d, q))


def is_coloring(d, q, col):
    T = q.table
    return all(T[col[s], col[o]] == col[t] for s, o, t in d.relations())


def color_count_bruteforce(d, q):
    return sum(1 for col in product(range(q.size), repeat=d.n_arcs) if is_coloring(d, q, col))


def act_on_coloring(col, q, x):
    T = q.table
    return tuple(int(T[c, x]) for c in col)


def entropic_compose(d, f, g, op1, op2):
    """(f op2 g)(arc) = f(arc) op2 g(arc) and whether it is an op1-coloring."""
    h = tuple(int(op2.table[a, b]) for a, b in zip(f, g))
    return h, is_coloring(d, op1, h)


# ---- state sums -------------------------------------------------------------

def format_group_ring(elem):
    """``n1*[a1] + n2*[a2]`` with fiber elements in lexicographic order."""
    items = sorted((k, v) for k, v in elem.items() if v)
    if not items:
        return "0"
    return " + ".join(f"{v}*[{','.join(str(x) for x in k)}]" for k, v in items)


def parse_group_ring(text):
    text = text.strip()
    if text == "0":
        return {}
    out = {}
    for term in text.split(" + "):
        n, el = term.split("*")
        out[tuple(int(x) for x in el.strip("[]").split(","))] = int(n)
    return out


def cocycle_state_sum(d, q, c):
    """Sum over colorings of the fiber element sum_p eps_p f(source_p, over_p)."""
    from .extensions import check_two_cocycle
    if c.base != q:
        raise ValidationError("cocycle base differs from the coloring quandle")
    if not c.is_identity_t():
        raise ValidationError("state sums need an untwisted (t = 1) cocycle")
    ok, w = check_two_cocycle(c, "twisted_rack")
    if not ok:
        raise ValidationError(f"not a rack 2-cocycle, witness {w}", w)
    for x in range(q.size):
        if any(c.f[x][x]):
            raise ValidationError(f"f({x},{x}) != 0; not a quandle cocycle", x)
    rel = d.relations()
    out = {}
    fib = c.fiber
    for col in colorings(d, q):
        acc = fib.zero()
        for (s, o, t), eps in zip(rel, d.signs):
            v = c.f[col[s]][col[o]]
            acc = fib.add(acc, v if eps > 0 else fib.neg(v))
        out[acc] = out.get(acc, 0) + 1
    return out


def delta_weights(q):
    """R^{ab}_{cd} = [ (c,d) = (b, a*b) ],  Rbar^{ab}_{cd} = [ (c,d) = (b \\bar* a, a) ]."""
    n = q.size
    T = q.table
    R = np.zeros((n,) * 4, dtype=np.int64)
    Rb = np.zeros((n,) * 4, dtype=np.int64)
    Ti = invert(q).table
    for a in range(n):
        for b in range(n):
            R[a, b, b, T[a, b]] = 1
            Rb[a, b, Ti[b, a], a] = 1
    return R, Rb


def weights_from_matrix(M, n):
    """Weight array W[a,b,c,d] = M[(c,d),(a,b)] for a |X|^2 x |X|^2 matrix."""
    M = np.asarray(M)
    W = M.reshape(n, n, n, n).transpose(2, 3, 0, 1)
    return W


def boltzmann_state_sum(d, R, Rbar=None):
    """Sum over semi-arc colorings of the product of crossing weights.

    Each crossing is read with its strands pointing up, right to left:
    positive X[a,b,c,d] uses R[a, d, b, c]; negative uses Rbar[b, a, c, d].
    """
    R = np.asarray(R, dtype=object)
    Rbar = R if Rbar is None else np.asarray(Rbar, dtype=object)
    n = R.shape[0]
    labels = d.semiarcs
    pos = {l: i for i, l in enumerate(labels)}
    plan = []
    for k, (a, b, c, e) in enumerate(d.crossings):
        if d.signs[k] > 0:
            idx = (pos[a], pos[e], pos[b], pos[c])
            W = R
        else:
            idx = (pos[b], pos[a], pos[c], pos[e])
            W = Rbar
        plan.append((max(idx), idx, W))
    by_last = [[] for _ in labels]
    for last, idx, W in plan:
        by_last[last].append((idx, W))
    col = [0] * len(labels)
    one = 1

    def rec(i, acc):
        if i == len(labels):
            return acc
        total = 0
        for v in range(n):
            col[i] = v
            w = acc
            for idx, W in by_last[i]:
                w = w * W[col[idx[0]], col[idx[1]], col[idx[2]], col[idx[3]]]
                if w == 0:
                    break
            if w != 0:
                total = total + rec(i + 1, w)
        return total

    res = rec(0, one) if labels else one
    return res * (n ** d.unknots)
