"""Command line: ``disthom <command> ...``.

Exit codes: 0 success, 1 validation refusal, 2 parse error.
"""
import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import formats
from .chain import BoundaryError, HomologyGroup
from .magma import ParseError, ValidationError, check_axioms

FLAG_ORDER = ("quandle", "kei", "shelf", "spindle", "rack", "entropic",
              "left_distributive", "idempotent")
THEORIES = ("one-term", "one-term-augmented", "rack", "degenerate", "quandle",
            "bar", "hochschild", "truncated-left", "truncated-right")
DEFAULT_CAP = 500_000


class Refusal(Exception):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _cap():
    v = os.environ.get("DISTHOM_MAX_BASIS")
    return int(v) if v else DEFAULT_CAP


def _guard(estimate, what):
    cap = _cap()
    if estimate > cap:
        raise Refusal(f"{what}: estimated basis size {estimate} exceeds the cap {cap} "
                      f"(set DISTHOM_MAX_BASIS to raise it)", {"estimate": estimate, "cap": cap})


def _homology_of(cx, degrees, workers):
    degrees = list(degrees)
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            groups = list(ex.map(cx.homology, degrees))
    else:
        groups = [cx.homology(n) for n in degrees]
    return dict(zip(degrees, groups))


def _hom_report(groups, label="H"):
    return {"degrees": {str(n): g.as_dict() for n, g in sorted(groups.items())},
            "_label": label}


def _hom_text(rep):
    label = rep.get("_label", "H")
    return "\n".join(f"{label}_{n}: free={g['free']}, torsion={g['torsion']}"
                     for n, g in rep["degrees"].items())


def groups_from_report(rep):
    """Inverse of the JSON homology block."""
    return {int(n): HomologyGroup(g["free"], tuple(g["torsion"])) for n, g in rep["degrees"].items()}


# ---- commands ----------------------------------------------------------------

def cmd_check(a):
    m = formats.read_magma(_read(a.magma))
    r = check_axioms(m)
    flags = [f for f in FLAG_ORDER if getattr(r, f)]
    rep = {"size": m.size, "flags": flags,
           "witnesses": {k: _jsonable(v) for k, v in dict(r.witnesses).items() if v is not None}}
    return rep, " ".join(flags) if flags else "(no axioms hold)"


def _complex_for(theory, m, D):
    from . import associative, distributive
    if theory in ("one-term", "one-term-augmented"):
        _guard(m.size ** (D + 2), theory)
        return distributive.one_term_complex(m, D, augmented=theory.endswith("augmented"))
    if theory in ("rack", "degenerate", "quandle"):
        _guard(m.size ** (D + 2), theory)
        cx = distributive.rack_quandle_complexes(m, D)
        if theory not in cx:
            raise Refusal(f"{theory} homology needs an idempotent shelf")
        return cx[theory]
    s = associative.monoid(m)
    if theory == "bar":
        _guard(m.size ** (D + 1), theory)
        return associative.bar_complex(s, max_degree=D)
    if theory == "hochschild":
        _guard(m.size ** (D + 2), theory)
        return associative.hochschild_complex(s, associative.regular_biset(s), max_degree=D)
    _guard(m.size ** (D + 1), theory)
    return associative.truncated_complex(s, theory.split("-")[1], D)


def cmd_homology(a):
    m = formats.read_magma(_read(a.magma))
    cx = _complex_for(a.theory, m, a.max_degree)
    if a.shuffle_basis:
        cx = cx.permuted(np.random.default_rng(a.seed))
    _dump(a, cx)
    rep = _hom_report(_homology_of(cx, cx.homology_range(), a.workers))
    rep["theory"] = a.theory
    return rep, _hom_text(rep)


def _dump(a, cx):
    if getattr(a, "dump_complex", None):
        with open(a.dump_complex, "w") as fh:
            fh.write(cx.dump())


def _pd(path):
    from .knots import parse_pd
    return parse_pd(_read(path))


def cmd_color(a):
    from .knots import colorings
    d = _pd(a.pd)
    m = formats.read_magma(_read(a.magma))
    r = check_axioms(m)
    warn = None if r.quandle else "magma is not a quandle; the count depends on the diagram"
    _guard(m.size ** min(d.n_arcs, 12) if not r.rack else m.size ** 2, "color")
    cols = list(colorings(d, m)) if a.list else None
    count = len(cols) if cols is not None else sum(1 for _ in colorings(d, m))
    rep = {"count": count, "arcs": d.n_arcs, "crossings": len(d.crossings)}
    if warn:
        rep["warning"] = warn
        print(f"warning: {warn}", file=sys.stderr)
    if cols is not None:
        rep["colorings"] = [list(c) for c in cols]
    text = str(count)
    if cols is not None:
        text += "\n" + "\n".join(" ".join(map(str, c)) for c in cols)
    return rep, text


def cmd_statesum(a):
    from .knots import boltzmann_state_sum, cocycle_state_sum, format_group_ring
    d = _pd(a.pd)
    text = _read(a.weights)
    word = formats.header_word(text)
    if word == "cocycle":
        if not a.base:
            raise Refusal("a cocycle state sum needs --base <magma>")
        q = formats.read_magma(_read(a.base))
        c = formats.read_cocycle(text, q)
        s = cocycle_state_sum(d, q, c)
        el = format_group_ring(s)
        return {"kind": "cocycle", "sum": el}, el
    if word in ("weights", "matrix"):
        R, Rb = formats.read_weights(text)
        val = boltzmann_state_sum(d, R, Rb)
        sval = str(val)
        return {"kind": "boltzmann", "sum": sval}, sval
    raise ParseError(f"unknown weights header {word!r}")


def cmd_ybe(a):
    from .yang_baxter import check_ybe, linearize, yb_complex
    text = _read(a.op)
    word = formats.header_word(text)
    op = formats.read_ybop(text) if word == "ybop" else formats.read_matrix(text)
    ok, w = check_ybe(op)
    rep = {"holds": ok, "witness": list(w) if w else None}
    lines = ["YBE holds" if ok else f"YBE fails at {w}"]
    if word == "ybop":
        rep["invertible"] = bool(op.invertible)
        lines.append(f"invertible: {'yes' if op.invertible else 'no'}")
        lin_ok = check_ybe(linearize(op))[0]
        rep["linear_agrees"] = lin_ok == ok
    if not ok:
        raise Refusal(lines[0], w)
    if a.max_degree is not None and word == "ybop":
        _guard(op.size ** (a.max_degree + 1), "yb complex")
        cx = yb_complex(op, a.max_degree)
        _dump(a, cx)
        h = _hom_report(_homology_of(cx, cx.homology_range(), a.workers))
        rep["homology"] = h
        lines.append(_hom_text(h))
    return rep, "\n".join(lines)


def cmd_extend(a):
    from .extensions import alexander_extension, check_two_cocycle, extend
    if not a.base:
        raise Refusal("extend needs --base <magma>")
    q = formats.read_magma(_read(a.base))
    c = formats.read_cocycle(_read(a.cocycle), q)
    ok, w = check_two_cocycle(c, "twisted_rack")
    res = extend(alexander_extension(c), "distributive")
    flags = [f for f in FLAG_ORDER if getattr(check_axioms(res.magma), f)]
    rep = {"cocycle": ok, "cocycle_witness": list(w) if w else None,
           "identity": res.identity, "axiom": res.axiom, "agree": res.agree,
           "size": res.magma.size, "flags": flags,
           "quandle_condition": bool(c.is_quandle_cocycle())}
    text = "\n".join([f"cocycle condition: {'holds' if ok else f'fails at {w}'}",
                      f"extension of order {res.magma.size}: {' '.join(flags) or '(none)'}",
                      f"verdicts agree: {'yes' if res.agree else 'no'}"])
    if a.write_magma:
        with open(a.write_magma, "w") as fh:
            fh.write(formats.write_magma(res.magma))
    return rep, text


def cmd_cube(a):
    from .functor import khovanov_cube
    d = _pd(a.pd)
    c = len(d.crossings)
    _guard((2 ** c) * a.m ** (c + d.unknots + 1), "cube")
    cx = khovanov_cube(d, a.m, a.smoothing)
    _dump(a, cx)
    groups = _homology_of(cx, cx.degrees, a.workers)
    rep = _hom_report({-n: g for n, g in groups.items()}, "cube H")
    rep["m"] = a.m
    return rep, _hom_text(rep)


def cmd_leibniz(a):
    from .leibniz import check_leibniz, leibniz_complex
    l = formats.read_leibniz(_read(a.file))
    r = check_leibniz(l)
    if not r.ok:
        w = r.algebra_witness or r.module_witness
        raise Refusal(f"Leibniz identity fails at basis triple {w[:3]}, defect {w[3]}", w)
    _guard(l.module_dim * l.dim ** (a.max_degree + 2), "leibniz")
    cx = leibniz_complex(l, a.max_degree)
    _dump(a, cx)
    rep = _hom_report(_homology_of(cx, cx.homology_range(), a.workers))
    return rep, "Leibniz identity holds\n" + _hom_text(rep)


# ---- entry point --------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="disthom", description="Homology and invariants of "
                                "distributive, associative and Yang-Baxter structures.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    def common(q, degree=True):
        q.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        q.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        q.add_argument("--workers", type=int, default=argparse.SUPPRESS)
        if degree:
            q.add_argument("--max-degree", type=int, default=3)
        q.add_argument("--dump-complex", metavar="PATH")

    q = sub.add_parser("check", help="axioms of a magma table")
    q.add_argument("magma")
    common(q, degree=False)
    q = sub.add_parser("homology", help="homology of a magma")
    q.add_argument("theory", choices=THEORIES)
    q.add_argument("magma")
    q.add_argument("--shuffle-basis", action="store_true",
                   help="reorder bases with --seed before reducing")
    common(q)
    q = sub.add_parser("color", help="count colorings of a PD diagram")
    q.add_argument("pd")
    q.add_argument("magma")
    q.add_argument("--list", action="store_true")
    common(q, degree=False)
    q = sub.add_parser("statesum", help="cocycle or Boltzmann state sum")
    q.add_argument("pd")
    q.add_argument("weights")
    q.add_argument("--base", help="quandle for a cocycle state sum")
    common(q, degree=False)
    q = sub.add_parser("ybe", help="check the Yang-Baxter equation")
    q.add_argument("op")
    common(q, degree=False)
    q.add_argument("--max-degree", type=int, default=None)
    q = sub.add_parser("extend", help="Alexander extension from a 2-cocycle")
    q.add_argument("cocycle")
    q.add_argument("--base", help="base magma")
    q.add_argument("--write-magma", metavar="PATH")
    common(q, degree=False)
    q = sub.add_parser("cube", help="cube homology of a PD diagram")
    q.add_argument("pd")
    q.add_argument("--m", type=int, default=2)
    q.add_argument("--smoothing", choices=("A", "B"), default="A")
    common(q, degree=False)
    q = sub.add_parser("leibniz", help="Leibniz algebra check and homology")
    q.add_argument("file")
    common(q)
    return p


COMMANDS = {"check": cmd_check, "homology": cmd_homology, "color": cmd_color,
            "statesum": cmd_statesum, "ybe": cmd_ybe, "extend": cmd_extend,
            "cube": cmd_cube, "leibniz": cmd_leibniz}


def _emit(a, status, rep, text, out):
    if a.format == "json":
        out.write(json.dumps({"command": a.command, "status": status, **rep},
                             sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _strip(rep):
    if isinstance(rep, dict):
        return {k: _strip(v) for k, v in rep.items() if k != "_label"}
    return rep


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    p = build_parser()
    try:
        a = p.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(a, "max_degree", None) is not None and a.max_degree < 0:
        err.write("error: --max-degree must be >= 0\n")
        return 2
    if a.workers < 1:
        err.write("error: --workers must be >= 1\n")
        return 2
    try:
        rep, text = COMMANDS[a.command](a)
    except ParseError as e:
        _fail(a, "parse_error", str(e), None, out, err)
        return 2
    except (ValidationError, BoundaryError, Refusal) as e:
        _fail(a, "refused", str(e), getattr(e, "witness", None), out, err)
        return 1
    _emit(a, "ok", _strip(rep), text, out)
    return 0


def _fail(a, status, msg, witness, out, err):
    if a.format == "json":
        out.write(json.dumps({"command": a.command, "status": status, "error": msg,
                              "witness": _jsonable(witness)}, sort_keys=True) + "\n")
    err.write(f"error: {msg}\n")
    if witness is not None and a.format != "json":
        err.write(f"witness: {_jsonable(witness)}\n")


def _jsonable(w):
    if w is None or isinstance(w, (int, str, float, bool)):
        return w
    if isinstance(w, dict):
        return {str(k): _jsonable(v) for k, v in w.items()}
    if isinstance(w, (list, tuple)):
        return [_jsonable(v) for v in w]
    if isinstance(w, np.integer):
        return int(w)
    return str(w)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
