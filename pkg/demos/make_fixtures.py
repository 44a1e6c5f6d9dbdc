"""Regenerate everything under fixtures/.

    python3 demos/make_fixtures.py

Diagrams for the Reidemeister pairs come from braid closures and from
curls inserted on a chosen semi-arc, so each pair is related by exactly
one move of the named type.
"""
from pathlib import Path

import numpy as np

from disthom import formats
from disthom.extensions import FiberGroup, nontrivial_quandle_cocycle, zero_cocycle
from disthom.knots import add_kink, build_diagram, closure_pd
from disthom.leibniz import abelian, nonlie_example, sl2
from disthom.magma import (FiniteMagma, alexander, conjugation, cyclic_group, schroeder,
                           symmetric_group, takasaki, tetrahedral, trivial)
from disthom.yang_baxter import LinearYBOperator, from_shelf, lyubashenko, transposition

ROOT = Path(__file__).resolve().parent.parent / "fixtures"

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n"
FIGURE8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]\n"


def pd_text(d, note):
    return f"# {note}\n{d.to_pd()}\n"


def braid(word, strands=None):
    return build_diagram(*closure_pd(word, strands))


def reidemeister_pairs():
    tref = braid([1, 1, 1])
    fig8 = braid([1, -2, 1, -2])
    pairs = [
        ("R1", "trefoil_kink_pos", tref, add_kink(tref, 2, True)),
        ("R1", "trefoil_kink_neg", tref, add_kink(tref, 3, False)),
        ("R1", "trefoil_markov", tref, braid([1, 1, 1, 2])),
        ("R1", "figure8_kink_pos", fig8, add_kink(fig8, 5, True)),
        ("R1", "figure8_kink_neg", fig8, add_kink(fig8, 1, False)),
        ("R2", "trefoil_r2", tref, braid([1, 1, -1, 1, 1])),
        ("R2", "trefoil_r2_3strand", braid([1, 1, 1, 2]), braid([1, 2, -2, 1, 1, 2])),
        ("R2", "figure8_r2", fig8, braid([1, -2, 2, -2, 1, -2])),
        ("R3", "trefoil_r3", braid([1, 1, 2, 1]), braid([1, 2, 1, 2])),
        ("R3", "figure8_r3", braid([2, 1, -2, 1, -2, -2]), braid([-1, 2, 1, 1, -2, -2])),
    ]
    return pairs


def main():
    ROOT.mkdir(exist_ok=True)
    magmas = {
        "takasaki3": takasaki(3), "takasaki4": takasaki(4), "takasaki5": takasaki(5),
        "schroeder": schroeder(), "trivial2": trivial(2), "trivial3": trivial(3),
        "tetrahedral": tetrahedral(), "alexander5_2": alexander(5, 2),
        "s3conj": conjugation(symmetric_group(3)),
        "nonshelf2": FiniteMagma([[1, 0], [0, 0]]),
        "z2": FiniteMagma(cyclic_group(2)), "z3": FiniteMagma(cyclic_group(3)),
        "leftzero2": FiniteMagma([[0, 0], [1, 1]]),
    }
    for name, m in magmas.items():
        (ROOT / f"{name}.magma").write_text(formats.write_magma(m))

    (ROOT / "trefoil.pd").write_text("# three-crossing trefoil (all crossings negative)\n" + TREFOIL)
    (ROOT / "figure8.pd").write_text("# figure-eight knot\n" + FIGURE8)
    (ROOT / "unknot.pd").write_text("unknot\n")
    (ROOT / "unknot1.pd").write_text("# one-crossing unknot\nX[1,2,2,1]\n")
    (ROOT / "unlink2.pd").write_text("# two-component unlink drawn with two crossings\n"
                                     "X[1,3,2,4] X[2,3,1,4]\n")
    (ROOT / "trefoil_braid.pd").write_text(pd_text(braid([1, 1, 1]), "closure of s1^3"))

    rdir = ROOT / "reidemeister"
    rdir.mkdir(exist_ok=True)
    lines = []
    for move, name, a, b in reidemeister_pairs():
        (rdir / f"{name}_a.pd").write_text(pd_text(a, f"{move} pair {name}, before"))
        (rdir / f"{name}_b.pd").write_text(pd_text(b, f"{move} pair {name}, after"))
        lines.append(f"{move} {name}_a.pd {name}_b.pd")
    (rdir / "pairs.txt").write_text("\n".join(lines) + "\n")

    q = tetrahedral()
    c = nontrivial_quandle_cocycle(q, FiberGroup([2]))
    (ROOT / "tetrahedral_z2.cocycle").write_text(formats.write_cocycle(c))
    (ROOT / "takasaki3_zero_t2.cocycle").write_text(
        formats.write_cocycle(zero_cocycle(takasaki(3), FiberGroup([3]), [[2]])))
    (ROOT / "takasaki3_zero.cocycle").write_text(
        formats.write_cocycle(zero_cocycle(takasaki(3), FiberGroup([3]))))

    (ROOT / "transposition2.ybop").write_text(formats.write_ybop(transposition(2)))
    (ROOT / "takasaki3.ybop").write_text(formats.write_ybop(from_shelf(takasaki(3))))
    (ROOT / "nonshelf2.ybop").write_text(formats.write_ybop(from_shelf(magmas["nonshelf2"])))
    (ROOT / "lyubashenko3.ybop").write_text(formats.write_ybop(lyubashenko([1, 2, 0], [2, 0, 1])))
    hecke = LinearYBOperator(2, [[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 2, 0], [0, 0, 0, 1]])
    (ROOT / "integer_yb.matrix").write_text(formats.write_matrix(hecke))

    (ROOT / "abelian2.leibniz").write_text(formats.write_leibniz(abelian(2)))
    (ROOT / "sl2.leibniz").write_text(formats.write_leibniz(sl2()))
    (ROOT / "nonlie2.leibniz").write_text(formats.write_leibniz(nonlie_example()))
    print(f"wrote fixtures under {ROOT}")


if __name__ == "__main__":
    main()
