"""A walk through homology of small self-distributive structures.

    python3 demos/rack_and_quandle_homology.py

The one-term complex of a rack is acyclic once augmented, so the
interesting invariants come from the two-term (rack) boundary.  For an
idempotent rack the rack complex splits into a degenerate part and the
normalized (quandle) part; the split is visible in the groups below.
"""
from disthom.distributive import (DistributiveTheory, multi_term_complex, one_term_complex,
                                  rack_quandle_complexes)
from disthom.magma import alexander, check_axioms, takasaki, tetrahedral, trivial


def show(label, groups):
    print(f"  {label:<11}" + "  ".join(f"H{n}={g}" for n, g in groups.items()))


for q in (takasaki(3), alexander(5, 2), tetrahedral()):
    r = check_axioms(q)
    print(f"{q.name or 'tetrahedral'}: flags {' '.join(r.true_flags())}")

    aug = one_term_complex(q, 2, augmented=True)
    show("one-term", {n: aug.homology(n) for n in range(-1, 2)})

    cs = rack_quandle_complexes(q, 3)
    for part in ("rack", "degenerate", "quandle"):
        show(part, {n: cs[part].homology(n) for n in range(1, 4)})

    # the same rack groups, this time from the multi-term machinery
    mt = multi_term_complex(DistributiveTheory([q, trivial(q.size)], [1, -1]), 3)
    same = all(mt.homology(n - 1) == cs["rack"].homology(n) for n in range(1, 4))
    print(f"  multi-term route agrees with the rack complex: {same}\n")
