"""Colorings, cocycle state sums and Boltzmann weights on small knots.

    python3 demos/knot_invariants.py

Diagrams are read from fixtures/.  Each invariant is also evaluated on the
Reidemeister pairs bundled there, which must not change it.
"""
from pathlib import Path

from disthom import formats
from disthom.extensions import FiberGroup, nontrivial_quandle_cocycle
from disthom.knots import (boltzmann_state_sum, cocycle_state_sum, color_count, delta_weights,
                           format_group_ring, parse_pd)
from disthom.magma import takasaki, tetrahedral, trivial

FX = Path(__file__).resolve().parent.parent / "fixtures"

knots = {name: parse_pd((FX / f"{name}.pd").read_text())
         for name in ("unknot", "trefoil", "figure8", "unlink2")}
quandles = {"takasaki3": takasaki(3), "takasaki5": takasaki(5), "tetrahedral": tetrahedral(),
            "trivial3": trivial(3)}

print("coloring counts")
print("  " + " ".join(f"{q:>12}" for q in quandles))
for kn, d in knots.items():
    print(f"  {kn:<8}" + " ".join(f"{color_count(d, q):>12}" for q in quandles.values()))

# the trivial quandle only sees components, whatever the crossing count
print("\ntrivial3 on the trefoil: 3 colorings from 3 arcs, one component")

q = tetrahedral()
c = nontrivial_quandle_cocycle(q, FiberGroup([2]))
print("\nZ2 cocycle state sums over the tetrahedral quandle")
for kn, d in knots.items():
    print(f"  {kn:<8} {format_group_ring(cocycle_state_sum(d, q, c))}")

R, Rb = delta_weights(takasaki(3))
print("\nBoltzmann sums with delta weights reproduce the counts:",
      [boltzmann_state_sum(d, R, Rb) for d in knots.values()])

R, Rb = formats.read_weights((FX / "integer_yb.matrix").read_text())
print("integer Yang-Baxter matrix on the trefoil:", boltzmann_state_sum(knots["trefoil"], R, Rb))

print("\nReidemeister pairs (count under takasaki3, state sum under tetrahedral/Z2)")
for line in (FX / "reidemeister" / "pairs.txt").read_text().split("\n"):
    if not line.strip():
        continue
    move, a, b = line.split()
    da = parse_pd((FX / "reidemeister" / a).read_text())
    db = parse_pd((FX / "reidemeister" / b).read_text())
    same = (color_count(da, takasaki(3)) == color_count(db, takasaki(3))
            and cocycle_state_sum(da, q, c) == cocycle_state_sum(db, q, c))
    print(f"  {move} {a[:-5]:<22} unchanged: {same}")
