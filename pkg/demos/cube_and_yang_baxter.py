"""Cube homology of knot diagrams and the Yang-Baxter view of racks.

    python3 demos/cube_and_yang_baxter.py
"""
from disthom.chain import BoundaryError, assemble
from disthom.distributive import rack_faces
from disthom.functor import FrobeniusAlgebraData, cube_homology, khovanov_cube
from disthom.knots import build_diagram, closure_pd, parse_pd
from disthom.magma import FiniteMagma, takasaki
from disthom.yang_baxter import check_ybe, from_shelf, lyubashenko, yb_complex

trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
figure8 = build_diagram(*closure_pd([1, -2, 1, -2]))

for name, d in (("trefoil", trefoil), ("figure-eight", figure8)):
    h = cube_homology(d)
    print(f"{name} cube homology: " + ", ".join(f"H^{k}={g}" for k, g in h.items()))

# breaking the Frobenius relation is caught by the square-zero check
bad = FrobeniusAlgebraData(2, {(0, 0, 0): 1})
print("\ncorrupted comultiplication, Frobenius witness:", bad.frobenius_witness())
try:
    khovanov_cube(figure8, 2, frob=bad)
except BoundaryError as e:
    print("figure-eight cube refused:", e)

# a shelf is a Yang-Baxter operator, and its complex is the rack complex
q = takasaki(3)
yb = yb_complex(from_shelf(q), 3)
rack = assemble(rack_faces(q, 1, 4), verify=False)
print("\ntakasaki(3) YB boundaries equal rack boundaries:",
      all((yb.boundary[n] != rack.boundary[n]).nnz == 0 for n in range(2, 5)))
print("non-shelf fails YBE with witness", check_ybe(from_shelf(FiniteMagma([[1, 0], [0, 0]])))[1])

r = lyubashenko([1, 2, 0], [2, 0, 1])
cx = yb_complex(r, 3)
print("Lyubashenko operator homology:", ", ".join(f"H{n}={cx.homology(n)}" for n in range(1, 4)))
