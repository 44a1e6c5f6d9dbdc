import numpy as np
import pytest

from cube_oracle import cube_cohomology
from disthom.chain import BoundaryError
from disthom.functor import (FrobeniusAlgebraData, FunctorData, SimplicialComplex,
                             asc_complex, asc_homology, boundary_of_simplex, constant_functor,
                             cube_homology, functor_complex, functoriality_witness,
                             khovanov_cube, khovanov_functor, ordered_degenerate_subcomplex,
                             simplex, state_circles, zero_functor)
from disthom.knots import build_diagram, closure_pd, parse_pd
from disthom.magma import ValidationError

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


def groups(h):
    return {k: (g.free_rank, g.torsion) for k, g in h.items()}


@pytest.mark.parametrize("variant", ["ordered", "normalized", "oriented"])
def test_asc_variants_agree(variant):
    tri = boundary_of_simplex(2)
    h = asc_homology(tri, variant, 2)
    assert h[0].free_rank == 1 and h[1].free_rank == 1 and h[2].is_zero()
    h = asc_homology(simplex(2), variant, 2)
    assert h[0].free_rank == 1 and h[1].is_zero()
    two = SimplicialComplex(2, [])
    assert asc_homology(two, variant, 1)[0].free_rank == 2


def test_sphere_homology():
    h = asc_homology(boundary_of_simplex(3), "oriented", 3)
    assert [h[n].free_rank for n in range(4)] == [1, 0, 1, 0]


def test_ordered_degenerate_part_acyclic():
    cx = ordered_degenerate_subcomplex(boundary_of_simplex(2), 3)
    assert all(cx.homology(n).is_zero() for n in range(0, 3))


def test_constant_functor_matches_oriented():
    k = boundary_of_simplex(3)
    cx = functor_complex(k, constant_functor())
    oriented = asc_homology(k, "oriented", 3)
    for n in range(0, 3):
        assert cx.homology(n) == oriented[n]
    assert functor_complex(k, constant_functor(), augmented=True).homology(0).is_zero()


def test_zero_functor():
    cx = functor_complex(simplex(2), zero_functor())
    assert all(cx.dim(n) == 0 for n in cx.degrees)


def test_non_functorial_data_refused():
    bad = FunctorData(lambda s: 1, lambda s, i: np.array([[2 if i == 0 and len(s) == 3 else 1]]))
    assert functoriality_witness(simplex(2), bad) is not None
    with pytest.raises(ValidationError):
        functor_complex(simplex(2), bad)


def test_frobenius_algebra():
    A = FrobeniusAlgebraData(2)
    assert A.frobenius_witness() is None and A.commutative() and A.cocommutative()
    assert FrobeniusAlgebraData(3).frobenius_witness() is None
    assert FrobeniusAlgebraData(2, {(0, 0, 1): 2}).frobenius_witness() == (1, 0)


def test_state_circles_counts():
    d = parse_pd(TREFOIL)
    assert len(state_circles(d, set())) == 2
    assert len(state_circles(d, {0, 1, 2})) == 3


def test_trefoil_cube():
    h = groups(cube_homology(parse_pd(TREFOIL)))
    assert h == {0: (2, ()), 1: (0, ()), 2: (1, ()), 3: (1, (2,))}


@pytest.mark.parametrize("pd", [TREFOIL, FIGURE8, "X[1,3,2,4] X[2,3,1,4]", "X[1,2,2,1]"])
def test_cube_matches_dense_oracle(pd):
    d = parse_pd(pd)
    assert groups(cube_homology(d)) == cube_cohomology(d.crossings)


def test_cube_of_unknot_diagram():
    h = cube_homology(parse_pd("unknot"))
    assert groups(h) == {0: (2, ())}


def test_functor_route_is_shifted_dual():
    d = parse_pd(TREFOIL)
    K, F = khovanov_functor(d)
    cx = functor_complex(K, F, augmented=True)
    h = {n: (cx.homology(n).free_rank, cx.homology(n).torsion) for n in cx.homology_range()}
    assert h == {-1: (2, ()), 0: (0, ()), 1: (1, (2,)), 2: (1, ())}


def test_corrupt_comultiplication_detected_on_figure8():
    frob = FrobeniusAlgebraData(2, {(0, 0, 0): 1})
    assert frob.frobenius_witness() is not None
    d = build_diagram(*closure_pd([1, -2, 1, -2]))
    with pytest.raises(BoundaryError):
        khovanov_cube(d, 2, frob=frob)


def test_higher_rank_algebra_still_squares_to_zero():
    cx = khovanov_cube(parse_pd(TREFOIL), m=3)
    assert cx.d2_witness() is None
