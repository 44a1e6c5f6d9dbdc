import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import oracle_homology
from disthom.chain import (BoundaryError, ChainComplex, FaceSystem, HomologyGroup, assemble,
                           parse_dump, presimplicial_witness, tuples, verify_simplicial_axioms)
from disthom.distributive import one_term_complex
from disthom.magma import takasaki


def simplex_faces(k, hi):
    """Standard ordered simplicial set on k points: delete entry i, repeat entry i."""
    return FaceSystem(0, hi, basis=lambda n: tuples(k, n + 1),
                      face=lambda n, i, g: g[:i] + g[i + 1:],
                      degen=lambda n, i, g: g[:i + 1] + g[i:])


def test_homology_group_sum_and_str():
    a = HomologyGroup(1, (2,))
    b = HomologyGroup(0, (3, 4))
    s = a + b
    assert s.free_rank == 1 and s.torsion == (2, 12)
    assert str(HomologyGroup(0)) == "0"
    assert str(HomologyGroup(2, (3,))) == "Z^2 + Z_3"
    assert HomologyGroup(0, (6,)).primary() == [2, 3]


def test_simplicial_set_satisfies_full_axioms():
    f = simplex_faces(2, 3)
    chk = verify_simplicial_axioms(f, "full", 0, 2)
    assert chk.satisfies("full") and chk.strongest() == "full"


def test_broken_faces_give_witness():
    f = FaceSystem(0, 3, basis=lambda n: tuples(2, n + 1),
                   face=lambda n, i, g: g[:i] + g[i + 1:] if i else g[1:][::-1])
    w = presimplicial_witness(f)
    assert w is not None
    with pytest.raises(BoundaryError):
        assemble(f)


def test_assembled_homology_matches_sympy():
    cx = one_term_complex(takasaki(3), 3)
    dims = {n: cx.dim(n) for n in cx.degrees}
    mats = {n: cx.dense(n) for n in cx.boundary}
    for n in range(0, 3):
        h = cx.homology(n)
        assert (h.free_rank, h.torsion) == oracle_homology(dims, mats, n)


def test_truncation_degree_refused():
    cx = one_term_complex(takasaki(3), 2)
    with pytest.raises(ValueError):
        cx.homology(cx.hi)


def test_permuted_basis_same_homology():
    rng = np.random.default_rng(7)
    cx = one_term_complex(takasaki(3), 3)
    px = cx.permuted(rng)
    for n in range(cx.lo, cx.hi):
        assert cx.homology(n) == px.homology(n)


def test_dump_roundtrip():
    cx = one_term_complex(takasaki(3), 2)
    back = parse_dump(cx.dump())
    for n in cx.boundary:
        assert np.array_equal(back.dense(n), cx.dense(n))


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        ChainComplex({0: [0], 1: [0, 1]}, {1: np.zeros((2, 2))})


small = st.integers(1, 4).flatmap(
    lambda a: st.integers(1, 4).flatmap(
        lambda b: st.lists(st.lists(st.integers(-3, 3), min_size=b, max_size=b),
                           min_size=a, max_size=a)))


@settings(max_examples=100, deadline=None)
@given(small)
def test_two_term_complex_euler_characteristic(M):
    M = np.array(M)
    cx = ChainComplex({0: range(M.shape[0]), 1: range(M.shape[1])}, {1: M}, bounded=True)
    h0, h1 = cx.homology(0), cx.homology(1)
    assert h0.free_rank - h1.free_rank == M.shape[0] - M.shape[1]
