import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from disthom.smith import det, invariant_factors, matmul, rank, smith_normal_form


def sympy_factors(M):
    if not M or not M[0]:
        return []
    S = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
    d = [abs(int(S[i, i])) for i in range(min(S.shape))]
    return [v for v in d if v]


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_invariant_factors_match_sympy(M):
    assert invariant_factors(M) == sympy_factors(M)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_transforms(M):
    r = smith_normal_form(M)
    D = matmul(matmul(r.U, M), r.V)
    assert D == r.diagonal()
    assert abs(det(r.U)) == 1 and abs(det(r.V)) == 1
    nz = r.invariants
    assert all(d > 0 for d in nz)
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    assert len(nz) == rank(M) == r.rank


def test_known_cases():
    assert invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert invariant_factors([[0, 0], [0, 0]]) == []
    assert invariant_factors(np.zeros((0, 3), dtype=np.int64)) == []


def test_sparse_input():
    import scipy.sparse as sp
    M = [[3, 0, 0], [0, 0, 0], [0, 0, 6]]
    assert invariant_factors(sp.csr_matrix(M)) == [3, 6]


def test_large_entries_stay_exact():
    M = [[2 ** 40, 0], [0, 3 ** 30]]
    assert invariant_factors(M) == [1, 2 ** 40 * 3 ** 30]
