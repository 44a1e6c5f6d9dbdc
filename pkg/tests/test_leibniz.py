import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from disthom.chain import BoundaryError, assemble
from disthom.leibniz import (LeibnizAlgebraData, abelian, check_leibniz, doubling_axioms,
                             from_brackets, leibniz_complex, leibniz_faces, nonlie_example, sl2,
                             split_unital_axioms, squares_vanish)
from disthom.magma import ValidationError


def brute_leibniz(B):
    n = B.shape[0]
    br = lambda u, v: np.einsum("i,j,ijk->k", u, v, B)
    E = np.eye(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = E[i], E[j], E[k]
                if np.any(br(x, br(y, z)) != br(br(x, y), z) - br(br(x, z), y)):
                    return False
    return True


brackets = st.integers(1, 2).flatmap(
    lambda n: st.lists(st.integers(-1, 1), min_size=n ** 3, max_size=n ** 3).map(
        lambda v, n=n: np.array(v).reshape(n, n, n)))


@settings(max_examples=200, deadline=None)
@given(brackets)
def test_identity_check_matches_bruteforce(B):
    l = LeibnizAlgebraData(B.shape[0], B)
    assert check_leibniz(l).algebra_ok == brute_leibniz(B)


@given(brackets)
@settings(max_examples=60, deadline=None)
def test_boundary_squares_to_zero_for_leibniz(B):
    l = LeibnizAlgebraData(B.shape[0], B)
    if check_leibniz(l).ok:
        assert leibniz_complex(l, 2).d2_witness() is None


def test_abelian():
    cx = leibniz_complex(abelian(2), 2)
    for n in range(-1, 2):
        assert cx.homology(n).free_rank == 2 ** (n + 1)


def test_sl2():
    cx = leibniz_complex(sl2(), 2)
    assert cx.homology(-1).free_rank == 1
    assert cx.homology(0).torsion == (2, 2) and cx.homology(0).free_rank == 0
    assert cx.homology(1).torsion == (2, 4, 4)
    assert squares_vanish(sl2())


def test_nonlie():
    l = nonlie_example()
    assert check_leibniz(l).ok and not squares_vanish(l)
    cx = leibniz_complex(l, 2)
    for n in range(-1, 2):
        g = cx.homology(n)
        assert g.free_rank == 1 and not g.torsion


def test_doubling_axioms_follow_squares():
    a = doubling_axioms(sl2())
    assert a.holds["4'"] and not a.holds["3"]
    b = doubling_axioms(nonlie_example())
    assert not b.holds["4'"]


def test_bad_module_detected():
    l = sl2()
    bad = LeibnizAlgebraData(3, l.bracket, 1, np.ones((1, 3, 1), dtype=np.int64))
    r = check_leibniz(bad)
    assert r.algebra_ok and not r.module_ok and r.module_witness[:3] == (0, 0, 1)
    with pytest.raises(ValidationError):
        leibniz_complex(bad, 2)
    with pytest.raises(BoundaryError):
        assemble(leibniz_faces(bad, -1, 2, check=False))


def test_split_unital():
    l = abelian(2)
    assert split_unital_axioms(l, 0, [1, 0]).satisfies("full")
    weak = split_unital_axioms(l, 0, [1, 1])
    assert weak.satisfies("weak") and not weak.holds["4"]


def test_non_central_unit_refused():
    with pytest.raises(ValidationError):
        split_unital_axioms(sl2(), 0, [0, 0, 0])


def test_shape_checked():
    with pytest.raises(ValidationError):
        LeibnizAlgebraData(2, np.zeros((2, 2, 3)))


def _d0d1_equals_d0d0(f, g):
    from disthom.chain import lin
    lhs = lin(lambda h: f.d(0, 0, h), f.d(1, 1, g))
    rhs = lin(lambda h: f.d(0, 0, h), f.d(1, 0, g))
    return lhs == rhs


@pytest.mark.parametrize("action", [None, "ones", "diag"])
def test_d0d1_gate_tracks_module_identity(action):
    l = sl2()
    if action == "ones":
        A = np.ones((1, 3, 1), dtype=np.int64)
    elif action == "diag":
        A = np.array([[[0], [0], [1]]], dtype=np.int64)
    else:
        A = np.zeros((1, 3, 1), dtype=np.int64)
    lm = LeibnizAlgebraData(3, l.bracket, 1, A)
    f = leibniz_faces(lm, -1, 2, check=False)
    B = l.bracket
    # module identity on (m, x0, x1): [m,[x0,x1]] = [[m,x0],x1] - [[m,x1],x0]
    defect = (np.einsum("jkq,pqr->pjkr", B, A) - np.einsum("pjq,qkr->pjkr", A, A)
              + np.einsum("pkq,qjr->pjkr", A, A))
    for g in f.basis(1):
        m, x0, x1 = g
        assert _d0d1_equals_d0d0(f, g) == (not np.any(defect[m, x0, x1])), g
