from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from disthom.magma import (FiniteMagma, MagmaSet, ValidationError, alexander, all_magmas,
                           check_axioms, closure, compose, conjugation, construct, core,
                           cyclic_group, distributive_witness, invert, is_associative,
                           is_distributive_set, schroeder, symmetric_group, takasaki,
                           tetrahedral, trivial, weak_distributivity_witness)


def brute_flags(T):
    n = len(T)
    R = range(n)
    shelf = all(T[T[a][b]][c] == T[T[a][c]][T[b][c]] for a, b, c in product(R, R, R))
    left = all(T[a][T[b][c]] == T[T[a][b]][T[a][c]] for a, b, c in product(R, R, R))
    idem = all(T[a][a] == a for a in R)
    bij = all(sorted(T[a][b] for a in R) == list(R) for b in R)
    invol = all(T[T[a][b]][b] == a for a, b in product(R, R))
    ent = all(T[T[a][b]][T[c][d]] == T[T[a][c]][T[b][d]] for a, b, c, d in product(R, R, R, R))
    return dict(shelf=shelf, left_distributive=left, spindle=shelf and idem, rack=shelf and bij,
                quandle=shelf and bij and idem, kei=shelf and bij and idem and invol, entropic=ent)


tables = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@settings(max_examples=300, deadline=None)
@given(tables)
def test_axioms_match_bruteforce(T):
    r = check_axioms(FiniteMagma(T))
    assert r.flags() == brute_flags(T)
    for key, w in r.witnesses:
        assert not brute_flags(T)[key]


def test_all_two_element_magmas():
    count = 0
    for m in all_magmas(2):
        assert check_axioms(m).flags() == brute_flags(m.rows())
        count += 1
    assert count == 16


def test_schroeder_is_takasaki3():
    assert schroeder() == takasaki(3)
    r = check_axioms(schroeder())
    assert r.quandle and r.kei and r.entropic and r.left_distributive


@pytest.mark.parametrize("m", [takasaki(5), alexander(5, 2), conjugation(symmetric_group(3)),
                               core(cyclic_group(4)), tetrahedral()])
def test_families_are_quandles(m):
    assert check_axioms(m).quandle


def test_tetrahedral_is_not_kei():
    r = check_axioms(tetrahedral())
    assert r.quandle and not r.kei


def test_bad_tables_rejected():
    with pytest.raises(ValidationError):
        FiniteMagma([[0, 2], [1, 0]])
    with pytest.raises(ValidationError):
        FiniteMagma([[0, 1]])


def test_trivial_is_identity_of_bin():
    q = takasaki(4)
    assert compose(q, trivial(4)) == q
    assert compose(trivial(4), q) == q


def test_invert_gives_inverse_in_bin():
    q = alexander(5, 2)
    assert compose(q, invert(q)) == trivial(5)
    with pytest.raises(ValidationError):
        invert(FiniteMagma([[0, 0], [0, 0]]))


def test_distributive_sets():
    q = takasaki(3)
    s = MagmaSet([q, trivial(3)])
    assert is_distributive_set(s)
    assert distributive_witness(q, q) is None
    # closure of a distributive set stays distributive
    cl = closure([q])
    assert is_distributive_set(MagmaSet(cl))


def test_weak_distributivity_is_weaker():
    q = takasaki(3)
    assert weak_distributivity_witness(q, trivial(3)) is None


def test_associativity_witness():
    assert is_associative(FiniteMagma(cyclic_group(3))) is None
    assert is_associative(takasaki(3)) is not None


def test_construct_keys():
    assert construct("takasaki", 3) == takasaki(3)
    assert construct("tetrahedral") == tetrahedral()
