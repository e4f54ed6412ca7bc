import math

import pytest

from heq.psl2 import IDENTITY, MAT_A, MAT_B, MAT_P, MAT_Q, NotUnimodular, ProjMat2, order

from conftest import random_matrix


def test_normalize_identity_class():
    assert ProjMat2(-1, 0, 0, -1) == IDENTITY


def test_normalize_sign_rule():
    # (0,-1,1,0) and its negation name the same element
    assert ProjMat2(0, -1, 1, 0) == ProjMat2(0, 1, -1, 0)
    assert ProjMat2(0, -1, 1, 0).entries() == (0, 1, -1, 0)


def test_normalize_keeps_positive_leading():
    assert ProjMat2(2, 1, 1, 1).entries() == (2, 1, 1, 1)


@pytest.mark.parametrize("entries", [(1, 2, 3, 4), (1, 0, 0, -1), (2, 0, 0, 2)])
def test_not_unimodular_rejected(entries):
    with pytest.raises(NotUnimodular):
        ProjMat2(*entries)


def test_generator_relations():
    assert MAT_A * MAT_A == IDENTITY
    assert MAT_B * MAT_B * MAT_B == IDENTITY


def test_pq_do_not_commute():
    assert (MAT_P * MAT_Q).entries() == (3, 1, -1, 0)
    assert (MAT_Q * MAT_P).entries() == (3, -1, 1, 0)
    assert MAT_P * MAT_Q != MAT_Q * MAT_P


def test_inv_examples():
    assert IDENTITY.inv() == IDENTITY
    assert ProjMat2(2, -1, -1, 1).inv().entries() == (1, 1, 1, 2)


def test_inv_matches_adjugate(rng):
    # independent oracle: the adjugate of a determinant-1 matrix is its inverse
    for _ in range(50):
        m = random_matrix(rng)
        a, b, c, d = m.entries()
        assert m.inv() == ProjMat2(d, -b, -c, a)
        assert m * m.inv() == IDENTITY
        assert m.inv() * m == IDENTITY


def test_order_examples():
    assert order(IDENTITY) == 1
    assert order(MAT_A) == 2
    assert order(MAT_B) == 3
    assert order(ProjMat2(2, -5, 1, -2)) == 2
    assert order(MAT_P) == math.inf
    assert order(MAT_Q) == math.inf
    assert order(ProjMat2(1, 1, 0, 1)) == math.inf  # parabolic


def test_order_consistent_with_powering(rng):
    for _ in range(100):
        m = random_matrix(rng)
        k = order(m)
        if k == 1:
            assert m == IDENTITY
        elif k == 2:
            assert m != IDENTITY and m * m == IDENTITY
        elif k == 3:
            assert m * m != IDENTITY and m * m * m == IDENTITY
        else:
            assert m * m != IDENTITY and m * m * m != IDENTITY


def test_associativity_spot_check(rng):
    for _ in range(50):
        m1, m2, m3 = (random_matrix(rng) for _ in range(3))
        assert (m1 * m2) * m3 == m1 * (m2 * m3)


def test_normalization_idempotent(rng):
    for _ in range(50):
        m = random_matrix(rng)
        assert ProjMat2(*m.entries()) == m


def test_hashable_and_immutable():
    m = ProjMat2(2, 1, 1, 1)
    assert hash(m) == hash(ProjMat2(-2, -1, -1, -1))
    with pytest.raises(AttributeError):
        m.e11 = 5
