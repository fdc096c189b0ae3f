"""Subspaces in canonical echelon form, coordinates, basis changes."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lenalg import BasisChange, coords_in_span, make_field, member, span, subspace_sum
from lenalg.errors import DimensionMismatch, SingularMatrix
from lenalg.linalg import identity_matrix, invert_matrix, mat_mul, random_invertible

Q = make_field("Q")


def qv(*xs):
    return tuple(Fraction(x) for x in xs)


def test_span_dims():
    assert span(Q, [qv(1, 0), qv(0, 1)]).dim == 2
    assert span(Q, [qv(1, 1), qv(2, 2)]).dim == 1
    assert span(Q, [], ambient_dim=3).dim == 0


def test_membership_examples():
    U = span(Q, [qv(1, 0, 0), qv(0, 1, 1)])  # span{1, a+b} in (1, a, b) coords
    assert not member(U, qv(2, 0, 1))
    assert member(U, qv(5, -2, -2))


def test_coords_examples():
    U = span(Q, [qv(1, 2, 3)])
    assert coords_in_span(U, qv(2, 4, 6)) == [Fraction(2)]
    W = span(Q, [qv(1, 0, 0), qv(0, 1, 0), qv(0, 0, 1)])
    assert coords_in_span(W, qv(2, 1, 1)) == [Fraction(2), Fraction(1), Fraction(1)]
    assert coords_in_span(span(Q, [qv(1, 0, 0)]), qv(0, 1, 0)) is None


def test_subspace_sum():
    U = span(Q, [qv(1, 0, 0)])
    V = span(Q, [qv(0, 1, 0)])
    assert subspace_sum(U, V).dim == 2


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        span(Q, [qv(1, 0), qv(1, 0, 0)])
    with pytest.raises(DimensionMismatch):
        member(span(Q, [qv(1, 0)]), qv(1, 0, 0))


@given(st.permutations(list(range(4))), st.data())
def test_span_canonical_under_shuffle(perm, data):
    F3 = make_field("F3")
    vectors = [
        tuple(data.draw(st.integers(0, 2)) for _ in range(4)) for _ in range(4)
    ]
    direct = span(F3, vectors)
    shuffled = span(F3, [vectors[i] for i in perm])
    assert direct.rows == shuffled.rows
    assert direct == shuffled


@given(st.integers(0, 10**6))
def test_reduce_then_contains(seed):
    F5 = make_field("F5")
    rng = random.Random(seed)
    vectors = [tuple(rng.randrange(5) for _ in range(4)) for _ in range(3)]
    U = span(F5, vectors)
    for v in vectors:
        assert U.contains(v)
        coords = U.coords(v)
        acc = (0, 0, 0, 0)
        for c, row in zip(coords, U.rows):
            acc = tuple(F5.add(a, F5.mul(c, b)) for a, b in zip(acc, row))
        assert acc == v


def test_invert_matrix():
    m = (qv(1, 2), qv(3, 4))
    inv = invert_matrix(Q, m)
    assert mat_mul(Q, m, inv) == identity_matrix(Q, 2)
    assert invert_matrix(Q, (qv(1, 2), qv(2, 4))) is None


def test_basis_change_composition_and_inverse():
    rng = random.Random(7)
    P = random_invertible(Q, 3, rng)
    R = random_invertible(Q, 3, rng)
    v = qv(1, 2, 3)
    assert P.to_new(P.to_old(v)) == v
    composed = P.then(R)
    # coordinates w.r.t. the composed basis map through R then P
    w = qv(2, -1, 5)
    assert composed.to_old(w) == P.to_old(R.to_old(w))


def test_singular_basis_change_rejected():
    with pytest.raises(SingularMatrix):
        BasisChange(Q, (qv(1, 1), qv(2, 2)))
