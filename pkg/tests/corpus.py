"""Shared corpus builders for the unit and acceptance tests.

Random unital tables follow the repair recipe: draw a fully random table;
if it happens to have a two-sided identity keep it, otherwise adjoin an
identity to a random table one dimension lower.  A random conjugation then
hides any privileged coordinates.  Everything is seeded and deterministic.
"""

from __future__ import annotations

import random
from fractions import Fraction

from lenalg import (
    algebra,
    change_basis,
    find_identity,
    make_field,
    unital_hull,
)
from lenalg.linalg import random_invertible


def random_scalar(field, rng):
    if field.is_finite():
        elems = list(field.elements())
        return elems[rng.randrange(len(elems))]
    return Fraction(rng.randint(-5, 5), rng.randint(1, 3))


def random_vector(field, n, rng):
    return tuple(random_scalar(field, rng) for _ in range(n))


def random_table(field, n, rng):
    return [[random_vector(field, n, rng) for _ in range(n)] for _ in range(n)]


def random_unital_algebra(field, dim, seed, conjugate=True):
    """Random unital algebra of the requested dimension (identity repaired
    via the hull when the raw draw has none)."""
    rng = random.Random(f"unital|{field.label()}|{dim}|{seed}")
    t = random_table(field, dim, rng)
    e = find_identity(field, t)
    if e is not None:
        A = algebra(field, t, e)
    else:
        A = unital_hull(field, random_table(field, dim - 1, rng))
    if conjugate:
        A = change_basis(A, random_invertible(field, A.dim, rng))
    return A


def random_two_dim_unital(field, seed):
    """Random 2-dimensional unital algebra: basis {1, a} with a^2 arbitrary."""
    rng = random.Random(f"dim2|{field.label()}|{seed}")
    sq = random_vector(field, 2, rng)
    one, zero = field.one, field.zero
    table = [[(one, zero), (zero, one)], [(zero, one), sq]]
    A = algebra(field, table, (one, zero))
    return change_basis(A, random_invertible(field, 2, rng))


FIELD_NAMES_SMALL = ("F2", "F3", "F5", "GF4")


def field_by_name(name):
    return make_field(name)
