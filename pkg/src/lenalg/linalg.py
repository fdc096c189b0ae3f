"""Exact dense linear algebra: vectors, reduced-echelon subspaces, basis changes.

Vectors and matrix rows are plain tuples of field payloads.  Subspaces are
stored in reduced row echelon form (pivots equal to one, pivot columns
otherwise zero, pivot columns strictly increasing, no zero rows), which is a
canonical form: equal subspaces have identical `rows`, so subspace equality
is raw tuple comparison and every reported witness is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, SingularMatrix


def zero_vec(field, n):
    return (field.zero,) * n


def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def vec_add(field, u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} != {len(v)}")
    add = field.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_sub(field, u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} != {len(v)}")
    sub = field.sub
    return tuple(sub(a, b) for a, b in zip(u, v))


def vec_scale(field, c, v):
    mul = field.mul
    return tuple(mul(c, a) for a in v)


def vec_is_zero(field, v):
    z = field.zero
    return all(a == z for a in v)


def rref(field, rows):
    """Canonical reduced row echelon form of the given spanning rows."""
    work = [list(r) for r in rows]
    zero, one = field.zero, field.one
    ncols = len(work[0]) if work else 0
    out = []
    pivot_cols = []
    col = 0
    r = 0
    while r < len(work) and col < ncols:
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            col += 1
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv_p = field.inv(work[r][col])
        if work[r][col] != one:
            work[r] = [field.mul(inv_p, a) for a in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != zero:
                c = work[i][col]
                work[i] = [field.sub(a, field.mul(c, b))
                           for a, b in zip(work[i], work[r])]
        pivot_cols.append(col)
        r += 1
        col += 1
    for i in range(r):
        out.append(tuple(work[i]))
    return tuple(out), tuple(pivot_cols)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held as canonical reduced-echelon spanning rows."""

    field: object
    ambient_dim: int
    rows: tuple
    pivots: tuple

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        """Residue of v after eliminating against the stored rows."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector length {len(v)} != ambient {self.ambient_dim}")
        field = self.field
        residual = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = residual[pc]
            if c != field.zero:
                residual = [field.sub(a, field.mul(c, b))
                            for a, b in zip(residual, row)]
        return tuple(residual)

    def contains(self, v):
        return vec_is_zero(self.field, self.reduce(v))

    def coords(self, v):
        """Coefficients of v against the stored rows, or None if v is outside."""
        field = self.field
        residual = list(v)
        out = []
        for row, pc in zip(self.rows, self.pivots):
            c = residual[pc]
            out.append(c)
            if c != field.zero:
                residual = [field.sub(a, field.mul(c, b))
                            for a, b in zip(residual, row)]
        if not vec_is_zero(field, tuple(residual)):
            return None
        return out

    def sum(self, other):
        if other.ambient_dim != self.ambient_dim or other.field != self.field:
            raise DimensionMismatch("subspace sum over mismatched ambients")
        return span(self.field, self.rows + other.rows, self.ambient_dim)


def span(field, vectors, ambient_dim=None):
    """Canonical Subspace spanned by the given vectors."""
    vectors = [tuple(v) for v in vectors]
    if vectors:
        n = len(vectors[0])
        if any(len(v) != n for v in vectors):
            raise DimensionMismatch("span over vectors of mixed lengths")
        if ambient_dim is not None and ambient_dim != n:
            raise DimensionMismatch("ambient_dim disagrees with vector length")
        ambient_dim = n
    elif ambient_dim is None:
        raise DimensionMismatch("empty span needs an explicit ambient_dim")
    rows, pivots = rref(field, vectors)
    return Subspace(field=field, ambient_dim=ambient_dim, rows=rows, pivots=pivots)


def member(subspace, v):
    return subspace.contains(tuple(v))


def subspace_sum(u, v):
    return u.sum(v)


def coords_in_span(subspace, v):
    """Exact coefficients of v against the stored rows, or None (not in span)."""
    return subspace.coords(tuple(v))


def identity_matrix(field, n):
    return tuple(unit_vec(field, n, i) for i in range(n))


def mat_mul(field, a, b):
    """Row-major matrix product a @ b."""
    n, m = len(a), len(b[0])
    k = len(b)
    if any(len(r) != k for r in a):
        raise DimensionMismatch("matrix product shape mismatch")
    out = []
    for i in range(n):
        row = [field.zero] * m
        for t in range(k):
            c = a[i][t]
            if c != field.zero:
                brow = b[t]
                row = [field.add(x, field.mul(c, y)) for x, y in zip(row, brow)]
        out.append(tuple(row))
    return tuple(out)


def vec_mat(field, v, m):
    """Row vector times matrix: (v @ m)."""
    if len(v) != len(m):
        raise DimensionMismatch("vector/matrix shape mismatch")
    ncols = len(m[0])
    out = [field.zero] * ncols
    for c, row in zip(v, m):
        if c != field.zero:
            out = [field.add(x, field.mul(c, y)) for x, y in zip(out, row)]
    return tuple(out)


def invert_matrix(field, m):
    """Inverse of a square matrix, or None if singular."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = [list(m[i]) + list(unit_vec(field, n, i)) for i in range(n)]
    rows, pivots = rref(field, aug)
    if len(rows) < n or pivots[:n] != tuple(range(n)):
        return None
    return tuple(tuple(r[n:]) for r in rows)


class BasisChange:
    """An invertible change of basis; rows are the new basis in old coordinates.

    `to_old` maps coordinates w.r.t. the new basis back to old coordinates;
    `to_new` is the inverse map.  The inverse matrix is computed once and
    cached.
    """

    def __init__(self, field, rows):
        rows = tuple(tuple(r) for r in rows)
        inv = invert_matrix(field, rows)
        if inv is None:
            raise SingularMatrix("basis-change matrix is singular")
        self.field = field
        self.matrix = rows
        self.inverse = inv

    @property
    def dim(self):
        return len(self.matrix)

    def to_old(self, v_new):
        return vec_mat(self.field, v_new, self.matrix)

    def to_new(self, v_old):
        return vec_mat(self.field, v_old, self.inverse)

    def then(self, other):
        """Compose: apply self first, then `other` expressed in self's basis."""
        return BasisChange(self.field, mat_mul(self.field, other.matrix, self.matrix))

    @staticmethod
    def identity(field, n):
        return BasisChange(field, identity_matrix(field, n))


def random_invertible(field, n, rng):
    """Seeded random invertible matrix (small integer entries over Q)."""
    if field.is_finite():
        elems = list(field.elements())
        draw = lambda: elems[rng.randrange(len(elems))]
    else:
        draw = lambda: field.from_int(rng.randint(-3, 3))
    while True:
        rows = tuple(tuple(draw() for _ in range(n)) for _ in range(n))
        if invert_matrix(field, rows) is not None:
            return BasisChange(field, rows)
