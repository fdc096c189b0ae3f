"""Structure-constant algebras: multiplication, identity detection, basis change.

An Algebra is a dense table c[i][j] of product vectors e_i * e_j together
with the coordinates of its two-sided identity.  Nothing is assumed about
the product: no associativity, no commutativity.  Instances are immutable
and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidIdentity
from .linalg import BasisChange, rref, span, unit_vec, vec_mat


@dataclass(frozen=True)
class Algebra:
    """A finite-dimensional unital algebra given by structure constants.

    table[i][j] is the coordinate vector of e_i * e_j; `one` is the
    coordinate vector of the identity.  The identity axiom is checked at
    construction on all basis vectors, which suffices by bilinearity.
    """

    field: object
    table: tuple
    one: tuple

    def __post_init__(self):
        n = len(self.table)
        if any(len(row) != n for row in self.table) or any(
            len(cell) != n for row in self.table for cell in row
        ):
            raise DimensionMismatch("structure-constant table is not n x n x n")
        if len(self.one) != n:
            raise DimensionMismatch("identity vector has wrong length")
        for j in range(n):
            ej = unit_vec(self.field, n, j)
            if self.mul(self.one, ej) != ej or self.mul(ej, self.one) != ej:
                raise InvalidIdentity(
                    f"claimed identity fails on basis vector {j}")

    @property
    def dim(self):
        return len(self.table)

    def basis_vector(self, i):
        return unit_vec(self.field, self.dim, i)

    def mul(self, u, v):
        """Bilinear extension of the table to arbitrary coordinate vectors."""
        n = self.dim
        if len(u) != n or len(v) != n:
            raise DimensionMismatch("vector length does not match algebra dim")
        field = self.field
        zero = field.zero
        out = [zero] * n
        table = self.table
        for i, ui in enumerate(u):
            if ui == zero:
                continue
            row = table[i]
            for j, vj in enumerate(v):
                if vj == zero:
                    continue
                c = field.mul(ui, vj)
                cell = row[j]
                out = [field.add(x, field.mul(c, y)) for x, y in zip(out, cell)]
        return tuple(out)


def algebra(field, table, one):
    """Build an Algebra from nested lists, normalizing to tuples."""
    t = tuple(tuple(tuple(cell) for cell in row) for row in table)
    return Algebra(field=field, table=t, one=tuple(one))


def table_mul(field, table, u, v):
    """Table product without requiring an identity (used before hull)."""
    n = len(table)
    zero = field.zero
    out = [zero] * n
    for i, ui in enumerate(u):
        if ui == zero:
            continue
        for j, vj in enumerate(v):
            if vj == zero:
                continue
            c = field.mul(ui, vj)
            out = [field.add(x, field.mul(c, y)) for x, y in zip(out, table[i][j])]
    return tuple(out)


def find_identity(field, table):
    """The unique two-sided identity of the table, or None.

    Solves the linear system e * e_j = e_j = e_j * e over the unknown
    coordinates of e and verifies the solution (uniqueness is automatic:
    two identities e, e' satisfy e = e e' = e').
    """
    n = len(table)
    rows = []
    rhs = []
    for j in range(n):
        for k in range(n):
            rows.append(tuple(table[i][j][k] for i in range(n)))
            rhs.append(field.one if j == k else field.zero)
            rows.append(tuple(table[j][i][k] for i in range(n)))
            rhs.append(field.one if j == k else field.zero)
    aug = [r + (b,) for r, b in zip(rows, rhs)]
    reduced, pivots = rref(field, aug)
    e = [field.zero] * n
    for row, pc in zip(reduced, pivots):
        if pc == n:
            return None  # inconsistent system
        e[pc] = row[n]
    e = tuple(e)
    for j in range(n):
        ej = unit_vec(field, n, j)
        if table_mul(field, table, e, ej) != ej:
            return None
        if table_mul(field, table, ej, e) != ej:
            return None
    return e


def unital_hull(field, table):
    """Adjoin an identity: dimension grows by one, old space embeds as coords 1..n.

    The same length questions transfer to the hull, which is why callers can
    always repair an identity-free table this way.
    """
    n = len(table)
    m = n + 1
    zero = field.zero
    new_table = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i == 0:
                new_table[i][j] = unit_vec(field, m, j)
            elif j == 0:
                new_table[i][j] = unit_vec(field, m, i)
            else:
                cell = table[i - 1][j - 1]
                new_table[i][j] = (zero,) + tuple(cell)
    return algebra(field, new_table, unit_vec(field, m, 0))


def change_basis(A, change):
    """Rewrite A in the basis given by the rows of `change`.

    Verdicts downstream (length, identities) are invariant under this
    operation; tests rely on that.
    """
    if not isinstance(change, BasisChange):
        change = BasisChange(A.field, change)
    n = A.dim
    if change.dim != n:
        raise DimensionMismatch("basis change has wrong dimension")
    field = A.field
    rows = change.matrix
    inv = change.inverse
    new_table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod_old = A.mul(rows[i], rows[j])
            row.append(vec_mat(field, prod_old, inv))
        new_table.append(tuple(row))
    new_one = vec_mat(field, A.one, inv)
    return Algebra(field=field, table=tuple(new_table), one=new_one)


def complete_to_basis_with_one(A):
    """BasisChange whose first row is the identity, completed greedily by
    standard basis vectors (deterministic)."""
    field = A.field
    n = A.dim
    rows = [A.one]
    current = span(field, rows)
    for k in range(n):
        if current.dim == n:
            break
        ek = unit_vec(field, n, k)
        if not current.contains(ek):
            rows.append(ek)
            current = span(field, rows)
    return BasisChange(field, rows)


def with_identity_first(A):
    """Conjugate A so its identity is the first basis vector.

    Returns (B, change) with B.one == e_0 and change mapping new coords to
    the original ones.
    """
    change = complete_to_basis_with_one(A)
    B = change_basis(A, change)
    return B, change


def opposite(A):
    """The opposite algebra (products reversed); shares the identity."""
    n = A.dim
    table = tuple(tuple(A.table[j][i] for i in range(n)) for j in range(n))
    return Algebra(field=A.field, table=table, one=A.one)
