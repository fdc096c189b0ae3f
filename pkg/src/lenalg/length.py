"""Word-span sequences, lengths of generating sets, exact algebra length.

L_0 is the line spanned by the identity, L_1 adds the generating set, and
L_{i+1} = L_i + sum over p+q = i+1 (p, q >= 1) of span{u*v} with u, v running
over bases of L_p and L_q.  Working with full lower spans instead of exact
word sets is valid because the span of products of two sets equals the span
of products of their spans (bilinearity); it keeps every step polynomial.

Stop rule: the dimension sequence is non-decreasing, and once
dim L_n = dim L_{n+1} = ... = dim L_{2n} holds for some n >= 1 the sequence
is stationary for good, so the first such window ends the iteration.  An
additional early exit fires when L_i reaches the ambient dimension.  The
hard cap 2 * 2^(dim-2) + 2 (stabilization happens by index 2^(dim-2), the
window doubles it) is provably unreachable, so CapExceeded means a bug.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .algebra import Algebra, with_identity_first
from .errors import BudgetExceeded, CapExceeded, InfiniteFieldUnsupported
from .linalg import coords_in_span, span

DEFAULT_BUDGET = 10 ** 7


def resolve_budget(budget=None):
    """Explicit argument, else LENALG_BUDGET from the environment, else 10^7."""
    if budget is not None:
        return budget
    env = os.environ.get("LENALG_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


@dataclass
class WordSpanSequence:
    """The nested spans [L_0, L_1, ...] computed for one generating set."""

    spans: list
    stabilized_at: int

    @property
    def dims(self):
        return [s.dim for s in self.spans]

    @property
    def closure(self):
        return self.spans[-1]


def _iteration_cap(dim):
    return 2 * (2 ** max(dim - 2, 0)) + 2


def word_spans(A, vectors):
    """Compute the word-span sequence for the set `vectors` (may be empty)."""
    field = A.field
    n = A.dim
    l0 = span(field, [A.one], ambient_dim=n)
    spans = [l0]
    bases = [l0.rows]
    l1 = span(field, [A.one] + [tuple(v) for v in vectors], ambient_dim=n)
    spans.append(l1)
    bases.append(l1.rows)
    cap = _iteration_cap(n)
    i = 1
    while True:
        dims = [s.dim for s in spans]
        if dims[-1] == n:
            # reached the whole algebra; spans are nested so this is final
            first = next(t for t, d in enumerate(dims) if d == n)
            return WordSpanSequence(spans=spans, stabilized_at=first)
        # stop rule: some m >= 1 has dims constant on the window [m, 2m]
        top = len(dims) - 1
        for m in range(1, top // 2 + 1):
            if dims[m] == dims[2 * m]:
                return WordSpanSequence(spans=spans, stabilized_at=m)
        if i >= cap:
            raise CapExceeded(
                f"word spans did not stabilize within {cap} steps (dim {n})")
        # build L_{i+1}
        new_vectors = list(spans[-1].rows)
        for p in range(1, i + 1):
            q = i + 1 - p
            for u in bases[p]:
                for v in bases[q]:
                    new_vectors.append(A.mul(u, v))
        nxt = span(field, new_vectors, ambient_dim=n)
        spans.append(nxt)
        bases.append(nxt.rows)
        i += 1


@dataclass
class SetLengthResult:
    """Length of a generating set plus the data the CLI reports."""

    length: int
    generates: bool
    dims: list
    closure_dim: int
    stabilized_at: int


def length_of_set(A, vectors):
    """l(S): least k with L_k spanning the generated subalgebra."""
    seq = word_spans(A, vectors)
    dims = seq.dims
    final = dims[-1]
    k = next(i for i, d in enumerate(dims) if d == final)
    return SetLengthResult(
        length=k,
        generates=(final == A.dim),
        dims=dims,
        closure_dim=final,
        stabilized_at=seq.stabilized_at,
    )


def gaussian_binomial(m, d, q):
    """Number of d-dimensional subspaces of F_q^m (exact integer)."""
    if d < 0 or d > m:
        return 0
    num = den = 1
    for i in range(d):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(m, q):
    return sum(gaussian_binomial(m, d, q) for d in range(m + 1))


def enumerate_subspaces(field, m):
    """All subspaces of F_q^m as canonical echelon row tuples, deterministic order.

    Enumerates by dimension, then pivot columns, then free entries in
    payload-lexicographic order.
    """
    elems = list(field.elements())
    zero, one = field.zero, field.one
    yield ()
    for d in range(1, m + 1):
        for pivots in itertools.combinations(range(m), d):
            free_positions = []
            for r in range(d):
                for c in range(pivots[r] + 1, m):
                    if c not in pivots:
                        free_positions.append((r, c))
            for values in itertools.product(elems, repeat=len(free_positions)):
                rows = [[zero] * m for _ in range(d)]
                for r in range(d):
                    rows[r][pivots[r]] = one
                for (r, c), val in zip(free_positions, values):
                    rows[r][c] = val
                yield tuple(tuple(r) for r in rows)


@dataclass
class AlgebraLengthResult:
    """Exact length of a finite-field algebra with the maximizing subspace."""

    length: int
    witness_rows: tuple
    witness_length: int
    subspaces_examined: int


def length_of_algebra(A, budget=None):
    """Exact l(A) for a finite-field algebra by complete subspace enumeration.

    l(S) only depends on span(S + {1}), so maximizing over all generating
    sets reduces to maximizing over subspaces V containing the identity,
    i.e. over subspaces of the (n-1)-dimensional quotient by F*1, lifted.
    """
    field = A.field
    if not field.is_finite():
        raise InfiniteFieldUnsupported(
            "exact algebra length needs a finite field (use decide_length_one over Q)")
    n = A.dim
    if n == 1:
        return AlgebraLengthResult(length=0, witness_rows=(A.one,),
                                   witness_length=0, subspaces_examined=1)
    q = field.order()
    budget = resolve_budget(budget)
    work = count_subspaces(n - 1, q)
    if work > budget:
        raise BudgetExceeded(
            f"{work} subspaces to enumerate exceeds budget {budget}")
    B, change = with_identity_first(A)
    zero = field.zero
    best = -1
    best_rows = None
    examined = 0
    for rows in enumerate_subspaces(field, n - 1):
        examined += 1
        lifted = [B.one] + [(zero,) + r for r in rows]
        res = length_of_set(B, lifted)
        if not res.generates:
            continue
        if res.length > best:
            best = res.length
            best_rows = tuple(change.to_old(v) for v in lifted)
    if best < 0:
        raise AssertionError("no generating subspace found; table is corrupt")
    return AlgebraLengthResult(
        length=best,
        witness_rows=best_rows,
        witness_length=best,
        subspaces_examined=examined,
    )


def subalgebra_generated_by(A, vectors):
    """The unital subalgebra generated by `vectors`, as its own Algebra.

    Returns (S, rows) where rows are the canonical basis of the subalgebra
    inside A and S is the induced structure-constant algebra on that basis.
    """
    seq = word_spans(A, vectors)
    closure = seq.closure
    rows = closure.rows
    field = A.field
    d = len(rows)
    table = []
    for u in rows:
        row = []
        for v in rows:
            prod = A.mul(u, v)
            coords = coords_in_span(closure, prod)
            if coords is None:
                raise AssertionError("closure is not multiplicatively closed")
            row.append(tuple(coords))
        table.append(tuple(row))
    one_coords = coords_in_span(closure, A.one)
    if one_coords is None:
        raise AssertionError("closure lost the identity")
    return Algebra(field=field, table=tuple(table), one=tuple(one_coords)), rows
