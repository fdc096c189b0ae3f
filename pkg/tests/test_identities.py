"""Identity checkers and the special-basis parameter criteria."""

import random
from fractions import Fraction

import pytest

from lenalg import (
    algebra,
    associative_law_holds,
    flexible_law_holds,
    is_associative,
    is_commutative,
    is_flexible,
    is_jordan,
    is_power_associative_upto,
    jordan_law_holds,
    make_bilinear_jordan,
    make_field,
    make_fixture,
    make_matrix_algebra,
    special_table_from_params,
    symmetrized,
)
from lenalg.errors import CharacteristicTwo
from lenalg.linalg import vec_is_zero, vec_sub

from tests.corpus import random_scalar, random_vector

Q = make_field("Q")
F5 = make_field("F5")


def test_matrix_algebra_is_associative_and_flexible():
    M2 = make_matrix_algebra(Q, 2)
    assert is_associative(M2).holds
    assert is_flexible(M2).holds
    assert not is_commutative(M2).holds


def test_commutative_tables_are_flexible():
    rng = random.Random(0)
    gram = [[Fraction(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(i):
            gram[i][j] = gram[j][i]
    A = make_bilinear_jordan(Q, gram)
    assert is_commutative(A).holds
    assert is_flexible(A).holds


def test_repaired_remark_not_associative_with_counterexample():
    A = make_fixture("remark-repaired")
    verdict = is_associative(A)
    assert not verdict.holds
    i, j, k = verdict.counterexample["indices"]
    ei, ej, ek = (A.basis_vector(x) for x in (i, j, k))
    defect = vec_sub(Q, A.mul(A.mul(ei, ej), ek), A.mul(ei, A.mul(ej, ek)))
    assert defect == verdict.defect
    assert not vec_is_zero(Q, defect)


def test_jordan_bilinear_form_holds():
    rng = random.Random(4)
    gram = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(i):
            gram[i][j] = gram[j][i]
    A = make_bilinear_jordan(Q, gram)
    assert is_jordan(A).holds


def test_symmetrized_matrix_algebra_is_jordan():
    M2 = make_matrix_algebra(Q, 2)
    assert is_jordan(symmetrized(M2)).holds


def test_non_commutative_fails_jordan_at_commutativity():
    M2 = make_matrix_algebra(Q, 2)
    verdict = is_jordan(M2)
    assert not verdict.holds
    assert verdict.counterexample.get("law") == "commutativity"


def test_jordan_refuses_char2():
    A = make_fixture("dim3-f2-type2")
    with pytest.raises(CharacteristicTwo):
        is_jordan(A)


def test_power_associative_on_associative_table():
    M2 = make_matrix_algebra(make_field("F3"), 2)
    verdict = is_power_associative_upto(M2, 6)
    assert verdict.holds
    assert verdict.counterexample["exhaustive"] is False or True  # scope note present


def test_power_associativity_failure_at_degree_four():
    # x = e2: x^2 = e3, x^3 = e5 unambiguously, but x^2*x^2 = e4 while
    # (x^3)*x = 0, so degree four is the first ambiguity
    z = Q.zero
    n = 5

    def vec(i=None):
        out = [z] * n
        if i is not None:
            out[i] = Q.one
        return tuple(out)

    table = [[vec() for _ in range(n)] for _ in range(n)]
    for j in range(n):
        table[0][j] = vec(j)
        table[j][0] = vec(j)
    table[1][1] = vec(2)          # e2 * e2 = e3
    table[1][2] = vec(4)          # e2 * e3 = e5
    table[2][1] = vec(4)          # e3 * e2 = e5
    table[2][2] = vec(3)          # e3 * e3 = e4
    A = algebra(Q, table, vec(0))
    verdict = is_power_associative_upto(A, 6, samples=40, seed=0)
    assert not verdict.holds
    assert verdict.counterexample["degree"] == 4


def test_power_associative_exhaustive_small_field():
    A = make_fixture("dim3-f2-type2")
    verdict = is_power_associative_upto(A, 6)
    assert verdict.holds
    assert verdict.counterexample["exhaustive"] is True


# ---------------------------------------------------------------------------
# parameter criteria vs direct evaluation
# ---------------------------------------------------------------------------

def _random_params(field, m, rng, pattern="free"):
    draw = lambda: random_scalar(field, rng)
    if pattern == "jordan":
        beta = tuple(field.zero for _ in range(m))
        mu = tuple(draw() for _ in range(m))
        alpha = [[field.zero] * m for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                alpha[i][j] = alpha[j][i] = draw()
    elif pattern == "assoc":
        beta = tuple(draw() for _ in range(m))
        mu = tuple(field.mul(b, b) for b in beta)
        alpha = [[field.mul(beta[i], beta[j]) if i != j else field.zero
                  for j in range(m)] for i in range(m)]
    elif pattern == "flex":
        b = draw()
        c = draw()
        beta = tuple(b for _ in range(m))
        mu = tuple(c for _ in range(m))
        alpha = [[c if i != j else field.zero for j in range(m)]
                 for i in range(m)]
    else:
        beta = tuple(draw() for _ in range(m))
        mu = tuple(draw() for _ in range(m))
        alpha = [[draw() if i != j else field.zero for j in range(m)]
                 for i in range(m)]
    return mu, beta, tuple(tuple(r) for r in alpha)


@pytest.mark.parametrize("pattern", ["free", "jordan", "assoc", "flex"])
def test_parameter_criteria_match_identity_checkers(pattern):
    rng = random.Random(pattern)
    for field in (Q, F5):
        for m in (2, 3, 4):
            for _ in range(8):
                mu, beta, alpha = _random_params(field, m, rng, pattern)
                A = special_table_from_params(field, mu, beta, alpha)
                assert flexible_law_holds(field, mu, beta, alpha) == is_flexible(A).holds
                assert associative_law_holds(field, mu, beta, alpha) == is_associative(A).holds
                jordan_param = jordan_law_holds(field, mu, beta, alpha)
                assert jordan_param == is_jordan(A).holds == is_commutative(A).holds


def test_parameter_criteria_edge_cases():
    # all beta zero, alpha symmetric: every flexibility relation collapses
    mu = (Fraction(3), Fraction(-1))
    beta = (Fraction(0), Fraction(0))
    alpha = ((Fraction(0), Fraction(2)), (Fraction(2), Fraction(0)))
    assert flexible_law_holds(Q, mu, beta, alpha)
    assert jordan_law_holds(Q, mu, beta, alpha)
    assert not associative_law_holds(Q, mu, beta, alpha)  # mu != beta^2
    # asymmetric alpha kills all three
    alpha_bad = ((Fraction(0), Fraction(2)), (Fraction(1), Fraction(0)))
    assert not flexible_law_holds(Q, mu, beta, alpha_bad)
    assert not jordan_law_holds(Q, mu, beta, alpha_bad)
    # A1 fails when beta = 0 but mu != 0
    assert not associative_law_holds(Q, (Fraction(1),), (Fraction(0),),
                                     ((Fraction(0),),))
    # all-zero data (scalar line plus square-zero directions) is associative
    zero3 = (Fraction(0),) * 3
    alpha0 = tuple((Fraction(0),) * 3 for _ in range(3))
    assert associative_law_holds(Q, zero3, zero3, alpha0)
    A0 = special_table_from_params(Q, zero3, zero3, alpha0)
    assert is_associative(A0).holds


def test_deliberate_flex_violation_detected_both_ways():
    # beta_j mu_i != beta_i alpha_ij on purpose
    mu = (Fraction(1), Fraction(0))
    beta = (Fraction(1), Fraction(1))
    alpha = ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0)))
    # relation beta_2 mu_1 = beta_1 alpha_12 reads 1*1 = 1*0: broken
    assert not flexible_law_holds(Q, mu, beta, alpha)
    A = special_table_from_params(Q, mu, beta, alpha)
    assert not is_flexible(A).holds


def test_checkers_agree_with_direct_evaluation():
    rng = random.Random(77)
    fields_and_algebras = [
        (Q, make_matrix_algebra(Q, 2)),
        (Q, symmetrized(make_matrix_algebra(Q, 2))),
        (F5, special_table_from_params(*(
            (F5,) + _random_params(F5, 3, rng, "jordan")))),
    ]
    for field, A in fields_and_algebras:
        n = A.dim
        assoc = is_associative(A).holds
        flex = is_flexible(A).holds
        for _ in range(60):
            x = random_vector(field, n, rng)
            y = random_vector(field, n, rng)
            z = random_vector(field, n, rng)
            if assoc:
                assert A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z))
            if flex:
                assert A.mul(x, A.mul(y, x)) == A.mul(A.mul(x, y), x)
            if field.characteristic() != 2 and is_jordan(A).holds:
                x2 = A.mul(x, x)
                assert A.mul(x2, A.mul(y, x)) == A.mul(A.mul(x2, y), x)
