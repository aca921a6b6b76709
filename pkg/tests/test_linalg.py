"""Exact linear algebra: ranks, kernels, quotients, polynomial determinants."""

import random
from fractions import Fraction

import pytest

from trivext.linalg import (GF, QQ, Echelon, ExactMatrix, FieldMismatchError,
                            GroundField, IntPolynomial, PolyMatrix, SparseRank,
                            poly_det, row_reduce, subspace_quotient)


def test_identity_matrix_full_rank():
    m = ExactMatrix.from_rows([[1, 0], [0, 1]], QQ)
    red = row_reduce(m)
    assert red.rank == 2
    assert red.kernel_basis == []
    assert red.pivot_columns == [0, 1]


def test_one_by_two_kernel():
    red = row_reduce(ExactMatrix.from_rows([[1, 1]], QQ))
    assert red.rank == 1
    assert red.kernel_basis == [[Fraction(1), Fraction(-1)]]


def test_dual_numbers_multiplication_matrix_kernel():
    # left multiplication by x on k[x]/(x^2) in the basis (e, x):
    # x*e = x, x*x = 0, so the columns are (0,1) and (0,0)
    m = ExactMatrix.from_rows([[0, 0], [1, 0]], QQ)
    red = row_reduce(m)
    assert red.rank == 1
    assert red.kernel_basis == [[Fraction(0), Fraction(1)]]


def test_rank_nullity_and_exact_kernel_random():
    rng = random.Random(20240811)
    for _ in range(40):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        m = ExactMatrix.from_rows(
            [[Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
              for _ in range(cols)] for _ in range(rows)], QQ)
        red = row_reduce(m)
        assert red.rank + len(red.kernel_basis) == cols
        for v in red.kernel_basis:
            assert all(x == 0 for x in m.apply(v))
        ech = Echelon(QQ, cols)
        for v in red.kernel_basis:
            assert ech.add(v)  # linearly independent


def test_sparse_rank_agrees_with_dense():
    rng = random.Random(7)
    for p in (0, 5):
        field = QQ if p == 0 else GF(p)
        for _ in range(30):
            rows = rng.randrange(1, 7)
            cols = rng.randrange(1, 7)
            data = [[field.coerce(rng.randrange(-3, 4)) for _ in range(cols)]
                    for _ in range(rows)]
            m = ExactMatrix.from_rows(data, field)
            assert m.rank() == row_reduce(m).rank


def test_field_mismatch_detected():
    with pytest.raises(FieldMismatchError):
        GF(5).coerce("nope")
    m = ExactMatrix.from_rows([[1]], QQ)
    n = ExactMatrix.from_rows([[1]], GF(5))
    with pytest.raises(FieldMismatchError):
        m.matmul(n)


def test_scalar_field_axioms_random():
    rng = random.Random(99)
    for field in (QQ, GF(7), GF(2)):
        for _ in range(60):
            a = field.coerce(rng.randrange(-9, 10))
            b = field.coerce(rng.randrange(-9, 10))
            c = field.coerce(rng.randrange(-9, 10))
            assert field.add(a, field.neg(a)) == field.zero()
            if not field.is_zero(a):
                assert field.mul(a, field.inv(a)) == field.one()
            assert field.mul(a, field.add(b, c)) == \
                field.add(field.mul(a, b), field.mul(a, c))
            assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))


def test_rationals_stay_reduced():
    f = QQ.coerce((6, -4))
    assert f == Fraction(-3, 2)
    assert f.denominator > 0
    r = GF(5).coerce(Fraction(1, 2))  # 1/2 = 3 mod 5
    assert r == 3


def test_prime_check():
    with pytest.raises(ValueError):
        GroundField(6)
    with pytest.raises(ValueError):
        GF(1)


def test_subspace_quotient_examples():
    q = subspace_quotient(2, [[0, 1]], QQ)
    assert q.quotient_dim == 1
    assert q.apply([5, 7]) == [Fraction(5)]  # keeps the first coordinate
    assert q.apply([0, 3]) == [Fraction(0)]

    q = subspace_quotient(3, [], QQ)
    assert q.quotient_dim == 3
    assert q.apply([1, 2, 3]) == [Fraction(1), Fraction(2), Fraction(3)]

    # A/rad for the dual numbers: ambient (e, x), radical span{x}
    q = subspace_quotient(2, [[0, 1]], QQ)
    assert q.quotient_dim == 1


def test_subspace_quotient_dimension_mismatch():
    with pytest.raises(FieldMismatchError):
        subspace_quotient(2, [[1, 2, 3]], QQ)


def test_quotient_projection_is_onto_and_kills_subspace():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randrange(1, 6)
        k = rng.randrange(0, n + 1)
        basis = [[Fraction(rng.randrange(-3, 4)) for _ in range(n)] for _ in range(k)]
        q = subspace_quotient(n, basis, QQ)
        for v in basis:
            assert all(x == 0 for x in q.apply(v))
        # the section composed with the projection is the identity
        for j in range(q.quotient_dim):
            unit = [Fraction(0)] * q.quotient_dim
            unit[j] = Fraction(1)
            assert q.apply(q.lift(unit)) == unit


# -- integer polynomials -----------------------------------------------------


def x_poly(*coeffs):
    return IntPolynomial(coeffs)


def test_int_polynomial_basics():
    p = x_poly(1, 2, 1)
    assert str(p) == "1 + 2*x + x^2"
    assert p.degree == 2
    assert p.evaluate(3) == 16
    assert x_poly() == IntPolynomial([0, 0])
    assert x_poly().degree == -1
    assert (x_poly(1, 1) * x_poly(-1, 1)) == x_poly(-1, 0, 1)
    assert x_poly(1, 0, 1).exact_div(x_poly(1)) == x_poly(1, 0, 1)
    assert (x_poly(1, 1) * x_poly(2, 3, 4)).exact_div(x_poly(1, 1)) == x_poly(2, 3, 4)
    with pytest.raises(ArithmeticError):
        x_poly(1, 0, 1).exact_div(x_poly(1, 1))


def test_poly_det_trivial_cases():
    assert poly_det(PolyMatrix.identity(3)) == x_poly(1)
    diag = PolyMatrix([[x_poly(1, 1), x_poly()], [x_poly(), x_poly(1, 1)]])
    assert poly_det(diag) == x_poly(1, 2, 1)


def test_poly_det_cofactor_example():
    # [[1+x^2, x], [x, 1+x^2]]: by hand (1+x^2)^2 - x^2 = 1 + x^2 + x^4
    m = PolyMatrix([[x_poly(1, 0, 1), x_poly(0, 1)],
                    [x_poly(0, 1), x_poly(1, 0, 1)]])
    assert poly_det(m) == x_poly(1, 0, 1, 0, 1)


def _cofactor_det(entries):
    n = len(entries)
    if n == 1:
        return entries[0][0]
    total = IntPolynomial()
    for j in range(n):
        minor = [[entries[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = entries[0][j] * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def test_poly_det_matches_cofactor_expansion_random():
    rng = random.Random(424242)
    for _ in range(25):
        n = rng.randrange(1, 5)
        entries = [[IntPolynomial([rng.randrange(-3, 4)
                                   for _ in range(rng.randrange(0, 4))])
                    for _ in range(n)] for _ in range(n)]
        m = PolyMatrix(entries)
        assert poly_det(m) == _cofactor_det(entries)


def test_poly_det_needs_pivot_swap():
    m = PolyMatrix([[x_poly(), x_poly(1)], [x_poly(1), x_poly()]])
    assert poly_det(m) == x_poly(-1)


def test_sparse_rank_mod_p():
    eng = SparseRank(3)
    assert eng.add({0: 1, 1: 2})
    assert not eng.add({0: 2, 1: 4})  # same line mod 3
    assert eng.add({1: 1})
    assert eng.rank == 2
