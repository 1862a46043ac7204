import random
from fractions import Fraction

import pytest
import sympy

from gencactus.linalg import (
    column_matrix,
    determinant,
    identity_matrix,
    kernel_basis,
    mat_inverse,
    mat_mul,
    mat_pow,
    mat_vec,
    normalize_line,
    proportional,
    rational_kernel_basis,
    solve_columns,
    solve_in_span,
    transpose,
)
from gencactus.scalar import CycloReal, cos_pi_over


def random_matrix(rng, n, m, lo=-6, hi=6, denom=3):
    return tuple(
        tuple(Fraction(rng.randint(lo, hi), rng.randint(1, denom)) for _ in range(m))
        for _ in range(n)
    )


def test_determinant_against_sympy():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n)
        ref = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in a]).det()
        got = determinant(a)
        assert got == Fraction(int(ref.p), int(ref.q))


def test_determinant_rank_deficient():
    a = ((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4)))
    assert determinant(a) == 0
    assert determinant(()) == 1


def test_kernel_against_sympy():
    rng = random.Random(7)
    for _ in range(25):
        n, m = rng.randint(1, 4), rng.randint(1, 5)
        a = random_matrix(rng, n, m, lo=-3, hi=3, denom=2)
        basis = kernel_basis(a)
        ref = sympy.Matrix(
            [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in a]
        )
        assert len(basis) == m - ref.rank()
        for v in basis:
            assert all(x == 0 for x in mat_vec(a, v))
        # basis vectors are independent: stack and check rank
        if basis:
            g = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in basis])
            assert g.rank() == len(basis)


def test_kernel_cyclotomic_entries():
    c = cos_pi_over(5)
    zero = c - c
    # rows (1, -1/c): kernel is the line through (1, c)... scaled
    a = ((c * 0 + 1, c),)
    basis = kernel_basis(a)
    assert len(basis) == 1
    v = basis[0]
    assert (v[0] + c * v[1]).is_zero()


def test_inverse_roundtrip():
    rng = random.Random(3)
    done = 0
    while done < 15:
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n)
        if determinant(a) == 0:
            continue
        done += 1
        assert mat_mul(a, mat_inverse(a)) == identity_matrix(n)
    with pytest.raises(ValueError):
        mat_inverse(((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4))))


def test_solve_in_span_roundtrip():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 5)
        k = rng.randint(1, n)
        cols = None
        while cols is None:
            cand = [tuple(Fraction(rng.randint(-4, 4)) for _ in range(n)) for _ in range(k)]
            g = sympy.Matrix([[int(x) for x in v] for v in cand])
            if g.rank() == k:
                cols = cand
        weights = [tuple(Fraction(rng.randint(-3, 3)) for _ in range(k)) for _ in range(2)]
        targets = [
            tuple(sum(w[j] * cols[j][i] for j in range(k)) for i in range(n))
            for w in weights
        ]
        sol = solve_in_span(cols, targets)
        assert sol is not None
        for got, w in zip(sol, weights):
            assert got == w


def test_solve_in_span_outside():
    cols = [(Fraction(1), Fraction(0), Fraction(0))]
    assert solve_in_span(cols, [(Fraction(0), Fraction(1), Fraction(0))]) is None
    # dependent columns are a caller bug, not a "no solution"
    with pytest.raises(ValueError):
        solve_in_span([(Fraction(1), Fraction(0)), (Fraction(2), Fraction(0))], [(Fraction(0), Fraction(0))])


def test_solve_in_span_empty_columns():
    assert solve_in_span([], [(0, 0)]) == [()]
    assert solve_in_span([], [(0, 1)]) is None


def test_int_inputs_stay_exact():
    # plain int vectors arrive from the CLI; nothing may fall back to float
    det = determinant(((2, 1), (1, 1)))
    assert isinstance(det, Fraction) and det == 1
    inv = mat_inverse(((2, 1), (1, 1)))
    assert all(isinstance(x, Fraction) for row in inv for x in row)
    sol = solve_in_span([(1, -1, 1)], [(2, -2, 2)])
    assert sol == [(Fraction(2),)]
    assert all(isinstance(x, Fraction) for v in sol for x in v)
    line = normalize_line((3, 6, 0))
    assert line == (1, 2, 0)
    assert all(isinstance(x, Fraction) for x in line)
    for v in rational_kernel_basis(((1, 1, 0),)):
        assert all(isinstance(x, Fraction) for x in v)


def test_mat_pow_and_transpose():
    a = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(1)))
    assert mat_pow(a, 0) == identity_matrix(2)
    assert mat_pow(a, 5) == mat_mul(a, mat_pow(a, 4))
    assert transpose(transpose(a)) == a
    assert column_matrix([(1, 2), (3, 4)]) == ((1, 3), (2, 4))


def test_proportional():
    assert proportional((2, 4, 0), (1, 2, 0))
    assert not proportional((1, 0), (0, 1))
    assert proportional((0, 0), (0, 0))
