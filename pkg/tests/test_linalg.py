from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from so8min.linalg import (
    DimMismatch,
    FourVector,
    LinalgError,
    Mat,
    NonSquare,
    NoSolution,
    cross,
    det,
    det3,
    dot,
    format_scalar,
    inverse,
    kernel_basis,
    parse_scalar,
    rank,
    rank_of_vectors,
    solve,
)

from strategies import matrices, scalars, shapes, vectors


def to_sympy(m: Mat) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries])


def from_sympy(m) -> Mat:
    return Mat(m.rows, m.cols, [Fraction(int(x.p), int(x.q)) for x in m])


# -- worked examples ------------------------------------------------------

def test_rank_examples():
    assert rank(Mat.identity(3)) == 3
    assert rank(Mat.zeros(2, 5)) == 0
    assert rank(Mat.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(Mat.identity(3)) == []
    assert len(kernel_basis(Mat.zeros(2, 3))) == 3
    (v,) = kernel_basis(Mat.from_rows([[1, 1]]))
    assert v[0] == -v[1] != 0


def test_solve_examples():
    b = Mat.from_rows([[1, 2], [3, 4]])
    assert solve(Mat.identity(2), b) == b
    with pytest.raises(NoSolution):
        solve(Mat.from_rows([[1, 0], [0, 0]]), Mat.column([0, 1]))
    assert solve(Mat.from_rows([[2]]), Mat.from_rows([[1]])) == Mat.from_rows([[Fraction(1, 2)]])


def test_det_examples():
    assert det(Mat.identity(4)) == 1
    assert det(Mat.diag([2, Fraction(1, 2)])) == 1
    assert det(Mat.from_rows([[0, 1], [1, 0]])) == -1


def test_errors():
    with pytest.raises(NonSquare):
        det(Mat.zeros(2, 3))
    with pytest.raises(NonSquare):
        inverse(Mat.zeros(2, 3))
    with pytest.raises(LinalgError):
        inverse(Mat.from_rows([[1, 2], [2, 4]]))
    with pytest.raises(DimMismatch):
        Mat(2, 2, [1, 2, 3])
    with pytest.raises(DimMismatch):
        Mat.identity(2) @ Mat.identity(3)
    with pytest.raises(DimMismatch):
        solve(Mat.identity(2), Mat.identity(3))


def test_scalar_format_round_trip():
    for x in (Fraction(0), Fraction(-7), Fraction(3, 4), Fraction(-22, 7)):
        assert parse_scalar(format_scalar(x)) == x
    assert format_scalar(Fraction(3, 4)) == "3/4"


# -- sympy oracle -------------------------------------------------------

@given(shapes().flatmap(lambda s: matrices(*s)))
def test_rank_matches_sympy(m):
    assert rank(m) == to_sympy(m).rank()


@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n)))
def test_det_matches_sympy(m):
    assert det(m) == Fraction(str(to_sympy(m).det()))


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_inverse_matches_sympy(m):
    if det(m) == 0:
        with pytest.raises(LinalgError):
            inverse(m)
    else:
        assert inverse(m) == from_sympy(to_sympy(m).inv())
        assert m @ inverse(m) == Mat.identity(m.rows)


@given(shapes().flatmap(lambda s: matrices(*s)))
def test_kernel_basis_is_a_basis(m):
    ker = kernel_basis(m)
    assert len(ker) == m.cols - rank(m) == len(to_sympy(m).nullspace())
    for v in ker:
        assert all(x == 0 for x in m.apply(v))
    if ker:
        assert rank(Mat.from_cols(ker)) == len(ker)


@given(shapes().flatmap(lambda s: st.tuples(matrices(*s), matrices(s[1], 2))))
def test_solve_consistent_systems(ab):
    a, x0 = ab
    b = a @ x0
    assert a @ solve(a, b) == b


@given(shapes(1, 4).flatmap(lambda s: st.tuples(matrices(*s), matrices(s[0], 1))))
def test_solve_agrees_with_rank_criterion(ab):
    a, b = ab
    solvable = rank(a.hstack(b)) == rank(a)
    try:
        x = solve(a, b)
    except NoSolution:
        assert not solvable
    else:
        assert solvable and a @ x == b


def test_rank_of_sparse_vectors():
    assert rank_of_vectors([{0: 1, 3: 2}, {0: 2, 3: 4}, {5: 1}]) == 2


# -- field axioms and matrix identities ---------------------------------

@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * (1 / a) == 1


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(matrices(n, n), matrices(n, n), matrices(n, n))))
def test_matrix_ring_identities(abc):
    a, b, c = abc
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ (b + c) == a @ b + a @ c
    assert (a @ b).T == b.T @ a.T
    assert det(a @ b) == det(a) * det(b)
    assert (a @ b).trace() == (b @ a).trace()


@given(vectors(3), vectors(3), vectors(3))
def test_cross_and_det3(u, v, w):
    assert det3(u, v, w) == det(Mat.from_cols([u, v, w]))
    assert dot(cross(u, v), u) == 0
    assert cross(u, v) == tuple(-x for x in cross(v, u))


def test_matrix_helpers():
    m = Mat.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m.T.T == m
    assert m.submatrix([1], [0, 2]) == Mat.from_rows([[4, 6]])
    assert m.hstack(Mat.column([7, 8])).shape == (2, 4)
    assert m.vstack(Mat.row_vector([7, 8, 9])).shape == (3, 3)
    assert Mat.unit(2, 2, 0, 1) == Mat.from_rows([[0, 1], [0, 0]])
    assert (Mat.identity(3) * 5).is_scalar()
    assert not Mat.diag([1, 2]).is_scalar()
    assert Mat.from_rows([[1, 1], [0, 1]]) ** 3 == Mat.from_rows([[1, 3], [0, 1]])
    assert hash(m) == hash(Mat.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_four_vector():
    f = FourVector(8, {(1, 2, 3, 4): 2})
    assert f[(1, 2, 3, 4)] == 2 and not f.is_zero()
    assert FourVector(8).is_zero()
    with pytest.raises(LinalgError):
        FourVector(8, {(2, 1, 3, 4): 1})
