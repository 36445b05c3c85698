from so8min.chevalley import (
    ALL_ROOTS,
    CARTAN_MATRIX,
    SIMPLE_ROOTS,
    H,
    X,
    Y,
    basis,
    cartan_integer,
    chevalley_relations_report,
    root_vector,
)
from so8min.orthogonal import Bivector, bracket, bracket_via_matrices


def test_table_shape():
    assert len(ALL_ROOTS) == 24
    assert len(basis()) == 28
    coords = [b.coordinate_vector() for _, b in basis()]
    from so8min.linalg import Mat, rank
    assert rank(Mat.from_rows(coords)) == 28


def test_examples():
    assert bracket(X(0, 1, 0, 0), Y(0, 1, 0, 0)) == H(2)
    assert bracket(H(1), X(0, 1, 0, 0)) == -X(0, 1, 0, 0)
    assert bracket(X(1, 0, 0, 0), X(0, 0, 1, 0)).is_zero()
    assert X(1, 0, 0, 0) == Bivector.basis(4, 1, 7)


def test_simple_relations_against_matrix_oracle():
    for i, a in enumerate(SIMPLE_ROOTS, 1):
        assert bracket_via_matrices(X(*a), Y(*a)) == H(i)
        for j, b in enumerate(SIMPLE_ROOTS, 1):
            assert bracket_via_matrices(H(i), X(*b)) == X(*b) * CARTAN_MATRIX[j - 1][i - 1]
            assert bracket(H(i), X(*b)) == X(*b) * cartan_integer(i, j)


def test_root_vectors_have_their_weights():
    for r in ALL_ROOTS:
        for i in range(1, 5):
            w = sum(r[j] * CARTAN_MATRIX[j][i - 1] for j in range(4))
            assert bracket(H(i), root_vector(r)) == root_vector(r) * w


def test_relations_report():
    rep = chevalley_relations_report()
    assert rep["failed"] == 0 and rep["failures"] == []
    assert rep["cases"] == 4 + 16 + 24 * 24 + 4 * 24 + 16
