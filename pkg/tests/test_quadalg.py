import pytest

from tannakit.exactlin import QQ, Subspace, rank
from tannakit.quadalg import (
    NotFiniteTypeError,
    QuadraticAlgebra,
    as_regular_check,
    free_algebra,
    graded_dims,
    jordan_plane,
    koszul_dual,
    pairing_matrix,
    polynomial_ring,
    quantum_plane,
    relation_spaces,
)

from oracles import naive_graded_dim


CORPUS = {
    "kxy": polynomial_ring(),
    "qplane": quantum_plane(),
    "jordan": jordan_plane(),
    "kxyz": polynomial_ring(n=3),
}


def test_polynomial_ring_dims():
    a = CORPUS["kxy"]
    assert list(graded_dims(a, 5)) == [1, 2, 3, 4, 5, 6]


def test_kxyz_dims_are_binomials():
    a = CORPUS["kxyz"]
    assert list(graded_dims(a, 5)) == [1, 3, 6, 10, 15, 21]


def test_free_algebra_dims():
    a = free_algebra(n=2)
    assert list(graded_dims(a, 4)) == [1, 2, 4, 8, 16]


def test_graded_dims_match_naive_oracle():
    # independent elimination on raw shift rows
    for name, a in CORPUS.items():
        vectors = [
            [x for x in row] for row in a.relations.basis.entries
        ]
        for deg in range(4):
            assert graded_dims(a, deg)[deg] == naive_graded_dim(
                vectors, a.dim_v, deg
            ), name


def test_koszul_dual_of_kxy():
    dual = koszul_dual(CORPUS["kxy"])
    # dual of the symmetric algebra is the exterior algebra
    assert list(graded_dims(dual, 4)) == [1, 2, 1, 0, 0]


def test_double_dual_is_identity():
    for name, a in CORPUS.items():
        dd = koszul_dual(koszul_dual(a))
        assert dd.relations == a.relations, name


def test_relation_space_dims_equal_dual_graded_dims():
    for name, a in CORPUS.items():
        dual = koszul_dual(a)
        ddims = graded_dims(dual, 5)
        spaces = relation_spaces(a, 5)
        for l in range(1, 6):
            assert spaces[l - 1].dim == ddims[l], (name, l)


def test_as_regular_corpus():
    expected_d = {"kxy": 2, "qplane": 2, "jordan": 2, "kxyz": 3}
    for name, a in CORPUS.items():
        report = as_regular_check(a, 6)
        assert report.as_regular, name
        assert report.d == expected_d[name], name
        assert report.relation_dims[report.d - 1] == 1, name


def test_singular_pairing_rejected():
    # TV/(x (x) y): one relation, top dim 1, but the pairing degenerates
    a = QuadraticAlgebra.from_relation_vectors(QQ, 2, [[0, 1, 0, 0]])
    report = as_regular_check(a, 6)
    assert not report.as_regular
    assert not report.pairings_nondegenerate


def test_not_finite_type_detected():
    # TV/(x^2): R_l = span(x^l) never vanishes
    a = QuadraticAlgebra.from_relation_vectors(QQ, 2, [[1, 0, 0, 0]])
    with pytest.raises(NotFiniteTypeError):
        as_regular_check(a, 6)


def test_free_algebra_reported_irregular():
    report = as_regular_check(free_algebra(n=2), 6)
    assert report.d == 1
    assert not report.as_regular


def test_pairing_matrix_kxy():
    a = CORPUS["kxy"]
    spaces = relation_spaces(a, 3)
    c = pairing_matrix(a, spaces, 2, 1)
    # R_2 generator xy - yx in the V (x) V basis
    flat = [c.entries[i][j] for i in range(2) for j in range(2)]
    assert flat == [QQ.of(0), QQ.of(1), QQ.of(-1), QQ.of(0)]
    assert pairing_matrix(a, spaces, 2, 0).entries == [[QQ.of(1)]]


def test_hilbert_series_product_identity():
    # sum_k h_A(n-k) (-1)^k h_dual(k) == 0 for n >= 1
    for name, a in CORPUS.items():
        h = graded_dims(a, 6)
        hd = graded_dims(koszul_dual(a), 6)
        for n in range(1, 7):
            assert sum(h[n - k] * (-1) ** k * hd[k] for k in range(n + 1)) == 0, name
