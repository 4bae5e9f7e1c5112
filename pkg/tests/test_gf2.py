"""GF(2) linear algebra: elimination, kernels, sums and intersections."""

from __future__ import annotations

from random import Random

import pytest

from bicolorgame import gf2
from bicolorgame.gf2 import GF2Matrix


def mat(rows, ncols=None):
    return GF2Matrix.from_bits(rows, ncols)


def random_matrix(rng: Random, nrows: int, ncols: int) -> GF2Matrix:
    return GF2Matrix(ncols, tuple(rng.getrandbits(ncols) for _ in range(nrows)))


def test_rank_identity():
    assert gf2.rank(mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3


def test_rank_zero_matrix():
    assert gf2.rank(GF2Matrix(5, (0, 0))) == 0
    assert gf2.rank(GF2Matrix(0, ())) == 0


def test_rank_figure_matrices(torus_grid, square_handles):
    assert gf2.rank(torus_grid.incidence_matrix) == 3
    assert gf2.rank(square_handles.incidence_matrix) == 5


def test_rref_identity():
    m = mat([[1, 0], [0, 1]])
    red, pivots = gf2.rref(m)
    assert red.rows == m.rows
    assert pivots == (0, 1)


def test_rref_repeated_rows(square_handles):
    red, pivots = gf2.rref(square_handles.dual_incidence_matrix)
    assert red.row_strings() == ["11110000"]
    assert pivots == (0,)


def test_rref_idempotent_and_rank_preserving():
    rng = Random(7)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(0, 8), rng.randint(1, 12))
        red, pivots = gf2.rref(m)
        assert gf2.rank(red) == gf2.rank(m) == len(pivots)
        again, _ = gf2.rref(red)
        assert again.rows == red.rows
        assert list(pivots) == sorted(pivots)


def test_kernel_basis_dimensions(torus_grid, square_handles):
    assert gf2.kernel_basis(torus_grid.incidence_matrix).nrows == 6
    assert gf2.kernel_basis(square_handles.incidence_matrix).nrows == 3
    assert gf2.kernel_basis(mat([[1, 0], [0, 1]])).nrows == 0


def test_rank_nullity_and_kernel_orthogonality():
    rng = Random(11)
    for _ in range(50):
        m = random_matrix(rng, rng.randint(0, 7), rng.randint(1, 14))
        ker = gf2.kernel_basis(m)
        assert gf2.rank(m) + ker.nrows == m.ncols
        for v in ker.rows:
            assert all(gf2.dot(row, v) == 0 for row in m.rows)
        # exhaustive converse on small kernels: members of the kernel space
        # are exactly the vectors annihilated by every row
        if ker.nrows <= 6:
            span = {0}
            for v in ker.rows:
                span |= {s ^ v for s in span}
            annihilated = {
                v for v in range(1 << m.ncols) if all(gf2.dot(r, v) == 0 for r in m.rows)
            } if m.ncols <= 10 else None
            if annihilated is not None:
                assert span == annihilated


def test_row_space_sum_dim(torus_grid, square_handles):
    assert gf2.row_space_sum_dim(torus_grid.incidence_matrix, torus_grid.dual_incidence_matrix) == 6
    assert (
        gf2.row_space_sum_dim(square_handles.incidence_matrix, square_handles.dual_incidence_matrix)
        == 5
    )
    m = mat([[1, 1, 0], [0, 1, 1]])
    assert gf2.row_space_sum_dim(m, m) == gf2.rank(m)


def test_row_space_sum_dim_mismatch():
    with pytest.raises(ValueError):
        gf2.row_space_sum_dim(GF2Matrix(3, (1,)), GF2Matrix(4, (1,)))


def test_intersection_basis_fixtures(torus_grid, square_handles):
    inter = gf2.row_space_intersection_basis(
        torus_grid.incidence_matrix, torus_grid.dual_incidence_matrix
    )
    assert inter.nrows == 1
    inter5 = gf2.row_space_intersection_basis(
        square_handles.incidence_matrix, square_handles.dual_incidence_matrix
    )
    assert inter5.nrows == 1


def test_intersection_with_itself():
    m = mat([[1, 0, 1], [0, 1, 1]])
    assert gf2.row_space_intersection_basis(m, m).nrows == gf2.rank(m)


def test_intersection_dimension_identity():
    rng = Random(23)
    for _ in range(50):
        n = rng.randint(1, 10)
        a = random_matrix(rng, rng.randint(0, 6), n)
        b = random_matrix(rng, rng.randint(0, 6), n)
        inter = gf2.row_space_intersection_basis(a, b)
        assert gf2.row_space_sum_dim(a, b) == gf2.rank(a) + gf2.rank(b) - inter.nrows
        for v in inter.rows:
            assert gf2.in_row_space(a, v) and gf2.in_row_space(b, v)


def test_in_row_space(torus_grid, square_handles):
    inc = torus_grid.incidence_matrix
    assert gf2.in_row_space(inc, 0)
    others = GF2Matrix(inc.ncols, inc.rows[1:])
    assert gf2.in_row_space(others, inc.rows[0])
    # first standard basis vector vs the dual rows of the 6-vertex fixture:
    # its row space is {0, 11110000}, checked exhaustively
    dual = square_handles.dual_incidence_matrix
    combos = {0}
    for r in dual.rows:
        combos |= {c ^ r for c in combos}
    assert 1 not in combos
    assert not gf2.in_row_space(dual, 1)


def test_in_row_space_length_check():
    with pytest.raises(ValueError):
        gf2.in_row_space(GF2Matrix(3, (0b101,)), 1 << 5)


def test_vector_string_roundtrip():
    assert gf2.vector_from_string("1101") == 0b1011
    assert gf2.vector_to_string(0b1011, 4) == "1101"
    with pytest.raises(ValueError):
        gf2.vector_from_string("10x")
    with pytest.raises(ValueError):
        gf2.vector_to_string(0b100, 2)


def test_transpose():
    m = mat([[1, 1, 0], [0, 1, 1]])
    t = gf2.transpose(m)
    assert t.nrows == 3 and t.ncols == 2
    assert t.row_strings() == ["10", "11", "01"]


def test_from_strings():
    m = GF2Matrix.from_strings(["110", "011"])
    assert m.row_strings() == ["110", "011"]
    with pytest.raises(ValueError):
        GF2Matrix.from_strings(["10", "011"])
    assert GF2Matrix.from_strings([], ncols=4).nrows == 0


def test_matrix_rejects_out_of_range_rows():
    with pytest.raises(ValueError):
        GF2Matrix(2, (0b100,))
