"""Exact rational linear algebra: scalars, row spaces, matrices."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2super.linalg import (
    Matrix,
    RowSpace,
    format_scalar,
    nullspace,
    parse_scalar,
    rank,
    rational_sqrt,
    rref,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------


def test_parse_scalar_accepts_common_forms():
    assert parse_scalar("3") == Fraction(3)
    assert parse_scalar("-9/4") == Fraction(-9, 4)
    assert parse_scalar(7) == Fraction(7)
    assert parse_scalar(Fraction(2, 6)) == Fraction(1, 3)


def test_parse_scalar_rejects_floats_and_garbage():
    # decimal strings are exact and parse; float objects are not and do not
    assert parse_scalar("1.5") == Fraction(3, 2)
    with pytest.raises(ValueError):
        parse_scalar("two")
    with pytest.raises(TypeError):
        parse_scalar(0.5)


def test_format_scalar_round_trip_and_shape():
    assert format_scalar(Fraction(-9, 4)) == "-9/4"
    assert format_scalar(Fraction(4, 2)) == "2"
    assert format_scalar(Fraction(0)) == "0"


@given(rationals)
def test_format_parse_round_trip(q):
    assert parse_scalar(format_scalar(q)) == q


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(25)) == Fraction(5)
    assert rational_sqrt(Fraction(0)) == Fraction(0)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-4)) is None
    assert rational_sqrt(Fraction(4, 7)) is None


@given(rationals)
def test_rational_sqrt_squares(q):
    r = rational_sqrt(q * q)
    assert r is not None and r * r == q * q and r >= 0


# ---------------------------------------------------------------------------
# RowSpace
# ---------------------------------------------------------------------------


def test_rowspace_add_and_contains():
    rs = RowSpace(3)
    assert rs.add({0: Fraction(1), 1: Fraction(2)})
    assert rs.add({1: Fraction(1)})
    # dependent row: (1,2,0) - 2*(0,1,0)
    assert not rs.add({0: Fraction(1)})
    assert rs.rank == 2
    assert rs.contains({0: Fraction(5), 1: Fraction(-3)})
    assert not rs.contains({2: Fraction(1)})


def test_rowspace_nullspace_canonical():
    # x0 + x1 = 0 over 3 columns: kernel has x2 free and x1 free
    rs = RowSpace(3)
    rs.add({0: Fraction(1), 1: Fraction(1)})
    basis = rs.nullspace()
    assert len(basis) == 2
    for vec in basis:
        # canonical convention: the free coordinate carries 1
        free = [j for j, v in enumerate(vec) if v == 1]
        assert free, vec
        assert vec[0] + vec[1] == 0


def test_rowspace_full_rank_has_trivial_kernel():
    rs = RowSpace(2)
    rs.add({0: Fraction(2)})
    rs.add({0: Fraction(1), 1: Fraction(3)})
    assert rs.rank == 2
    assert rs.nullspace() == []


@st.composite
def sparse_rows(draw, ncols):
    n = draw(st.integers(min_value=0, max_value=ncols))
    cols = draw(st.lists(st.integers(0, ncols - 1), min_size=n, max_size=n,
                         unique=True))
    return {c: draw(rationals.filter(bool)) for c in cols}


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_rowspace_nullspace_orthogonal_to_rows(data):
    ncols = data.draw(st.integers(min_value=1, max_value=6))
    rows = data.draw(st.lists(sparse_rows(ncols), max_size=6))
    rs = RowSpace(ncols)
    for row in rows:
        rs.add(row)
    kernel = rs.nullspace()
    assert rs.rank + len(kernel) == ncols
    for vec in kernel:
        for row in rows:
            assert sum(coef * vec[j] for j, coef in row.items()) == 0


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------


def test_matrix_construction_and_entry_access():
    m = Matrix([[1, 2], [3, "5/2"]])
    assert (m.nrows, m.ncols) == (2, 2)
    assert m.entry(1, 1) == Fraction(5, 2)
    assert m.row(0) == (Fraction(1), Fraction(2))
    assert m.column(1) == (Fraction(2), Fraction(5, 2))


def test_matrix_ragged_rows_rejected():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])


def test_matrix_apply_dense_and_sparse():
    m = Matrix([[1, 2], [0, -1], [3, 0]])
    assert m.apply([1, 1]) == (Fraction(3), Fraction(-1), Fraction(3))
    out = m.apply_sparse({1: Fraction(2)})
    assert out == {0: Fraction(4), 1: Fraction(-2)}


def test_matrix_transpose_stack_identity():
    m = Matrix([[1, 2, 3]])
    assert (m.transpose().nrows, m.transpose().ncols) == (3, 1)
    stacked = m.stack(Matrix([[4, 5, 6]]))
    assert (stacked.nrows, stacked.ncols) == (2, 3)
    assert Matrix.identity(3).apply([1, 2, 3]) == (
        Fraction(1), Fraction(2), Fraction(3))


def test_rref_known_matrix():
    m = Matrix([[1, 2, 1], [2, 4, 0], [0, 0, 1]])
    reduced, pivots = rref(m)
    assert pivots == [0, 2]
    assert reduced.rows()[0] == (Fraction(1), Fraction(2), Fraction(0))
    assert reduced.rows()[1] == (Fraction(0), Fraction(0), Fraction(1))
    assert rank(m) == 2


def test_nullspace_known_matrix():
    m = Matrix([[1, 2, 1], [2, 4, 0], [0, 0, 1]])
    kernel = nullspace(m)
    assert len(kernel) == 1
    vec = kernel[0]
    assert vec[1] == 1  # free column normalized to 1
    for i in range(3):
        assert sum(m.entry(i, j) * vec[j] for j in range(3)) == 0


matrix_strategy = st.integers(1, 5).flatmap(
    lambda ncols: st.lists(
        st.lists(rationals, min_size=ncols, max_size=ncols),
        min_size=1, max_size=5,
    )
).map(Matrix)


@given(matrix_strategy)
@settings(max_examples=60, deadline=None)
def test_rref_idempotent(m):
    reduced, pivots = rref(m)
    again, pivots2 = rref(reduced)
    assert again == reduced
    assert pivots2 == pivots


@given(matrix_strategy)
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m):
    nrows, ncols = m.nrows, m.ncols
    r = rank(m)
    assert 0 <= r <= min(nrows, ncols)
    kernel = nullspace(m)
    assert r + len(kernel) == ncols
    for vec in kernel:
        assert m.apply(vec) == tuple([Fraction(0)] * nrows)


@given(matrix_strategy)
@settings(max_examples=40, deadline=None)
def test_rank_invariant_under_transpose(m):
    assert rank(m) == rank(m.transpose())
