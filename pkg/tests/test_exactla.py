from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from springercenter.exactla import (
    SparseMatrix, RowReducer, rank, kernel_dim, kernel_basis,
    CochainComplex, NotAComplex,
)


def dense(mat):
    out = [[0] * mat.ncols for _ in range(mat.nrows)]
    for (r, c), v in mat.entries.items():
        out[r][c] = v
    return out


small_fraction = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def sparse_matrices(draw, max_dim=6):
    nrows = draw(st.integers(0, max_dim))
    ncols = draw(st.integers(0, max_dim))
    entries = {}
    if nrows and ncols:
        count = draw(st.integers(0, nrows * ncols))
        for _ in range(count):
            r = draw(st.integers(0, nrows - 1))
            c = draw(st.integers(0, ncols - 1))
            v = draw(small_fraction)
            if v:
                entries[(r, c)] = v
    return SparseMatrix(nrows, ncols, entries)


@given(sparse_matrices())
@settings(max_examples=60, deadline=None)
def test_rank_matches_sympy(mat):
    expected = sympy.Matrix(mat.nrows, mat.ncols,
                            lambda r, c: mat.entries.get((r, c), 0)).rank() \
        if mat.nrows and mat.ncols else 0
    assert rank(mat) == expected


@given(sparse_matrices())
@settings(max_examples=60, deadline=None)
def test_kernel_basis_spans_kernel(mat):
    basis = kernel_basis(mat)
    assert len(basis) == kernel_dim(mat)
    assert kernel_dim(mat) == mat.ncols - rank(mat)
    for vec in basis:
        image = mat.apply(vec)
        assert not image, "kernel vector has nonzero image"
    # the basis vectors are linearly independent
    red = RowReducer()
    added = 0
    for vec in basis:
        added += red.add(vec)
    assert added == len(basis)


@given(sparse_matrices(), sparse_matrices())
@settings(max_examples=40, deadline=None)
def test_matmul_matches_dense(a, b):
    if a.ncols != b.nrows:
        b = SparseMatrix(a.ncols, b.ncols, {
            (r, c): v for (r, c), v in b.entries.items() if r < a.ncols})
    prod = a.matmul(b)
    da, db = dense(a), dense(b)
    for r in range(prod.nrows):
        for c in range(prod.ncols):
            want = sum(da[r][t] * db[t][c] for t in range(a.ncols))
            assert prod.entries.get((r, c), 0) == want


def test_row_reducer_reduces_spanned_vectors_to_zero():
    red = RowReducer()
    red.add({0: Fraction(1), 1: Fraction(2)})
    red.add({1: Fraction(1), 2: Fraction(-1)})
    combo = {0: Fraction(3), 1: Fraction(6 + 5), 2: Fraction(-5)}
    assert red.reduce(combo) == {}
    assert red.add(dict(combo)) == 0


def test_transpose_round_trip():
    mat = SparseMatrix(2, 3, {(0, 1): Fraction(2), (1, 2): Fraction(-1)})
    back = mat.transpose().transpose()
    assert back.nrows == 2 and back.ncols == 3
    assert back.entries == mat.entries


def test_complex_cohomology_exact_sequence():
    # 0 -> Q -> Q^2 -> Q -> 0 with the obvious maps is exact
    d0 = SparseMatrix(2, 1, {(0, 0): Fraction(1), (1, 0): Fraction(1)})
    d1 = SparseMatrix(1, 2, {(0, 0): Fraction(1), (0, 1): Fraction(-1)})
    cx = CochainComplex([1, 2, 1], [d0, d1])
    assert cx.cohomology_dims() == [0, 0, 0]


def test_complex_with_zero_maps_gives_dims():
    cx = CochainComplex([2, 3], [SparseMatrix(3, 2, {})])
    assert cx.cohomology_dims() == [2, 3]


def test_non_complex_is_rejected():
    d0 = SparseMatrix(1, 1, {(0, 0): Fraction(1)})
    d1 = SparseMatrix(1, 1, {(0, 0): Fraction(1)})
    with pytest.raises(NotAComplex):
        CochainComplex([1, 1, 1], [d0, d1]).check_complex()


@given(sparse_matrices())
@settings(max_examples=40, deadline=None)
def test_two_step_complex_euler_characteristic(mat):
    # pad with a zero map so that kernel/image bookkeeping is exercised
    cx = CochainComplex([mat.ncols, mat.nrows, 0],
                        [mat, SparseMatrix(0, mat.nrows, {})])
    h = cx.cohomology_dims()
    assert h[0] - h[1] + h[2] == mat.ncols - mat.nrows
