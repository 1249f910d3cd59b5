"""Exact linear algebra: frozen examples plus randomized cross-checks.

The randomized rank tests compare the fraction-free engine against a naive
Gaussian elimination over Fraction written independently here, so the two
share no code path.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2forms.linalg import (
    ExactMatrix,
    apply_power,
    commutator,
    dot,
    identity,
    kron,
    mat_vec,
    null_space,
    rank,
    zeros,
)

scalars = st.one_of(
    st.integers(min_value=-6, max_value=6),
    st.fractions(
        min_value=-4, max_value=4, max_denominator=5
    ),
)


def matrices(max_dim: int = 5):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda r: st.integers(min_value=1, max_value=max_dim).flatmap(
            lambda c: st.lists(
                st.lists(scalars, min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            ).map(ExactMatrix.from_rows)
        )
    )


def naive_rank(a: ExactMatrix) -> int:
    """Plain fractional Gaussian elimination, used as an oracle only."""
    m = [[Fraction(x) for x in row] for row in a.entries]
    r = 0
    for c in range(a.cols):
        p = next((i for i in range(r, a.rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(a.rows):
            if i != r and m[i][c]:
                f = m[i][c] / piv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


class TestShapes:
    def test_bad_row_count_rejected(self):
        with pytest.raises(ValueError):
            ExactMatrix(2, 2, ((1, 0),))

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            ExactMatrix(2, 2, ((1, 0), (1,)))

    def test_shape_mismatch_in_add(self):
        with pytest.raises(ValueError):
            identity(2) + zeros(2, 3)

    def test_shape_mismatch_in_matmul(self):
        with pytest.raises(ValueError):
            zeros(2, 3) @ zeros(2, 3)

    def test_transpose_of_empty_shapes(self):
        a = zeros(0, 3)
        assert a.transpose.rows == 3 and a.transpose.cols == 0
        assert a.transpose.transpose == a


class TestArithmetic:
    def test_matmul_small(self):
        a = ExactMatrix.from_rows([[1, 2], [3, 4]])
        b = ExactMatrix.from_rows([[0, 1], [1, 0]])
        assert (a @ b).entries == ((2, 1), (4, 3))

    def test_identity_is_neutral(self):
        a = ExactMatrix.from_rows([[Fraction(1, 2), 3], [0, -7]])
        assert (identity(2) @ a).entries == a.entries
        assert (a @ identity(2)).entries == a.entries

    def test_commutator_antisymmetry(self):
        a = ExactMatrix.from_rows([[0, 1], [0, 0]])
        b = ExactMatrix.from_rows([[0, 0], [1, 0]])
        h = commutator(a, b)
        assert h.entries == ((1, 0), (0, -1))
        assert commutator(b, a).entries == ((-1, 0), (0, 1))

    def test_mat_vec_matches_matmul(self):
        a = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        v = (Fraction(1, 2), 0, -1)
        col = a @ ExactMatrix.from_rows([[x] for x in v])
        assert mat_vec(a, v) == tuple(row[0] for row in col.entries)

    def test_apply_power(self):
        shift = ExactMatrix.from_rows([[0, 0], [1, 0]])
        assert apply_power(shift, (1, 0), 0) == (1, 0)
        assert apply_power(shift, (1, 0), 1) == (0, 1)
        assert apply_power(shift, (1, 0), 2) == (0, 0)
        with pytest.raises(ValueError):
            apply_power(shift, (1, 0), -1)

    def test_dot(self):
        assert dot((1, 2), (3, Fraction(1, 2))) == 4
        with pytest.raises(ValueError):
            dot((1,), (1, 2))

    def test_kron_block_layout(self):
        a = ExactMatrix.from_rows([[1, 2], [3, 4]])
        b = ExactMatrix.from_rows([[0, 5], [6, 7]])
        k = kron(a, b)
        assert k.rows == 4 and k.cols == 4
        assert k.entries[0] == (0, 5, 0, 10)
        assert k.entries[1] == (6, 7, 12, 14)
        assert k.entries[2] == (0, 15, 0, 20)
        assert k.entries[3] == (18, 21, 24, 28)


class TestRankAndKernel:
    def test_rank_identity(self):
        assert rank(identity(4)) == 4

    def test_rank_zero_matrix(self):
        assert rank(zeros(3, 5)) == 0

    def test_rank_rank_one(self):
        a = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6], [-1, -2, -3]])
        assert rank(a) == 1

    def test_null_space_of_ones(self):
        a = ExactMatrix.from_rows([[1, 1], [1, 1]])
        assert null_space(a) == [(Fraction(1), Fraction(-1))]

    def test_null_space_of_zero_row(self):
        a = zeros(1, 2)
        assert null_space(a) == [
            (Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(1)),
        ]

    def test_null_space_of_identity_is_empty(self):
        assert null_space(identity(3)) == []

    def test_null_space_normalization(self):
        a = ExactMatrix.from_rows([[2, 6]])
        (v,) = null_space(a)
        assert v[0] == 1 and v == (Fraction(1), Fraction(-1, 3))

    def test_fractional_entries(self):
        a = ExactMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)]])
        (v,) = null_space(a)
        assert v[0] == 1
        assert mat_vec(a, v) == (0,)

    @settings(max_examples=60)
    @given(matrices())
    def test_rank_agrees_with_naive_elimination(self, a):
        assert rank(a) == naive_rank(a)

    @settings(max_examples=60)
    @given(matrices())
    def test_kernel_vectors_are_killed(self, a):
        basis = null_space(a)
        assert len(basis) == a.cols - rank(a)
        zero = tuple([0] * a.rows)
        for v in basis:
            assert mat_vec(a, v) == zero
            assert next(x for x in v if x) == 1

    @settings(max_examples=40)
    @given(matrices(max_dim=4), matrices(max_dim=4))
    def test_kron_rank_is_multiplicative(self, a, b):
        assert rank(kron(a, b)) == rank(a) * rank(b)

    @settings(max_examples=40)
    @given(matrices())
    def test_transpose_preserves_rank(self, a):
        assert rank(a.transpose) == rank(a)
