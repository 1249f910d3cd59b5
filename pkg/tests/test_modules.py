"""Weight modules: action conventions, bracket relations, tensor products,
decomposition.  Frozen examples are hand substitutions into the action
formulas; sweeps re-derive the Clebsch-Gordan pattern."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2forms.linalg import ExactMatrix
from sl2forms.modules import (
    ModuleVector,
    act,
    check_relations,
    decompose,
    format_vector,
    irreducible,
    perturbed,
    tensor_of_irreducibles,
    tensor_product,
    weight_space_basis,
    weight_space_indices,
)

small_m = st.integers(min_value=0, max_value=8)


def basis_vector(module, j):
    coords = [0] * module.dim
    coords[j] = 1
    return ModuleVector(module, tuple(coords))


class TestIrreducible:
    def test_m0_all_operators_zero(self):
        v = irreducible(0)
        assert v.dim == 1 and v.weights == (0,)
        assert v.actX.entries == ((0,),)
        assert v.actY.entries == ((0,),)
        assert v.actH.entries == ((0,),)

    def test_m1_actions(self):
        v = irreducible(1)
        assert v.weights == (-1, 1)
        e_minus, e_plus = basis_vector(v, 0), basis_vector(v, 1)
        assert act(v, "X", e_minus) == e_plus
        assert act(v, "Y", e_plus) == e_minus
        assert act(v, "Y", e_minus).is_zero()
        assert act(v, "X", e_plus).is_zero()

    def test_m2_actions(self):
        v = irreducible(2)
        e = [basis_vector(v, j) for j in range(3)]
        assert act(v, "X", e[0]).coords == (0, 2, 0)
        assert act(v, "X", e[1]).coords == (0, 0, 2)
        assert act(v, "H", e[1]).is_zero()
        assert act(v, "H", e[2]).coords == (0, 0, 2)

    def test_h_is_diagonal_with_weights(self):
        for m in range(7):
            v = irreducible(m)
            for i, row in enumerate(v.actH.entries):
                for j, entry in enumerate(row):
                    assert entry == (v.weights[i] if i == j else 0)

    def test_negative_m_rejected(self):
        with pytest.raises(ValueError):
            irreducible(-1)

    def test_basis_names(self):
        assert irreducible(2).basis_names == ("e_{-2}", "e_{0}", "e_{2}")
        assert irreducible(1, "ẽ").basis_names == ("ẽ_{-1}", "ẽ_{1}")

    def test_unknown_generator_rejected(self):
        v = irreducible(1)
        with pytest.raises(ValueError):
            act(v, "Z", basis_vector(v, 0))

    def test_module_mismatch_rejected(self):
        with pytest.raises(ValueError):
            act(irreducible(2), "X", basis_vector(irreducible(3), 0))


class TestRelations:
    @given(small_m)
    def test_irreducible_satisfies_brackets(self, m):
        assert check_relations(irreducible(m)).ok

    def test_relations_on_moderate_tensor(self):
        assert check_relations(tensor_of_irreducibles(2, 3)).ok

    @settings(max_examples=25)
    @given(small_m, small_m)
    def test_tensor_satisfies_brackets(self, m, n):
        assert check_relations(tensor_of_irreducibles(m, n)).ok

    def test_corrupted_module_fails(self):
        bad = perturbed(irreducible(3), "X", 0, 0, 1)
        report = check_relations(bad)
        assert not report.ok
        assert "[H,X]=2X" in report.failures

    def test_corrupted_tensor_fails(self):
        bad = perturbed(tensor_of_irreducibles(1, 2), "Y", 2, 0, 1)
        assert not check_relations(bad).ok


class TestTensor:
    def test_v1_v1_weights(self):
        t = tensor_of_irreducibles(1, 1)
        assert t.dim == 4
        assert sorted(t.weights) == [-2, 0, 0, 2]

    def test_v0_tensor_is_relabeling(self):
        t = tensor_product(irreducible(0), irreducible(4, "ẽ"))
        v = irreducible(4)
        assert t.weights == v.weights
        assert t.actX.entries == v.actX.entries
        assert t.actY.entries == v.actY.entries
        assert t.actH.entries == v.actH.entries

    def test_lowest_weight_vector_killed(self):
        t = tensor_of_irreducibles(2, 3)
        assert t.dim == 12
        assert act(t, "Y", basis_vector(t, 0)).is_zero()

    def test_label_and_names(self):
        t = tensor_of_irreducibles(1, 2)
        assert t.label == "V_1⊗V_2"
        assert t.basis_names[0] == "e_{-1}⊗ẽ_{-2}"
        assert t.basis_names[-1] == "e_{1}⊗ẽ_{2}"

    @settings(max_examples=20)
    @given(small_m, small_m)
    def test_weights_add_lexicographically(self, m, n):
        t = tensor_of_irreducibles(m, n)
        a, b = irreducible(m), irreducible(n)
        assert t.weights == tuple(wa + wb for wa in a.weights for wb in b.weights)

    @settings(max_examples=20)
    @given(small_m, small_m)
    def test_x_and_y_shift_weight_by_two(self, m, n):
        t = tensor_of_irreducibles(m, n)
        for j, entries in enumerate(t.actX.nonzero_cols):
            for i, _ in entries:
                assert t.weights[i] == t.weights[j] + 2
        for j, entries in enumerate(t.actY.nonzero_cols):
            for i, _ in entries:
                assert t.weights[i] == t.weights[j] - 2


class TestWeightSpaces:
    def test_zero_weight_space_of_v1_v1(self):
        t = tensor_of_irreducibles(1, 1)
        vecs = weight_space_basis(t, 0)
        assert [t.basis_names[v.coords.index(1)] for v in vecs] == [
            "e_{-1}⊗ẽ_{1}",
            "e_{1}⊗ẽ_{-1}",
        ]

    def test_lowest_weight_space_is_unique(self):
        for m, n in [(0, 0), (2, 3), (4, 1)]:
            t = tensor_of_irreducibles(m, n)
            assert weight_space_indices(t, -m - n) == (0,)

    def test_missing_weight_gives_empty(self):
        assert weight_space_basis(irreducible(1), 0) == []

    @settings(max_examples=20)
    @given(small_m, small_m)
    def test_singular_weight_spaces_have_dimension_k_plus_1(self, m, n):
        t = tensor_of_irreducibles(m, n)
        for k in range(min(m, n) + 1):
            assert len(weight_space_indices(t, -m - n + 2 * k)) == k + 1


class TestDecompose:
    def test_frozen_examples(self):
        assert decompose(tensor_of_irreducibles(1, 1)).summands == ((0, 1), (2, 1))
        assert decompose(tensor_of_irreducibles(2, 3)).summands == (
            (1, 1),
            (3, 1),
            (5, 1),
        )
        assert decompose(irreducible(4)).summands == ((4, 1),)

    @settings(max_examples=30)
    @given(small_m, small_m)
    def test_clebsch_gordan_pattern(self, m, n):
        report = decompose(tensor_of_irreducibles(m, n))
        assert report.summands == tuple(
            (j, 1) for j in range(abs(m - n), m + n + 1, 2)
        )
        assert sum(mult * (j + 1) for j, mult in report.summands) == (m + 1) * (n + 1)

    def test_inconsistent_weights_rejected(self):
        broken = irreducible(2)
        from dataclasses import replace

        lopsided = replace(broken, weights=(2, 2, 0), label="broken")
        with pytest.raises(ValueError):
            decompose(lopsided)


class TestFormatVector:
    def test_plain_combination(self):
        t = tensor_of_irreducibles(1, 1)
        assert (
            format_vector(t, (0, 1, -1, 0)) == "e_{-1}⊗ẽ_{1} - e_{1}⊗ẽ_{-1}"
        )

    def test_scalar_coefficients(self):
        from fractions import Fraction

        v = irreducible(2)
        assert format_vector(v, (2, 0, Fraction(-1, 2))) == "2·e_{-2} - 1/2·e_{2}"
        assert format_vector(v, (0, 0, 0)) == "0"
        assert format_vector(v, (-1, 0, 0)) == "-e_{-2}"
