"""Composition law, embeddings, reductions, and the scaling factors."""

import numpy as np
import pytest

from multipole_witness.bipartite import (
    embed_in_product_basis,
    embedding_isometry,
    f_coefficient,
    f_factor,
    p_factor,
    product_moments,
    product_moments_oracle,
    reduce_to_subsystem,
    reduced_state,
    subsystem_scaling,
)
from multipole_witness.states import (
    coherent_state,
    dicke_state,
    maximally_mixed_state,
    moments_of,
    random_separable_mixture,
    random_symmetric_state,
)
from multipole_witness.tensors import tensor_operator


class TestEmbedding:
    def test_stretched_two_qubits(self):
        embedded = embed_in_product_basis(dicke_state(2, 1), 1, 1)
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.0
        assert np.max(np.abs(embedded - expected)) < 1e-14

    def test_triplet_zero_two_qubits(self):
        embedded = embed_in_product_basis(dicke_state(2, 0), 1, 1)
        vec = np.zeros(4)
        vec[1] = vec[2] = 1 / np.sqrt(2)
        assert np.max(np.abs(embedded - np.outer(vec, vec))) < 1e-14

    @pytest.mark.parametrize("n,n1", [(3, 1), (5, 2), (8, 4)])
    def test_isometry_and_trace(self, n, n1):
        v = embedding_isometry(n1, n - n1)
        assert np.max(np.abs(v.conj().T @ v - np.eye(n + 1))) < 1e-13
        state = random_symmetric_state(n, seed=n)
        embedded = embed_in_product_basis(state, n1, n - n1)
        assert np.trace(embedded) == pytest.approx(1.0, abs=1e-12)

    def test_partition_mismatch(self):
        with pytest.raises(ValueError):
            embed_in_product_basis(dicke_state(2, 1), 1, 2)


class TestReducedState:
    def test_full_reduction_is_identity_operation(self):
        state = random_symmetric_state(4, seed=0)
        assert reduced_state(state, 4) is state

    def test_stretched_reduces_to_stretched(self):
        red = reduced_state(dicke_state(5, 2.5), 2)
        assert np.max(np.abs(red.rho - dicke_state(2, 1).rho)) < 1e-13

    def test_coherent_reduces_to_coherent(self):
        theta, phi = 1.2, 0.4
        red = reduced_state(coherent_state(6, theta, phi), 3)
        assert np.max(np.abs(red.rho - coherent_state(3, theta, phi).rho)) < 1e-13

    def test_reduction_bounds(self):
        with pytest.raises(ValueError):
            reduced_state(dicke_state(3, 1.5), 0)
        with pytest.raises(ValueError):
            reduced_state(dicke_state(3, 1.5), 4)


class TestFCoefficient:
    def test_normalization_cell(self):
        for n1, n2 in [(1, 1), (2, 3), (4, 2)]:
            assert f_coefficient(0, 0, 0, 0, 0, 0, n1, n2) == pytest.approx(1.0, abs=1e-13)

    def test_selection_rules(self):
        assert f_coefficient(1, 1, 1, 1, 2, 1, 2, 2) == 0.0  # Q != q+q'
        assert f_coefficient(1, 1, 0, 0, 3, 0, 2, 2) == 0.0  # K out of range
        assert f_coefficient(1, 1, 1, 1, 1, 2, 2, 2) == 0.0  # |Q| > K

    def test_odd_rank_sum_vanishes(self):
        # identical first two rows of the recoupling symbol kill odd k+k'+K
        for n1, n2 in [(1, 1), (1, 2), (2, 2), (2, 3)]:
            assert f_coefficient(1, 1, 1, 0, 1, 1, n1, n2) == pytest.approx(0.0, abs=1e-15)

    def test_mean_route_equals_p_factor(self):
        # the (kappa, 0) coefficient at K = kappa reproduces the marginal factor
        for kappa, n1, n2 in [(1, 1, 1), (1, 2, 3), (2, 3, 2), (3, 3, 4)]:
            for q in range(-kappa, kappa + 1):
                got = f_coefficient(kappa, 0, q, 0, kappa, q, n1, n2)
                assert got == pytest.approx(p_factor(kappa, n1, n2), abs=1e-12)

    def test_direct_trace_small_case(self):
        # the coefficient is the embedded trace of the adjoint collective
        # tensor against the group product, divided by the state-space
        # normalization: F = Tr((tau x tau) tau_KQ^dag) / (N+1)
        v = embedding_isometry(1, 1)
        for q in (-1, 0, 1):
            for qp in (-1, 0, 1):
                big = v @ tensor_operator(2, 2, q + qp) @ v.conj().T
                direct = np.trace(
                    np.kron(tensor_operator(1, 1, q), tensor_operator(1, 1, qp)) @ big.conj().T
                )
                formula = f_coefficient(1, 1, q, qp, 2, q + qp, 1, 1)
                assert complex(direct) / 3 == pytest.approx(formula, abs=1e-12)


class TestProductMoments:
    @pytest.mark.parametrize("n,seeds", [(2, 3), (3, 3), (4, 3), (6, 2), (8, 2)])
    def test_matches_oracle(self, n, seeds):
        for seed in range(seeds):
            state = random_symmetric_state(n, seed=100 * n + seed)
            table = moments_of(state)
            for n1 in range(1, n):
                fast = product_moments(table, n1, n - n1)
                slow = product_moments_oracle(state, n1, n - n1)
                worst = max(abs(fast[key] - slow[key]) for key in fast.entries)
                assert worst < 1e-9

    def test_maximally_mixed_pattern(self):
        pm = product_moments(moments_of(maximally_mixed_state(4)), 2, 2)
        for (k, kp, q, qp), value in pm.entries.items():
            if (k, kp, q, qp) == (0, 0, 0, 0):
                continue
            if k != kp or qp != -q:
                assert abs(value) < 1e-13

    def test_dicke_supports_balanced_components_only(self):
        pm = product_moments(moments_of(dicke_state(4, 1)), 2, 2)
        for (k, kp, q, qp), value in pm.entries.items():
            if q + qp != 0:
                assert abs(value) < 1e-13

    def test_coherent_state_factorizes(self):
        theta, phi = 0.8, 1.9
        pm = product_moments_oracle(coherent_state(5, theta, phi), 2, 3)
        t1 = moments_of(coherent_state(2, theta, phi))
        t2 = moments_of(coherent_state(3, theta, phi))
        for (k, kp, q, qp), value in pm.entries.items():
            assert value == pytest.approx(t1[(k, q)] * t2[(kp, qp)], abs=1e-12)

    def test_separable_mixture_factorizes(self):
        state, mixture = random_separable_mixture(5, 3, seed=21)
        pm = product_moments(moments_of(state), 2, 3)
        worst = 0.0
        for (k, kp, q, qp), value in pm.entries.items():
            expected = sum(
                w
                * moments_of(coherent_state(2, th, ph))[(k, q)]
                * moments_of(coherent_state(3, th, ph))[(kp, qp)]
                for w, th, ph in zip(mixture.weights, mixture.thetas, mixture.phis)
            )
            worst = max(worst, abs(value - expected))
        assert worst < 1e-9

    def test_wrong_total_rejected(self):
        with pytest.raises(ValueError):
            product_moments(moments_of(dicke_state(3, 1.5)), 2, 2)

    def test_oracle_gate(self):
        with pytest.raises(ValueError):
            product_moments_oracle(maximally_mixed_state(13), 6, 7)


class TestReduceToSubsystem:
    def test_unit_normalization(self):
        pm = product_moments(moments_of(random_symmetric_state(4, seed=4)), 2, 2)
        for which in (1, 2):
            assert reduce_to_subsystem(pm, which)[(0, 0)] == pytest.approx(1.0, abs=1e-12)

    def test_matches_partial_trace_route(self):
        state = random_symmetric_state(5, seed=17)
        pm = product_moments(moments_of(state), 2, 3)
        direct1 = moments_of(reduced_state(state, 2))
        table1 = reduce_to_subsystem(pm, 1)
        assert all(abs(table1[key] - direct1[key]) < 1e-9 for key in table1.entries)
        # second group: permutation symmetry makes any 3-qubit reduction equal
        direct2 = moments_of(reduced_state(state, 3))
        table2 = reduce_to_subsystem(pm, 2)
        assert all(abs(table2[key] - direct2[key]) < 1e-9 for key in table2.entries)

    def test_coherent_marginals(self):
        theta, phi = 0.5, 0.1
        pm = product_moments(moments_of(coherent_state(5, theta, phi)), 2, 3)
        expected = moments_of(coherent_state(2, theta, phi))
        got = reduce_to_subsystem(pm, 1)
        assert all(abs(got[key] - expected[key]) < 1e-10 for key in got.entries)

    def test_stretched_dicke_marginal(self):
        pm = product_moments(moments_of(dicke_state(4, 2)), 1, 3)
        got = reduce_to_subsystem(pm, 1)
        expected = moments_of(dicke_state(1, 0.5))
        assert all(abs(got[key] - expected[key]) < 1e-12 for key in got.entries)

    def test_bad_selector(self):
        pm = product_moments(moments_of(dicke_state(2, 1)), 1, 1)
        with pytest.raises(ValueError):
            reduce_to_subsystem(pm, 3)


class TestPFactor:
    def test_rank_zero_is_one(self):
        for n1, n2 in [(1, 1), (2, 5), (4, 3)]:
            assert p_factor(0, n1, n2) == pytest.approx(1.0, abs=1e-15)

    def test_empty_second_group_is_one(self):
        for kappa, n1 in [(0, 2), (1, 3), (3, 3)]:
            assert p_factor(kappa, n1, 0) == pytest.approx(1.0, abs=1e-15)

    def test_single_qubit_value(self):
        assert p_factor(1, 1, 1) == pytest.approx(np.sqrt(2 / 3), abs=1e-15)

    def test_rank_beyond_group_rejected(self):
        with pytest.raises(ValueError):
            p_factor(3, 2, 2)

    @pytest.mark.parametrize("n,n1", [(4, 1), (5, 2), (6, 3)])
    def test_marginal_identity_on_random_states(self, n, n1):
        # t[k, 0, q, 0](n1, n2) = p_factor(k, n1, n2) t[k, q](N)
        state = random_symmetric_state(n, seed=50 + n)
        table = moments_of(state)
        pm = product_moments(table, n1, n - n1)
        for kappa in range(1, n1 + 1):
            factor = p_factor(kappa, n1, n - n1)
            for q in range(-kappa, kappa + 1):
                assert pm[(kappa, 0, q, 0)] == pytest.approx(
                    factor * table[(kappa, q)], abs=1e-9
                )


class TestSubsystemScaling:
    def test_equal_groups_is_one(self):
        assert subsystem_scaling(2, 4, 4) == 1.0

    def test_nested_single_qubit(self):
        assert subsystem_scaling(1, 1, 2) == pytest.approx(np.sqrt(2 / 3), abs=1e-15)

    def test_order_validation(self):
        with pytest.raises(ValueError):
            subsystem_scaling(1, 3, 2)

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_reduction_chain_identity(self, n):
        # moments of the small reduction = factor * moments of the larger one
        state = random_symmetric_state(n, seed=60 + n)
        for n1, n2 in [(1, 2), (2, 3), (2, n // 2)]:
            if n2 > n:
                continue
            small = moments_of(reduced_state(state, n1))
            large = moments_of(reduced_state(state, n2))
            for kappa in range(1, n1 + 1):
                factor = subsystem_scaling(kappa, n1, n2)
                for q in range(-kappa, kappa + 1):
                    assert small[(kappa, q)] == pytest.approx(
                        factor * large[(kappa, q)], abs=1e-9
                    )


class TestFFactor:
    def test_equal_rank_is_one(self):
        for kappa in range(5):
            assert f_factor(kappa, kappa) == pytest.approx(1.0, abs=1e-15)

    def test_reciprocal_of_nesting_factor(self):
        # growing one group from kappa to n divides its moments by the
        # nesting factor, hence f(n, kappa) = 1/p_factor(kappa, kappa, n-kappa)
        for n_alpha, kappa in [(2, 1), (3, 1), (4, 2), (6, 3)]:
            assert f_factor(n_alpha, kappa) == pytest.approx(
                1.0 / p_factor(kappa, kappa, n_alpha - kappa), abs=1e-12
            )

    def test_frozen_values(self):
        assert f_factor(2, 1) == pytest.approx(np.sqrt(3 / 2), abs=1e-15)
        assert f_factor(3, 1) == pytest.approx(np.sqrt(9 / 5), abs=1e-15)

    def test_rank_beyond_group_rejected(self):
        with pytest.raises(ValueError):
            f_factor(1, 2)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_group_scaling_identity_oracle(self, n):
        # t[k, k', q, q'](n1, n2) = f(n1,k) f(n2,k') t[k, k', q, q'](k, k')
        # with the right side on the (k+k')-qubit reduction; both sides by
        # direct trace.
        state = random_symmetric_state(n, seed=70 + n)
        for n1 in range(1, n):
            n2 = n - n1
            big = product_moments_oracle(state, n1, n2)
            for kappa in range(1, n1 + 1):
                for kappa_p in range(1, n2 + 1):
                    small = product_moments_oracle(
                        reduced_state(state, kappa + kappa_p), kappa, kappa_p
                    )
                    factor = f_factor(n1, kappa) * f_factor(n2, kappa_p)
                    for q in range(-kappa, kappa + 1):
                        for qp in range(-kappa_p, kappa_p + 1):
                            assert big[(kappa, kappa_p, q, qp)] == pytest.approx(
                                factor * small[(kappa, kappa_p, q, qp)], abs=1e-9
                            )
