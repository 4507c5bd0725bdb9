import numpy as np
import pytest

from semicircleqm import evolution, oracle
from semicircleqm.evolution import (
    CoeffKind,
    Generator,
    build_coeff_table,
    char_function,
    char_function_catalan_series,
    coeff_I,
    coeff_I2,
    coeff_I2_series,
    coeff_I_series,
    element_table,
    evolve_H1,
    evolve_P,
    evolve_P2_level1,
    evolve_P2_vacuum,
    evolve_P_pointwise,
    evolve_X,
    evolve_X_vacuum_pointwise,
    heisenberg_aplus_P,
    heisenberg_aplus_P2,
    matrix_element_P,
    state_char_function,
)
from semicircleqm.exceptions import DomainError, TruncationError
from semicircleqm.fock import build_creation, build_momentum, build_position
from semicircleqm.specfun import bessel_j, bessel_j_ratio


def momentum_oracle_column(t, k, dim):
    mat, _, _ = oracle.expm_matrix(build_momentum(dim), 1j * t)
    return mat[:, k]


class TestCoeffI:
    def test_vacuum_entry_is_bessel_ratio(self):
        for t in (0.3, 1.0, 2.5):
            assert abs(coeff_I(0, 0, t) - bessel_j_ratio(0, t)) <= 1e-14

    def test_time_zero_delta(self):
        assert coeff_I(0, 0, 0.0) == 1.0
        assert coeff_I(2, 1, 0.0) == 0.0
        assert coeff_I(0, 3, 0.0) == 0.0

    def test_one_one_value(self):
        # -3 J_3(1.4)/0.7 from the high-precision series
        got = coeff_I(1, 1, 0.7)
        assert abs(got - (-0.21641877123836266)) <= 1e-14
        assert abs(coeff_I_series(1, 1, 0.7) - got) <= 1e-13

    @pytest.mark.parametrize("t", [0.25, 0.8, 2.0, 4.0])
    def test_symmetry_relations_from_series_alone(self, t):
        # both reflections computed from the defining series independently
        for m in range(0, 21):
            for n in range(0, 21 - m):
                base = coeff_I_series(m, n, t)
                assert abs(base - (-1.0) ** m * coeff_I_series(0, m + n, t)) <= 1e-12
                assert abs(base - (-1.0) ** n * coeff_I_series(m + n, 0, t)) <= 1e-12

    def test_argument_cap(self):
        with pytest.raises(DomainError):
            coeff_I(0, 0, 17.0)

    def test_route_disagreement_is_detected(self, monkeypatch):
        from semicircleqm.exceptions import CrossCheckError

        monkeypatch.setattr(evolution, "_i0_bessel", lambda s, t: 0.123)
        with pytest.raises(CrossCheckError):
            coeff_I(0, 0, 1.0)


class TestMatrixElements:
    def test_column_from_vacuum(self):
        t = 1.3
        for l in range(6):
            want = (-1.0) ** l * (l + 1) * bessel_j(l + 1, 2 * t).value / t
            assert abs(matrix_element_P(l, 0, t) - want) <= 1e-13

    def test_identity_at_time_zero(self):
        for l, k in ((0, 0), (2, 2), (3, 1), (1, 4)):
            assert matrix_element_P(l, k, 0.0) == (1.0 if l == k else 0.0)

    def test_against_matrix_exponential(self):
        t = 1.2
        col = momentum_oracle_column(t, 3, oracle.truncation_level(t, 3, 1e-10))
        assert abs(matrix_element_P(2, 3, t) - col[2]) <= 1e-9

    def test_transpose_symmetry(self):
        # the group element table is symmetric up to a sign flip of l-k
        t = 0.9
        for l in range(5):
            for k in range(5):
                assert abs(
                    matrix_element_P(l, k, t) - (-1.0) ** (l - k) * matrix_element_P(k, l, t)
                ) <= 1e-13

    def test_time_reversal_is_adjoint(self):
        t = 0.8
        u_pos = element_table("P", t, 10)
        u_neg = element_table("P", -t, 10)
        assert np.max(np.abs(u_neg - u_pos.conj().T)) <= 1e-13


class TestEvolveP:
    def test_time_zero_is_identity(self):
        state = evolve_P(0, 0.0)
        assert state.amplitudes[0] == 1.0
        assert np.all(state.amplitudes[1:] == 0)

    def test_unit_norm_and_oracle_match(self):
        state = evolve_P(0, 1.0, l_max=40, tol=1e-10)
        assert state.norm_defect() <= 1e-8
        col = momentum_oracle_column(1.0, 0, 64)
        assert np.max(np.abs(state.amplitudes - col[:41])) <= 1e-8

    def test_pointwise_closed_form(self):
        for (k, t, x) in ((3, 0.5, 0.4), (0, 1.0, -1.1), (2, 2.0, 1.3)):
            state = evolve_P(k, t, tol=1e-12)
            assert abs(state.evaluate(x) - evolve_P_pointwise(k, t, x, tol=1e-12)) <= 1e-10

    def test_truncation_guard(self):
        with pytest.raises(TruncationError):
            evolve_P(0, 2.0, l_max=3, tol=1e-10)

    def test_tail_index_recorded(self):
        state = evolve_P(2, 1.5, tol=1e-9)
        assert state.tail_index >= 1
        assert state.amplitudes.size == state.k + state.tail_index + 1


class TestEvolveX:
    def test_time_zero_is_identity(self):
        state = evolve_X(3, 0.0, l_max=6)
        want = np.zeros(7, dtype=complex)
        want[3] = 1.0
        assert np.allclose(state.amplitudes, want)

    def test_vacuum_pointwise_formula(self):
        t, x = 0.8, 1.1
        want = np.exp(1j * t * x) - 1j * x * bessel_j(1, 2 * t).value
        assert abs(evolve_X_vacuum_pointwise(t, x) - want) <= 1e-15

    def test_vacuum_amplitudes_sum_to_plane_wave(self):
        # the position operator is multiplication, so the evolved vacuum
        # is exactly e^(itx); the first-kind reassembly differs from it
        # by its removed order-one term i x J_1(2t)
        for t in (0.4, 1.7):
            state = evolve_X(0, t, tol=1e-12)
            j1 = bessel_j(1, 2 * t).value
            for x in (-1.5, 0.2, 0.9):
                assert abs(state.evaluate(x) - np.exp(1j * t * x)) <= 1e-10
                assert abs(state.evaluate(x) - evolve_X_vacuum_pointwise(t, x) - 1j * x * j1) <= 1e-10

    def test_against_matrix_exponential(self):
        t = 0.6
        dim = oracle.truncation_level(t, 1, 1e-10, generator="X")
        mat, _, _ = oracle.expm_matrix(build_position(dim), 1j * t)
        state = evolve_X(1, t, l_max=40, tol=1e-10)
        top = min(41, dim)
        assert np.max(np.abs(state.amplitudes[:top] - mat[:top, 1])) <= 1e-8

    def test_unit_norm(self):
        for t in (0.5, 2.0):
            assert evolve_X(4, t, tol=1e-12).norm_defect() <= 1e-9


class TestCharFunctions:
    def test_time_zero(self):
        assert char_function(Generator.P, 0.0) == 1.0

    def test_value_at_one(self):
        assert abs(char_function("P", 1.0) - 0.5767248077568734) <= 1e-15

    def test_equal_for_position_and_momentum(self):
        for t in (0.3, 1.1, 3.7):
            assert char_function("P", t) == char_function("X", t)

    def test_against_quadrature(self):
        for t in np.linspace(0.0, 4.0, 21):
            got = char_function("P", float(t))
            want = oracle.char_function_quadrature(float(t), 256)
            assert abs(got - want) <= 1e-10

    def test_catalan_series_route(self):
        for t in np.linspace(0.1, 8.0, 12):
            assert abs(char_function("P", float(t)) - char_function_catalan_series(float(t))) <= 1e-12

    def test_state_char_vacuum(self):
        for t in (0.5, 1.5):
            assert abs(state_char_function(0, t) - char_function("P", t)) <= 1e-15

    def test_state_char_at_time_zero(self):
        for l in (0, 1, 5):
            assert state_char_function(l, 0.0) == 1.0

    def test_state_char_against_oracle(self):
        t, l = 1.3, 2
        dim = oracle.truncation_level(t, l, 1e-10)
        mat, _, _ = oracle.expm_matrix(build_momentum(dim), 1j * t)
        assert abs(state_char_function(l, t) - mat[l, l]) <= 1e-9

    def test_rejects_kinetic_generator(self):
        with pytest.raises(DomainError):
            char_function("P2", 1.0)


class TestKineticCoefficients:
    def test_vacuum_entry_is_hypergeometric(self):
        from semicircleqm.specfun import hyp1f1

        for t in (0.2, 0.9):
            want = hyp1f1(0.5, 2.0, 4j * t).value
            assert abs(coeff_I2(0, 0, t) - want) <= 1e-13

    def test_odd_orders_vanish(self):
        assert coeff_I2(1, 0, 0.7) == 0j
        assert coeff_I2(0, 3, 0.7) == 0j

    def test_series_route_agrees(self):
        for t in (0.25, 1.0, 2.0):
            for m in range(0, 7):
                for n in range(0, 7 - m):
                    if (m + n) % 2 == 0:
                        assert abs(coeff_I2(m, n, t) - coeff_I2_series(m, n, t)) <= 1e-11

    def test_reflection_symmetry(self):
        for t in (0.4, 1.5):
            for m in range(0, 6):
                for n in range(0, 6 - m):
                    base = coeff_I2_series(m, n, t)
                    assert abs(base - (-1) ** m * coeff_I2_series(0, m + n, t)) <= 1e-12
                    assert abs(base - (-1) ** n * coeff_I2_series(m + n, 0, t)) <= 1e-12

    def test_against_matrix_exponential(self):
        t = 0.4
        dim = oracle.truncation_level(t, 0, 1e-10, generator="P2")
        p = build_momentum(dim)
        mat, _, _ = oracle.expm_matrix(p @ p, 1j * t)
        assert abs(coeff_I2(0, 2, t) - mat[2, 0]) <= 1e-9


class TestEvolveP2:
    def test_time_zero(self):
        state = evolve_P2_vacuum(0.0)
        assert state.amplitudes[0] == 1.0
        assert np.all(state.amplitudes[1:] == 0)

    def test_ground_amplitude_is_coefficient(self):
        for t in (0.2, 0.7):
            state = evolve_P2_vacuum(t, tol=1e-11)
            assert abs(state.amplitudes[0] - coeff_I2(0, 0, t)) <= 1e-14

    def test_even_support(self):
        state = evolve_P2_vacuum(0.5, tol=1e-11)
        assert np.all(state.amplitudes[1::2] == 0)

    def test_unit_norm(self):
        for t in (0.3, 1.0, 2.0):
            assert evolve_P2_vacuum(t, tol=1e-12).norm_defect() <= 1e-9

    def test_vacuum_against_oracle(self):
        t = 0.3
        dim = oracle.truncation_level(t, 0, 1e-10, generator="P2")
        p = build_momentum(dim)
        mat, _, _ = oracle.expm_matrix(p @ p, 1j * t)
        state = evolve_P2_vacuum(t, l_max=40, tol=1e-10)
        top = min(41, dim)
        assert np.max(np.abs(state.amplitudes[:top] - mat[:top, 0])) <= 1e-7

    def test_first_level_against_oracle(self):
        t = 0.35
        dim = oracle.truncation_level(t, 1, 1e-10, generator="P2")
        p = build_momentum(dim)
        mat, _, _ = oracle.expm_matrix(p @ p, 1j * t)
        state = evolve_P2_level1(t, tol=1e-10)
        top = min(state.amplitudes.size, dim)
        assert np.max(np.abs(state.amplitudes[:top] - mat[:top, 1])) <= 1e-7

    def test_odd_support_for_first_level(self):
        state = evolve_P2_level1(0.4, tol=1e-10)
        assert np.all(state.amplitudes[0::2] == 0)


class TestHeisenbergP:
    def test_zero_time(self):
        assert heisenberg_aplus_P(0.0, 2, 3) == 0j

    def test_symmetry(self):
        for (m, n) in ((0, 1), (2, 3), (1, 4)):
            assert abs(heisenberg_aplus_P(0.7, m, n) - heisenberg_aplus_P(0.7, n, m)) <= 1e-12

    def test_omega_scales_linearly(self):
        base = heisenberg_aplus_P(0.5, 0, 0, omega=1.0)
        assert abs(heisenberg_aplus_P(0.5, 0, 0, omega=2.5) - 2.5 * base) <= 1e-13

    def test_against_oracle_conjugation(self):
        t = 0.9
        dim = oracle.truncation_level(t, 8, 1e-10)
        mat, _, _ = oracle.expm_matrix(build_momentum(dim), 1j * t)
        ap = build_creation(dim).entries
        conj = mat @ ap @ mat.conj().T - ap
        assert abs(heisenberg_aplus_P(t, 0, 0) - conj[0, 0]) <= 1e-6

    def test_negative_time_parity(self):
        # the Bessel-product integrand is even in s for even m+n and odd
        # otherwise, so the correction has parity (-1)^(m+n+1) in t
        for (m, n) in ((0, 0), (1, 2), (2, 2), (0, 3)):
            plus = heisenberg_aplus_P(0.5, m, n)
            minus = heisenberg_aplus_P(-0.5, m, n)
            assert abs(minus - (-1.0) ** (m + n + 1) * plus) <= 1e-12

    def test_negative_time_against_oracle(self):
        t = -0.5
        dim = oracle.truncation_level(t, 6, 1e-10)
        mat, _, _ = oracle.expm_matrix(build_momentum(dim), 1j * t)
        ap = build_creation(dim).entries
        conj = mat @ ap @ mat.conj().T - ap
        assert abs(heisenberg_aplus_P(t, 1, 2) - conj[1, 2]) <= 1e-8


class TestHeisenbergP2:
    def test_zero_time(self):
        assert np.all(heisenberg_aplus_P2(0.0, 3, 3) == 0)

    def test_hermitian_block(self):
        block = heisenberg_aplus_P2(0.25, 5, 5)
        assert np.max(np.abs(block - block.conj().T)) <= 1e-10

    def test_against_oracle_conjugation(self):
        t = 0.25
        dim = oracle.truncation_level(t, 8, 1e-10, generator="P2")
        p = build_momentum(dim)
        mat, _, _ = oracle.expm_matrix(p @ p, 1j * t)
        ap = build_creation(dim).entries
        conj = mat @ ap @ mat.conj().T - ap
        block = heisenberg_aplus_P2(t, 7, 7)
        assert np.max(np.abs(block - conj[:8, :8])) <= 1e-6


class TestTablesAndGroupLaw:
    def test_group_law_momentum(self):
        t1, t2 = 0.3, 0.7
        size = 8 + 18
        u1 = element_table("P", t1, size)
        u2 = element_table("P", t2, size)
        u12 = element_table("P", t1 + t2, size)
        assert np.max(np.abs((u1 @ u2 - u12)[:8, :8])) <= 1e-8

    def test_group_law_position(self):
        t1, t2 = 0.3, 0.7
        size = 8 + 18
        u1 = element_table("X", t1, size)
        u2 = element_table("X", t2, size)
        u12 = element_table("X", t1 + t2, size)
        assert np.max(np.abs((u1 @ u2 - u12)[:8, :8])) <= 1e-8

    def test_coeff_table_invariants(self):
        for kind in (CoeffKind.MOMENTUM_I, CoeffKind.POSITION_I, CoeffKind.KINETIC_I2):
            table = build_coeff_table(kind, 0.8, 6)
            for report in table.validate():
                assert report.passed, str(report)
            assert max(table.agreements.values()) <= 1e-11

    def test_coeff_table_at_time_zero(self):
        table = build_coeff_table(CoeffKind.MOMENTUM_I, 0.0, 4)
        for report in table.validate():
            assert report.passed, str(report)

    def test_evolve_h1_phases(self):
        state0 = evolve_H1(0, 1.2, omega1=1.5)
        assert abs(state0.amplitudes[0] - np.exp(1j * 1.2 * 1.5)) <= 1e-15
        state2 = evolve_H1(2, 1.2, omega1=1.5)
        assert abs(state2.amplitudes[2] - np.exp(2j * 1.2 * 1.5)) <= 1e-15
        assert state2.norm_defect() <= 1e-15
