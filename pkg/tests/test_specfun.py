import mpmath as mp
import numpy as np
import pytest

from semicircleqm.exceptions import DomainError, PoleError
from semicircleqm.specfun import bessel_j, bessel_j_ratio, bessel_tail_index, hyp1f1

mp.mp.dps = 40


class TestBesselJ:
    def test_order_zero_at_origin(self):
        res = bessel_j(0, 0.0)
        assert res.value == 1.0
        assert res.tail_bound <= 1e-14

    def test_order_one_at_origin(self):
        assert bessel_j(1, 0.0).value == 0.0

    def test_value_at_two(self):
        # high-precision series value, 40 digits then rounded
        assert abs(bessel_j(0, 2.0).value - 0.22389077914123567) < 1e-15

    @pytest.mark.parametrize("n", [0, 1, 2, 5, 9])
    @pytest.mark.parametrize("x", [0.1, 0.7, 2.0, 5.5, 16.0, -3.2])
    def test_against_high_precision(self, n, x):
        want = float(mp.besselj(n, x))
        got = bessel_j(n, x)
        # rounding of the retained terms scales with the sum of |terms|,
        # roughly e^|x|; the tail bound covers truncation only
        roundoff = 5e-16 * np.exp(abs(x))
        assert abs(got.value - want) <= max(got.tail_bound, 1e-13, roundoff)

    def test_tail_bound_is_honest(self):
        res = bessel_j(3, 4.0)
        assert abs(res.value - float(mp.besselj(3, 4.0))) <= res.tail_bound + 1e-14

    def test_argument_cap(self):
        with pytest.raises(DomainError):
            bessel_j(0, 65.0)

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            bessel_j(-1, 1.0)

    def test_three_term_recurrence(self):
        for t in np.linspace(0.25, 8.0, 16):
            jv = [bessel_j(n, t).value for n in range(12)]
            for n in range(1, 10):
                assert abs(2 * n * jv[n] / t - jv[n + 1] - jv[n - 1]) <= 1e-12

    def test_plane_wave_expansion(self):
        # e^{2it} = J_0(2t) + 2 sum_m i^m J_m(2t) at angle zero
        for t in np.linspace(0.25, 4.0, 10):
            m_top = bessel_tail_index(t, 1e-14)
            jv = [bessel_j(m, 2 * t).value for m in range(m_top + 1)]
            total = jv[0] + 2 * sum((1j) ** m * jv[m] for m in range(1, m_top + 1))
            assert abs(total - np.exp(2j * t)) <= 1e-10

    def test_normalization(self):
        # J_0^2 + 2 sum_m J_m^2 = 1
        for x in np.linspace(0.5, 8.0, 10):
            m_top = bessel_tail_index(x / 2, 1e-14) + 2
            jv = [bessel_j(m, x).value for m in range(m_top)]
            assert abs(jv[0] ** 2 + 2 * sum(v * v for v in jv[1:]) - 1.0) <= 1e-10


class TestBesselRatio:
    def test_limit_at_zero_order_zero(self):
        assert bessel_j_ratio(0, 0.0) == 1.0

    def test_limit_at_zero_higher_order(self):
        assert bessel_j_ratio(3, 0.0) == 0.0

    def test_value_at_one(self):
        assert abs(bessel_j_ratio(0, 1.0) - 0.5767248077568734) < 1e-15

    @pytest.mark.parametrize("n", [0, 1, 4])
    @pytest.mark.parametrize("t", [0.3, 1.7, -2.5, 6.0])
    def test_matches_direct_quotient(self, n, t):
        want = (n + 1) * float(mp.besselj(n + 1, 2 * t)) / t
        assert abs(bessel_j_ratio(n, t) - want) <= 1e-13 * max(1.0, abs(want))

    def test_continuity_near_zero(self):
        assert abs(bessel_j_ratio(0, 1e-9) - 1.0) < 1e-15


class TestHyp1F1:
    def test_at_zero(self):
        assert hyp1f1(0.3, 1.7, 0.0).value == 1.0

    def test_exponential_identity(self):
        # 1F1(1; 2; z) = (e^z - 1)/z
        got = hyp1f1(1.0, 2.0, 1.0)
        assert abs(got.value - 1.718281828459045) <= 1e-15

    @pytest.mark.parametrize("z", [0.5, -1.5, 2.0 + 1.0j, 4j * 0.5, 4j * 2.0, -3.7])
    def test_against_high_precision(self, z):
        want = complex(mp.hyp1f1(0.5, 2.0, z))
        got = hyp1f1(0.5, 2.0, z)
        assert abs(got.value - want) <= max(got.tail_bound, 1e-13 * max(1.0, abs(want)))

    @pytest.mark.parametrize("b", [0.0, -1.0, -5.0])
    def test_pole_detection(self, b):
        with pytest.raises(PoleError):
            hyp1f1(0.5, b, 1.0)

    def test_argument_cap(self):
        with pytest.raises(DomainError):
            hyp1f1(0.5, 2.0, 100.0)

    def test_tail_bound_is_honest(self):
        got = hyp1f1(1.5, 4.0, 8j)
        want = complex(mp.hyp1f1(1.5, 4.0, 8j))
        assert abs(got.value - want) <= got.tail_bound + 1e-13


class TestTailIndex:
    def test_zero_argument(self):
        assert bessel_tail_index(0.0, 1e-10) == 1

    def test_unit_argument(self):
        # direct evaluation of the coefficient bound
        assert bessel_tail_index(1.0, 1e-10) == 13

    def test_moderate_argument(self):
        assert bessel_tail_index(4.0, 1e-8) == 31

    @pytest.mark.parametrize("t,tol", [(0.5, 1e-10), (2.0, 1e-10), (4.0, 1e-8), (8.0, 1e-10)])
    def test_bound_dominates_actual_tail(self, t, tol):
        n_star = bessel_tail_index(t, tol)
        tail = mp.nsum(
            lambda n: abs((n + 1) * mp.besselj(int(n) + 1, 2 * t) / t), [n_star + 1, n_star + 250]
        )
        assert float(tail) < tol

    def test_monotone_in_tolerance(self):
        assert bessel_tail_index(2.0, 1e-12) >= bessel_tail_index(2.0, 1e-6)

    def test_tolerance_validation(self):
        with pytest.raises(DomainError):
            bessel_tail_index(1.0, 0.0)
