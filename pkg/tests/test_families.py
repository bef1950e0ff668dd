from fractions import Fraction
from math import factorial

import pytest

from sjk.errors import ParamError
from sjk.families import (
    binom_general,
    egf_beta_shifted,
    hermite_closed,
    hermite_egf,
    jacobi_classical,
    matching_coeff,
    sj_beta_rescaled,
    sj_closed_beta,
    sj_closed_mm,
    sj_egf_coeff,
    sj_family,
    sj_umbral,
)
from sjk.opcalc import (
    exp_B_bivariate,
    exp_resolvent_sj,
    gp_series,
    hermite_exp,
    jacobi_operator_apply,
)
from sjk.poly import CoeffSeries, Poly
from sjk.scalar import ExactScalar

H = Fraction(1, 2)
X = Poly.var("x")


class TestGolden:
    def test_sj_rows_match_resolvent(self, golden):
        for n in range(11):
            assert gp_series(n, -1, -1) == golden[("sj", n)], f"n={n}"

    def test_hermite_rows_match_closed_form(self, golden):
        for n in range(11):
            assert hermite_closed(n) == golden[("hermite", n)], f"n={n}"

    def test_loader_shape(self, golden):
        assert len(golden) == 22
        assert golden[("sj", 1)] == X
        assert golden[("hermite", 2)].scalar_coeff(z=1) == ExactScalar(2)


class TestJacobiClassical:
    def test_degree_zero(self):
        assert jacobi_classical(0, Fraction(3, 2), 7) == Poly.const(1)

    def test_legendre_p1(self):
        assert jacobi_classical(1, 0, 0) == X

    def test_eigenequation(self):
        n, a, b = 3, H, H
        p = jacobi_classical(n, a, b)
        assert jacobi_operator_apply(p, a, b) == p * (-Fraction(n) * (n + a + b + 1))

    def test_rejects_degenerate_params(self):
        with pytest.raises(ParamError):
            jacobi_classical(2, -1, 0)


class TestSjClosedMm:
    def test_degree_one_gamma(self):
        assert sj_closed_mm(1, 0) == X
        assert sj_closed_mm(1, Fraction(2, 3)) == X + Fraction(2, 3)

    def test_degree_five(self, golden):
        assert sj_closed_mm(5) == golden[("sj", 5)]

    def test_degree_zero(self):
        assert sj_closed_mm(0, Fraction(9, 7)) == Poly.const(1)


class TestSjClosedBeta:
    def test_degree_one(self):
        for beta in (Fraction(0), H, Fraction(2)):
            assert sj_closed_beta(1, beta) == X - 1

    def test_degree_zero(self):
        assert sj_closed_beta(0, H) == Poly.const(1)

    @pytest.mark.parametrize(
        "beta", [Fraction(0), H, Fraction(2), Fraction(7, 2), Fraction(1, 3)]
    )
    def test_matches_resolvent_construction(self, beta):
        # the closed form stays rational for any rational beta
        for n in range(9):
            assert sj_closed_beta(n, beta) == gp_series(n, -1, beta), (n, beta)

    def test_degree_one_from_generic_formula(self):
        # the n >= 2 sum evaluated at n = 1 reproduces the special case
        for beta in (H, Fraction(3)):
            n = 1
            scale = 1 / binom_general(2 * n + beta - 1, n)
            out = Poly.zero(("x",))
            for k in range(n + 1):
                c = binom_general(n - 1, k) * binom_general(n + beta, n - k)
                out = out + (X - 1) ** (n - k) * (X + 1) ** k * c
            assert out * scale == sj_closed_beta(1, beta)

    def test_rejects_bad_beta(self):
        with pytest.raises(ParamError):
            sj_closed_beta(3, -1)


class TestHermiteClosed:
    def test_rows(self, golden):
        assert hermite_closed(6) == golden[("hermite", 6)]
        assert hermite_closed(0) == Poly.const(1)
        assert hermite_closed(7) == golden[("hermite", 7)]

    def test_matches_operational_form_up_to_30(self):
        for n in range(31):
            assert hermite_closed(n) == hermite_exp(n)


class TestMatchingCoeff:
    def test_values(self):
        assert matching_coeff(4, 1) == 12
        assert matching_coeff(7, 0) == 1
        assert matching_coeff(3, 2) == 0
        assert matching_coeff(2, -1) == 0


class TestSjUmbral:
    def test_rows(self, golden):
        assert sj_umbral(2) == golden[("sj", 2)]
        assert sj_umbral(6) == golden[("sj", 6)]
        assert sj_umbral(1) == X


class TestSjEgfCoeff:
    def test_small_orders(self, golden):
        assert sj_egf_coeff(0) == Poly.const(1)
        assert sj_egf_coeff(2) == golden[("sj", 2)] * H
        assert sj_egf_coeff(5) == golden[("sj", 5)] * Fraction(1, 120)

    def test_equals_umbral_over_factorial(self):
        for N in range(13):
            assert sj_egf_coeff(N) == sj_umbral(N) * Fraction(1, factorial(N))


def test_four_way_equality_checkpoints():
    # the full n <= 30 sweep runs in the acceptance suite; degree one is
    # compared at gamma = 0
    for n in (0, 1, 2, 7, 12, 15):
        a = gp_series(n, -1, -1)
        assert a == exp_resolvent_sj(n)
        assert a == sj_umbral(n)
        assert a == sj_closed_mm(n, 0)
        assert a == exp_B_bivariate(n).substitute("y", 1)


class TestHermiteStructure:
    def test_ladder_identities(self):
        for n in range(2, 21):
            h = hermite_closed(n)
            dxx = h.derivative("x").derivative("x")
            dz = h.derivative("z")
            assert dxx == dz
            assert dxx == hermite_closed(n - 2) * Fraction(n * (n - 1))

    def test_egf_against_exponential(self):
        order = 15
        ex = CoeffSeries.build(
            lambda k: Poly.var("x", k) * Fraction(1, factorial(k)), order
        )
        ez = CoeffSeries.build(
            lambda k: (
                Poly.var("z", k // 2) * Fraction(1, factorial(k // 2))
                if k % 2 == 0
                else Poly.zero()
            ),
            order,
        )
        assert ex * ez == hermite_egf(order)


class TestBetaShiftedEgf:
    def test_order_zero_beta_zero(self):
        s = egf_beta_shifted(0, 0)
        assert s.coeffs[0] == X - 1

    def test_lambda_zero_matches_rescaled_p1(self):
        for beta in (Fraction(0), H):
            s = egf_beta_shifted(0, beta)
            assert s.coeffs[0] == sj_beta_rescaled(1, beta)

    @pytest.mark.parametrize("beta", [Fraction(0), H])
    def test_order_six_against_defining_sum(self, beta):
        got = egf_beta_shifted(6, beta)
        for n in range(7):
            want = sj_beta_rescaled(n + 1, beta) * Fraction(1, factorial(n))
            assert got.coeffs[n] == want, (beta, n)

    def test_halfodd_scale_carries_inverse_sqrt_pi(self):
        s = egf_beta_shifted(1, H)
        for exps, c in s.coeffs[0].terms.items():
            assert c.sqrt_pi_pow == -1

    def test_rejects_bad_beta(self):
        with pytest.raises(ParamError):
            egf_beta_shifted(3, Fraction(-3, 2))
        with pytest.raises(ParamError):
            egf_beta_shifted(3, Fraction(1, 3))


def test_family_sources_are_stable():
    assert sj_family(4).scalar_coeff(x=2) == ExactScalar(Fraction(-6, 5))
    assert sj_family(1) == X  # gamma fixed to zero
