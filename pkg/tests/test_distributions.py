# ==========================================
# tests/test_distributions.py
# ==========================================
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from core.analysis import SampledFunction
from core.distributions import (
    IDENTITY_TAU, DilationTranslation, PiecewiseSmooth, TestFunction, bump, constant, derivative, dirac,
    fourier_quadrature_1d, heaviside, integrate, principal_value, regular, tau_apply, tau_compose, tau_inverse,
)
from core.errors import InvalidInput, NoConvergence, ParameterError
from core.numbers import Rational

BUMP_MASS = 0.443993816168

nonzero = st.builds(Rational, st.integers(-30, 30).filter(bool), st.integers(1, 6))
shifts = st.builds(Rational, st.integers(-30, 30), st.integers(1, 6))
taus = st.builds(DilationTranslation, nonzero, shifts)


# ==========================================
# FUNCIONES TEST
# ==========================================

class TestBump:
    def test_values(self):
        phi = bump(0, 1)
        assert phi(0.0) == pytest.approx(math.exp(-1))
        assert phi(1.0) == 0.0
        assert phi(-3.0) == 0.0
        assert phi(0.4) == pytest.approx(phi(-0.4))

    def test_support_and_radius(self):
        phi = bump(2, 0.5)
        assert phi.support == (1.5, 2.5)
        assert phi.radius == 0.5

    def test_vectorized(self):
        phi = bump(0, 1)
        values = phi(np.array([-2.0, 0.0, 2.0]))
        np.testing.assert_allclose(values, [0.0, math.exp(-1), 0.0])

    def test_invalid(self):
        with pytest.raises(ParameterError):
            bump(0, 0)
        with pytest.raises(ParameterError):
            bump(0, 1).compose_affine(0, 1)

    def test_exact_derivative_matches_differences(self):
        phi = bump(0.3, 1)
        xs = np.linspace(-0.6, 1.2, 7)
        h = 1e-6
        numeric = (phi(xs + h) - phi(xs - h)) / (2 * h)
        np.testing.assert_allclose(phi.derivative_at(xs), numeric, atol=1e-7)

    def test_linear_combinations(self):
        phi, psi = bump(0, 1), bump(0.5, 1)
        combo = phi + psi.scale(2.0)
        assert combo(0.2) == pytest.approx(phi(0.2) + 2 * psi(0.2))
        assert combo.support == (-1.0, 1.5)


class TestQuadrature:
    def test_bump_mass(self):
        phi = bump(0, 1)
        assert integrate(phi, -1, 1) == pytest.approx(BUMP_MASS, abs=1e-8)

    def test_agrees_with_scipy_quad(self):
        phi = bump(0.3, 1)
        expected, _ = quad(lambda x: math.sin(x) * phi(x), -0.7, 1.3)
        assert integrate(lambda x: np.sin(x) * phi(x), -0.7, 1.3) == pytest.approx(expected, abs=1e-8)

    def test_empty_range(self):
        assert integrate(np.ones_like, 1.0, 1.0) == 0.0

    def test_unsplit_jump_does_not_converge(self):
        step = lambda x: np.where(x >= 0.3, 1.0, 0.0)
        with pytest.raises(NoConvergence):
            integrate(step, 0.0, 1.0, panels=4)
        assert integrate(step, 0.0, 1.0, breakpoints=(0.3,), panels=4) == pytest.approx(0.7)


# ==========================================
# FUNCIONALES
# ==========================================

class TestDirac:
    def test_value_at_origin(self):
        assert dirac()(bump(0, 1)) == pytest.approx(math.exp(-1))
        assert dirac()(bump(5, 1)) == 0.0

    @settings(max_examples=200)
    @given(st.floats(-2, 2), st.floats(-2, 2), st.floats(-10, 10))
    def test_linear(self, c1, c2, lam):
        phi, psi = bump(c1, 1.5), bump(c2, 0.75)
        delta = dirac()
        assert delta(phi + psi) == delta(phi) + delta(psi)
        assert delta(phi.scale(lam)) == lam * delta(phi)


class TestPrincipalValue:
    def test_even_function_vanishes(self):
        assert abs(principal_value()(bump(0, 1))) <= 1e-8

    def test_support_away_from_origin(self):
        phi = bump(1.5, 0.5)
        expected, _ = quad(lambda x: phi(x) / x, 1.0, 2.0)
        assert principal_value()(phi) == pytest.approx(expected, abs=1e-8)

    def test_support_across_origin(self):
        phi = bump(0.3, 1)
        expected, _ = quad(lambda x: phi(x), -0.7, 1.3, weight="cauchy", wvar=0.0)
        assert principal_value()(phi) == pytest.approx(expected, abs=1e-6)

    def test_x_times_test_function(self):
        # φ(x) = x·ψ(x): el valor principal es ∫ψ
        psi = bump(0, 1)
        phi = TestFunction(lambda x: x * psi(x), psi.support)
        assert principal_value()(phi) == pytest.approx(BUMP_MASS, abs=1e-6)


class TestRegularAndDerivatives:
    def test_constant(self):
        assert regular(constant(1))(bump(0, 1)) == pytest.approx(BUMP_MASS, abs=1e-5)

    def test_heaviside_derivative_is_dirac(self):
        phi = bump(0, 1)
        assert derivative(regular(heaviside()))(phi) == pytest.approx(math.exp(-1), abs=1e-5)

    def test_derivative_of_dirac(self):
        assert abs(derivative(dirac())(bump(0, 1))) <= 1e-12
        assert derivative(dirac(), 2)(bump(0, 1)) == pytest.approx(-2 * math.exp(-1), abs=1e-6)

    def test_integration_by_parts(self):
        phi = bump(0.3, 1)
        lhs = derivative(regular(lambda x: x ** 2))(phi)
        rhs = regular(lambda x: 2 * x)(phi)
        assert lhs == pytest.approx(rhs, abs=1e-6)

    def test_zero_order_is_identity(self):
        phi = bump(0.3, 1)
        assert derivative(regular(np.sin), 0)(phi) == regular(np.sin)(phi)

    def test_negative_order(self):
        with pytest.raises(ParameterError):
            derivative(dirac(), -1)(bump(0, 1))

    def test_piecewise_breakpoints_are_used(self):
        ramp = PiecewiseSmooth(lambda x: np.where(x >= 0.25, x, 0.0), (0.25,))
        phi = bump(0, 1)
        expected, _ = quad(lambda x: x * phi(x), 0.25, 1.0)
        assert regular(ramp)(phi) == pytest.approx(expected, abs=1e-8)


# ==========================================
# DILATACIÓN Y TRASLACIÓN
# ==========================================

class TestDilationTranslation:
    def test_compose(self):
        assert tau_compose(DilationTranslation.of(2, 3), DilationTranslation.of(5, 7)) == DilationTranslation.of(10, 22)

    def test_zero_dilation(self):
        with pytest.raises(ParameterError):
            DilationTranslation.of(0, 1)

    def test_text(self):
        assert str(DilationTranslation.of(Rational(1, 2), -3)) == "(1/2, -3)"

    @settings(max_examples=1000)
    @given(taus, taus, taus)
    def test_associative(self, x, y, z):
        assert tau_compose(tau_compose(x, y), z) == tau_compose(x, tau_compose(y, z))

    @settings(max_examples=500)
    @given(taus)
    def test_identity_and_inverse(self, tau):
        assert tau_compose(tau, IDENTITY_TAU) == tau == tau_compose(IDENTITY_TAU, tau)
        assert tau_compose(tau, tau_inverse(tau)) == IDENTITY_TAU
        assert tau_compose(tau_inverse(tau), tau) == IDENTITY_TAU

    def test_action_on_regular_distribution(self):
        tau = DilationTranslation.of(2, 1)
        phi = bump(0.3, 1)
        lhs = tau_apply(tau, regular(np.sin))(phi)
        rhs = regular(lambda x: np.sin(2 * x - 1))(phi)
        assert lhs == pytest.approx(rhs, abs=1e-6)

    def test_negative_dilation(self):
        tau = DilationTranslation.of(-1, 0)
        phi = bump(0.3, 1)
        f = lambda x: x ** 3 + 1
        assert tau_apply(tau, regular(f))(phi) == pytest.approx(regular(lambda x: f(-x))(phi), abs=1e-6)

    def test_action_respects_composition(self):
        first, second = DilationTranslation.of(2, 1), DilationTranslation.of(Rational(1, 2), -1)
        f = lambda x: x ** 2 + np.sin(x)
        phi = bump(0.3, 1)
        nested = tau_apply(first, tau_apply(second, regular(f)))(phi)
        direct = tau_apply(tau_compose(first, second), regular(f))(phi)
        assert nested == pytest.approx(direct, abs=1e-6)

    def test_dirac_translated(self):
        # δ(x − 1) evalúa en 1
        tau = DilationTranslation.of(1, 1)
        phi = bump(0.8, 1)
        assert tau_apply(tau, dirac())(phi) == pytest.approx(float(phi(1.0)))


# ==========================================
# FOURIER
# ==========================================

class TestFourier:
    def test_gaussian_is_fixed(self):
        f = SampledFunction.from_callable(lambda x: np.exp(-x ** 2 / 2), (-8.0,), 1 / 64, (1025,))
        ys = [0.0, 0.5, 1.0, 2.0]
        values = fourier_quadrature_1d(f, ys)
        np.testing.assert_allclose(values, np.exp(-np.square(ys) / 2), atol=1e-4)

    def test_zero(self):
        f = SampledFunction.from_callable(np.zeros_like, (-1.0,), 0.25, (9,))
        assert np.all(fourier_quadrature_1d(f, [0.0, 3.0]) == 0)

    def test_one_dimensional_only(self):
        f = SampledFunction.from_callable(lambda x, y: x + y, (0.0, 0.0), 0.5, (3, 3))
        with pytest.raises(ParameterError):
            fourier_quadrature_1d(f, [0.0])

    def test_inverted_support(self):
        with pytest.raises(InvalidInput):
            TestFunction(np.ones_like, (1.0, 0.0))
