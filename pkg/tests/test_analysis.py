# ==========================================
# tests/test_analysis.py
# ==========================================
import logging
import math
import tracemalloc

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from core.analysis import (
    Grid, SampledFunction, besov_norm_mc, box_polytope, cm_norm, finite_difference, grid_lp_norm,
    holder_quotient, holder_seminorm, is_uniformly_continuous, lattice_ball, minkowski_functional,
    modulus_of_continuity, multi_indices, seq_lp_norm, taylor_eval_1d, taylor_eval_nd,
    uniform_continuity_profile, zygmund_seminorm,
)
from core.errors import GridTooCoarse, InvalidInput, MissingPartial, ParameterError, ShiftOutOfRange
from models.schemas import SampledFunctionInput


def sample(fn, start: float, stop: float, spacing: float) -> SampledFunction:
    n = int(round((stop - start) / spacing)) + 1
    return SampledFunction.from_callable(fn, (start,), spacing, (n,))


def gaussian(x):
    return np.exp(-x ** 2 / 2)


def random_trig(rng: np.random.Generator):
    a, b = rng.uniform(-1, 1, size=3), rng.uniform(-1, 1, size=3)
    offset = rng.uniform(1, 3)

    def fn(x):
        return offset + sum(a[k] * np.sin((k + 1) * x) + b[k] * np.cos((k + 1) * x) for k in range(3))

    return fn


# ==========================================
# MALLAS Y DIFERENCIAS
# ==========================================

class TestGridsAndDifferences:
    def test_values_must_match_grid(self):
        grid = Grid(1, (0.0,), 0.5, (3,))
        with pytest.raises(InvalidInput):
            SampledFunction(grid, np.zeros(4))
        with pytest.raises(InvalidInput):
            SampledFunction(grid, np.array([0.0, np.nan, 1.0]))

    @pytest.mark.parametrize("shape", [(1,), (5, 1), (0,)])
    def test_every_axis_needs_two_nodes(self, shape):
        with pytest.raises(InvalidInput):
            Grid(len(shape), (0.0,) * len(shape), 0.5, shape)

    def test_difference_may_leave_a_single_node(self):
        f = SampledFunction(Grid(1, (0.0,), 1.0, (2,)), np.array([0.0, 3.0]))
        d = finite_difference(f, 1)
        assert d.grid.shape == (1,)
        np.testing.assert_array_equal(d.values, [3.0])

    def test_first_difference(self):
        f = sample(lambda x: x ** 2, 0.0, 4.0, 1.0)
        d = finite_difference(f, 1)
        np.testing.assert_array_equal(d.values, [1, 3, 5, 7])
        assert d.grid.origin == (0.0,)

    def test_negative_shift_moves_origin(self):
        f = sample(lambda x: x, 0.0, 4.0, 1.0)
        d = finite_difference(f, -2)
        np.testing.assert_array_equal(d.values, [-2, -2, -2])
        assert d.grid.origin == (2.0,)

    def test_second_difference_of_quadratic(self):
        f = sample(lambda x: x ** 2, 0.0, 8.0, 1.0)
        np.testing.assert_array_equal(finite_difference(f, 1, 2).values, np.full(7, 2.0))
        np.testing.assert_array_equal(finite_difference(f, 1, 3).values, np.zeros(6))

    def test_shift_out_of_range(self):
        f = sample(lambda x: x, 0.0, 4.0, 1.0)
        with pytest.raises(ShiftOutOfRange):
            finite_difference(f, 5)
        with pytest.raises(ShiftOutOfRange):
            finite_difference(f, 2, 3)

    def test_shift_must_be_lattice_vector(self):
        f = sample(lambda x: x, 0.0, 4.0, 1.0)
        with pytest.raises(ParameterError):
            finite_difference(f, (1, 1))
        with pytest.raises(ParameterError):
            finite_difference(f, 1, 0)

    def test_two_dimensional_shift(self):
        f = SampledFunction.from_callable(lambda x, y: x + 10 * y, (0.0, 0.0), 1.0, (4, 5))
        d = finite_difference(f, (1, -1))
        assert d.grid.shape == (3, 4)
        np.testing.assert_allclose(d.values, -9.0)

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("h", [1, 2, 3])
    def test_dilation_identity_is_exact(self, m, h):
        # g(y) = f(2y − b) sobre la misma malla: Δᵐ_h g(y_j) = Δᵐ_{2h} f(2y_j − b)
        x0, b, spacing = -1.0, 0.25, 1 / 128
        f = sample(lambda x: np.sin(3 * x) + x ** 3, x0, x0 + 256 * spacing, spacing)
        g = SampledFunction(Grid(1, ((x0 + b) / 2,), spacing, (129,)), f.values[::2])
        dg = finite_difference(g, h, m)
        df = finite_difference(f, 2 * h, m)
        for j in range(dg.values.size):
            assert dg.values[j] == df.values[2 * j]

    @settings(max_examples=200)
    @given(arrays(np.float64, st.integers(8, 40), elements=st.floats(-1e3, 1e3)), st.integers(1, 3),
           st.integers(1, 2))
    def test_difference_is_bounded(self, values, m, h):
        f = SampledFunction(Grid(1, (0.0,), 0.1, (values.size,)), values)
        bound = 2 ** m * np.max(np.abs(values))
        assert np.max(np.abs(finite_difference(f, h, m).values)) <= bound * (1 + 1e-12)


# ==========================================
# NORMAS Y MÓDULOS DE CONTINUIDAD
# ==========================================

class TestNorms:
    def test_sequence_norms(self):
        assert seq_lp_norm([3, 4], 2) == pytest.approx(5.0)
        assert seq_lp_norm([3, -4], math.inf) == 4.0
        assert seq_lp_norm([], 1) == 0.0
        with pytest.raises(ParameterError):
            seq_lp_norm([1], 0.5)

    def test_grid_norm_is_riemann_sum(self):
        f = sample(lambda x: np.ones_like(x), 0.0, 1.0, 1 / 100)
        assert grid_lp_norm(f, 1) == pytest.approx(1.01)
        assert grid_lp_norm(f, math.inf) == 1.0

    def test_lattice_ball(self):
        grid = Grid(2, (0.0, 0.0), 0.5, (5, 5))
        ball = list(lattice_ball(grid, 0.5))
        assert ball == [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)]
        with pytest.raises(ParameterError):
            list(lattice_ball(grid, -1))

    def test_modulus_of_identity(self):
        f = sample(lambda x: x, 0.0, 1.0, 1 / 64)
        for t in (1 / 16, 1 / 8, 1 / 4):
            assert modulus_of_continuity(f, 1, math.inf, t) == pytest.approx(t)
        assert modulus_of_continuity(f, 1, math.inf, 0.0) == 0.0

    @pytest.mark.parametrize("p", [1, 2, math.inf])
    @pytest.mark.parametrize("t", [1 / 16, 1 / 8, 1 / 4])
    def test_modulus_scaling_under_dilation(self, p, t):
        f = sample(gaussian, -4.0, 4.0, 1 / 128)
        b = 0.5
        g = SampledFunction(Grid(1, ((-4.0 + b) / 2,), 1 / 256, f.grid.shape), f.values)
        expected = 2 ** (-1 / p) * modulus_of_continuity(f, 1, p, 2 * t)
        assert modulus_of_continuity(g, 1, p, t) == pytest.approx(expected, rel=5e-3)

    def test_modulus_is_nondecreasing(self):
        f = sample(np.sin, 0.0, 2 * np.pi, 2 * np.pi / 256)
        levels = [modulus_of_continuity(f, 2, 2, t) for t in (0.05, 0.1, 0.2, 0.4)]
        assert levels == sorted(levels)

    def test_multi_indices(self):
        assert multi_indices(2, 2) == [(0, 2), (1, 1), (2, 0)]
        assert multi_indices(3, 0) == [(0, 0, 0)]

    def test_cm_norm_of_sine(self):
        f = sample(np.sin, 0.0, 2 * np.pi, 2 * np.pi / 2000)
        assert cm_norm(f, 2) == pytest.approx(3.0, abs=1e-2)

    def test_cm_norm_of_identity(self):
        f = sample(lambda x: x, -1.0, 1.0, 1 / 64)
        assert cm_norm(f, 1) == pytest.approx(2.0)

    def test_cm_norm_needs_points(self):
        f = SampledFunction(Grid(1, (0.0,), 1.0, (2,)), np.array([0.0, 1.0]))
        with pytest.raises(GridTooCoarse):
            cm_norm(f, 1)

    def test_holder_of_identity(self):
        f = sample(lambda x: x, 0.0, 1.0, 1 / 64)
        assert holder_quotient(f, 0.5) == pytest.approx(1.0)
        assert holder_seminorm(f, 0.5) == pytest.approx(2.0)
        with pytest.raises(ParameterError):
            holder_quotient(f, 1.0)

    def test_holder_on_a_plane_stays_within_block_budget(self):
        f = SampledFunction.from_callable(lambda x, y: x, (0.0, 0.0), 1 / 64, (65, 65))
        tracemalloc.start()
        try:
            value = holder_quotient(f, 0.5, block_elements=1 << 16)
            _, peak = tracemalloc.get_traced_memory()
        finally:
            tracemalloc.stop()
        assert value == pytest.approx(1.0)
        assert peak < 8 * 2 ** 20

    def test_holder_blocks_do_not_change_the_result(self):
        rng = np.random.default_rng(3)
        f = SampledFunction.from_callable(lambda x, y: np.sin(3 * x) * y, (0.0, 0.0), 1 / 16, (17, 17))
        g = f.with_values(f.values + 0.01 * rng.normal(size=f.values.shape))
        assert holder_quotient(g, 0.5, block_elements=1) == holder_quotient(g, 0.5)
        assert holder_quotient(g, 1.5, block_elements=100) == holder_quotient(g, 1.5)

    def test_zygmund_of_square(self):
        f = sample(lambda x: x ** 2, -1.0, 1.0, 1 / 64)
        assert zygmund_seminorm(f, 1) == pytest.approx(3.0, rel=1e-9)

    def test_zygmund_of_affine(self):
        f = sample(lambda x: 2 * x + 1, -1.0, 1.0, 1 / 64)
        assert zygmund_seminorm(f, 1) == pytest.approx(3.0, rel=1e-9)

    def test_zygmund_bounded_by_c1(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            f = sample(random_trig(rng), 0.0, 2 * np.pi, 2 * np.pi / 200)
            assert zygmund_seminorm(f, 1) <= 2 * cm_norm(f, 1) * (1 + 1e-6)


class TestBesov:
    def test_zero_function(self):
        f = sample(np.zeros_like, 0.0, 1.0, 1 / 32)
        assert besov_norm_mc(f, 0.5, 2, 2, 2, 5) == 0.0

    def test_monotone_in_q(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            f = SampledFunction(Grid(1, (0.0,), 1 / 64, (65,)), rng.normal(size=65))
            norms = [besov_norm_mc(f, 0.5, 2, q, 2, 6) for q in (1, 2, 4, math.inf)]
            assert all(b <= a * (1 + 1e-9) for a, b in zip(norms, norms[1:]))

    @pytest.mark.parametrize("q", [1, 2, 3])
    def test_level_term_is_the_dyadic_sum(self, q):
        f = sample(gaussian, -2.0, 2.0, 1 / 32)
        levels = [2.0 ** j * modulus_of_continuity(f, 2, 2, 2.0 ** -j) for j in range(6)]
        expected = grid_lp_norm(f, 2) + seq_lp_norm(levels, q)
        assert besov_norm_mc(f, 1.0, 2, q, 2, 6) == pytest.approx(expected, rel=1e-12)

    def test_stable_under_refinement_of_levels(self):
        f = sample(gaussian, -4.0, 4.0, 1 / 64)
        coarse = besov_norm_mc(f, 0.5, 2, 2, 2, 6)
        fine = besov_norm_mc(f, 0.5, 2, 2, 2, 12)
        assert fine == pytest.approx(coarse, rel=0.05)

    @pytest.mark.parametrize("s, m, levels", [(2.0, 2, 6), (1.5, 1, 6), (0.5, 2, 3), (-1.0, 2, 6)])
    def test_parameter_errors(self, s, m, levels):
        f = sample(gaussian, -1.0, 1.0, 1 / 16)
        with pytest.raises(ParameterError):
            besov_norm_mc(f, s, 2, 2, m, levels)


# ==========================================
# TAYLOR Y MINKOWSKI
# ==========================================

class TestTaylor:
    def test_exponential(self):
        estimate = taylor_eval_1d([1.0] * 5, 0.0, 1.0, bound=math.e)
        assert estimate.value == pytest.approx(65 / 24)
        assert estimate.remainder == pytest.approx(math.e / 120)
        assert abs(math.e - estimate.value) <= estimate.remainder

    def test_lower_order(self):
        assert taylor_eval_1d([1.0, 2.0, 3.0], 1.0, 3.0, m=1).value == pytest.approx(5.0)
        with pytest.raises(MissingPartial):
            taylor_eval_1d([1.0], 0.0, 1.0, m=2)

    def test_two_variables(self):
        # f(x, y) = x² + 3xy en x0 = (1, 2)
        partials = {(): 7.0, (0,): 8.0, (1,): 3.0, (0, 0): 2.0, (0, 1): 3.0, (1, 1): 0.0}
        assert taylor_eval_nd(partials, (1, 2), (2, -1), 2) == pytest.approx(-2.0)

    def test_without_factorials(self):
        partials = {(): 1.0, (0,): 1.0, (0, 0): 1.0}
        assert taylor_eval_nd(partials, (0,), (2,), 2, with_factorials=False) == pytest.approx(7.0)
        assert taylor_eval_nd(partials, (0,), (2,), 2) == pytest.approx(5.0)

    def test_missing_partial(self):
        with pytest.raises(MissingPartial):
            taylor_eval_nd({(): 1.0, (0,): 0.0, (1,): 0.0, (0, 0): 0.0, (0, 1): 0.0}, (0, 0), (1, 1), 2)


class TestMinkowski:
    def test_box(self):
        assert minkowski_functional(box_polytope(2), (3, -2)) == 3.0
        assert minkowski_functional(box_polytope(2), (0, 0)) == 0.0

    def test_dimension_mismatch(self):
        with pytest.raises(ParameterError):
            minkowski_functional(box_polytope(2), (1, 2, 3))

    vectors = st.tuples(st.floats(-100, 100), st.floats(-100, 100), st.floats(-100, 100))

    @settings(max_examples=300)
    @given(vectors)
    def test_box_gauge_is_sup_norm(self, x):
        assert minkowski_functional(box_polytope(3), x) == pytest.approx(seq_lp_norm(x, math.inf))

    @settings(max_examples=300)
    @given(vectors, vectors, st.floats(0, 50))
    def test_sublinear(self, x, y, lam):
        box = box_polytope(3)
        total = minkowski_functional(box, np.add(x, y))
        assert total <= minkowski_functional(box, x) + minkowski_functional(box, y) + 1e-9
        scaled = minkowski_functional(box, np.multiply(lam, x))
        assert scaled == pytest.approx(lam * minkowski_functional(box, x), abs=1e-9)


# ==========================================
# CONTINUIDAD UNIFORME Y CSV
# ==========================================

class TestUniformContinuity:
    def test_identity_profile(self):
        f = sample(lambda x: x, 0.0, 1.0, 1 / 64)
        profile = uniform_continuity_profile(f, 5)
        assert [t for t, _ in profile] == [1.0, 0.5, 0.25, 0.125, 0.0625]
        assert all(w == pytest.approx(t) for t, w in profile)
        assert is_uniformly_continuous(profile, 0.1)

    def test_constant_profile(self):
        f = sample(np.ones_like, 0.0, 1.0, 1 / 16)
        assert all(w == 0.0 for _, w in uniform_continuity_profile(f, 4))

    def test_step_has_a_floor(self):
        f = sample(lambda x: (x >= 0.5).astype(float), 0.0, 1.0, 1 / 64)
        profile = uniform_continuity_profile(f, 7)
        assert all(w == 1.0 for _, w in profile)
        assert not is_uniformly_continuous(profile, 0.5)

    def test_levels_below_spacing_are_dropped(self, caplog):
        f = sample(lambda x: x, 0.0, 1.0, 1 / 64)
        with caplog.at_level(logging.WARNING, logger="core.analysis"):
            profile = uniform_continuity_profile(f, 10)
        assert len(profile) == 7
        assert "descartados" in caplog.text

    def test_empty_profile(self):
        assert not is_uniformly_continuous([], 1.0)


class TestCsvGrids:
    def test_from_rows(self):
        rows = np.array([[0.0, 0.0, 1.0], [0.0, 0.5, 2.0], [0.5, 0.0, 3.0], [0.5, 0.5, 4.0]])
        schema = SampledFunctionInput.from_csv_rows(rows)
        f = schema.to_sampled()
        assert f.grid.shape == (2, 2)
        assert f.grid.spacing == 0.5
        np.testing.assert_array_equal(f.values, [[1.0, 2.0], [3.0, 4.0]])

    def test_incomplete_grid(self):
        rows = np.array([[0.0, 0.0, 1.0], [0.0, 0.5, 2.0], [0.5, 0.0, 3.0]])
        with pytest.raises(InvalidInput):
            SampledFunctionInput.from_csv_rows(rows)

    def test_non_uniform_grid(self):
        rows = np.array([[0.0, 1.0], [0.5, 2.0], [2.0, 3.0]])
        with pytest.raises(InvalidInput):
            SampledFunctionInput.from_csv_rows(rows)
