# ==========================================
# tests/test_numbers.py
# ==========================================
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from core.errors import (
    ApartnessNotWitnessed, BadBracket, CapExceeded, DivisionByZero, InvalidInput, ModulusViolation,
)
from core.numbers import (
    I, Comparison, Complex, Int, Natural, ONE, Ordering, Rational, ZERO, complex_abs_sq, complex_arith,
    int_arith, nat_arith, nat_from_von_neumann, nat_succ, rat_arith, real_approx, real_arith, real_compare,
    real_from_rational, real_from_sequence, real_recip, supremum_bisect, von_neumann_encode,
)

rationals = st.builds(Rational, st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 4))
nonzero_rationals = rationals.filter(lambda q: not q.is_zero())


def harmonic_3_over_eps():
    return real_from_sequence(lambda k: Rational(1, k + 1), lambda eps: max((3 / eps).ceil(), 1))


def newton_sqrt2(iterations: int = 8) -> Fraction:
    x = Fraction(3, 2)
    for _ in range(iterations):
        x = (x + 2 / x) / 2
    return x


# ==========================================
# NATURALES Y ENTEROS
# ==========================================

class TestNatural:
    def test_successor(self):
        assert nat_succ(Natural(2)) == Natural(3)
        assert nat_succ(Natural(0)) == Natural(1)
        assert nat_succ(Natural(41)) == Natural(42)

    def test_arith(self):
        assert nat_arith("add", Natural(2), Natural(3)) == Natural(5)
        assert nat_arith("mul", Natural(9), Natural(0)) == Natural(0)
        assert nat_arith("le", Natural(3), Natural(3)) is True

    def test_negative_rejected(self):
        with pytest.raises(InvalidInput):
            Natural(-1)

    def test_von_neumann(self):
        empty = frozenset()
        one = frozenset({empty})
        assert von_neumann_encode(Natural(0)) == empty
        assert von_neumann_encode(Natural(2)) == frozenset({empty, one})
        assert von_neumann_encode(Natural(3)) == frozenset({empty, one, frozenset({empty, one})})

    def test_von_neumann_round_trip_count(self):
        assert nat_from_von_neumann(von_neumann_encode(Natural(6))) == Natural(6)

    def test_von_neumann_cap(self):
        with pytest.raises(CapExceeded):
            von_neumann_encode(Natural(5), cap=4)


class TestInt:
    def test_neg(self):
        assert int_arith("neg", Int(2, 0)) == Int(0, 2)

    def test_add_normalizes(self):
        result = int_arith("add", Int(2, 5), Int(7, 1))
        assert (result.a, result.b) == (3, 0)

    def test_mul(self):
        assert int_arith("mul", Int(2, 0), Int(0, 1)) == Int(0, 2)

    def test_compare(self):
        assert int_arith("cmp", Int.of(-3), Int.of(2)) == Ordering.LESS
        assert int_arith("cmp", Int(5, 2), Int(3, 0)) == Ordering.EQUAL

    @settings(max_examples=500)
    @given(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6))
    def test_additive_group_laws(self, x, y, z):
        a, b, c = Int.of(x), Int.of(y), Int.of(z)
        zero = Int.of(0)
        assert (a + b) + c == a + (b + c)
        assert a + zero == a
        assert a + (-a) == zero
        assert a + b == b + a
        assert (a * b).value == x * y


# ==========================================
# RACIONALES
# ==========================================

class TestRational:
    def test_examples(self):
        assert rat_arith("inv", Rational(2, 3)) == Rational(3, 2)
        assert rat_arith("add", Rational(1, 2), Rational(1, 3)) == Rational(5, 6)
        assert rat_arith("mul", Rational(7, 9), ONE) == Rational(7, 9)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            rat_arith("inv", ZERO)
        with pytest.raises(DivisionByZero):
            rat_arith("div", ONE, ZERO)

    def test_parse_and_str(self):
        assert Rational.parse("6/4") == Rational(3, 2)
        assert Rational.parse("-2.5") == Rational(-5, 2)
        assert str(Rational(4, 2)) == "2"
        assert str(Rational(-3, 6)) == "-1/2"
        with pytest.raises(InvalidInput):
            Rational.parse("uno")

    def test_floor_ceil(self):
        assert Rational(-7, 2).floor() == -4
        assert Rational(-7, 2).ceil() == -3

    @settings(max_examples=500)
    @given(rationals, rationals, rationals)
    def test_field_axioms(self, a, b, c):
        # K1–K4
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        # K5, K6
        assert a + ZERO == a
        assert a * ONE == a
        # K7
        assert ZERO != ONE
        # K8
        assert a + (-a) == ZERO
        # K10
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=500)
    @given(nonzero_rationals)
    def test_multiplicative_inverse(self, a):
        # K9
        assert a * a.inverse() == ONE

    @settings(max_examples=500)
    @given(rationals, rationals)
    def test_order_matches_fractions(self, a, b):
        expected = Fraction(a.num, a.den) < Fraction(b.num, b.den)
        assert (a < b) == expected
        assert (rat_arith("cmp", a, b) == Ordering.LESS) == expected

    @settings(max_examples=500)
    @given(rationals)
    def test_normal_form(self, a):
        assert a.den > 0
        assert math.gcd(a.num, a.den) == 1


# ==========================================
# REALES DE CAUCHY
# ==========================================

class TestCauchyReal:
    @pytest.mark.parametrize("eps", [Rational(1, 2), Rational(1, 10), Rational(1, 100)])
    def test_harmonic_modulus(self, eps):
        n = max((3 / eps).ceil(), 1)
        terms = [Rational(1, k + 1) for k in range(n + 1, n + 51)]
        assert all(abs(x - y) < eps for x in terms for y in terms)

    def test_constant_is_valid(self):
        assert real_from_sequence(lambda k: Rational(5), lambda eps: 0).approx(Rational(1, 100)) == 5

    def test_divergent_sequence_rejected(self):
        with pytest.raises(ModulusViolation):
            real_from_sequence(lambda k: Rational(k), lambda eps: 0)

    def test_approx_uses_modulus_index(self):
        assert real_approx(harmonic_3_over_eps(), Rational(1, 2)) == Rational(1, 7)
        assert real_approx(real_from_rational(7), Rational(1, 100)) == 7

    def test_add_zero(self):
        x = harmonic_3_over_eps()
        y = real_arith("add", x, real_from_rational(0))
        for eps in (ONE, Rational(1, 10), Rational(1, 100)):
            assert abs(y.approx(eps) - x.approx(eps)) <= 2 * eps

    def test_sum_of_harmonics_tends_to_zero(self):
        x = harmonic_3_over_eps()
        s = x + x
        for eps in (ONE, Rational(1, 10), Rational(1, 100)):
            assert abs(s.approx(eps)) <= eps

    def test_product_of_constants(self):
        p = real_arith("mul", real_from_rational(3), real_from_rational(4))
        for eps in (ONE, Rational(1, 10), Rational(1, 100)):
            assert abs(p.approx(eps) - 12) <= eps

    def test_reciprocal(self):
        assert real_recip(real_from_rational(4), 1).approx(Rational(1, 1000)) == Rational(1, 4)
        assert real_recip(real_from_rational(1), 1).approx(Rational(1, 1000)) == 1

    def test_reciprocal_without_apartness(self):
        with pytest.raises(ApartnessNotWitnessed):
            real_recip(harmonic_3_over_eps(), Rational(1, 10))

    def test_compare(self):
        tol = Rational(1, 10)
        assert real_compare(real_from_rational(0), real_from_rational(1), tol) == Comparison.LESS
        assert real_compare(real_from_rational(3), real_from_rational(3), tol) == Comparison.INDISTINGUISHABLE
        assert real_compare(harmonic_3_over_eps(), real_from_rational(0), Rational(1, 1000)) != Comparison.LESS


class TestSupremumBisect:
    def test_sup_of_interval(self):
        s = supremum_bisect(lambda q: q >= 1, 0, 2, 0)
        assert abs(s.approx(Rational(1, 1000)) - 1) <= Rational(1, 1000)

    def test_sqrt2_twenty_steps(self):
        s = supremum_bisect(lambda q: q >= 0 and q * q >= 2, 1, 2, 20)
        estimate = s.estimate()
        assert abs(Fraction(estimate.num, estimate.den) - newton_sqrt2()) <= Fraction(1, 2 ** 20)

    def test_sqrt2_thirty_steps(self):
        s = supremum_bisect(lambda q: q >= 0 and q * q >= 2, 1, 2, 30)
        q = s.estimate()
        assert abs(q * q - 2) <= Rational(1, 2 ** 27)
        assert abs(Fraction(q.num, q.den) - newton_sqrt2()) <= Fraction(1, 2 ** 30)

    def test_approx_of_sqrt2(self):
        s = supremum_bisect(lambda q: q >= 0 and q * q >= 2, 1, 2, 0)
        q = real_approx(s, Rational(1, 2 ** 10))
        assert abs(q * q - 2) <= Rational(3, 2 ** 9)

    def test_width_halves(self):
        s = supremum_bisect(lambda q: q >= 0 and q * q >= 2, 1, 2, 12)
        for n in range(13):
            assert s.uppers[n] - s.lowers[n] == Rational(1, 2 ** n)

    def test_bad_bracket(self):
        with pytest.raises(BadBracket):
            supremum_bisect(lambda q: q >= Rational(3, 2), 2, 1, 10)
        with pytest.raises(BadBracket):
            supremum_bisect(lambda q: q >= 5, 0, 1, 10)


# ==========================================
# COMPLEJOS
# ==========================================

class TestComplex:
    def test_i_squared(self):
        assert complex_arith("mul", I, I) == Complex(-1, 0)

    def test_inverse(self):
        assert complex_arith("inv", Complex(3, 4)) == Complex(Rational(3, 25), Rational(-4, 25))

    def test_decomposition(self):
        a, b = Rational(2, 3), Rational(-5, 7)
        assert Complex(a, b) == Complex(a, 0) + Complex(b, 0) * I

    def test_conjugate(self):
        assert complex_arith("conj", Complex(1, 2)) == Complex(1, -2)

    def test_zero_has_no_inverse(self):
        with pytest.raises(DivisionByZero):
            complex_arith("inv", Complex(0, 0))

    def test_real_components_need_witness(self):
        z = Complex(real_from_rational(3), real_from_rational(4))
        with pytest.raises(ApartnessNotWitnessed):
            complex_arith("inv", z)
        w = complex_arith("inv", z, lower=1)
        eps = Rational(1, 1000)
        assert abs(w.re.approx(eps) - Rational(3, 25)) <= eps
        assert abs(w.im.approx(eps) + Rational(4, 25)) <= eps

    @settings(max_examples=500)
    @given(rationals, rationals, rationals, rationals)
    def test_absolute_value_laws(self, a, b, c, d):
        z, w = Complex(a, b), Complex(c, d)
        # |z w|² = |z|² |w|² y |z|² = 0 solo para z = 0
        assert complex_abs_sq(z * w) == complex_abs_sq(z) * complex_abs_sq(w)
        assert (complex_abs_sq(z) == 0) == z.is_zero()

    @settings(max_examples=500)
    @given(rationals, rationals, rationals, rationals)
    def test_division_inverts_product(self, a, b, c, d):
        w = Complex(c, d)
        assume(not w.is_zero())
        z = Complex(a, b)
        assert complex_arith("div", z * w, w) == z
