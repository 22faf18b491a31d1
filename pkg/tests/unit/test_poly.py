"""Tests for the polynomial algebra and the Euler/Bernoulli polynomials."""

from fractions import Fraction

import pytest
from eulerint.exactnum import DomainError
from eulerint.poly import (
    ONE,
    X,
    ZERO,
    Poly,
    bernoulli_poly,
    euler_poly,
    integral01,
    poly_antiderivative,
    poly_compose_linear,
    poly_derivative,
    poly_eval,
    poly_json,
    poly_linear_combine,
    poly_mul,
    poly_reflect,
    poly_shift,
    poly_text,
)
from eulerint.sequences import euler_numbers


def _random_poly(rng, degree: int = 6) -> Poly:
    return Poly(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree + 1)))


class TestPoly:
    def test_trailing_zeros_stripped(self):
        assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
        assert Poly((0, 0)) == ZERO

    def test_degree(self):
        assert ZERO.degree == -1
        assert ONE.degree == 0
        assert Poly.monomial(4).degree == 4

    def test_coeff_outside_range_is_zero(self):
        assert X.coeff(5) == 0
        assert X.coeff(-1) == 0

    def test_arithmetic_operators(self):
        p = X + 1
        assert p * p == Poly((1, 2, 1))
        assert p - p == ZERO
        assert 2 * p == Poly((2, 2))
        assert p / 2 == Poly((Fraction(1, 2), Fraction(1, 2)))
        assert 1 - X == Poly((1, -1))

    def test_divide_by_zero(self):
        with pytest.raises(DomainError):
            X / 0

    def test_call_evaluates(self):
        assert (X * X - 1)(Fraction(1, 2)) == Fraction(-3, 4)

    def test_linear_combine(self):
        combined = poly_linear_combine([(2, X), (Fraction(1, 2), ONE), (-2, X)])
        assert combined == Poly.constant(Fraction(1, 2))

    def test_mul_by_zero(self):
        assert poly_mul(ZERO, X) == ZERO


class TestComposition:
    def test_shift(self):
        assert poly_shift(X * X, 1) == Poly((1, 2, 1))

    def test_shift_by_zero_is_identity(self):
        p = euler_poly(5)
        assert poly_shift(p, 0) is p

    def test_reflect(self):
        assert poly_reflect(Poly((1, 2, 3))) == Poly((1, -2, 3))

    def test_compose_linear(self):
        p = Poly((1, 1, 1))
        assert poly_compose_linear(p, 2, -1) == Poly((1, -2, 4))

    def test_compose_matches_evaluation(self, rng):
        p = _random_poly(rng, 5)
        for _ in range(10):
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            b = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            x = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            assert poly_eval(poly_compose_linear(p, a, b), x) == poly_eval(p, a * x + b)

    def test_shifts_compose(self, rng):
        for _ in range(20):
            p = _random_poly(rng, rng.randint(0, 8))
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            b = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            assert poly_shift(poly_shift(p, a), b) == poly_shift(p, a + b)


class TestCalculus:
    def test_derivative(self):
        assert poly_derivative(Poly((5, 3, 2))) == Poly((3, 4))
        assert poly_derivative(ONE) == ZERO

    def test_antiderivative_has_zero_constant(self):
        anti = poly_antiderivative(Poly((1, 1)))
        assert anti == Poly((0, 1, Fraction(1, 2)))
        assert poly_derivative(anti) == Poly((1, 1))

    def test_derivative_undoes_antiderivative(self, rng):
        for _ in range(20):
            p = _random_poly(rng, rng.randint(0, 10))
            assert poly_derivative(poly_antiderivative(p)) == p

    def test_integral01(self):
        assert integral01(X * X) == Fraction(1, 3)
        assert integral01(ZERO) == 0


class TestEulerPolynomials:
    def test_golden(self, golden):
        for n, text in golden["euler_polys"].items():
            assert poly_text(euler_poly(int(n))) == text

    def test_value_at_zero_is_euler_number(self):
        table = euler_numbers(30)
        for n in range(31):
            assert poly_eval(euler_poly(n), 0) == table[n]

    def test_boundary_sum(self):
        for n in range(41):
            assert poly_shift(euler_poly(n), 1) + euler_poly(n) == 2 * Poly.monomial(n)

    def test_reflection(self):
        for n in range(41):
            reflected = poly_compose_linear(euler_poly(n), -1, 1)
            assert reflected == (-1) ** n * euler_poly(n)

    def test_derivative_ladder(self):
        for n in range(1, 41):
            assert poly_derivative(euler_poly(n)) == n * euler_poly(n - 1)

    def test_integral_over_unit_interval(self):
        table = euler_numbers(41)
        for n in range(41):
            assert integral01(euler_poly(n)) == -2 * table[n + 1] / (n + 1)

    def test_negative_index(self):
        with pytest.raises(DomainError):
            euler_poly(-1)


class TestBernoulliPolynomials:
    def test_golden(self, golden):
        for n, text in golden["bernoulli_polys"].items():
            assert poly_text(bernoulli_poly(int(n))) == text

    def test_difference_equation(self):
        for n in range(1, 31):
            diff = poly_shift(bernoulli_poly(n), 1) - bernoulli_poly(n)
            assert diff == n * Poly.monomial(n - 1)

    def test_derivative_ladder(self):
        for n in range(1, 41):
            assert poly_derivative(bernoulli_poly(n)) == n * bernoulli_poly(n - 1)

    def test_integrates_to_zero(self):
        for n in range(1, 31):
            assert integral01(bernoulli_poly(n)) == 0


class TestSympyCrossCheck:
    def test_polynomials_match_sympy(self):
        sympy = pytest.importorskip("sympy")
        x = sympy.Symbol("x")
        for n in range(16):
            for ours, theirs in (
                (euler_poly(n), sympy.euler(n, x)),
                (bernoulli_poly(n), sympy.bernoulli(n, x)),
            ):
                coeffs = sympy.Poly(theirs, x).all_coeffs()[::-1]
                assert ours == Poly(tuple(Fraction(str(c)) for c in coeffs))


class TestTextForms:
    def test_zero(self):
        assert poly_text(ZERO) == "0"

    def test_leading_negative(self):
        assert poly_text(Poly((0, -1, -1))) == "-x^2 - x"

    def test_json_constant_first(self):
        assert poly_json(euler_poly(3)) == {"coeffs": ["1/4", "0", "-3/2", "1"]}

    def test_str_uses_text(self):
        assert str(bernoulli_poly(1)) == "x - 1/2"
