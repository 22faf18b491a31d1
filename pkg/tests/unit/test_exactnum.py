"""Tests for exact rationals and integer combinatorics."""

from fractions import Fraction

import pytest
from eulerint.exactnum import (
    DomainError,
    beta_int,
    binomial,
    factorial,
    gamma_int,
    parse_rational,
    rat_add,
    rat_div,
    rat_make,
    rat_mul,
    rat_neg,
    rat_text,
)
from eulerint.poly import Poly, integral01, poly_compose_linear


def _random_rational(rng) -> Fraction:
    return Fraction(rng.randint(-50, 50), rng.randint(1, 30))


class TestRationals:
    def test_make_normalizes(self):
        assert rat_make(6, -8) == Fraction(-3, 4)
        assert rat_make(6, -8).denominator == 4

    def test_make_zero_is_zero_over_one(self):
        z = rat_make(0, 5)
        assert (z.numerator, z.denominator) == (0, 1)

    def test_zero_denominator(self):
        with pytest.raises(DomainError, match="zero denominator"):
            rat_make(1, 0)

    def test_division_by_zero(self):
        with pytest.raises(DomainError, match="division by zero"):
            rat_div(Fraction(1, 2), 0)

    def test_field_operations(self):
        assert rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
        assert rat_mul(Fraction(2, 3), Fraction(9, 4)) == Fraction(3, 2)
        assert rat_neg(Fraction(1, 7)) == Fraction(-1, 7)
        assert rat_div(Fraction(1, 2), Fraction(1, 4)) == 2

    def test_field_laws_on_random_values(self, rng):
        for _ in range(200):
            a, b, c = (_random_rational(rng) for _ in range(3))
            assert rat_add(a, b) == rat_add(b, a)
            assert rat_mul(a, b) == rat_mul(b, a)
            assert rat_mul(a, rat_add(b, c)) == rat_add(rat_mul(a, b), rat_mul(a, c))
            assert rat_add(a, rat_neg(a)) == 0

    def test_domain_error_is_value_error(self):
        assert issubclass(DomainError, ValueError)


class TestRationalText:
    @pytest.mark.parametrize(
        "value, text",
        [
            (Fraction(-3, 4), "-3/4"),
            (Fraction(17), "17"),
            (Fraction(0), "0"),
            (Fraction(1, 12), "1/12"),
        ],
    )
    def test_text_form(self, value, text):
        assert rat_text(value) == text

    @pytest.mark.parametrize("text", ["-3/4", "17", "0", "691/2730"])
    def test_parse_reads_text_form(self, text):
        assert rat_text(parse_rational(text)) == text

    def test_parse_normalizes(self):
        assert parse_rational("2/4") == Fraction(1, 2)

    @pytest.mark.parametrize("text", ["", "x", "1/", "1/2/3", "0.5"])
    def test_parse_rejects_garbage(self, text):
        with pytest.raises(DomainError):
            parse_rational(text)

    def test_parse_rejects_zero_denominator(self):
        with pytest.raises(DomainError, match="zero denominator"):
            parse_rational("1/0")


class TestCombinatorics:
    def test_factorial(self):
        assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]

    def test_factorial_ladder(self):
        for n in range(51):
            assert factorial(n + 1) == (n + 1) * factorial(n)

    def test_factorial_negative(self):
        with pytest.raises(DomainError):
            factorial(-1)

    def test_binomial_zero_outside_range(self):
        assert binomial(5, -1) == 0
        assert binomial(5, 6) == 0
        assert binomial(5, 2) == 10

    def test_binomial_negative_upper(self):
        with pytest.raises(DomainError):
            binomial(-1, 0)

    def test_gamma_at_integers(self):
        assert gamma_int(1) == 1
        assert gamma_int(5) == 24

    def test_gamma_nonpositive(self):
        with pytest.raises(DomainError, match="Gamma"):
            gamma_int(0)

    @pytest.mark.parametrize(
        "a, b, value",
        [(1, 1, Fraction(1)), (2, 3, Fraction(1, 12)), (3, 3, Fraction(1, 30))],
    )
    def test_beta_values(self, a, b, value):
        assert beta_int(a, b) == value

    def test_beta_symmetric(self):
        for a in range(1, 31):
            for b in range(1, 31):
                assert beta_int(a, b) == beta_int(b, a)

    def test_beta_matches_polynomial_integral(self):
        for a in range(1, 16):
            for b in range(1, 16):
                integrand = Poly.monomial(a - 1) * poly_compose_linear(
                    Poly.monomial(b - 1), -1, 1
                )
                assert beta_int(a, b) == integral01(integrand)

    def test_beta_nonpositive(self):
        with pytest.raises(DomainError, match=r"nonpositive Beta argument: B\(0, 2\)"):
            beta_int(0, 2)
