"""Tests for the product-expression parser."""

from fractions import Fraction

import pytest
from eulerint.expr import MAX_INDEX, ExprSyntaxError, ProductExpr, parse_expr, render_expr
from eulerint.oracle import Factor, Family


def _triples(expr: ProductExpr):
    return [(f.family.value, f.index, f.shift) for f in expr.factors]


class TestParse:
    def test_plain_product(self):
        assert _triples(parse_expr("E1*E1")) == [("E", 1, 0), ("E", 1, 0)]

    def test_shift_and_family(self):
        assert _triples(parse_expr("E3(x+1/2)*B2")) == [
            ("E", 3, Fraction(1, 2)),
            ("B", 2, 0),
        ]

    def test_power_sugar(self):
        assert _triples(parse_expr("E1^3")) == [("E", 1, 0)] * 3

    def test_power_with_shift(self):
        assert _triples(parse_expr("B2^2(x-3)")) == [("B", 2, Fraction(-3))] * 2

    def test_whitespace_ignored(self):
        assert parse_expr(" E 2 ( x - 1 / 3 ) * B1 ") == parse_expr("E2(x-1/3)*B1")

    def test_unshifted_argument(self):
        assert _triples(parse_expr("E4(x)")) == [("E", 4, 0)]

    def test_shift_normalized(self):
        assert parse_expr("E1(x+2/4)").factors[0].shift == Fraction(1, 2)

    def test_to_spec(self):
        spec = parse_expr("E2*B1").to_spec()
        assert spec.factors == (Factor(Family.E, 2), Factor(Family.B, 1))


class TestSyntaxErrors:
    @pytest.mark.parametrize(
        "text, offset, expected",
        [
            ("E", 1, ("digit",)),
            ("", 0, ("'B'", "'E'")),
            ("X1", 0, ("'B'", "'E'")),
            ("E1*", 3, ("'B'", "'E'")),
            ("E1 E2", 3, ("'*'", "end of input")),
            ("E1(y)", 3, ("'x'",)),
            ("E1(x*2)", 4, ("')'", "'+'", "'-'")),
            ("E1(x+1/0)", 7, ("positive integer",)),
            ("E1(x+1", 6, ("')'",)),
            ("E1^0", 3, ("positive power",)),
            ("E\u00b2", 1, ("digit",)),
            ("E\u0661", 1, ("digit",)),
            ("E1(x+\u00bd)", 5, ("digit",)),
            ("E1^\u00b3", 3, ("digit",)),
        ],
    )
    def test_offset_and_expected(self, text, offset, expected):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse_expr(text)
        assert exc_info.value.offset == offset
        assert exc_info.value.expected == expected

    def test_message(self):
        with pytest.raises(ExprSyntaxError, match="expected one of: digit at offset 1"):
            parse_expr("E")

    def test_caret_points_at_offset(self):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse_expr("E1*Q2")
        assert exc_info.value.caret() == "E1*Q2\n   ^"

    def test_offset_counts_characters(self):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse_expr("E1\u00a0*\u00a0Q2")
        assert exc_info.value.offset == 5
        assert exc_info.value.byte_offset == 7
        assert exc_info.value.caret().splitlines()[1] == "     ^"

    def test_index_overflow(self):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse_expr(f"E{MAX_INDEX + 1}")
        assert exc_info.value.offset == 1
        assert exc_info.value.expected == (f"index <= {MAX_INDEX}",)

    def test_power_overflow(self):
        with pytest.raises(ExprSyntaxError):
            parse_expr(f"E1^{MAX_INDEX + 1}")

    def test_is_value_error(self):
        assert issubclass(ExprSyntaxError, ValueError)


class TestRender:
    def test_canonical_text(self):
        assert render_expr(parse_expr("E3(x+1/2)*B2")) == "E3(x+1/2)*B2"
        assert render_expr(parse_expr("E1^3")) == "E1*E1*E1"
        assert render_expr(parse_expr("B2(x-2/6)")) == "B2(x-1/3)"

    def test_parse_render_identity(self, rng):
        for _ in range(200):
            factors = tuple(
                Factor(
                    rng.choice([Family.E, Family.B]),
                    rng.randint(0, 30),
                    Fraction(rng.randint(-20, 20), rng.randint(1, 12)),
                )
                for _ in range(rng.randint(1, 5))
            )
            expr = ProductExpr(factors)
            assert parse_expr(render_expr(expr)) == expr
