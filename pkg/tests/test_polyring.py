from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import exppolys, sternpolys
from hyperstern.polyring import (
    BaseMismatchError,
    ExpPoly,
    Monomial,
    ParseError,
    RationalPair,
    SternPoly,
    canonical_text,
    epoly_shift,
    evaluate,
    frobenius,
    from_json,
    parse_text,
    poly_add,
    poly_mul,
    specialize_t,
    to_json,
)


def z(b, j, tpower=0):
    return SternPoly.var(b, j, tpower)


def P(text, b=3):
    return parse_text(text, b)


class TestExpPoly:
    def test_shift_examples(self):
        assert epoly_shift(ExpPoly({0: 1, 1: 1}), 1) == ExpPoly({1: 1, 2: 1})
        assert epoly_shift(ExpPoly(), 5) == ExpPoly()
        assert epoly_shift(ExpPoly({2: 1}), 2) == ExpPoly({4: 1})

    def test_zero_coefficients_dropped(self):
        assert ExpPoly({3: 0}) == ExpPoly()
        assert not ExpPoly({3: 0})

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ExpPoly({1: -1})

    @given(exppolys(), st.integers(0, 5), st.integers(0, 5))
    def test_shift_composes(self, p, d1, d2):
        assert p.shift(d1).shift(d2) == p.shift(d1 + d2)


class TestArithmetic:
    def test_add_examples(self):
        assert poly_add(z(3, 3), z(3, 1, 1)) == P("z1^(t1) + z3")
        p = P("z1^(t1) + z3")
        assert poly_add(p, SternPoly.zero(3)) == p
        assert poly_add(z(3, 2), z(3, 2)) == P("2*z2")

    def test_mul_examples(self):
        p = z(3, 3) + z(3, 1, 1)
        assert poly_mul(p, SternPoly.one(3)) == p
        assert poly_mul(z(3, 1, 1), z(3, 1, 2)) == P("z1^(t1 + t1^2)")
        # (z3 + z1^t1)^2 expanded by hand
        assert canonical_text(p * p) == "z1^(2*t1) + 2*z1^(t1)*z3 + z3^(2*1)"

    def test_base_mismatch(self):
        with pytest.raises(BaseMismatchError):
            SternPoly.one(2) + SternPoly.one(3)
        with pytest.raises(BaseMismatchError):
            SternPoly.one(2) * SternPoly.one(3)

    @settings(max_examples=60)
    @given(sternpolys(3), sternpolys(3), sternpolys(3))
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=60)
    @given(sternpolys(2), sternpolys(2), st.integers(0, 4), st.integers(0, 4))
    def test_frobenius_homomorphism(self, a, b, d1, d2):
        assert frobenius(a * b, d1) == frobenius(a, d1) * frobenius(b, d1)
        assert frobenius(a + b, d1) == frobenius(a, d1) + frobenius(b, d1)
        assert frobenius(a, d1 + d2) == frobenius(frobenius(a, d1), d2)


class TestFrobenius:
    def test_examples(self):
        assert frobenius(P("z1^(t1) + z3"), 1) == P("z1^(t1^2) + z3^(t3)")
        p = P("z1^(1 + t1)*z2 + z3")
        assert frobenius(p, 0) == p
        assert frobenius(SternPoly.one(3), 7) == SternPoly.one(3)

    def test_term_count_preserved(self):
        p = P("z1 + z1^(t1) + z2*z3^(t3^4)")
        assert len(frobenius(p, 3)) == len(p)


class TestEvaluate:
    def test_examples(self):
        assert evaluate(P("z1^(t1) + z3"), [1, 1, 1], [5, 7, 9]) == 2
        assert evaluate(SternPoly.zero(3), [2, 3, 4], [1, 1, 1]) == 0
        assert evaluate(P("z1^(1 + t1)"), [2, 1, 1], [3, 0, 0]) == 16

    def test_rational_values(self):
        p = P("z1^(t1^2)*z2 + 3*z3^(t3)")
        assert evaluate(p, [Fraction(1, 2), 3, Fraction(-1, 3)], [2, 0, 2]) == Fraction(1, 16) * 3 + 3 * Fraction(1, 9)

    def test_overflow_detected(self):
        with pytest.raises(OverflowError):
            evaluate(z(3, 1, 30), [2, 1, 1], [10, 1, 1])

    def test_trivial_bases_never_overflow(self):
        assert evaluate(z(3, 1, 30), [1, 1, 1], [10, 1, 1]) == 1
        assert evaluate(z(3, 1, 30), [-1, 1, 1], [10, 1, 1]) == 1

    @settings(max_examples=60)
    @given(sternpolys(2), sternpolys(2), st.lists(st.integers(-2, 2), min_size=2, max_size=2),
           st.lists(st.integers(0, 2), min_size=2, max_size=2))
    def test_homomorphism(self, a, b, zs, ts):
        assert evaluate(a * b, zs, ts) == evaluate(a, zs, ts) * evaluate(b, zs, ts)
        assert evaluate(a + b, zs, ts) == evaluate(a, zs, ts) + evaluate(b, zs, ts)

    @given(sternpolys(3), st.lists(st.integers(0, 5), min_size=3, max_size=3))
    def test_at_ones_is_coefficient_sum(self, p, ts):
        assert evaluate(p, [1, 1, 1], ts) == p.coefficient_sum()

    def test_specialize_t_matches_evaluation(self):
        p = P("z1^(t1 + t1^2)*z2 + z3^(2*1 + t3)")
        q = specialize_t(p, [3, 2, 5])
        assert canonical_text(q) == "z1^(12*1)*z2 + z3^(7*1)"
        assert evaluate(q, [2, 3, 1], [0, 0, 0]) == evaluate(p, [2, 3, 1], [3, 2, 5])


class TestText:
    def test_examples(self):
        assert canonical_text(SternPoly.one(4)) == "1"
        assert canonical_text(SternPoly.zero(4)) == "0"
        p = P("z3^(1 + t3) + z1^(t1^2)*z3 + z1^(t1 + t1^2)")
        assert canonical_text(p) == "z1^(t1 + t1^2) + z1^(t1^2)*z3 + z3^(1 + t3)"

    def test_constant_exponent_one_omitted(self):
        assert canonical_text(z(3, 3)) == "z3"

    def test_constants_and_coefficients(self):
        p = SternPoly.constant(3, 2) + z(3, 2)
        assert canonical_text(p) == "2 + z2"
        assert canonical_text(p * p) == "4 + 4*z2 + z2^(2*1)"

    @settings(max_examples=80)
    @given(st.integers(2, 5).flatmap(sternpolys))
    def test_round_trip(self, p):
        assert parse_text(canonical_text(p), p.base) == p
        assert from_json(to_json(p)) == p

    def test_json_layout(self):
        data = to_json(P("z1^(t1) + z3", 3))
        assert data == {
            "base": 3,
            "terms": [
                {"coeff": 1, "exps": [[[1, 1]], [], []]},
                {"coeff": 1, "exps": [[], [], [[0, 1]]]},
            ],
        }

    @pytest.mark.parametrize(
        "text, pos",
        [
            ("z4", 1),  # index out of range for base 3
            ("z1^(t2)", 5),  # z1 must carry t1
            ("z1 + ", 4),  # end of stripped input
            ("z1 z2", 3),
            ("z1^(t1", 6),
            ("x1", 0),
        ],
    )
    def test_parse_errors_carry_position(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse_text(text, 3)
        assert info.value.pos == pos

    def test_parse_merges_like_terms(self):
        assert parse_text("z1 + z1", 2) == parse_text("2*z1", 2)


class TestRationalPair:
    def test_cross_multiplied_equality(self):
        a, b = z(2, 1), z(2, 2)
        assert RationalPair(a * b, b * b) == RationalPair(a, b)
        assert RationalPair(a, b) != RationalPair(b, a)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalPair(SternPoly.one(2), SternPoly.zero(2))

    def test_addition(self):
        one = SternPoly.one(2)
        half_like = RationalPair(one, z(2, 1))
        assert half_like + half_like == RationalPair(SternPoly.constant(2, 2), z(2, 1))
        assert half_like + one == RationalPair(one + z(2, 1), z(2, 1))


def test_monomial_rejects_mismatched_bases():
    with pytest.raises(BaseMismatchError):
        Monomial.identity(2) * Monomial.identity(3)
