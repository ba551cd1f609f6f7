import random

import pytest

from conftest import classical_stern
from hyperstern.core import DigitString, stern_count, stern_poly, to_digits
from hyperstern.matrixrep import (
    SymMatrix2,
    num_matrix,
    prefix_products,
    stern_count_big,
    stern_via_matrix,
    sym_matrix,
)
from hyperstern.polyring import SternPoly, parse_text


def P(text, b=3):
    return parse_text(text, b)


def test_sym_matrix_examples():
    zero, one = SternPoly.zero(3), SternPoly.one(3)
    assert sym_matrix(1, 0, 3) == SymMatrix2((P("z3"), one, zero, P("z1")))
    assert sym_matrix(2, 1, 3) == SymMatrix2((zero, P("z1^(t1)"), zero, P("z2^(t2)")))
    assert sym_matrix(0, 2, 3) == SymMatrix2((P("z2^(t2^2)"), zero, P("z3^(t3^2)"), one))


def test_worked_product():
    # A_1(0) A_2(1) for n = 7 = (21)_3
    prod = sym_matrix(1, 0, 3) @ sym_matrix(2, 1, 3)
    zero = SternPoly.zero(3)
    assert prod == SymMatrix2((zero, P("z1^(t1)*z3 + z2^(t2)"), zero, P("z1*z2^(t2)")))


def test_digit_range():
    with pytest.raises(ValueError):
        sym_matrix(2, 0, 2)
    with pytest.raises(ValueError):
        sym_matrix(-1, 0, 3)
    with pytest.raises(ValueError):
        num_matrix(3, 3)


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_specialization_coherence(b):
    ones = [1] * b
    for i in range(b):
        for d in (0, 3):
            assert sym_matrix(i, d, b).evaluate(ones, ones) == num_matrix(i, b)
    assert num_matrix(0, b).entries == (1, 0, 1, 1)
    assert num_matrix(1, b).entries == (1, 1, 0, 1)


def test_stern_via_matrix_examples():
    assert stern_via_matrix(7, 3) == P("z1^(t1)*z3 + z2^(t2)")
    assert stern_via_matrix(8, 3) == P("z1*z2^(t2)")
    for b in (2, 3, 7):
        assert stern_via_matrix(0, b) == SternPoly.zero(b)


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_matrix_equals_recurrence(b):
    for n in range(b**5 + 1):
        assert stern_via_matrix(n, b) == stern_poly(n, b)


@pytest.mark.parametrize("b", [2, 3, 4])
def test_partial_product_columns(b):
    for n in range(1, b**4 + 1):
        steps = list(prefix_products(n, b))
        assert len(steps) == len(to_digits(n, b))
        for m, prod in steps:
            assert prod.column(1) == (stern_poly(m, b), stern_poly(m + 1, b))


@pytest.mark.parametrize("b", [2, 3, 5])
def test_leading_zeros(b):
    for n in range(b**3):
        assert stern_via_matrix(n, b, leading_zeros=3) == stern_via_matrix(n, b)


def test_count_big_examples():
    assert stern_count_big(DigitString(2, (1, 0, 1))) == 3 == classical_stern(5)[5]
    for b in (2, 3, 9):
        assert stern_count_big(DigitString(b, (1,))) == 1
    assert stern_count_big(to_digits(10, 3)) == 3
    assert stern_count_big([1, 0, 1], base=2) == 3
    with pytest.raises(ValueError):
        stern_count_big([1, 0, 1])


@pytest.mark.parametrize("b", [2, 3, 4, 6])
def test_count_big_matches_recurrence(b):
    for n in range(1, 2000):
        assert stern_count_big(to_digits(n, b)) == stern_count(n, b)


def test_count_big_long_inputs():
    rng = random.Random(7)
    for b in (2, 3, 5):
        digits = (1,) + tuple(rng.randrange(b) for _ in range(1500))
        n = DigitString(b, digits).value
        assert stern_count_big(DigitString(b, digits)) == stern_count(n, b)


def test_count_big_rejects_bad_digit():
    with pytest.raises(ValueError):
        stern_count_big([1, 3], base=3)
