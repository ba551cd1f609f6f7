import pytest

from hyperstern.core import stern_poly
from hyperstern.genproduct import (
    SizeBoundError,
    finite_product_lhs,
    finite_product_rhs,
    l_value,
    specialize_z1,
    truncated_product,
)
from hyperstern.oracle import enumerate_expansions
from hyperstern.polyring import SternPoly, evaluate, parse_text, specialize_t


def P(text, b=3):
    return parse_text(text, b)


def test_truncated_product_examples():
    assert truncated_product(3, 2)[4] == P("z1^(t1) + z3")
    for b in (2, 3, 4):
        assert truncated_product(b, 2)[1] == SternPoly.one(b)
        assert truncated_product(b, 2)[0] == SternPoly.zero(b)
    tp = truncated_product(2, 3)
    assert [tp[n] for n in range(9)] == [stern_poly(n, 2) for n in range(9)]


@pytest.mark.parametrize("b,K", [(2, 5), (3, 4), (4, 3), (3, 5)])
def test_truncation_exact(b, K):
    tp = truncated_product(b, K)
    assert len(tp.coeffs) == b**K + 1
    for n in range(1, b**K + 1):
        assert tp[n] == stern_poly(n, b)


def test_size_bound():
    with pytest.raises(SizeBoundError):
        truncated_product(5, 8, size_bound=10**4)
    with pytest.raises(ValueError):
        truncated_product(3, 0)


def test_l_value():
    assert [l_value(2, N) for N in range(1, 5)] == [3, 7, 15, 31]
    assert l_value(3, 2) == 13


def test_lhs_examples():
    assert finite_product_lhs(2, 1) == parse_text("2 + z2", 2)
    # (2 + z2 + z3)(2 + z2^t2 + z3^t3) expanded by hand
    expected = P(
        "4 + 2*z2^(t2) + 2*z3^(t3) + 2*z2 + z2^(1 + t2) + z2*z3^(t3)"
        " + 2*z3 + z2^(t2)*z3 + z3^(1 + t3)"
    )
    assert finite_product_lhs(3, 2) == expected
    numeric = P("4 + 2*z2^(3*1) + 2*z3^(3*1) + 2*z2 + z2^(4*1) + z2*z3^(3*1) + 2*z3 + z2^(3*1)*z3 + z3^(4*1)")
    assert finite_product_lhs(3, 2, "numeric") == numeric
    with pytest.raises(ValueError):
        finite_product_lhs(3, 2, "bogus")


def test_rhs_examples():
    # w(3 | 1, z2) = 1 + z2 and w(4 | 1, z2) = 1
    assert specialize_z1(stern_poly(3, 2)) == parse_text("1 + z2", 2)
    assert specialize_z1(stern_poly(4, 2)) == SternPoly.one(2)
    assert finite_product_rhs(2, 1) == parse_text("2 + z2", 2)
    ones = [1, 1, 1]
    assert evaluate(finite_product_rhs(3, 1), ones, ones) == 4
    assert sum(len(enumerate_expansions(n, 3)) for n in (2, 3, 4)) == 4


def test_specialize_z1_examples():
    assert specialize_z1(P("z1^(t1) + z3")) == P("1 + z3")
    assert specialize_z1(SternPoly.one(3)) == SternPoly.one(3)
    assert specialize_z1(P("z1^(t1) + z1^(t1^2)")) == SternPoly.constant(3, 2)


@pytest.mark.parametrize("b", [2, 3, 4, 5])
@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_finite_product_identity(b, N):
    lhs, rhs = finite_product_lhs(b, N), finite_product_rhs(b, N)
    assert lhs == rhs
    ones = [1] * b
    assert evaluate(lhs, ones, ones) == evaluate(rhs, ones, ones) == (b + 1) ** N
    assert all(not m.exps[0] for m in rhs.terms)


@pytest.mark.parametrize("b", [2, 3, 4])
@pytest.mark.parametrize("N", [2, 3])
def test_printed_exponents_hold_only_at_t_equal_b(b, N):
    numeric = finite_product_lhs(b, N, "numeric")
    rhs = finite_product_rhs(b, N)
    assert numeric != rhs
    assert numeric == specialize_t(rhs, [b] * b)
