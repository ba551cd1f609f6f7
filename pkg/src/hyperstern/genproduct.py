"""Generating-product view of the Stern polynomials.

``sum_{n>=1} w_T(n) x^n = x * prod_{i>=0} (1 + sum_j z_j^{t_j^i} x^{j b^i})``

plus the finite product identity with ``z_1 = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List

from .core import stern_poly
from .polyring import ExpPoly, Monomial, SternPoly

__all__ = [
    "SizeBoundError",
    "ProductTruncation",
    "truncated_product",
    "l_value",
    "finite_product_lhs",
    "finite_product_rhs",
    "specialize_z1",
]

DEFAULT_SIZE_BOUND = 1 << 16


class SizeBoundError(ValueError):
    pass


@dataclass(frozen=True)
class ProductTruncation:
    base: int
    levels: int
    coeffs: List[SternPoly]  # coeffs[n] is the coefficient of x^n, n = 0..base**levels

    def __getitem__(self, n: int) -> SternPoly:
        return self.coeffs[n]


def truncated_product(b: int, K: int, size_bound: int = DEFAULT_SIZE_BOUND) -> ProductTruncation:
    """Expand the first ``K`` factors, keeping x-degrees up to ``b**K``.

    Coefficients are exact for ``1 <= n <= b**K``: an expansion of anything
    below ``b**K`` never uses a part ``b**K`` or larger.
    """
    if K < 1:
        raise ValueError("need at least one factor")
    size = b**K
    if size > size_bound:
        raise SizeBoundError(f"b**K = {size} exceeds size bound {size_bound}")
    cap = size - 1  # degree cap before the leading factor x
    zero = SternPoly.zero(b)
    series: List[SternPoly] = [SternPoly.one(b)] + [zero] * cap
    top = 0  # highest nonzero degree so far
    for i in range(K):
        step = b**i
        factor = [(j * step, Monomial.var(b, j, ExpPoly.monomial(i))) for j in range(1, b + 1)]
        new = list(series)
        for deg in range(top + 1):
            src = series[deg]
            if not src:
                continue
            for shift, mono in factor:
                target = deg + shift
                if target > cap:
                    break
                new[target] = new[target] + src.mul_monomial(mono)
        series = new
        top = min(cap, top + b * step)
    return ProductTruncation(b, K, [zero] + series)


def l_value(b: int, N: int) -> int:
    """``(b**(N+1) - 1) / (b - 1)``."""
    return (b ** (N + 1) - 1) // (b - 1)


def finite_product_lhs(b: int, N: int, exponent_mode: str = "symbolic") -> SternPoly:
    """``prod_{i<N} (2 + sum_{j=2}^b z_j^{e_i})``.

    ``e_i`` is ``t_j^i`` in symbolic mode and the integer ``b**i`` in
    numeric mode.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    if exponent_mode not in ("symbolic", "numeric"):
        raise ValueError(f"unknown exponent mode {exponent_mode!r}")
    result = SternPoly.one(b)
    for i in range(N):
        exp = ExpPoly.monomial(i) if exponent_mode == "symbolic" else ExpPoly.constant(b**i)
        terms: Dict[Monomial, int] = {Monomial.identity(b): 2}
        for j in range(2, b + 1):
            terms[Monomial.var(b, j, exp)] = 1
        result = result * SternPoly(b, terms)
    return result


def specialize_z1(p: SternPoly) -> SternPoly:
    """Set ``z_1 = 1``, merging monomials that coincide afterwards."""
    acc: Dict[Monomial, int] = {}
    empty = ExpPoly()
    for mono, coeff in p.terms.items():
        m = Monomial((empty,) + mono.exps[1:]) if mono.exps[0] else mono
        acc[m] = acc.get(m, 0) + coeff
    return SternPoly(p.base, acc)


def finite_product_rhs(b: int, N: int) -> SternPoly:
    """``sum_{n = l_N - b^N + 2}^{l_N + 1} w_T(n | 1, z_2, ..., z_b)``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    l_n = l_value(b, N)
    total = SternPoly.zero(b)
    for n in range(l_n - b**N + 2, l_n + 2):
        total = total + specialize_z1(stern_poly(n, b))
    return total
