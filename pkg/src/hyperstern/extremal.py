"""Maximal indices of the counting sequence and the Stern polynomials there.

Over ``[b^(k-2), b^(k-1))`` the count ``w_T(n | 1..1)`` peaks at ``F_k``,
first reached at the base-b Jacobsthal number ``a_k`` whose digits are
``(10)^(l-1) 1`` for ``k = 2l`` and ``(10)^(l-1) 11`` for ``k = 2l+1``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .core import DigitString, stern_count_table, stern_poly
from .matrixrep import stern_count_big
from .oracle import enumerate_expansions
from .polyring import RationalPair, SternPoly, evaluate

__all__ = [
    "ScanBoundError",
    "MaxScanResult",
    "CFNode",
    "fib",
    "a_index",
    "a_digits",
    "a_recurrence",
    "a_recurrence_check",
    "max_scan",
    "thm_rec_sides",
    "thm_rec_check",
    "multiplicity_support_check",
    "multiplicity_readings",
    "cf_odd_node",
    "cf_even_node",
    "cf_odd",
    "cf_even",
    "cf_target",
    "cf_verify",
    "cf_value",
    "cf_display_matches",
    "max_order_ratio",
    "max_order_constant",
    "PHI",
]

PHI = (1 + math.sqrt(5)) / 2
DEFAULT_SCAN_BOUND = 10**6


class ScanBoundError(ValueError):
    pass


def scan_bound() -> int:
    return int(os.environ.get("STERN_SCAN_BOUND", DEFAULT_SCAN_BOUND))


def fib(k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def a_index(k: int, b: int) -> int:
    """Closed form ``(b^k - 1)/(b^2 - 1) + [k odd] * b/(b+1)``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    value = Fraction(b**k - 1, b * b - 1) + Fraction(1 - (-1) ** k, 2) * Fraction(b, b + 1)
    if value.denominator != 1:
        raise ArithmeticError(f"a_{k} for base {b} is not an integer: {value}")
    return value.numerator


def a_digits(k: int, b: int) -> DigitString:
    if k < 2:
        raise ValueError("k must be at least 2")
    l, odd = divmod(k, 2)
    tail = (1, 1) if odd else (1,)
    return DigitString(b, (1, 0) * (l - 1) + tail)


def a_recurrence(k: int, b: int) -> int:
    """``a_k`` from ``a_2 = 1`` via ``a_n = b a_(n-1) + 1 - b [n even]``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    a = 1
    for n in range(3, k + 1):
        a = b * a + 1 - (b if n % 2 == 0 else 0)
    return a


def a_recurrence_check(k_max: int, b: int) -> bool:
    a = 1
    for n in range(3, k_max + 1):
        a = b * a + 1 - (b if n % 2 == 0 else 0)
        if a != a_index(n, b):
            return False
    return True


@dataclass(frozen=True)
class MaxScanResult:
    k: int
    max_value: int
    argmin_index: int


def max_scan(k: int, b: int, bound: int | None = None, counts: Sequence[int] | None = None) -> MaxScanResult:
    """Brute-force maximum of the count over ``[b^(k-2), b^(k-1))``.

    ``counts`` may be a precomputed ``stern_count_table`` covering the range.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    lo, hi = b ** (k - 2), b ** (k - 1)
    bound = scan_bound() if bound is None else bound
    if hi > bound:
        raise ScanBoundError(f"scan up to {hi} exceeds bound {bound}")
    if counts is None or len(counts) < hi:
        counts = stern_count_table(hi - 1, b)
    best, where = -1, lo
    for n in range(lo, hi):
        if counts[n] > best:
            best, where = counts[n], n
    return MaxScanResult(k, best, where)


def _w(k: int, b: int, shift: int = 0) -> SternPoly:
    return stern_poly(a_index(k, b), b).shift(shift)


def _z(b: int, j: int, tpower: int = 0) -> SternPoly:
    return SternPoly.var(b, j, tpower)


def thm_rec_sides(l: int, b: int) -> List[Tuple[SternPoly, SternPoly]]:
    """Both recurrences at ``a_(2l+1)`` and ``a_(2l+2)`` as (lhs, rhs) pairs."""
    if l < 2:
        raise ValueError("l must be at least 2")
    odd_rhs = _z(b, b) * _w(2 * l, b, 1) + _z(b, 1, 1) * _w(2 * l - 1, b, 2)
    even_rhs = _w(2 * l + 1, b, 1) + _z(b, b) * _z(b, b - 1, 1) * _w(2 * l, b, 2)
    return [(_w(2 * l + 1, b), odd_rhs), (_w(2 * l + 2, b), even_rhs)]


def thm_rec_check(l: int, b: int) -> bool:
    return all(lhs == rhs for lhs, rhs in thm_rec_sides(l, b))


def multiplicity_support_check(k: int, b: int) -> bool:
    """No monomial of ``w_T(a_k)`` involves ``z_i`` for ``2 <= i <= b-2``."""
    for mono in stern_poly(a_index(k, b), b).terms:
        if any(mono.exps[i - 1] for i in range(2, b - 1)):
            return False
    return True


def multiplicity_readings(k: int, b: int) -> Dict[str, bool]:
    """Whether every expansion uses only multiplicities in {1, b-1, b}.

    Checked both for expansions of ``a_k - 1`` (the ones ``w_T(a_k)``
    enumerates) and for expansions of ``a_k`` itself.
    """
    allowed = {0, 1, b - 1, b}
    a = a_index(k, b)

    def ok(n: int) -> bool:
        return all(set(h.mults) <= allowed for h in enumerate_expansions(n, b))

    return {"a_k - 1": ok(a - 1), "a_k": ok(a)}


@dataclass(frozen=True)
class CFNode:
    """``head + numerator / tail``, or just ``head`` when ``tail`` is None."""

    head: SternPoly
    numerator: SternPoly | None = None
    tail: "CFNode | None" = None

    def fold(self) -> RationalPair:
        if self.tail is None:
            return RationalPair(self.head)
        inner = self.tail.fold()
        # head + numerator / (p/q) = (head*p + numerator*q) / p
        return RationalPair(self.head * inner.num + self.numerator * inner.den, inner.num)

    def value(self, z: Sequence, t: Sequence[int]) -> Fraction:
        # innermost first so deep fractions do not recurse
        chain = []
        node = self
        while node.tail is not None:
            chain.append(node)
            node = node.tail
        acc = evaluate(node.head, z, t)
        for node in reversed(chain):
            acc = evaluate(node.head, z, t) + evaluate(node.numerator, z, t) / acc
        return acc


def cf_odd_node(l: int, d: int, b: int) -> CFNode:
    if l < 1:
        raise ValueError("l must be at least 1")
    head = _z(b, b, d)
    if l == 1:
        return CFNode(head + _z(b, 1, d + 1))
    return CFNode(head, _z(b, 1, d + 1), cf_even_node(l - 1, d + 1, b))


def cf_even_node(l: int, d: int, b: int) -> CFNode:
    if l < 1:
        raise ValueError("l must be at least 1")
    return CFNode(SternPoly.one(b), _z(b, b, d) * _z(b, b - 1, d + 1), cf_odd_node(l, d + 1, b))


def cf_odd(l: int, d: int, b: int) -> RationalPair:
    return cf_odd_node(l, d, b).fold()


def cf_even(l: int, d: int, b: int) -> RationalPair:
    return cf_even_node(l, d, b).fold()


def cf_target(l: int, b: int, which: str) -> RationalPair:
    """The Stern-polynomial ratio the convergent must equal."""
    if which == "odd":
        return RationalPair(_w(2 * l + 1, b), _w(2 * l, b, 1))
    if which == "even":
        return RationalPair(_w(2 * l + 2, b), _w(2 * l + 1, b, 1))
    raise ValueError(f"which must be 'odd' or 'even', not {which!r}")


def cf_verify(l: int, b: int, which: str) -> bool:
    target = cf_target(l, b, which)
    built = cf_odd(l, 0, b) if which == "odd" else cf_even(l, 0, b)
    return built == target


def cf_value(l: int, b: int, which: str, z: Sequence | None = None, t: Sequence[int] | None = None) -> Fraction:
    """Numeric fold of the convergent, by default at all ``z = t = 1``."""
    z = [1] * b if z is None else z
    t = [1] * b if t is None else t
    node = cf_odd_node(l, 0, b) if which == "odd" else cf_even_node(l, 0, b)
    return node.value(z, t)


def _display_node(l: int, d: int, b: int, which: str, top: bool) -> CFNode:
    # Literal transcription of the printed pattern: the terminal carries
    # z_1^{t_1^d} (not d+1), and the first inner head of the even family is
    # the plain square z_b^2.
    if which == "odd":
        if l == 1:
            return CFNode(_z(b, b, d) + _z(b, 1, d))
        return CFNode(_z(b, b, d), _z(b, 1, d + 1), _display_node(l - 1, d + 1, b, "even", False))
    inner = _display_node(l, d + 1, b, "odd", False)
    if top and inner.tail is not None:
        sq = _z(b, b) * _z(b, b)
        inner = CFNode(sq, inner.numerator, inner.tail)
    return CFNode(SternPoly.one(b), _z(b, b, d) * _z(b, b - 1, d + 1), inner)


def cf_display_matches(l: int, b: int, which: str) -> bool:
    """Whether the printed continued-fraction pattern equals the true ratio."""
    return _display_node(l, 0, b, which, True).fold() == cf_target(l, b, which)


def max_order_constant(b: int) -> float:
    """``phi^(log_b(b^2 - 1)) / sqrt(5)``."""
    return PHI ** math.log(b * b - 1, b) / math.sqrt(5)


def max_order_ratio(k: int, b: int) -> float:
    """``s_b(a_k) / a_k^(log_b phi)`` with the count taken from the matrix path."""
    count = stern_count_big(a_digits(k, b))
    a = a_index(k, b)
    return math.exp(math.log(count) - math.log(PHI, b) * math.log(a))
