"""2x2 matrix products for Stern polynomials and counts.

With ``i_s ... i_0`` the base-b digits of ``n``,

    w_T(n) = (1 0) A_{i_0}(0) A_{i_1}(1) ... A_{i_s}(s) (0 1)^T

and the partial product up to digit ``k`` has second column
``(w_T(m), w_T(m+1))`` for ``m`` the value of the low ``k+1`` digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .core import DigitString, to_digits
from .polyring import SternPoly, evaluate

__all__ = [
    "SymMatrix2",
    "NumMatrix2",
    "sym_matrix",
    "num_matrix",
    "prefix_products",
    "stern_via_matrix",
    "stern_count_big",
]

# digits per segment in the big-integer path; segment products stay small
_SEGMENT = 256


@dataclass(frozen=True)
class SymMatrix2:
    entries: Tuple[SternPoly, SternPoly, SternPoly, SternPoly]  # row-major

    @property
    def base(self) -> int:
        return self.entries[0].base

    def __matmul__(self, other: "SymMatrix2") -> "SymMatrix2":
        a, b, c, d = self.entries
        p, q, r, s = other.entries
        return SymMatrix2((a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s))

    def column(self, j: int) -> Tuple[SternPoly, SternPoly]:
        return self.entries[j], self.entries[2 + j]

    def evaluate(self, z: Sequence, t: Sequence[int]) -> "NumMatrix2":
        vals = [evaluate(e, z, t) for e in self.entries]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("matrix does not evaluate to integers")
        return NumMatrix2(tuple(int(v) for v in vals))

    @classmethod
    def identity(cls, base: int) -> "SymMatrix2":
        one, zero = SternPoly.one(base), SternPoly.zero(base)
        return cls((one, zero, zero, one))


@dataclass(frozen=True)
class NumMatrix2:
    entries: Tuple[int, int, int, int]  # row-major

    def __matmul__(self, other: "NumMatrix2") -> "NumMatrix2":
        return NumMatrix2(_mul(self.entries, other.entries))


def _mul(x: Tuple[int, ...], y: Tuple[int, ...]) -> Tuple[int, int, int, int]:
    a, b, c, d = x
    p, q, r, s = y
    return (a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)


def sym_matrix(i: int, d: int, b: int) -> SymMatrix2:
    """``A_i(d)``: the digit-``i`` matrix at depth ``d``."""
    if not 0 <= i < b:
        raise ValueError(f"digit {i} out of range for base {b}")
    if d < 0:
        raise ValueError("depth must be nonnegative")
    zero, one = SternPoly.zero(b), SternPoly.one(b)

    def z(j: int) -> SternPoly:
        return SternPoly.var(b, j, d)

    if i == 0:
        return SymMatrix2((z(b - 1), zero, z(b), one))
    if i == 1:
        return SymMatrix2((z(b), one, zero, z(1)))
    return SymMatrix2((zero, z(i - 1), zero, z(i)))


_NUMERIC = {0: (1, 0, 1, 1), 1: (1, 1, 0, 1)}
_NUMERIC_HIGH = (0, 1, 0, 1)


def num_matrix(i: int, b: int) -> NumMatrix2:
    """The digit-``i`` matrix with every variable set to 1."""
    if not 0 <= i < b:
        raise ValueError(f"digit {i} out of range for base {b}")
    return NumMatrix2(_NUMERIC.get(i, _NUMERIC_HIGH))


def prefix_products(n: int, b: int) -> Iterator[Tuple[int, SymMatrix2]]:
    """Yield ``(m, A_{i_0}(0)...A_{i_k}(k))`` for k = 0..s, ``m`` the low digits' value."""
    digits = to_digits(n, b).digits[::-1]
    acc = SymMatrix2.identity(b)
    for k, i in enumerate(digits):
        acc = acc @ sym_matrix(i, k, b)
        yield n % b ** (k + 1), acc


def stern_via_matrix(n: int, b: int, leading_zeros: int = 0) -> SternPoly:
    """``w_T(n)`` by row-vector propagation through the digit matrices.

    ``leading_zeros`` pads the digit string with zeros on the most
    significant end, which must not change the result.
    """
    digits = to_digits(n, b).digits[::-1] + (0,) * leading_zeros
    left, right = SternPoly.one(b), SternPoly.zero(b)
    for k, i in enumerate(digits):
        a, bb, c, d = sym_matrix(i, k, b).entries
        left, right = left * a + right * c, left * bb + right * d
    return right


def _digit_input(digits, base) -> Tuple[int, Sequence[int]]:
    if isinstance(digits, DigitString):
        return digits.base, digits.digits
    if base is None:
        raise ValueError("base required for a plain digit sequence")
    return base, digits


def stern_count_big(digits: DigitString | Sequence[int], base: int | None = None) -> int:
    """``w_T(n | 1..1)`` from the base-b digits of ``n`` (most significant first).

    Digits are consumed least significant first.  Each segment of digits is
    multiplied out in small integers, then the running big-integer row
    vector ``(1, 0) * ...`` is pushed through the segment product, so the
    cost is linear in the number of digits times the current word size.
    """
    b, ds = _digit_input(digits, base)
    mats = [_NUMERIC.get(i, _NUMERIC_HIGH) for i in range(b)]
    for x in ds:
        if not 0 <= x < b:
            raise ValueError(f"digit {x} out of range for base {b}")
    seq = ds[::-1]
    r0, r1 = 1, 0
    for start in range(0, len(seq), _SEGMENT):
        p = (1, 0, 0, 1)
        for x in seq[start:start + _SEGMENT]:
            p = _mul(p, mats[x])
        r0, r1 = r0 * p[0] + r1 * p[2], r0 * p[1] + r1 * p[3]
    return r1

