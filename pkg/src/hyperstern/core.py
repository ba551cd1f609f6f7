"""Stern polynomials and counts from the defining base-b recurrences.

    w(0) = 0, w(1) = 1
    w(b(n-1) + j + 1) = z_j * w(n)'                 for 1 <= j <= b-1
    w(bn + 1)         = z_b * w(n)' + w(n+1)'

where ``'`` is the shift ``z_j -> z_j^{t_j}``.  Memoization is on ``n`` only;
the shift is applied after lookup.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .polyring import SternPoly

__all__ = [
    "DigitString",
    "to_digits",
    "from_digits",
    "stern_poly",
    "stern_count",
    "stern_count_table",
    "clear_cache",
]


@dataclass(frozen=True)
class DigitString:
    """Base-``b`` digits of a nonnegative integer, most significant first."""

    base: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.digits and self.digits[0] == 0:
            raise ValueError("leading zero digit")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    @property
    def value(self) -> int:
        return from_digits(self)


# below this many bits, plain repeated divmod is fastest
_SMALL_BITS = 4096


def _small_digits(n: int, b: int) -> List[int]:
    out = []
    while n:
        n, r = divmod(n, b)
        out.append(r)
    out.reverse()
    return out


def _split_digits(n: int, b: int, powers: List[int], level: int, out: List[int]) -> None:
    # Appends exactly 2**(level+1) digits of n, zero padded; n < powers[level]**2.
    if powers[level].bit_length() < 64:
        ds = _small_digits(n, b)
        out.extend([0] * ((1 << (level + 1)) - len(ds)))
        out.extend(ds)
        return
    hi, lo = divmod(n, powers[level])
    _split_digits(hi, b, powers, level - 1, out)
    _split_digits(lo, b, powers, level - 1, out)


def to_digits(n: int, b: int) -> DigitString:
    if b < 2:
        raise ValueError("base must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n.bit_length() <= _SMALL_BITS:
        return DigitString(b, tuple(_small_digits(n, b)))
    if b == 2:
        return DigitString(b, tuple(map(int, bin(n)[2:])))
    if b & (b - 1) == 0:
        shift, mask = b.bit_length() - 1, b - 1
        count = -(-n.bit_length() // shift)
        ds = [(n >> (shift * i)) & mask for i in range(count - 1, -1, -1)]
    else:
        powers = [b]
        while powers[-1] * powers[-1] <= n:
            powers.append(powers[-1] * powers[-1])
        ds = []
        _split_digits(n, b, powers, len(powers) - 1, ds)
    first = next(i for i, d in enumerate(ds) if d)
    return DigitString(b, tuple(ds[first:]))


def from_digits(d: DigitString | Sequence[int], base: int | None = None) -> int:
    if isinstance(d, DigitString):
        base, digits = d.base, d.digits
    else:
        digits = tuple(d)
        if base is None:
            raise ValueError("base required for a plain digit sequence")
    if len(digits) <= 512:
        n = 0
        for x in digits:
            n = n * base + x
        return n
    # divide and conquer keeps this subquadratic for long inputs
    mid = len(digits) // 2
    return from_digits(digits[:mid], base) * base ** (len(digits) - mid) + from_digits(digits[mid:], base)


def _children(m: int, b: int) -> Tuple[int, ...]:
    j = (m - 1) % b
    if j == 0:
        q = (m - 1) // b
        return (q, q + 1)
    return ((m - 1 - j) // b + 1,)


_POLY_CACHE: Dict[int, Dict[int, SternPoly]] = {}


def clear_cache() -> None:
    _POLY_CACHE.clear()


def _combine_poly(m: int, b: int, lookup) -> SternPoly:
    j = (m - 1) % b
    if j == 0:
        q = (m - 1) // b
        zb = SternPoly.var(b, b)
        return zb * lookup(q).shift(1) + lookup(q + 1).shift(1)
    q = (m - 1 - j) // b + 1
    return SternPoly.var(b, j) * lookup(q).shift(1)


def _stern_poly_plain(n: int, b: int) -> SternPoly:
    if n == 0:
        return SternPoly.zero(b)
    if n == 1:
        return SternPoly.one(b)
    return _combine_poly(n, b, lambda q: _stern_poly_plain(q, b))


def stern_poly(n: int, b: int, memo: bool = True) -> SternPoly:
    """The base-b Stern polynomial ``w_T(n | z_1..z_b)``."""
    if b < 2:
        raise ValueError("base must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not memo:
        return _stern_poly_plain(n, b)
    cache = _POLY_CACHE.get(b)
    if cache is None:
        cache = _POLY_CACHE.setdefault(b, {0: SternPoly.zero(b), 1: SternPoly.one(b)})
    if n in cache:
        return cache[n]
    stack = [n]
    while stack:
        m = stack[-1]
        if m in cache:
            stack.pop()
            continue
        missing = [c for c in _children(m, b) if c not in cache]
        if missing:
            stack.extend(missing)
            continue
        cache[m] = _combine_poly(m, b, cache.__getitem__)
        stack.pop()
    return cache[n]


def stern_count(n: int, b: int) -> int:
    """``w_T(n | 1, ..., 1)``, the number of hyper b-ary expansions of ``n - 1``."""
    if b < 2:
        raise ValueError("base must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    known = {0: 0, 1: 1}
    stack = [n]
    while stack:
        m = stack[-1]
        if m in known:
            stack.pop()
            continue
        kids = _children(m, b)
        missing = [c for c in kids if c not in known]
        if missing:
            stack.extend(missing)
            continue
        known[m] = sum(known[c] for c in kids)
        stack.pop()
    return known[n]


def stern_count_table(limit: int, b: int) -> List[int]:
    """``[stern_count(n, b) for n in range(limit + 1)]`` in one pass."""
    s = [0, 1][: limit + 1]
    for m in range(2, limit + 1):
        j = (m - 1) % b
        if j == 0:
            q = (m - 1) // b
            s.append(s[q] + s[q + 1])
        else:
            s.append(s[(m - 1 - j) // b + 1])
    return s
