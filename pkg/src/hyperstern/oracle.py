"""Brute-force hyper b-ary expansions, used as independent ground truth.

An expansion of ``n`` writes it as ``sum m_i * b**i`` with every
multiplicity ``0 <= m_i <= b``.  A part ``b**i`` used ``j >= 1`` times maps
to the factor ``z_j^{t_j^i}``; summing these monomials over all expansions
of ``n - 1`` gives ``w_T(n)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .polyring import ExpPoly, Monomial, SternPoly

__all__ = ["Expansion", "enumerate_expansions", "expansion_to_monomial", "monomial_to_expansion", "oracle_poly"]


@dataclass(frozen=True)
class Expansion:
    base: int
    mults: Tuple[int, ...]  # mults[i] is the multiplicity of b**i

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(self.mults))
        if any(not 0 <= m <= self.base for m in self.mults):
            raise ValueError(f"multiplicities must lie in [0, {self.base}]")
        if self.mults and self.mults[-1] == 0:
            raise ValueError("trailing zero multiplicities must be trimmed")

    @property
    def value(self) -> int:
        return sum(m * self.base**i for i, m in enumerate(self.mults))

    def text(self) -> str:
        """``"9 = 3^1*2 + 3^0*3"`` style, highest power first."""
        factors = []
        for i in range(len(self.mults) - 1, -1, -1):
            m = self.mults[i]
            if m:
                factors.append(f"{self.base}^{i}" if m == 1 else f"{self.base}^{i}*{m}")
        return f"{self.value} = " + (" + ".join(factors) if factors else "0")


def enumerate_expansions(n: int, b: int) -> List[Expansion]:
    """All expansions of ``n``, highest power first, larger multiplicities first."""
    if b < 2:
        raise ValueError("base must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [Expansion(b, ())]
    top = 0
    while b ** (top + 1) <= n:
        top += 1
    powers = [b**i for i in range(top + 1)]
    # reach[i]: the most that parts b**0..b**(i-1) can sum to
    reach = [b * (p - 1) // (b - 1) for p in powers]
    out: List[Expansion] = []
    chosen = [0] * (top + 1)

    def descend(i: int, rem: int) -> None:
        if i < 0:
            if rem == 0:
                mults = list(chosen)
                while mults and mults[-1] == 0:
                    mults.pop()
                out.append(Expansion(b, tuple(mults)))
            return
        p = powers[i]
        for m in range(min(b, rem // p), -1, -1):
            left = rem - m * p
            if left > reach[i]:
                break
            chosen[i] = m
            descend(i - 1, left)
        chosen[i] = 0

    descend(top, n)
    return out


def expansion_to_monomial(h: Expansion) -> Monomial:
    per_var: List[Dict[int, int]] = [{} for _ in range(h.base)]
    for i, m in enumerate(h.mults):
        if m:
            per_var[m - 1][i] = 1
    return Monomial([ExpPoly(d) for d in per_var])


def monomial_to_expansion(mono: Monomial) -> Expansion:
    """Read ``t_j^i`` in the exponent of ``z_j`` as "part b**i used j times"."""
    b = mono.base
    mults: Dict[int, int] = {}
    for j, e in enumerate(mono.exps, start=1):
        for i, c in e.terms:
            if c != 1 or i in mults:
                raise ValueError(f"monomial {mono.key()} is not the image of an expansion")
            mults[i] = j
    length = max(mults) + 1 if mults else 0
    return Expansion(b, tuple(mults.get(i, 0) for i in range(length)))


def oracle_poly(n: int, b: int) -> SternPoly:
    """``w_T(n)`` assembled from the expansions of ``n - 1``."""
    if n == 0:
        return SternPoly.zero(b)
    acc: Dict[Monomial, int] = {}
    for h in enumerate_expansions(n - 1, b):
        mono = expansion_to_monomial(h)
        acc[mono] = acc.get(mono, 0) + 1
    return SternPoly(b, acc)
