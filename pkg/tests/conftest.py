import itertools

import pytest
from hypothesis import strategies as st

from hyperstern.polyring import ExpPoly, Monomial, SternPoly


def brute_expansions(n, b):
    """Every multiplicity vector over the powers <= n that sums to n (no pruning)."""
    if n == 0:
        return [()]
    width = 1
    while b**width <= n:
        width += 1
    found = []
    for mults in itertools.product(range(b + 1), repeat=width):
        if sum(m * b**i for i, m in enumerate(mults)) == n:
            trimmed = list(mults)
            while trimmed and trimmed[-1] == 0:
                trimmed.pop()
            found.append(tuple(trimmed))
    return found


def classical_stern(limit):
    """s(0)=0, s(1)=1, s(2n)=s(n), s(2n+1)=s(n)+s(n+1)."""
    s = [0, 1]
    for m in range(2, limit + 1):
        s.append(s[m // 2] if m % 2 == 0 else s[m // 2] + s[m // 2 + 1])
    return s


@pytest.fixture
def brute():
    return brute_expansions


def exppolys(max_power=4, max_coeff=2):
    return st.dictionaries(st.integers(0, max_power), st.integers(1, max_coeff), max_size=3).map(ExpPoly)


def monomials(base):
    return st.lists(exppolys(), min_size=base, max_size=base).map(Monomial)


def sternpolys(base, max_terms=3):
    return st.dictionaries(monomials(base), st.integers(1, 3), max_size=max_terms).map(
        lambda d: SternPoly(base, d)
    )
