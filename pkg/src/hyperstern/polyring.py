"""Coefficient ring for base-b Stern polynomials.

A monomial is ``z_1^{p_1(t_1)} ... z_b^{p_b(t_b)}`` where every exponent
``p_j`` is a univariate polynomial in ``t_j`` with nonnegative integer
coefficients.  Variable ``z_j`` only ever carries powers of ``t_j``, so an
exponent is stored as a plain univariate polynomial and the variable index
is implied by its position inside the monomial.

All values are immutable after construction.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

__all__ = [
    "BaseMismatchError",
    "ParseError",
    "ExpPoly",
    "Monomial",
    "SternPoly",
    "RationalPair",
    "epoly_shift",
    "poly_add",
    "poly_mul",
    "frobenius",
    "evaluate",
    "specialize_t",
    "canonical_text",
    "parse_text",
    "to_json",
    "from_json",
]

# Largest exponent we are willing to raise a non-trivial rational to.
MAX_EXPONENT = 1 << 20


class BaseMismatchError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class ExpPoly:
    """Sparse polynomial in one variable ``t`` with nonnegative coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, int] = {}
        for power, coeff in items:
            if power < 0 or coeff < 0:
                raise ValueError("exponent polynomials have nonnegative powers and coefficients")
            if coeff:
                acc[power] = acc.get(power, 0) + coeff
        self._terms = tuple(sorted(acc.items()))
        self._hash = hash(self._terms)

    @classmethod
    def _raw(cls, terms: Tuple[Tuple[int, int], ...]) -> "ExpPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = hash(terms)
        return obj

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "ExpPoly":
        return cls(((power, coeff),))

    @classmethod
    def constant(cls, c: int) -> "ExpPoly":
        return cls(((0, c),))

    @property
    def terms(self) -> Tuple[Tuple[int, int], ...]:
        """``(power, coeff)`` pairs sorted by ascending power."""
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ExpPoly({dict(self._terms)!r})"

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for power, coeff in other._terms:
            acc[power] = acc.get(power, 0) + coeff
        return ExpPoly._raw(tuple(sorted(acc.items())))

    def shift(self, d: int) -> "ExpPoly":
        if d < 0:
            raise ValueError("shift depth must be nonnegative")
        if d == 0 or not self._terms:
            return self
        return ExpPoly._raw(tuple((p + d, c) for p, c in self._terms))

    def is_one(self) -> bool:
        return self._terms == ((0, 1),)

    def coefficient_sum(self) -> int:
        return sum(c for _, c in self._terms)

    def __call__(self, t: int) -> int:
        return sum(c * t**p for p, c in self._terms)

    def text(self, index: int) -> str:
        parts = []
        for power, coeff in self._terms:
            if power == 0:
                atom = "1"
            elif power == 1:
                atom = f"t{index}"
            else:
                atom = f"t{index}^{power}"
            parts.append(atom if coeff == 1 else f"{coeff}*{atom}")
        return " + ".join(parts)


_ZERO_EXP = ExpPoly()
_ONE_EXP = ExpPoly.constant(1)


class Monomial:
    """``z_1^{exps[0]} ... z_b^{exps[b-1]}`` for a fixed base ``b``."""

    __slots__ = ("exps", "_hash", "_key")

    def __init__(self, exps: Sequence[ExpPoly]):
        self.exps = tuple(exps)
        if len(self.exps) < 2:
            raise ValueError("a monomial needs at least two variables (base >= 2)")
        self._hash = hash(self.exps)
        self._key = None

    @property
    def base(self) -> int:
        return len(self.exps)

    @classmethod
    def identity(cls, base: int) -> "Monomial":
        return cls((_ZERO_EXP,) * base)

    @classmethod
    def var(cls, base: int, j: int, exp: ExpPoly = _ONE_EXP) -> "Monomial":
        """``z_j^{exp}`` with 1-based ``j``."""
        if not 1 <= j <= base:
            raise ValueError(f"variable index {j} out of range for base {base}")
        exps = [_ZERO_EXP] * base
        exps[j - 1] = exp
        return cls(exps)

    def is_identity(self) -> bool:
        return not any(self.exps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({self.key()!r})"

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.base != other.base:
            raise BaseMismatchError(f"base {self.base} != base {other.base}")
        return Monomial([a + b for a, b in zip(self.exps, other.exps)])

    def shift(self, d: int) -> "Monomial":
        if d == 0:
            return self
        return Monomial([e.shift(d) for e in self.exps])

    def key(self) -> str:
        """Canonical text without coefficient; also the sort key."""
        if self._key is None:
            factors = []
            for j, e in enumerate(self.exps, start=1):
                if not e:
                    continue
                factors.append(f"z{j}" if e.is_one() else f"z{j}^({e.text(j)})")
            self._key = "*".join(factors) if factors else "1"
        return self._key


class SternPoly:
    """Polynomial in ``z_1..z_b`` with positive integer coefficients.

    Supports ``+``, ``*`` and equality; ``terms`` maps Monomial -> coefficient.
    """

    __slots__ = ("base", "_terms", "_hash")

    def __init__(self, base: int, terms: Mapping[Monomial, int] | None = None):
        if base < 2:
            raise ValueError("base must be at least 2")
        self.base = base
        clean: Dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            if mono.base != base:
                raise BaseMismatchError(f"monomial of base {mono.base} in polynomial of base {base}")
            if coeff < 0:
                raise ValueError("coefficients must be nonnegative")
            if coeff:
                clean[mono] = clean.get(mono, 0) + coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, base: int, terms: Dict[Monomial, int]) -> "SternPoly":
        obj = cls.__new__(cls)
        obj.base = base
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, base: int) -> "SternPoly":
        return cls(base)

    @classmethod
    def one(cls, base: int) -> "SternPoly":
        return cls.constant(base, 1)

    @classmethod
    def constant(cls, base: int, c: int) -> "SternPoly":
        return cls(base, {Monomial.identity(base): c})

    @classmethod
    def var(cls, base: int, j: int, tpower: int = 0) -> "SternPoly":
        """``z_j^{t_j^tpower}``."""
        return cls._raw(base, {Monomial.var(base, j, ExpPoly.monomial(tpower)): 1})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: int = 1) -> "SternPoly":
        return cls(mono.base, {mono: coeff})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        """Terms in canonical order."""
        return iter(sorted(self._terms.items(), key=lambda kv: kv[0].key()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SternPoly):
            return NotImplemented
        return self.base == other.base and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.base, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"SternPoly({self.base}, {canonical_text(self)!r})"

    def __str__(self) -> str:
        return canonical_text(self)

    def _check(self, other: "SternPoly") -> None:
        if self.base != other.base:
            raise BaseMismatchError(f"base {self.base} != base {other.base}")

    def __add__(self, other: "SternPoly") -> "SternPoly":
        self._check(other)
        if not other._terms:
            return self
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc[mono] = acc.get(mono, 0) + coeff
        return SternPoly._raw(self.base, acc)

    def __mul__(self, other: "SternPoly") -> "SternPoly":
        self._check(other)
        acc: Dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = ma * mb
                acc[m] = acc.get(m, 0) + ca * cb
        return SternPoly._raw(self.base, acc)

    def mul_monomial(self, mono: Monomial, coeff: int = 1) -> "SternPoly":
        return SternPoly._raw(self.base, {m * mono: c * coeff for m, c in self._terms.items()})

    def shift(self, d: int) -> "SternPoly":
        if d < 0:
            raise ValueError("shift depth must be nonnegative")
        if d == 0:
            return self
        return SternPoly._raw(self.base, {m.shift(d): c for m, c in self._terms.items()})

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())


class RationalPair:
    """An unreduced fraction ``num / den`` of Stern polynomials.

    Equality is by cross-multiplication, which is sound because the ring has
    no zero divisors.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: SternPoly, den: SternPoly | None = None):
        if den is None:
            den = SternPoly.one(num.base)
        if not den:
            raise ZeroDivisionError("denominator of a RationalPair must be nonzero")
        num._check(den)
        self.num = num
        self.den = den

    @property
    def base(self) -> int:
        return self.num.base

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SternPoly):
            other = RationalPair(other)
        if not isinstance(other, RationalPair):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"RationalPair(({self.num}) / ({self.den}))"

    def __add__(self, other: "RationalPair | SternPoly") -> "RationalPair":
        if isinstance(other, SternPoly):
            return RationalPair(self.num + other * self.den, self.den)
        return RationalPair(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def reciprocal(self) -> "RationalPair":
        return RationalPair(self.den, self.num)

    def scale(self, p: SternPoly) -> "RationalPair":
        return RationalPair(self.num * p, self.den)

    def evaluate(self, z: Sequence, t: Sequence[int]) -> Fraction:
        return evaluate(self.num, z, t) / evaluate(self.den, z, t)


def epoly_shift(p: ExpPoly, d: int) -> ExpPoly:
    """Multiply an exponent polynomial by ``t^d``."""
    return p.shift(d)


def poly_add(a: SternPoly, b: SternPoly) -> SternPoly:
    return a + b


def poly_mul(a: SternPoly, b: SternPoly) -> SternPoly:
    return a * b


def frobenius(p: SternPoly, d: int) -> SternPoly:
    """Apply ``z_j -> z_j^{t_j^d}`` to every variable of ``p``."""
    return p.shift(d)


def _power(z: Fraction, e: int) -> Fraction:
    if e == 0 or z == 1:
        return Fraction(1)
    if z == 0:
        return Fraction(0)
    if z == -1:
        return Fraction(-1 if e % 2 else 1)
    if e > MAX_EXPONENT:
        raise OverflowError(f"exponent {e} too large to evaluate")
    return z**e


def evaluate(p: SternPoly, z: Sequence, t: Sequence[int]) -> Fraction:
    """Substitute numbers for ``z_1..z_b`` and ``t_1..t_b``.

    Exponents are evaluated as exact integers first.
    """
    if len(z) != p.base or len(t) != p.base:
        raise BaseMismatchError(f"need {p.base} values for z and t")
    zs = [Fraction(v) for v in z]
    total = Fraction(0)
    for mono, coeff in p.terms.items():
        value = Fraction(coeff)
        for zj, tj, e in zip(zs, t, mono.exps):
            if e:
                value *= _power(zj, e(tj))
        total += value
    return total


def specialize_t(p: SternPoly, t: Sequence[int]) -> SternPoly:
    """Replace every exponent ``p_j(t_j)`` by the constant ``p_j(t[j-1])``."""
    if len(t) != p.base:
        raise BaseMismatchError(f"need {p.base} values for t")
    acc: Dict[Monomial, int] = {}
    for mono, coeff in p.terms.items():
        m = Monomial([ExpPoly.constant(e(tj)) if e else e for e, tj in zip(mono.exps, t)])
        acc[m] = acc.get(m, 0) + coeff
    return SternPoly._raw(p.base, acc)


def canonical_text(p: SternPoly) -> str:
    if not p:
        return "0"
    parts = []
    for mono, coeff in p.items():
        key = mono.key()
        if coeff == 1:
            parts.append(key)
        elif mono.is_identity():
            parts.append(str(coeff))
        else:
            parts.append(f"{coeff}*{key}")
    return " + ".join(parts)


class _Parser:
    def __init__(self, text: str, base: int):
        self.text = text
        self.base = base
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected integer")
        return int(self.text[start:self.pos])

    def index(self) -> int:
        at = self.pos
        j = self.integer()
        if not 1 <= j <= self.base:
            self.pos = at
            raise self.error(f"variable index {j} out of range for base {self.base}")
        return j

    def poly(self) -> SternPoly:
        acc: Dict[Monomial, int] = {}
        while True:
            mono, coeff = self.term()
            acc[mono] = acc.get(mono, 0) + coeff
            if self.peek() != "+":
                break
            self.pos += 1
        if self.peek():
            raise self.error("unexpected trailing input")
        return SternPoly(self.base, acc)

    def term(self) -> Tuple[Monomial, int]:
        coeff = 1
        mono = Monomial.identity(self.base)
        if self.peek().isdigit():
            coeff = self.integer()
            if self.peek() != "*":
                return mono, coeff
            self.pos += 1
        mono = mono * self.factor()
        while self.peek() == "*":
            self.pos += 1
            mono = mono * self.factor()
        return mono, coeff

    def factor(self) -> Monomial:
        self.expect("z")
        j = self.index()
        if self.peek() != "^":
            return Monomial.var(self.base, j)
        self.pos += 1
        self.expect("(")
        exp = self.epoly(j)
        self.expect(")")
        return Monomial.var(self.base, j, exp)

    def epoly(self, j: int) -> ExpPoly:
        acc: Dict[int, int] = {}
        while True:
            power, coeff = self.eterm(j)
            acc[power] = acc.get(power, 0) + coeff
            if self.peek() != "+":
                break
            self.pos += 1
        return ExpPoly(acc)

    def eterm(self, j: int) -> Tuple[int, int]:
        coeff = 1
        if self.peek().isdigit():
            coeff = self.integer()
            if self.peek() != "*":
                return 0, coeff
            self.pos += 1
            if self.peek() == "1":
                self.pos += 1
                return 0, coeff
        self.expect("t")
        at = self.pos
        if self.integer() != j:
            self.pos = at
            raise self.error(f"exponent of z{j} must be a polynomial in t{j}")
        if self.peek() != "^":
            return 1, coeff
        self.pos += 1
        return self.integer(), coeff


def parse_text(text: str, base: int) -> SternPoly:
    """Inverse of :func:`canonical_text`; also accepts non-canonical term order."""
    parser = _Parser(text.strip(), base)
    if parser.text == "0":
        return SternPoly.zero(base)
    return parser.poly()


def to_json(p: SternPoly) -> dict:
    return {
        "base": p.base,
        "terms": [
            {"coeff": coeff, "exps": [[list(pc) for pc in e.terms] for e in mono.exps]}
            for mono, coeff in p.items()
        ],
    }


def from_json(data: dict) -> SternPoly:
    base = int(data["base"])
    acc: Dict[Monomial, int] = {}
    for term in data["terms"]:
        exps = term["exps"]
        if len(exps) != base:
            raise BaseMismatchError(f"term has {len(exps)} exponents, expected {base}")
        mono = Monomial([ExpPoly((int(a), int(c)) for a, c in e) for e in exps])
        acc[mono] = acc.get(mono, 0) + int(term["coeff"])
    return SternPoly(base, acc)
