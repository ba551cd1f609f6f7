"""Base-b Stern polynomials and hyper b-ary expansions."""
from .core import DigitString, from_digits, stern_count, stern_count_table, stern_poly, to_digits
from .polyring import (
    BaseMismatchError,
    ExpPoly,
    Monomial,
    ParseError,
    RationalPair,
    SternPoly,
    canonical_text,
    evaluate,
    frobenius,
    from_json,
    parse_text,
    to_json,
)

__all__ = [
    "BaseMismatchError",
    "DigitString",
    "ExpPoly",
    "Monomial",
    "ParseError",
    "RationalPair",
    "SternPoly",
    "canonical_text",
    "evaluate",
    "frobenius",
    "from_digits",
    "from_json",
    "parse_text",
    "stern_count",
    "stern_count_table",
    "stern_poly",
    "to_digits",
    "to_json",
]

__version__ = "0.1.0"
