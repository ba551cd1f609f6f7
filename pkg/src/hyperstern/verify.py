"""Verification suites: each identity checked exactly over configurable bounds."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional

from .core import stern_count, stern_count_table, stern_poly, to_digits
from .extremal import (
    PHI,
    a_digits,
    a_index,
    a_recurrence,
    cf_display_matches,
    cf_even,
    cf_odd,
    cf_target,
    cf_value,
    fib,
    max_order_constant,
    max_order_ratio,
    max_scan,
    multiplicity_readings,
    multiplicity_support_check,
    thm_rec_sides,
)
from .genproduct import finite_product_lhs, finite_product_rhs, truncated_product
from .matrixrep import num_matrix, prefix_products, stern_count_big, stern_via_matrix, sym_matrix
from .oracle import enumerate_expansions, expansion_to_monomial, monomial_to_expansion, oracle_poly
from .polyring import SternPoly, canonical_text, evaluate, parse_text, specialize_t

# Hyperternary polynomials for n = 1..27 written with x,y,z -> z1,z2,z3 and
# u,v,w -> t1,t2,t3.
HYPERTERNARY_TABLE: Dict[int, str] = {
    1: "1",
    2: "z1",
    3: "z2",
    4: "z1^(t1) + z3",
    5: "z1^(1 + t1)",
    6: "z1^(t1)*z2",
    7: "z1^(t1)*z3 + z2^(t2)",
    8: "z1*z2^(t2)",
    9: "z2^(1 + t2)",
    10: "z1^(t1^2) + z2^(t2)*z3 + z3^(t3)",
    11: "z1^(1 + t1^2) + z1*z3^(t3)",
    12: "z1^(t1^2)*z2 + z2*z3^(t3)",
    13: "z1^(t1 + t1^2) + z1^(t1^2)*z3 + z3^(1 + t3)",
    14: "z1^(1 + t1 + t1^2)",
    15: "z1^(t1 + t1^2)*z2",
    16: "z1^(t1 + t1^2)*z3 + z1^(t1^2)*z2^(t2)",
    17: "z1^(1 + t1^2)*z2^(t2)",
    18: "z1^(t1^2)*z2^(1 + t2)",
    19: "z1^(t1^2)*z2^(t2)*z3 + z1^(t1^2)*z3^(t3) + z2^(t2^2)",
    20: "z1^(1 + t1^2)*z3^(t3) + z1*z2^(t2^2)",
    21: "z1^(t1^2)*z2*z3^(t3) + z2^(1 + t2^2)",
    22: "z1^(t1^2)*z3^(1 + t3) + z1^(t1)*z2^(t2^2) + z2^(t2^2)*z3",
    23: "z1^(1 + t1)*z2^(t2^2)",
    24: "z1^(t1)*z2^(1 + t2^2)",
    25: "z1^(t1)*z2^(t2^2)*z3 + z2^(t2 + t2^2)",
    26: "z1*z2^(t2 + t2^2)",
    27: "z2^(1 + t2 + t2^2)",
}

SUITES = ("table", "core", "oracle", "product", "matrix", "extremal", "cf")


@dataclass
class Config:
    base_max: int = 4
    n_max: int = 256
    l_max: int = 4
    k_max: int = 200
    scan_bound: int = 10**5
    levels_max: int = 5
    n_product_max: int = 5


@dataclass
class Check:
    suite: str
    identity: str
    params: dict
    passed: bool
    lhs: str = ""
    rhs: str = ""
    informational: bool = False

    def report(self) -> dict:
        return {"suite": self.suite, "identity": self.identity, "params": self.params, "lhs": self.lhs, "rhs": self.rhs}


def _eq(suite: str, identity: str, params: dict, lhs, rhs) -> Check:
    ok = lhs == rhs
    if ok:
        return Check(suite, identity, params, True)
    return Check(suite, identity, params, False, _show(lhs), _show(rhs))


def _show(x) -> str:
    if isinstance(x, SternPoly):
        return canonical_text(x)
    return str(x)


def _bases(cfg: Config, cap: int = 5) -> range:
    return range(2, min(cfg.base_max, cap) + 1)


def _n_range(cfg: Config, b: int, power: int = 5) -> range:
    return range(0, min(b**power, cfg.n_max) + 1)


def _ones(b: int) -> List[int]:
    return [1] * b


def suite_table(cfg: Config) -> Iterator[Check]:
    for n, text in HYPERTERNARY_TABLE.items():
        yield _eq("table", "hyperternary table row", {"n": n}, stern_poly(n, 3), parse_text(text, 3))


def suite_core(cfg: Config) -> Iterator[Check]:
    for b in _bases(cfg):
        rng = _n_range(cfg, b)
        counts = stern_count_table(rng[-1], b)
        for n in rng:
            w = stern_poly(n, b)
            params = {"b": b, "n": n}
            coeffs = sorted(set(w.terms.values()))
            yield Check("core", "all coefficients are 1", params, coeffs in ([], [1]), str(coeffs), "[1]")
            bad = [m.key() for m in w.terms if any(c != 1 for e in m.exps for _, c in e.terms)]
            yield Check("core", "exponent polynomials have 0/1 coefficients", params, not bad, str(bad), "[]")
            if n <= b**3:
                yield _eq("core", "memoized equals plain recursion", params, w, stern_poly(n, b, memo=False))
            at_one = evaluate(w, _ones(b), _ones(b))
            yield _eq("core", "evaluation at z=1 equals stern_count", params, at_one, stern_count(n, b))
            yield _eq("core", "stern_count equals counting table", params, stern_count(n, b), counts[n])
            if n >= 1:
                yield _eq("core", "stern_count equals number of expansions of n-1", params,
                          counts[n], len(enumerate_expansions(n - 1, b)))


def suite_oracle(cfg: Config) -> Iterator[Check]:
    for b in _bases(cfg):
        for n in range(0, min(b**5 + 1, cfg.n_max) + 1):
            params = {"b": b, "n": n}
            yield _eq("oracle", "oracle equals recurrence", params, oracle_poly(n, b), stern_poly(n, b))
            hs = enumerate_expansions(n, b)
            monos = [expansion_to_monomial(h) for h in hs]
            yield _eq("oracle", "expansion map is injective", params, len(set(monos)), len(hs))
            yield _eq("oracle", "expansions sum to n", params, sorted({h.value for h in hs}), [n])
            if n >= 1:
                back = sorted(monomial_to_expansion(m).mults for m in stern_poly(n, b).terms)
                yield _eq("oracle", "monomials reconstruct expansions of n-1", params,
                          back, sorted(h.mults for h in enumerate_expansions(n - 1, b)))
        for k in range(0, 9):
            yield _eq("oracle", "b^k has k+1 expansions", {"b": b, "k": k},
                      len(enumerate_expansions(b**k, b)), k + 1)


def suite_product(cfg: Config) -> Iterator[Check]:
    for b in _bases(cfg):
        for K in range(1, cfg.levels_max + 1):
            if K > 1 and b**K > max(cfg.n_max, b):
                break
            tp = truncated_product(b, K)
            for n in range(1, b**K + 1):
                yield _eq("product", "truncated product coefficient equals w_T", {"b": b, "K": K, "n": n},
                          tp[n], stern_poly(n, b))
        for N in range(1, cfg.n_product_max + 1):
            params = {"b": b, "N": N}
            lhs, rhs = finite_product_lhs(b, N), finite_product_rhs(b, N)
            yield _eq("product", "finite product identity (symbolic)", params, lhs, rhs)
            ones = _ones(b)
            yield _eq("product", "finite product lhs at z=1 is (b+1)^N", params, evaluate(lhs, ones, ones), (b + 1) ** N)
            yield _eq("product", "finite product rhs at z=1 is (b+1)^N", params, evaluate(rhs, ones, ones), (b + 1) ** N)
            with_z1 = [m.key() for m in rhs.terms if m.exps[0]]
            yield Check("product", "rhs tracks only multiplicities >= 2", params, not with_z1, str(with_z1), "[]")
            numeric = finite_product_lhs(b, N, "numeric")
            yield _eq("product", "printed exponent b^i equals symbolic form at t_j = b", params,
                      numeric, specialize_t(rhs, [b] * b))
            yield Check("product", "printed exponent b^i equals symbolic form identically", params,
                        numeric == rhs, informational=True)


def suite_matrix(cfg: Config) -> Iterator[Check]:
    for b in _bases(cfg):
        ones = _ones(b)
        for i in range(b):
            yield _eq("matrix", "symbolic matrix at z=t=1 is the numeric matrix", {"b": b, "i": i},
                      sym_matrix(i, 0, b).evaluate(ones, ones), num_matrix(i, b))
        for n in _n_range(cfg, b):
            params = {"b": b, "n": n}
            w = stern_poly(n, b)
            yield _eq("matrix", "matrix product equals w_T", params, stern_via_matrix(n, b), w)
            yield _eq("matrix", "leading zero digits leave result unchanged", params, stern_via_matrix(n, b, 2), w)
            big = stern_count_big(to_digits(n, b)) if n else 0
            yield _eq("matrix", "big-integer count equals stern_count", params, big, stern_count(n, b))
        if b <= 4:
            for n in range(0, min(b**4, cfg.n_max) + 1):
                for m, prod in prefix_products(n, b):
                    yield _eq("matrix", "partial product column is (w_T(m), w_T(m+1))", {"b": b, "n": n, "m": m},
                              prod.column(1), (stern_poly(m, b), stern_poly(m + 1, b)))


def suite_extremal(cfg: Config) -> Iterator[Check]:
    for b in range(2, 7):
        for k in range(2, 41):
            params = {"b": b, "k": k}
            closed = a_index(k, b)
            yield _eq("extremal", "a_k closed form equals digit pattern", params, closed, a_digits(k, b).value)
            yield _eq("extremal", "a_k closed form equals recurrence", params, closed, a_recurrence(k, b))
    for b in _bases(cfg, 4):
        k = 2
        table = stern_count_table(cfg.scan_bound, b)
        while b ** (k - 1) <= cfg.scan_bound:
            res = max_scan(k, b, bound=cfg.scan_bound, counts=table)
            params = {"b": b, "k": k}
            yield _eq("extremal", "scan maximum equals F_k", params, res.max_value, fib(k))
            yield _eq("extremal", "first maximizer equals a_k", params, res.argmin_index, a_index(k, b))
            k += 1
        for k in range(2, cfg.k_max + 1):
            yield _eq("extremal", "matrix-path count at a_k equals F_k", {"b": b, "k": k},
                      stern_count_big(a_digits(k, b)), fib(k))
        for l in range(2, 6):
            for which, (lhs, rhs) in zip(("odd", "even"), thm_rec_sides(l, b)):
                yield _eq("extremal", f"recurrence at maximal indices ({which})", {"b": b, "l": l}, lhs, rhs)
    for b in _bases(cfg):
        for k in range(4, 9):
            params = {"b": b, "k": k}
            yield Check("extremal", "w_T(a_k) avoids z_i for 2 <= i <= b-2", params, multiplicity_support_check(k, b))
            if a_index(k, b) <= 5000:
                readings = multiplicity_readings(k, b)
                for reading, holds in readings.items():
                    yield Check("extremal", f"multiplicities of {reading} lie in {{1, b-1, b}}",
                                params, holds, informational=True)
    for b in (2, 3):
        const = max_order_constant(b)
        rel = abs(max_order_ratio(20, b) - const) / const
        yield Check("extremal", "max-order ratio within 1% at k=20", {"b": b}, rel < 0.01, f"{rel:.3e}", "< 1e-2")
        gaps = [abs(max_order_ratio(k, b) - const) for k in range(10, 31, 2)]
        shrinking = all(x > y for x, y in zip(gaps, gaps[1:]))
        yield Check("extremal", "max-order gap shrinks over even k in 10..30", {"b": b}, shrinking, str(gaps), "decreasing")


def suite_cf(cfg: Config) -> Iterator[Check]:
    for b in _bases(cfg, 3):
        for l in range(1, cfg.l_max + 1):
            for which in ("odd", "even"):
                params = {"b": b, "l": l, "which": which}
                built = cf_odd(l, 0, b) if which == "odd" else cf_even(l, 0, b)
                target = cf_target(l, b, which)
                ok = built == target
                yield Check("cf", "convergent equals Stern ratio (cross-multiplied)", params, ok,
                            "" if ok else repr(built), "" if ok else repr(target))
                yield Check("cf", "printed continued-fraction pattern equals Stern ratio", params,
                            cf_display_matches(l, b, which), informational=True)
    for b in (2, 3):
        for l in range(1, 21):
            odd, even = cf_value(l, b, "odd"), cf_value(l, b, "even")
            yield _eq("cf", "odd convergent at ones is F_(2l+1)/F_(2l)", {"b": b, "l": l}, odd, Fraction(fib(2 * l + 1), fib(2 * l)))
            yield _eq("cf", "even convergent at ones is F_(2l+2)/F_(2l+1)", {"b": b, "l": l}, even, Fraction(fib(2 * l + 2), fib(2 * l + 1)))
            if l >= 2:
                bound = PHI ** (-4 * l + 2)
                for which, v in (("odd", odd), ("even", even)):
                    err = abs(float(v) - PHI)
                    yield Check("cf", "|convergent - phi| < phi^(2-4l)", {"b": b, "l": l, "which": which},
                                err < bound, f"{err:.3e}", f"{bound:.3e}")
            if l >= 10:
                err = abs(float(odd) - PHI)
                yield Check("cf", "|convergent - phi| < 1e-6 for l >= 10", {"b": b, "l": l}, err < 1e-6, f"{err:.3e}", "1e-6")


_RUNNERS: Dict[str, Callable[[Config], Iterator[Check]]] = {
    "table": suite_table,
    "core": suite_core,
    "oracle": suite_oracle,
    "product": suite_product,
    "matrix": suite_matrix,
    "extremal": suite_extremal,
    "cf": suite_cf,
}


def run(suite: str, cfg: Optional[Config] = None) -> List[Check]:
    cfg = cfg or Config()
    names = SUITES if suite == "all" else (suite,)
    checks: List[Check] = []
    for name in names:
        if name not in _RUNNERS:
            raise ValueError(f"unknown suite {name!r}")
        checks.extend(_RUNNERS[name](cfg))
    return checks


@dataclass
class Summary:
    suite: str
    identity: str
    cases: int = 0
    failures: List[Check] = field(default_factory=list)
    informational: bool = False


def summarize(checks: List[Check]) -> List[Summary]:
    """One entry per (suite, identity), in first-seen order."""
    out: Dict[tuple, Summary] = {}
    for c in checks:
        s = out.setdefault((c.suite, c.identity), Summary(c.suite, c.identity, informational=c.informational))
        s.cases += 1
        if not c.passed:
            s.failures.append(c)
    return list(out.values())
