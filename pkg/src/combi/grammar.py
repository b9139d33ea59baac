"""Formal-derivative calculus over substitution grammars.

A grammar maps letters to Laurent polynomials in the letters; its
derivative D is the unique linear Leibniz operator with D(letter) = rule
and D(constant) = 0.  On a monomial the general power rule applies, so
negative exponents need no special casing: D(b^-1) = -b^-2 * D(b).

Two grammars are built in: the one whose n-th derivative of `a` encodes
cycle-form Stirling permutations by (cycles, fixed points, cycle ascent
plateaus), and its a-free restriction whose derivatives of b^2 produce the
Eulerian numbers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .poly import VARS, CapacityError, ExactPoly, divexact
from . import families


@dataclass(frozen=True)
class Grammar:
    rules: dict[str, ExactPoly]
    constants: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        allowed = set(self.rules) | set(self.constants)
        for letter, value in self.rules.items():
            stray = value.variables() - allowed
            if stray:
                raise ValueError(f"rule for {letter} uses unknown letters {stray}")

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(self.rules)


def _letters():
    return (ExactPoly.var(v) for v in ("a", "b", "c", "d", "q"))


def _cycle_grammar() -> Grammar:
    a, b, c, d, q = _letters()
    return Grammar({"a": q * a * b ** 2,
                    "b": b ** -1 * c ** 2 * d ** 2,
                    "c": c * d ** 2,
                    "d": c ** 2 * d}, frozenset(("q",)))


def _eulerian_grammar() -> Grammar:
    _, b, c, d, _ = _letters()
    return Grammar({"b": b ** -1 * c ** 2 * d ** 2,
                    "c": c * d ** 2,
                    "d": c ** 2 * d})


CYCLE_GRAMMAR = _cycle_grammar()
EULERIAN_GRAMMAR = _eulerian_grammar()


def derive(g: Grammar, expr: ExactPoly, n: int = 1) -> ExactPoly:
    """Apply the grammar derivative n times."""
    stray = expr.variables() - set(g.rules) - set(g.constants)
    if stray:
        raise ValueError(f"expression uses letters outside the grammar: {stray}")
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    for _ in range(n):
        out = ExactPoly.zero()
        for exp, coeff in expr.items():
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                rule = g.rules.get(VARS[i])
                if rule is None:
                    continue
                lowered = exp[:i] + (e - 1,) + exp[i + 1:]
                out = out + ExactPoly({lowered: coeff * e}) * rule
        expr = out
    return expr


def cycle_derivative_polynomial(n: int) -> ExactPoly:
    """D^n(a) of the cycle grammar."""
    return derive(CYCLE_GRAMMAR, ExactPoly.var("a"), n)


def to_xyq(p: ExactPoly) -> ExactPoly:
    """Substitute c^2 -> x, b^2 -> y, d -> 1 into an a-free polynomial whose
    b- and c-exponents are even and nonnegative."""
    from .poly import VAR_INDEX
    ix, iy = VAR_INDEX["x"], VAR_INDEX["y"]
    ib, ic, id_, ia = (VAR_INDEX[v] for v in ("b", "c", "d", "a"))
    t = {}
    for exp, coeff in p.items():
        if exp[ia] or exp[ib] % 2 or exp[ic] % 2 or exp[ib] < 0 or exp[ic] < 0:
            raise ValueError("substitution needs even nonnegative b-, c-exponents")
        e = list(exp)
        e[ix], e[iy] = exp[ic] // 2, exp[ib] // 2
        e[ib] = e[ic] = e[id_] = 0
        key = tuple(e)
        t[key] = t.get(key, 0) + coeff
    return ExactPoly(t)


def fix_cycle_cap_polynomial(n: int) -> ExactPoly:
    """The (cap, fix, cycles)-distribution polynomial in x, y, q obtained
    from D^n(a)/a by the substitution c^2=x, b^2=y, d=1."""
    return to_xyq(divexact(cycle_derivative_polynomial(n), ExactPoly.var("a")))


def _enumeration_side(n: int) -> ExactPoly:
    from .objects import generate, stats_cycle_stirling
    a = ExactPoly.var("a")
    acc: dict[tuple[int, int, int], int] = {}
    for sigma in generate("stirling2", n):
        st = stats_cycle_stirling(sigma)
        key = (st["cyc"], st["fix"], st["cap"])
        acc[key] = acc.get(key, 0) + 1
    total = ExactPoly.zero()
    for (cyc, fix, cap), count in acc.items():
        total = total + ExactPoly.monomial(count, {
            "q": cyc, "b": 2 * fix, "c": 2 * cap,
            "d": 2 * n - 2 * fix - 2 * cap})
    return a * total


def lemma1_check(n: int):
    """Compare D^n(a) against the exhaustive cycle-Stirling encoding."""
    from .verify import VerifyReport
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 8:
        raise CapacityError(f"cycle-Stirling enumeration capped at n=8, got {n}")
    t0 = time.perf_counter()
    lhs = cycle_derivative_polynomial(n)
    rhs = _enumeration_side(n)
    ms = (time.perf_counter() - t0) * 1000
    if lhs == rhs:
        return VerifyReport("grammar-lemma1", n, "pass", runtime_ms=ms)
    return VerifyReport("grammar-lemma1", n, "fail",
                        lhs=lhs.render(), rhs=rhs.render(), runtime_ms=ms)


def lemma2_check(n: int):
    """Compare D^n(b^2) against 2^n * sum_k <n,k> c^(2k+2) d^(2n-2k)."""
    from .verify import VerifyReport
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 10:
        raise CapacityError(f"lemma2 check capped at n=10, got {n}")
    t0 = time.perf_counter()
    lhs = derive(EULERIAN_GRAMMAR, ExactPoly.var("b") ** 2, n)
    row = families.eulerian_row(n)
    rhs = ExactPoly.zero()
    for k, e in enumerate(row):
        rhs = rhs + ExactPoly.monomial(e * 2 ** n, {"c": 2 * k + 2, "d": 2 * n - 2 * k})
    ms = (time.perf_counter() - t0) * 1000
    if lhs == rhs:
        return VerifyReport("grammar-lemma2", n, "pass", runtime_ms=ms)
    return VerifyReport("grammar-lemma2", n, "fail",
                        lhs=lhs.render(), rhs=rhs.render(), runtime_ms=ms)
