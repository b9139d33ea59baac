"""Sturm-chain real-root counting with exact rational arithmetic.

Only distinct-root *counting* is provided: the number of distinct real
roots over (-inf, +inf) equals the drop in sign variations of the Sturm
chain between the two ends.  Chain elements are stripped to primitive
integer polynomials (positive content only, so signs survive) to keep the
coefficients small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import ExactPoly


@dataclass(frozen=True)
class SturmReport:
    degree: int
    distinct_real_roots: int
    is_squarefree: bool

    @property
    def all_real_simple(self) -> bool:
        return self.is_squarefree and self.distinct_real_roots == self.degree


def _trim(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def _primitive(f: list) -> list[int]:
    """Scale to a primitive integer polynomial, preserving signs."""
    den = math.lcm(*(c.denominator if isinstance(c, Fraction) else 1 for c in f))
    ints = [int(c * den) for c in f]
    g = math.gcd(*ints)
    return [c // g for c in ints]


def _rem(f: list, g: list) -> list:
    """Polynomial remainder of f by g over the rationals (dense ascending)."""
    r = [Fraction(c) for c in f]
    dg = len(g) - 1
    lead = Fraction(g[-1])
    while len(r) - 1 >= dg:
        k = len(r) - 1 - dg
        factor = r[-1] / lead
        for i, gc in enumerate(g):
            r[k + i] -= factor * gc
        r.pop()
        _trim(r)
        if not r:
            break
    return r


def sturm_real_roots(p: ExactPoly) -> SturmReport:
    """Count distinct real roots of a nonzero univariate polynomial in x."""
    coeffs = _trim(list(p.univariate_coeffs("x")))
    if not coeffs:
        raise ValueError("zero polynomial has no Sturm chain")
    degree = len(coeffs) - 1
    if degree == 0:
        return SturmReport(0, 0, True)

    chain = [_primitive(coeffs)]
    deriv = _trim([c * k for k, c in enumerate(coeffs)][1:])
    chain.append(_primitive(deriv))
    while len(chain[-1]) - 1 > 0:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive([-c for c in r]))

    def variations(signs: list[int]) -> int:
        flips = 0
        for a, b in zip(signs, signs[1:]):
            if a * b < 0:
                flips += 1
        return flips

    at_pos = [1 if f[-1] > 0 else -1 for f in chain]
    at_neg = [s if (len(f) - 1) % 2 == 0 else -s for f, s in zip(chain, at_pos)]
    distinct = variations(at_neg) - variations(at_pos)
    squarefree = len(chain[-1]) == 1
    return SturmReport(degree, distinct, squarefree)
