import pytest
from hypothesis import given
from hypothesis import strategies as st

from combi.poly import CapacityError, ExactPoly, X
from combi.grammar import (CYCLE_GRAMMAR, EULERIAN_GRAMMAR, Grammar, derive,
                           fix_cycle_cap_polynomial, lemma1_check,
                           lemma2_check, to_xyq)
from combi import families

A, B, C, D, Q = (ExactPoly.var(v) for v in ("a", "b", "c", "d", "q"))


def test_single_rules():
    assert derive(CYCLE_GRAMMAR, A) == Q * A * B ** 2
    assert derive(CYCLE_GRAMMAR, B ** 2) == 2 * C ** 2 * D ** 2
    assert derive(CYCLE_GRAMMAR, C ** 2 * D ** 2) == \
        2 * (C ** 2 * D ** 4 + C ** 4 * D ** 2)
    # general power rule on a negative exponent
    assert derive(CYCLE_GRAMMAR, B ** -1) == -(B ** -3) * C ** 2 * D ** 2


def test_constants_and_unknown_letters():
    assert derive(CYCLE_GRAMMAR, Q * A) == Q ** 2 * A * B ** 2
    assert derive(CYCLE_GRAMMAR, ExactPoly.const(7)) == 0
    with pytest.raises(ValueError):
        derive(CYCLE_GRAMMAR, X)
    with pytest.raises(ValueError):
        Grammar({"a": X})


def test_linearity():
    u, v = A * B ** 2, C ** 3
    assert derive(CYCLE_GRAMMAR, u + v) == \
        derive(CYCLE_GRAMMAR, u) + derive(CYCLE_GRAMMAR, v)


@given(st.integers(-2, 3), st.integers(-2, 3), st.integers(0, 3),
       st.integers(0, 3))
def test_leibniz_on_monomials(eb, ec, ed, ea):
    u = ExactPoly.monomial(1, {"b": eb, "c": ec})
    v = ExactPoly.monomial(1, {"d": ed, "a": ea})
    assert derive(CYCLE_GRAMMAR, u * v) == \
        derive(CYCLE_GRAMMAR, u) * v + u * derive(CYCLE_GRAMMAR, v)


def test_lemma1_small():
    assert lemma1_check(1).status == "pass"
    assert derive(CYCLE_GRAMMAR, A, 2) == \
        A * (Q ** 2 * B ** 4 + 2 * Q * C ** 2 * D ** 2)
    for n in range(1, 6):
        assert lemma1_check(n).status == "pass"
    with pytest.raises(CapacityError):
        lemma1_check(9)


def test_lemma2_small():
    assert derive(EULERIAN_GRAMMAR, B ** 2, 1) == 2 * C ** 2 * D ** 2
    assert derive(EULERIAN_GRAMMAR, B ** 2, 2) == \
        4 * (C ** 2 * D ** 4 + C ** 4 * D ** 2)
    for n in (1, 2, 4, 6):
        assert lemma2_check(n).status == "pass"
    # row 4 of the Eulerian triangle is 1, 11, 11, 1
    assert families.eulerian_row(4) == (1, 11, 11, 1)
    with pytest.raises(CapacityError):
        lemma2_check(11)


def test_substitution_matches_p_polynomials():
    for n in range(1, 6):
        assert fix_cycle_cap_polynomial(n) == families.p_poly(n)


def test_to_xyq_rejects_odd_exponents():
    with pytest.raises(ValueError):
        to_xyq(B)
