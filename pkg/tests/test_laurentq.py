"""Ring, involution and shape-predicate tests for the coefficient ring."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckelab.laurentq import (
    LaurentFrac, LaurentQ, ONE, Q, V, ZERO, from_q_coefficients,
    gauss_number, poly_gcd, q_power,
)

small_coeffs = st.integers(min_value=-9, max_value=9)
small_exps = st.integers(min_value=-6, max_value=6)
laurents = st.dictionaries(small_exps, small_coeffs, max_size=5).map(LaurentQ)


def test_difference_of_squares():
    assert (Q - ONE) * (Q + ONE) == Q * Q - ONE


def test_mul_identity_and_halves():
    a = LaurentQ({3: 2, -1: 5})
    assert a * ONE == a
    assert V * V == Q
    assert q_power(3) == V ** 6


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == ZERO


def test_bar_examples():
    assert Q.bar() == q_power(-1)
    assert (ONE + Q).bar() == q_power(-1) + ONE


@given(laurents)
def test_bar_involutive(a):
    assert a.bar().bar() == a


@given(laurents, laurents)
def test_bar_is_ring_hom(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(laurents, laurents)
def test_eval_at_one_is_ring_hom(a, b):
    assert (a * b).subs_v(1) == a.subs_v(1) * b.subs_v(1)
    assert (a + b).subs_v(1) == a.subs_v(1) + b.subs_v(1)


def test_palindromic():
    assert from_q_coefficients([2, 6, 2]).is_palindromic(1)
    assert Q.is_palindromic(1)
    assert V.is_palindromic(Fraction(1, 2))
    assert not (ONE + Q).is_palindromic(0)
    assert ZERO.is_palindromic(0)


def test_unimodal():
    assert from_q_coefficients([1, 2, 2, 2, 1]).is_unimodal_nonneg()
    assert ONE.is_unimodal_nonneg()
    assert not from_q_coefficients([1, 0, 0, 1]).is_unimodal_nonneg()
    assert not from_q_coefficients([1, -1, 1]).is_unimodal_nonneg()
    with pytest.raises(ValueError):
        V.is_unimodal_nonneg()


def test_log_concave():
    assert from_q_coefficients([1, 2, 1]).is_log_concave()
    assert from_q_coefficients([0, 1, 2, 1]).is_log_concave()
    assert not from_q_coefficients([1, 1, 3]).is_log_concave()
    with pytest.raises(ValueError):
        q_power(-1).is_log_concave()


def test_gauss_number():
    assert gauss_number(3) == ONE + Q + Q * Q
    assert gauss_number(1) == ONE


def test_exact_div():
    a = (Q - ONE) * (Q + ONE) * LaurentQ({-2: 3})
    assert a.exact_div(Q - ONE) == (Q + ONE) * LaurentQ({-2: 3})
    with pytest.raises(ValueError):
        (Q + ONE).exact_div(Q - ONE)


@given(laurents, laurents)
def test_exact_div_undoes_mul(a, b):
    if not a or not b:
        return
    assert (a * b).exact_div(b) == a


def test_poly_gcd():
    # gcd is monic with v-valuation zero
    assert poly_gcd((Q - ONE) * (Q + ONE), (Q - ONE) * Q) == Q - ONE
    assert poly_gcd(Q + ONE, Q - ONE) == ONE
    assert poly_gcd(ZERO, Q - ONE) == Q - ONE


def test_fraction_normal_form():
    f = LaurentFrac((Q - ONE) * (Q + ONE), (Q - ONE) * LaurentQ({0: 2}))
    assert f.is_polynomial()
    assert f.clear() == (Q + ONE) * Fraction(1, 2)
    g = LaurentFrac(ONE, Q - ONE)
    assert not g.is_polynomial()
    with pytest.raises(ValueError):
        g.clear()
    assert g * (Q - ONE) == LaurentFrac(ONE)
    # monic denominator with valuation zero
    h = LaurentFrac(V, LaurentQ({3: 2, 1: -2}))
    assert h.den.c[h.den.max_vexp()] == 1
    assert h.den.min_vexp() == 0


def test_q_shift_substitution():
    f = from_q_coefficients([1, 1])  # 1 + q
    assert f.substitute_q_shift() == from_q_coefficients([2, 1])
    assert Q.substitute_q_shift() == Q + ONE


def test_rendering():
    assert str(from_q_coefficients([2, 6, 2])) == "2+6q+2q^2"
    assert str(V ** 3) == "q^{3/2}"
    assert str(ZERO) == "0"
    assert str(-Q) == "-q"
    assert (q_power(-1) - ONE).latex() == "q^{-1}-1"
    assert from_q_coefficients([1, 2, 0, 1]).latex() == "1+2q+q^3"


def test_json_round_trip():
    a = LaurentQ({-3: 4, 0: -1, 5: Fraction(2, 3)})
    assert LaurentQ.from_json(a.to_json()) == a
    assert a.to_json()["v"]["5"] == "2/3"
