"""Hecke algebra relations, the bar involution, and Kazhdan-Lusztig data."""

import random

import pytest
from hypothesis import given, strategies as st

from heckelab.coxeter import (
    all_permutations, apply_s_right, avoids_patterns, identity, length,
    reduced_word, right_descents,
)
from heckelab.hecke import (
    HeckeElement, KLContext, bott_samelson_product, kl_context,
    springer_decomposition,
)
from heckelab.laurentq import LaurentQ, ONE, Q, q_power, v_power

E4 = identity(4)
S1 = (2, 1, 3, 4)
S2 = (1, 3, 2, 4)

# the T-expansion of the integral Kazhdan-Lusztig element of 3412:
# coefficient 1+q on 1234 and 1324, coefficient 1 on the other twelve
B_3412_TABLE = {
    (1, 2, 3, 4): (1, 1), (1, 3, 2, 4): (1, 1),
    (2, 1, 3, 4): (1,), (1, 2, 4, 3): (1,), (1, 3, 4, 2): (1,),
    (1, 4, 2, 3): (1,), (2, 1, 4, 3): (1,), (3, 1, 2, 4): (1,),
    (2, 3, 1, 4): (1,), (1, 4, 3, 2): (1,), (3, 1, 4, 2): (1,),
    (2, 4, 1, 3): (1,), (3, 2, 1, 4): (1,), (3, 4, 1, 2): (1,),
}


def random_element(n, rng, size=4):
    perms = list(all_permutations(n))
    terms = {}
    for _ in range(size):
        w = rng.choice(perms)
        terms[w] = LaurentQ({rng.randint(-3, 3): rng.randint(-5, 5)})
    return HeckeElement(n, terms)


def test_quadratic_relation():
    ts = HeckeElement.t_basis(4, S1)
    sq = ts.mul_ts_right(1)
    assert sq == HeckeElement(4, {S1: Q - ONE, E4: Q})
    assert HeckeElement.unit(4).mul_ts_right(1) == ts
    assert HeckeElement.t_basis(4, S1).mul_ts_right(2) == \
        HeckeElement.t_basis(4, (2, 3, 1, 4))


def test_braid_relation():
    a = HeckeElement.unit(3).mul_word_right((1, 2, 1))
    b = HeckeElement.unit(3).mul_word_right((2, 1, 2))
    assert a == b


def test_mul_unit_and_associativity():
    rng = random.Random(7)
    for _ in range(10):
        a = random_element(4, rng)
        assert a.mul(HeckeElement.unit(4)) == a
        b = random_element(4, rng, size=2)
        c = random_element(4, rng, size=2)
        assert a.mul(b).mul(c) == a.mul(b.mul(c))


def test_mul_size_mismatch():
    with pytest.raises(ValueError):
        HeckeElement.unit(3).mul(HeckeElement.unit(4))


def test_bar_on_generator():
    # solving T_s x = T_e against the quadratic relation gives
    # T_s^(-1) = q^(-1) T_s + (q^(-1)-1) T_e
    b = HeckeElement.t_basis(4, S1).bar_involution()
    assert b == HeckeElement(4, {S1: q_power(-1), E4: q_power(-1) - ONE})
    assert HeckeElement.t_basis(4, S1).mul(b) == HeckeElement.unit(4)
    assert HeckeElement.unit(4).bar_involution() == HeckeElement.unit(4)


def test_bar_involutive_and_multiplicative():
    rng = random.Random(11)
    for _ in range(8):
        a = random_element(3, rng, size=3)
        assert a.bar_involution().bar_involution() == a
    x = HeckeElement.t_basis(3, (2, 1, 3))
    y = HeckeElement.t_basis(3, (3, 1, 2))
    assert x.mul(y).bar_involution() == \
        x.bar_involution().mul(y.bar_involution())


def test_kl_polynomial_examples():
    ctx = kl_context(4)
    assert ctx.polynomial(E4, (3, 4, 1, 2)) == ONE + Q
    # classical nontrivial values in S_5
    ctx5 = kl_context(5)
    assert ctx5.polynomial(identity(5), (4, 5, 3, 1, 2)) == \
        ONE + q_power(2)
    assert ctx5.polynomial(identity(5), (5, 2, 3, 4, 1)) == \
        ONE + LaurentQ({2: 2}) + q_power(2)
    for w in all_permutations(4):
        assert ctx.polynomial(w, w) == ONE
    ctx3 = kl_context(3)
    for u in all_permutations(3):
        for w in all_permutations(3):
            from heckelab.coxeter import bruhat_leq
            if bruhat_leq(u, w):
                assert ctx3.polynomial(u, w) == ONE
    with pytest.raises(ValueError):
        ctx.polynomial((2, 1, 3, 4), E4)


def test_kl_element_examples():
    ctx = kl_context(4)
    assert ctx.element(E4) == HeckeElement.unit(4)
    assert ctx.element(S1) == HeckeElement(4, {E4: ONE, S1: ONE})
    B = ctx.element((3, 4, 1, 2))
    expected = {w: LaurentQ({2 * k: c for k, c in enumerate(cs)})
                for w, cs in B_3412_TABLE.items()}
    assert B.terms == expected


def test_bar_invariance_exhaustive_n4():
    ctx = kl_context(4)
    for w in all_permutations(4):
        B = ctx.element(w)
        assert B.bar_involution() == B.scale(v_power(-2 * length(w)))


def test_bar_invariance_n5():
    ctx = kl_context(5)
    for w in all_permutations(5):
        B = ctx.element(w)
        assert B.bar_involution() == B.scale(v_power(-2 * length(w)))


def test_degree_bound_and_nonnegativity():
    for n in (4, 5):
        ctx = kl_context(n)
        for w in all_permutations(n):
            lw = length(w)
            for z, p in ctx.element(w).terms.items():
                assert p.is_q_polynomial()
                assert all(isinstance(c, int) and c >= 0
                           for c in p.c.values()), (z, w)
                if z != w:
                    assert p.max_vexp() < lw - length(z)


def test_smoothness_criterion_n5():
    patterns = [(3, 4, 1, 2), (4, 2, 3, 1)]
    for n in (4, 5):
        ctx = kl_context(n)
        e = identity(n)
        for w in all_permutations(n):
            assert (ctx.polynomial(e, w) == ONE) == \
                avoids_patterns(w, patterns), w


def test_left_and_right_recursions_agree():
    for n in (3, 4):
        ctx = KLContext(n)
        for w in all_permutations(n):
            assert ctx.element(w) == ctx.element_right_recursion(w), w


def test_cprime_expand_examples():
    ctx = kl_context(3)
    # basis elements expand to themselves
    for w in all_permutations(3):
        assert ctx.expand_cprime(ctx.element(w)) == {w: ONE}
    assert ctx.expand_cprime(HeckeElement.unit(3)) == {identity(3): ONE}
    prod = bott_samelson_product((1, 2, 1), 3)
    assert ctx.expand_cprime(prod) == {(3, 2, 1): ONE, (2, 1, 3): Q}


def test_cprime_round_trip_random():
    rng = random.Random(23)
    for n in (3, 4, 5):
        ctx = kl_context(n)
        for _ in range(12):
            a = random_element(n, rng)
            expansion = ctx.expand_cprime(a)
            back = HeckeElement.zero(n)
            for w, c in expansion.items():
                back = back + ctx.element(w).scale(c)
            assert back == a


def test_bott_samelson_examples():
    assert bott_samelson_product((), 3) == HeckeElement.unit(3)
    one_plus_ts = bott_samelson_product((1,), 3)
    assert one_plus_ts == HeckeElement(3, {identity(3): ONE, (2, 1, 3): ONE})
    assert one_plus_ts == kl_context(3).element((2, 1, 3))
    p = bott_samelson_product((1, 2), 3)
    assert p.terms == {identity(3): ONE, (2, 1, 3): ONE,
                       (1, 3, 2): ONE, (2, 3, 1): ONE}


def all_reduced_words(w):
    if length(w) == 0:
        yield ()
        return
    for i in sorted(right_descents(w)):
        for rest in all_reduced_words(apply_s_right(w, i)):
            yield rest + (i,)


def test_springer_decomposition_examples():
    assert springer_decomposition((1,), 3) == {(2, 1, 3): ONE}
    dec = springer_decomposition((1, 2, 1), 3)
    assert dec == {(3, 2, 1): ONE, (2, 1, 3): Q}
    with pytest.raises(ValueError):
        springer_decomposition((1, 1), 3)


def test_springer_properties():
    # top coefficient 1; all coefficients palindromic about
    # (len(w) - len(u))/2 with nonnegative integers
    for n in (3, 4):
        ctx = kl_context(n)
        for w in all_permutations(n):
            for word in all_reduced_words(w):
                dec = springer_decomposition(word, n, ctx)
                assert dec[w] == ONE
                for u, c in dec.items():
                    d = length(w) - length(u)
                    assert c.is_palindromic(d / 2), (word, u, str(c))
                    assert all(isinstance(x, int) and x > 0
                               for x in c.c.values())
    # sampled words in S5
    rng = random.Random(5)
    ctx5 = kl_context(5)
    perms5 = list(all_permutations(5))
    for _ in range(25):
        w = rng.choice(perms5)
        word = reduced_word(w)
        dec = springer_decomposition(word, 5, ctx5)
        assert dec[w] == ONE
        for u, c in dec.items():
            assert c.is_palindromic((length(w) - length(u)) / 2)


def test_budget_guard():
    from heckelab.config import BudgetError
    with pytest.raises(BudgetError):
        KLContext(9)


def test_json_round_trip():
    ctx = kl_context(4)
    B = ctx.element((3, 4, 1, 2))
    assert HeckeElement.from_json(B.to_json()) == B
    fresh = KLContext(4)
    fresh.load_json(ctx.to_json())
    assert fresh.element((3, 4, 1, 2)) == B


@given(st.integers(min_value=2, max_value=5), st.data())
def test_t_basis_products_respect_lengths(n, data):
    word = data.draw(st.lists(st.integers(1, n - 1), max_size=6))
    elem = HeckeElement.unit(n).mul_word_right(tuple(word))
    w = identity(n)
    for i in word:
        w = apply_s_right(w, i)
    # the product is supported on Bruhat-below permutations and the
    # coefficient of the full product survives when the word is reduced
    if length(w) == len(word):
        assert elem.coeff(w) == ONE
