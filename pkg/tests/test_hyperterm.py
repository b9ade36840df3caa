from fractions import Fraction
from math import comb

import pytest

from franel.bipoly import BiPoly, RatFunc
from franel.hyperterm import (apery_zeta3_term, binom_power_term,
                              from_quotients, operator_ratio, term_eval)
from franel.intpoly import IntPoly
from franel.operators import RecurrenceOperator

N = BiPoly.var_n()
K = BiPoly.var_k()


def test_quotient_values():
    t1 = binom_power_term(1)
    assert t1.rho_k.eval(5, 2) == 1  # binom(5,3)/binom(5,2)
    t2 = binom_power_term(2)
    assert t2.rho_k.eval(4, 1) == Fraction(9, 4)
    t3 = binom_power_term(3)
    assert t3.rho_n.eval(4, 2) == Fraction(125, 27)


def test_invalid_power():
    with pytest.raises(ValueError):
        binom_power_term(0)


def test_term_eval():
    assert term_eval(binom_power_term(3), 4, 2) == 216
    assert term_eval(binom_power_term(2), 4, 5) == 0
    assert term_eval(binom_power_term(1), 0, 0) == 1


def test_compatibility_invariant():
    for s in range(1, 9):
        assert binom_power_term(s).is_compatible()
    assert apery_zeta3_term().is_compatible()


def test_from_quotients_rejects_incompatible():
    bad_rho_n = RatFunc(N + 1, N + 1 - K)
    bad_rho_k = RatFunc(N + K, K + 1)  # shifts do not commute with rho_n
    with pytest.raises(ValueError):
        from_quotients(bad_rho_n, bad_rho_k)


def test_staircase_agrees_with_binomials():
    # evaluate via shift-quotient products along the staircase and compare
    for s in range(1, 5):
        term = binom_power_term(s)
        bare = from_quotients(term.rho_n, term.rho_k, validate=False)
        for n in range(13):
            for k in range(n + 1):
                assert term_eval(bare, n, k) == comb(n, k) ** s


def test_staircase_pole_reported():
    from franel.errors import PoleError
    # rho_n has a pole at n = 1, hit while walking up the staircase
    term = from_quotients(RatFunc(BiPoly.const(1), N - 1), RatFunc.one(),
                          validate=True)
    with pytest.raises(PoleError):
        term_eval(term, 3, 0)


def test_apery_term_values():
    t = apery_zeta3_term()
    for n in range(8):
        total = sum(term_eval(t, n, k) for k in range(n + 1))
        direct = sum((comb(n, k) * comb(n + k, k)) ** 2 for k in range(n + 1))
        assert total == direct


def test_operator_ratio_shift_minus_two():
    term = binom_power_term(1)
    op = RecurrenceOperator((IntPoly.const(-2), IntPoly.const(1)))
    ratio = operator_ratio(op, term)
    assert ratio == RatFunc(2 * K - N - 1, N + 1 - K)


def test_operator_ratio_identity():
    term = binom_power_term(2)
    op = RecurrenceOperator((IntPoly.const(1),))
    assert operator_ratio(op, term) == RatFunc.one()


def test_operator_ratio_order_one_s2():
    # c_0 = -2(2n+1), c_1 = (n+1): check against 20 integer points
    term = binom_power_term(2)
    op = RecurrenceOperator((IntPoly((-2, -4)), IntPoly((1, 1))))
    ratio = operator_ratio(op, term)
    for n in range(3, 23):
        k = (n * 7) % (n - 1) if n > 1 else 0
        expected = Fraction((n + 1) * (n + 1) ** 2, (n + 1 - k) ** 2) \
            - 2 * (2 * n + 1)
        assert ratio.eval(n, k) == expected


def test_operator_ratio_linearity():
    term = binom_power_term(2)
    p1 = RecurrenceOperator((IntPoly((1, 2)), IntPoly.const(1)))
    p2 = RecurrenceOperator((IntPoly((0, 0, 3)), IntPoly((5,), ),))
    combined = RecurrenceOperator.from_raw(
        (p1.coeffs[0] + p2.coeffs[0], p1.coeffs[1] + p2.coeffs[1]))
    lhs = operator_ratio(combined, term)
    rhs = operator_ratio(p1, term) + operator_ratio(p2, term)
    assert lhs == rhs


def test_arbitrary_staircase_paths_inside_support():
    import random
    rng = random.Random(314)
    for s in (1, 3):
        term = binom_power_term(s)
        for _ in range(25):
            n = rng.randint(0, 10)
            k = rng.randint(0, n)
            # random monotone path from (0,0) to (n,k) keeping j <= i
            i = j = 0
            value = Fraction(1)
            while (i, j) != (n, k):
                up_ok = i < n
                right_ok = j < k and j < i
                if up_ok and (not right_ok or rng.random() < 0.5):
                    value *= term.rho_n.eval(i, j)
                    i += 1
                else:
                    value *= term.rho_k.eval(i, j)
                    j += 1
            assert value == comb(n, k) ** s
