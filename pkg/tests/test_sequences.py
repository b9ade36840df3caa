import random
from fractions import Fraction
from math import comb

import pytest

from franel.hyperterm import binom_power_term
from franel.sequences import (annihilation_check, apery_zeta3,
                              coefficient_row, coefficient_table, deformed,
                              franel, lcm_upto)
from franel.telescoper import zeilberger


def brute_deformed(s, n, J):
    """Independent expansion: per-k product built factor by factor over
    Fractions, inverted by direct convolution; no shared code with the
    package kernel."""
    T = 2 * J + 1

    def mul(a, b):
        out = [Fraction(0)] * (T + 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if i + j <= T and bj:
                        out[i + j] += ai * bj
        return out

    def inv(a):
        out = [Fraction(0)] * (T + 1)
        out[0] = 1 / a[0]
        for i in range(1, T + 1):
            out[i] = -sum(a[m] * out[i - m]
                          for m in range(1, i + 1)) / a[0]
        return out

    total = [Fraction(0)] * (T + 1)
    for k in range(n + 1):
        bracket = [Fraction(1)] + [Fraction(0)] * T
        for j in range(1, k + 1):
            bracket = mul(bracket,
                          [Fraction(1), Fraction(-1, j)] + [Fraction(0)] * (T - 1))
        for j in range(1, n - k + 1):
            bracket = mul(bracket,
                          [Fraction(1), Fraction(1, j)] + [Fraction(0)] * (T - 1))
        term = [Fraction(1)] + [Fraction(0)] * T
        ib = inv(bracket)
        for _ in range(s):
            term = mul(term, ib)
        w = comb(n, k) ** s
        total = [t + w * c for t, c in zip(total, term)]
    return total


def test_franel_examples():
    assert franel(1, 5) == 32
    assert franel(2, 4) == comb(8, 4) == 70
    assert franel(3, 4) == 346
    with pytest.raises(ValueError):
        franel(0, 3)


def test_franel_closed_forms():
    for n in range(20):
        assert franel(1, n) == 2 ** n
        assert franel(2, n) == comb(2 * n, n)


def test_deformed_row_zero():
    for s in (1, 3, 5):
        d = deformed(s, 0, 2)
        assert d.series[0] == 1
        assert all(d.series[i] == 0 for i in range(1, 6))


def test_deformed_row_one_closed_form():
    # A_j(1) = 2 binom(2j + s - 1, 2j)
    for s in (2, 3, 5):
        d = deformed(s, 1, 3)
        for j in range(4):
            assert d.coefficient(j) == 2 * comb(2 * j + s - 1, 2 * j)


def test_deformed_small_example():
    d = deformed(3, 2, 1)
    assert d.series[0] == 10
    assert d.series[2] == 48
    assert d.series[1] == 0 and d.series[3] == 0


def test_coefficient_examples():
    assert coefficient_row(3, 1, 1)[1] == 12  # s(s+1)
    assert coefficient_row(4, 1, 2)[2] == 70  # s(s+1)(s+2)(s+3)/12


def test_against_brute_force():
    # each row compares the incremental kernel against the from-scratch
    # product at every k, so the sweep covers well over 200 (s, n, k) cells
    rng = random.Random(2024)
    cells = 0
    for _ in range(30):
        s = rng.randint(1, 5)
        n = rng.randint(0, 12)
        J = rng.randint(0, 3)
        expected = brute_deformed(s, n, J)
        got = deformed(s, n, J)
        assert list(got.series.coeffs) == expected
        cells += n + 1
    assert cells >= 200


def test_reflection_symmetry_termwise():
    # exchanging k with n-k reflects the per-k factor t -> -t, so the sums
    # of the k and n-k brute-force terms have no odd part
    s, n, J = 3, 7, 2
    T = 2 * J + 1
    total = brute_deformed(s, n, J)
    assert all(total[i] == 0 for i in range(1, T + 1, 2))


def test_evenness_sweep():
    for s in (1, 2, 3):
        for n in range(0, 25, 5):
            d = deformed(s, n, 3)
            assert all(d.series[i] == 0
                       for i in range(1, d.series.truncation_order + 1, 2))


def test_table_head_column():
    table = coefficient_table(3, 12, 1)
    for n in range(13):
        assert table.entry(n, 0) == franel(3, n)


def test_recurrence_forward_matches_direct():
    for s in (1, 2, 3, 4):
        op, _ = zeilberger(binom_power_term(s), 3)
        r = op.order
        seq = [Fraction(franel(s, n)) for n in range(r)]
        for n in range(40 - r):
            # solve c_r(n) u(n+r) = -(sum_{i<r} c_i(n) u(n+i))
            acc = Fraction(0)
            for i in range(r):
                acc += op.coeffs[i].eval_fraction(n) * seq[n + i]
            lead = op.coeffs[r].eval_fraction(n)
            assert lead != 0
            seq.append(-acc / lead)
        for n in range(len(seq)):
            assert seq[n] == franel(s, n)


def test_annihilation_franel_j01():
    op, _ = zeilberger(binom_power_term(3), 2)
    report = annihilation_check(3, op, 1, 0, 30)
    assert report.all_zero
    assert report.first_zero_run_start == (0, 0)


def test_annihilation_reports_violations():
    # the wrong operator must show nonzero residues as data, not errors
    op, _ = zeilberger(binom_power_term(2), 1)
    report = annihilation_check(3, op, 0, 0, 10)
    assert not report.all_zero
    assert all(res != 0 for _, _, res in report.violations)


def test_lcm_upto():
    assert lcm_upto(1) == 1
    assert lcm_upto(6) == 60
    assert lcm_upto(10) == 2520


def test_apery_pairs():
    pairs = apery_zeta3(6)
    assert (pairs[0].a, pairs[0].b) == (1, 0)
    assert (pairs[1].a, pairs[1].b) == (5, 1)
    assert pairs[2].a == 73
    assert pairs[2].b == Fraction(117, 8)
    assert pairs[3].a == 1445
    assert all(p.b_denominator_divides_lcm_cubed for p in pairs)


def test_apery_direct_equals_recursion():
    pairs = apery_zeta3(30)
    for p in pairs:
        assert p.a == sum((comb(p.n, k) * comb(p.n + k, k)) ** 2
                          for k in range(p.n + 1))


def test_invalid_inputs():
    with pytest.raises(ValueError):
        deformed(0, 3, 1)
    with pytest.raises(ValueError):
        deformed(2, -1, 1)
    with pytest.raises(ValueError):
        apery_zeta3(0)
    with pytest.raises(ValueError):
        annihilation_check(3, zeilberger(binom_power_term(1), 1)[0], 0, 5, 4)


def test_annihilation_beyond_guaranteed_range():
    # only j <= floor((s-1)/2) is guaranteed; for s = 3 the j = 2 sequence
    # leaves nonzero residues which the report carries as data
    op, _ = zeilberger(binom_power_term(3), 2)
    report = annihilation_check(3, op, 2, 0, 10)
    j2 = [v for v in report.violations if v[0] == 2]
    assert len(j2) == 11
    assert all(v[0] == 2 for v in report.violations)
    assert report.first_zero_run_start == (0, 0, None)
