"""Exact deformation-limit targets and high-precision limit estimates.

The rational numbers phi_j are the t^(2j) coefficients of (t/sin t)**s, and
the ratios A_j(n)/A_0(n) of the deformation coefficients converge to
phi_j * pi^(2j).  Ratios are formed from exact rationals and only rounded
at the very end, so every reported error bound is rigorous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .bernoulli import bernoulli
from .bigfloat import BigFloat, pi
from .sequences import coefficient_row, franel, apery_zeta3
from .series import series_inv, series_pow, sin_t_over_t

# Independent reference for zeta(3) = sum 1/k^3, computed before this
# package existed by partial summation with an Euler-Maclaurin tail whose
# remainder is bracketed by the first omitted term; 70 digits, cross-checked
# against published digits.
ZETA3_REFERENCE_VALUE = Fraction(
    12020569031595942853997381615114499907649862923404988817922715553418382,
    10 ** 70)
ZETA3_REFERENCE_ERROR = Fraction(1, 10 ** 69)


@dataclass(frozen=True)
class PhiTable:
    s: int
    phis: tuple  # phi_0 .. phi_J as Fractions

    def __post_init__(self):
        assert self.phis[0] == 1
        for p in self.phis:
            assert p > 0, "deformation limit coefficients must be positive"

    def __getitem__(self, j: int) -> Fraction:
        return self.phis[j]


def phi(s: int, J: int) -> PhiTable:
    """phi_0 .. phi_J: coefficients of t^(2j) in (t/sin t)**s."""
    if s < 1:
        raise ValueError("the power s must be a positive integer")
    if J < 0:
        raise ValueError("J must be nonnegative")
    series = series_pow(series_inv(sin_t_over_t(2 * J)), s)
    return PhiTable(s, tuple(series[2 * j] for j in range(J + 1)))


def pi_sin_zeta_coeffs(J: int) -> tuple:
    """Rationals r_j with [t^(2j)] (pi t / sin(pi t)) = r_j * pi^(2j).

    The coefficient equals (2 - 2^(2-2j)) zeta(2j), and zeta(2j) is the
    classical Bernoulli multiple of pi^(2j); combining the two yields an
    exact rational.
    """
    if J < 0:
        raise ValueError("J must be nonnegative")
    table = bernoulli(2 * J)
    out = [Fraction(1)]
    for j in range(1, J + 1):
        zeta_ratio = (Fraction((-1) ** (j + 1)) * table[2 * j]
                      * 2 ** (2 * j) / (2 * factorial(2 * j)))
        out.append((2 - Fraction(2) ** (2 - 2 * j)) * zeta_ratio)
    return tuple(out)


def limit_estimate(s: int, j: int, n: int, precision_bits: int = 256,
                   table=None) -> BigFloat:
    """A_j(n) / A_0(n) as an exact rational, rounded once at the end."""
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    if table is not None:
        if n > table.n_max or j > table.J:
            raise ValueError("table row n=%d, j=%d not available" % (n, j))
        row = table.rows[n]
    else:
        row = coefficient_row(s, n, j)
    return BigFloat.from_fraction(Fraction(row[j], 1) / row[0],
                                  precision_bits)


@dataclass(frozen=True)
class LimitReport:
    s: int
    j: int
    n_used: int
    estimate: BigFloat
    target: BigFloat
    abs_error: BigFloat
    successive_diff_ratio: Optional[BigFloat]
    normalized_estimate: Optional[BigFloat] = None
    normalized_target: Optional[BigFloat] = None


def _normalizer(s: int, j: int) -> Optional[Fraction]:
    # A_j(1) = 2 * binom(2j + s - 1, 2j)
    if j == 1:
        return Fraction(s * (s + 1))
    if j == 2:
        return Fraction(s * (s + 1) * (s + 2) * (s + 3), 12)
    return None


def _normalized_target(s: int, j: int, pi_val: BigFloat) -> Optional[BigFloat]:
    if j == 1:
        # zeta(2)/(s + 1)
        return pi_val.pow_int(2) * Fraction(1, 6 * (s + 1))
    if j == 2:
        # 3 (5s + 2) zeta(4) / ((s+1)(s+2)(s+3))
        return pi_val.pow_int(4) * Fraction(
            3 * (5 * s + 2), 90 * (s + 1) * (s + 2) * (s + 3))
    return None


def limit_report(s: int, n_max: int, J: int, precision_bits: int = 256,
                 enforce_theory_range: bool = True) -> list:
    """Per-j comparison of A_j(n_max)/A_0(n_max) against phi_j pi^(2j).

    The theory guarantees the limit only for j <= floor((s-1)/2); larger j
    are refused unless enforce_theory_range is off (exploration mode).
    Each report carries the normalized estimate whose target is
    zeta(2)/(s+1) for j = 1 and 3(5s+2) zeta(4)/((s+1)(s+2)(s+3)) for j = 2.
    """
    if enforce_theory_range and J > (s - 1) // 2:
        raise ValueError("J exceeds floor((s-1)/2); the limits beyond are "
                         "not guaranteed")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    row_prev = coefficient_row(s, n_max - 1, J)
    row_cur = coefficient_row(s, n_max, J)
    phis = phi(s, J)
    pi_val = pi(precision_bits)
    reports = []
    for j in range(J + 1):
        estimate = BigFloat.from_fraction(Fraction(row_cur[j], 1)
                                          / row_cur[0], precision_bits)
        prev_est = BigFloat.from_fraction(Fraction(row_prev[j], 1)
                                          / row_prev[0], precision_bits)
        target = pi_val.pow_int(2 * j) * phis[j]
        abs_error = abs(estimate - target)
        prev_error = abs(prev_est - target)
        ratio = None
        if prev_error.definitely_nonzero():
            ratio = abs_error / prev_error
        norm = _normalizer(s, j)
        norm_est = norm_target = None
        if norm is not None:
            norm_est = estimate * (1 / norm)
            norm_target = _normalized_target(s, j, pi_val)
        reports.append(LimitReport(
            s=s, j=j, n_used=n_max, estimate=estimate, target=target,
            abs_error=abs_error, successive_diff_ratio=ratio,
            normalized_estimate=norm_est, normalized_target=norm_target))
    return reports


def limit_error_sequence(s: int, j: int, n_from: int, n_to: int,
                         precision_bits: int = 256) -> list:
    """[(n, |A_j(n)/A_0(n) - phi_j pi^(2j)|)] over a window of n."""
    phis = phi(s, j)
    target = pi(precision_bits).pow_int(2 * j) * phis[j]
    out = []
    for n in range(n_from, n_to + 1):
        row = coefficient_row(s, n, j)
        est = BigFloat.from_fraction(Fraction(row[j], 1) / row[0],
                                     precision_bits)
        out.append((n, abs(est - target)))
    return out


def asymptotic_ratio(s: int, n: int, precision_bits: int = 256) -> BigFloat:
    """A(n) sqrt(s (pi n / 2)^(s-1)) / 2^(n s); tends to 1 from below.

    For s = 1 the square-root factor is exactly 1 and the ratio is exactly
    1 with a zero error bound.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if s < 1:
        raise ValueError("the power s must be a positive integer")
    a_val = franel(s, n)
    factor = pi(precision_bits) * Fraction(n, 2)
    scaled = factor.pow_int(s - 1) * s
    root = scaled.sqrt()
    return (root * a_val).mul_2exp(-n * s)


def apery_zeta3_limit(n: int, precision_bits: int = 256) -> BigFloat:
    """6 B(n)/A(n), the classical convergents to zeta(3)."""
    pair = apery_zeta3(n)[n]
    return BigFloat.from_fraction(6 * pair.b / pair.a, precision_bits)


def zeta3_reference(precision_bits: int = 256) -> BigFloat:
    """The frozen independent zeta(3) value with its error bound."""
    base = BigFloat.from_fraction(ZETA3_REFERENCE_VALUE, precision_bits)
    return base.widen(ZETA3_REFERENCE_ERROR)
