"""Creative telescoping for bivariate hypergeometric terms.

Given a term a(n, k) by its shift quotients, the solver looks for the least
order r such that some nonzero operator P = sum_i c_i(n) N^i admits a
rational certificate R(n, k) with

    (P a)(n, k) = b(n, k+1) - b(n, k),      b(n, k) = R(n, k) a(n, k).

The search runs the classic parameterized Gosper construction: write
(P a)/a over a common denominator d(k), put the shift quotient of a/d into
Gosper normal form (C(k+1)/C(k)) * A(k)/B(k) with gcd(A(k), B(k+j)) = 1 for
all integers j >= 0, bound the degree of the unknown polynomial f, and
compare coefficients of k in

    A(k) f(k+1) - B(k-1) f(k) = C(k) sum_i c_i(n) u_i(k),

which is linear in the c_i and the coefficients of f.  The resulting system
over Z[n] is solved by fraction-free elimination; a solution with nonzero
(c_0, .., c_r) yields the operator and the certificate

    R(n, k) = B(k-1) f(k) / (C(k) d(k)).

Everything is exact; verification never trusts the construction and checks
the defining identity by cross multiplication of rational functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipoly import (BiPoly, RatFunc, kp_content, kp_deg, kp_divexact,
                     kp_eval_k, kp_gcd, kp_mul, kp_mul_intpoly, kp_shift_k,
                     kp_strip, kp_sub, poly_gcd)
from .errors import ExactDivisionError, TelescoperNotFoundError
from .hyperterm import HyperTerm, shift_quotient_products
from .intpoly import IntPoly, integer_roots
from .linalg import bareiss_determinant, fraction_free_nullspace
from .operators import (Certificate, RecurrenceOperator,
                        normalize_operator_coeffs)

__all__ = [
    "zeilberger", "verify_certificate", "certificate_residual",
    "analyze_structure", "StructureReport", "expected_order",
    "expected_coefficient_degree", "expected_certificate_denominator",
]


# ---------------------------------------------------------------------------
# dispersion: shifts j >= 0 where gcd(A(k), B(k+j)) is nonconstant
# ---------------------------------------------------------------------------


def _resultant_in_k_shifted(a_kp, b_kp) -> BiPoly:
    """Res_k(a(k), b(k+h)) as a polynomial in (n, h).

    Both inputs are k-polys over Z[n]; the result reuses BiPoly with the
    first variable n and the second variable h.
    """
    da, db = kp_deg(a_kp), kp_deg(b_kp)
    # rows of b(k+h): coefficient of k^m is sum_{i>=m} C(i,m) b_i(n) h^(i-m)
    from math import comb
    b_shift = []
    for m in range(db + 1):
        entry = BiPoly()
        for i in range(m, db + 1):
            if not b_kp[i].is_zero:
                entry = entry + BiPoly.from_intpoly_n(comb(i, m) * b_kp[i]) \
                    * BiPoly({(0, i - m): 1})
        b_shift.append(entry)
    a_rows = [BiPoly.from_intpoly_n(c) for c in a_kp]
    size = da + db
    matrix = []
    for shift in range(db):
        row = [BiPoly()] * size
        for i, c in enumerate(reversed(a_rows)):
            row[shift + i] = c
        matrix.append(row)
    for shift in range(da):
        row = [BiPoly()] * size
        for i, c in enumerate(reversed(b_shift)):
            row[shift + i] = c
        matrix.append(row)
    return bareiss_determinant(matrix, BiPoly.const(1), BiPoly())


def _dispersion_set(a_kp, b_kp):
    """Sorted nonnegative integers j with gcd(a(k), b(k+j)) nonconstant."""
    if kp_deg(a_kp) < 1 or kp_deg(b_kp) < 1:
        return []
    res = _resultant_in_k_shifted(a_kp, b_kp)
    if res.is_zero:
        raise ValueError("degenerate dispersion resultant")
    # view the resultant as a polynomial in h whose coefficients live in Z[n]
    rows = res.to_kpoly()  # index = power of h, entries IntPoly in n
    # any fixed n-degree slice gives a nonzero integer polynomial in h whose
    # integer roots contain every valid j; verify candidates exactly after
    max_n_deg = max(p.degree for p in rows)
    slice_poly = None
    for delta in range(max_n_deg + 1):
        cs = []
        for p in rows:
            c = p.coeffs[delta] if delta <= p.degree else 0
            cs.append(c)
        cand = IntPoly(cs)
        if not cand.is_zero:
            slice_poly = cand
            break
    assert slice_poly is not None
    out = []
    for j in integer_roots(slice_poly):
        if j >= 0 and kp_eval_k(rows, j).is_zero:
            out.append(j)
    return out


def _gosper_normal_form(qhat_kp, rhat_kp):
    """Rewrite q(k)/r(k) as (C(k+1)/C(k)) A(k)/B(k), GP condition on A, B."""
    A = list(qhat_kp)
    B = list(rhat_kp)
    C = [IntPoly.const(1)]
    for j in _dispersion_set(A, B):
        while True:
            g = kp_gcd(A, kp_shift_k(B, j))
            if kp_deg(g) < 1:
                break
            A = kp_divexact(A, g)
            B = kp_divexact(B, kp_shift_k(g, -j))
            for i in range(1, j + 1):
                C = kp_mul(C, kp_shift_k(g, -i))
    return A, B, C


def _gosper_degree_bound(a_kp, bm1_kp, deg_p):
    """Upper bound for deg_k of the unknown polynomial, or None."""
    da, db = kp_deg(a_kp), kp_deg(bm1_kp)
    mu = max(da, db)
    candidates = []
    degenerate = (da == db and a_kp[-1] == bm1_kp[-1])
    if not degenerate:
        candidates.append(deg_p - mu)
    else:
        candidates.append(deg_p - mu + 1)
        if mu >= 1:
            a_sub = a_kp[mu - 1] if mu - 1 < len(a_kp) else IntPoly()
            b_sub = bm1_kp[mu - 1] if mu - 1 < len(bm1_kp) else IntPoly()
            num = b_sub - a_sub
            if num.is_zero:
                candidates.append(0)
            else:
                try:
                    q = num.divexact(a_kp[-1])
                    if q.degree == 0 and q.lc >= 0:
                        candidates.append(q.lc)
                except ExactDivisionError:
                    pass
    valid = [c for c in candidates if c >= 0]
    return max(valid) if valid else None


# ---------------------------------------------------------------------------
# the telescoping search
# ---------------------------------------------------------------------------


def _bipoly_lcm(polys):
    acc = BiPoly.const(1)
    for p in polys:
        g = poly_gcd(acc, p)
        acc = acc * p.divexact(g)
    c = acc.content_int()
    if c > 1:
        acc = acc.divexact(BiPoly.const(c))
    return acc if acc.lc_grlex() > 0 else -acc


def _solve_at_order(term: HyperTerm, r: int):
    """Try to telescope at exactly order r.

    Returns (operator, certificate) or None when the linear system has no
    solution with a nonzero operator part.
    """
    sigmas = shift_quotient_products(term, r)
    d = _bipoly_lcm([sig.den for sig in sigmas])
    u_polys = [sig.num * d.divexact(sig.den) for sig in sigmas]
    ratio = term.rho_k * RatFunc(d, d.compose_shift(0, 1))
    qhat = ratio.num.to_kpoly()
    rhat = ratio.den.to_kpoly()
    A, B, C = _gosper_normal_form(qhat, rhat)
    Bm1 = kp_shift_k(B, -1)
    u_kps = [p.to_kpoly() for p in u_polys]
    cu = [kp_mul(C, u) for u in u_kps]
    deg_p = max(kp_deg(p) for p in cu)
    D = _gosper_degree_bound(A, Bm1, deg_p)
    if D is None:
        return None

    # columns: f_0..f_D then c_0..c_r
    from math import comb
    f_cols = []
    for j in range(D + 1):
        # A(k) (k+1)^j - B(k-1) k^j
        a_part = [IntPoly() for _ in range(kp_deg(A) + j + 1)]
        for t in range(j + 1):
            cmb = comb(j, t)
            for i, ai in enumerate(A):
                if not ai.is_zero:
                    a_part[i + t] = a_part[i + t] + cmb * ai
        b_part = [IntPoly()] * j + list(Bm1)
        f_cols.append(kp_sub(kp_strip(a_part), b_part))
    c_cols = [[-e for e in col] for col in cu]
    all_cols = f_cols + c_cols
    n_eqs = max(len(col) for col in all_cols)
    matrix = []
    for e in range(n_eqs):
        matrix.append([col[e] if e < len(col) else IntPoly()
                       for col in all_cols])
    basis = fraction_free_nullspace(matrix)
    n_f = D + 1
    solutions = []
    for vec in basis:
        c_part = vec[n_f:]
        if any(not c.is_zero for c in c_part):
            solutions.append(vec)
    if not solutions:
        return None
    solutions.sort(key=lambda v: (max(c.degree for c in v[n_f:]),
                                  sum(c.degree for c in v[n_f:])))
    vec = solutions[0]
    f_kp = kp_strip(list(vec[:n_f]))
    c_raw = list(vec[n_f:])
    while c_raw and c_raw[-1].is_zero:
        c_raw.pop()
    op, scale = normalize_operator_coeffs(c_raw)
    num = BiPoly.from_kpoly(kp_mul(Bm1, f_kp))
    den = BiPoly.from_kpoly(kp_mul_intpoly(C, scale)) * d
    cert = Certificate(RatFunc(num, den))
    return op, cert


def zeilberger(term: HyperTerm, r_max: int, *, allow_order_zero: bool = False,
               verify: bool = True):
    """Least-order telescoping operator and certificate for a term.

    Orders 1..r_max are tried in turn (0..r_max with allow_order_zero);
    raises TelescoperNotFoundError when none admits a telescoper.  With
    verify=True (the default) the returned pair has already passed the exact
    certificate identity check.
    """
    if r_max < 1 and not allow_order_zero:
        raise ValueError("r_max must be at least 1")
    if term.rho_n.is_zero or term.rho_k.is_zero:
        raise ValueError("degenerate term: a shift quotient is zero")
    orders = range(0 if allow_order_zero else 1, r_max + 1)
    tried = []
    for r in orders:
        tried.append(r)
        found = _solve_at_order(term, r)
        if found is None:
            continue
        op, cert = found
        if verify and not verify_certificate(term, op, cert):
            raise AssertionError(
                "internal error: certificate failed verification at order %d"
                % r)
        return op, cert
    raise TelescoperNotFoundError(tried)


# ---------------------------------------------------------------------------
# verification and structural analysis
# ---------------------------------------------------------------------------


def certificate_residual(term: HyperTerm, op: RecurrenceOperator,
                         cert: Certificate) -> RatFunc:
    """(P a)/a - (R(n, k+1) rho_k - R(n, k)), exactly; zero iff valid.

    Both sides are assembled over unreduced common denominators and compared
    by cross multiplication, so no gcd is ever taken on the identity path;
    the residual is only brought to lowest terms when it is nonzero.
    """
    sigmas = shift_quotient_products(term, op.order)
    lhs_den = _bipoly_lcm([sig.den for sig in sigmas])
    lhs_num = BiPoly()
    for c, sig in zip(op.coeffs, sigmas):
        if not c.is_zero:
            lhs_num = lhs_num + BiPoly.from_intpoly_n(c) * sig.num \
                * lhs_den.divexact(sig.den)
    R = cert.ratio
    rn, rd = R.num, R.den
    rn1 = rn.compose_shift(0, 1)
    rd1 = rd.compose_shift(0, 1)
    qn, qd = term.rho_k.num, term.rho_k.den
    rhs_num = rn1 * qn * rd - rn * qd * rd1
    rhs_den = rd1 * qd * rd
    diff = lhs_num * rhs_den - rhs_num * lhs_den
    if diff.is_zero:
        return RatFunc.zero()
    return RatFunc(diff, lhs_den * rhs_den)


def verify_certificate(term: HyperTerm, op: RecurrenceOperator,
                       cert: Certificate) -> bool:
    """Exact identity check of the telescoping relation."""
    return certificate_residual(term, op, cert).is_zero


def expected_order(s: int) -> int:
    return (s + 1) // 2


def expected_coefficient_degree(s: int) -> int:
    """Observed degree of the minimal telescoping operator's coefficients."""
    m = expected_order(s)
    if s % 2 == 0:
        d = Fraction(m * (m * m - 1), 3) + 1
    else:
        d = (Fraction(m ** 3, 3) - Fraction(m * m, 2) + Fraction(2 * m, 3)
             + Fraction((-1) ** m - 1, 4))
    assert d.denominator == 1
    return int(d)


def expected_certificate_denominator(s: int, m: int | None = None) -> BiPoly:
    """The rising product prod_{j=1..m} (n - k + j)**s."""
    if m is None:
        m = expected_order(s)
    n = BiPoly.var_n()
    k = BiPoly.var_k()
    acc = BiPoly.const(1)
    for j in range(1, m + 1):
        acc = acc * (n - k + j)
    return acc ** s


def _delta(r: int, s: int) -> int:
    return 1 if s % r == 0 else 0


@dataclass(frozen=True)
class StructureReport:
    s: int
    order: int
    expected_order: int
    coeff_degree: int
    expected_degree: int
    denominator_matches: bool
    denominator_divides: bool
    numerator_k_degree: int
    expected_numerator_k_degree: int
    integer_roots_of_denominator_in_n: tuple

    @property
    def all_expectations_met(self) -> bool:
        return (self.order == self.expected_order
                and self.coeff_degree == self.expected_degree
                and self.denominator_matches
                and self.numerator_k_degree ==
                self.expected_numerator_k_degree)


def analyze_structure(op: RecurrenceOperator, cert: Certificate,
                      s: int) -> StructureReport:
    """Compare a verified telescoper against the expected shape.

    All comparisons are exact polynomial identities.  The denominator audit
    reports equality with the rising product and, separately, divisibility,
    so a strictly smaller denominator is visible rather than an error.
    """
    m = expected_order(s)
    den = cert.ratio.den
    expected_den = expected_certificate_denominator(s, m)
    matches = den == expected_den or den == -expected_den
    if matches:
        divides = True
    else:
        try:
            expected_den.divexact(den)
            divides = True
        except ExactDivisionError:
            divides = False
    cont = kp_content(den.to_kpoly())
    if cont.degree >= 1:
        roots = tuple(j for j in integer_roots(cont) if j >= 0)
    else:
        roots = ()
    return StructureReport(
        s=s,
        order=op.order,
        expected_order=m,
        coeff_degree=op.coefficient_degree(),
        expected_degree=expected_coefficient_degree(s),
        denominator_matches=matches,
        denominator_divides=divides,
        numerator_k_degree=cert.ratio.num.deg_k,
        expected_numerator_k_degree=m * s + _delta(2, s),
        integer_roots_of_denominator_in_n=roots,
    )


def first_valid_row(report: StructureReport) -> int:
    """Least n from which termwise summation of the certificate is safe.

    Zero when the certificate denominator has no root at a nonnegative
    integer n, otherwise one past the largest such root.
    """
    roots = report.integer_roots_of_denominator_in_n
    return 0 if not roots else max(roots) + 1
