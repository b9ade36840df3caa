#!/usr/bin/env python3
"""A tour of the telescoping machinery.

For a(n, k) = binom(n, k)**s the solver finds the least-order operator
P(n, N) and a rational certificate R(n, k) with

    P a(n, k) = b(n, k+1) - b(n, k),    b = R a,

so summing over k shows P annihilates the row sums.  Everything below is
exact arithmetic; nothing is floating point.
"""

from fractions import Fraction

from franel import (analyze_structure, apply_operator, apery_zeta3_term,
                    binom_power_term, franel, verify_certificate, zeilberger)

for s in (1, 2, 3, 4):
    term = binom_power_term(s)
    op, cert = zeilberger(term, r_max=3)
    print(f"s = {s}: telescoping operator of order {op.order}")
    for i, c in enumerate(op.coeffs):
        print(f"   c_{i}(n) coefficients (low degree first): {list(c.coeffs)}")
    print(f"   certificate: ({cert.ratio.num!r})")
    print(f"              / ({cert.ratio.den!r})")
    print(f"   exact identity check: {verify_certificate(term, op, cert)}")

    # the operator annihilates the actual sums
    seq = [Fraction(franel(s, n)) for n in range(20)]
    residues = [apply_operator(op, seq, n) for n in range(20 - op.order)]
    print(f"   operator applied to the sums for n < 18: {set(residues)}")

    report = analyze_structure(op, cert, s)
    print(f"   coefficient degree {report.coeff_degree} "
          f"(expected {report.expected_degree}), "
          f"denominator is the rising product: {report.denominator_matches}")
    print()

# The same engine handles other terms.  The double-square term behind the
# classical zeta(3) proof telescopes to the famous three-term recurrence:
op, cert = zeilberger(apery_zeta3_term(), r_max=2)
print("binom(n,k)^2 binom(n+k,k)^2 telescopes at order", op.order)
print("coefficients:", [list(c.coeffs) for c in op.coeffs])
print("  (that is (n+1)^3, -(2n+3)(17n^2+51n+39), (n+2)^3)")
