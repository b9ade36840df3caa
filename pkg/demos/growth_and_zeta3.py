#!/usr/bin/env python3
"""Growth-rate checks and the classical zeta(3) convergents.

The row sums grow like 2^(ns) / sqrt(s (pi n / 2)^(s-1)); the ratio of the
two sides tends to 1 with an O(1/n) error, which the enclosures exhibit
directly.  The second half prints the classical pair of sequences whose
ratio converges to zeta(3)/6 exponentially fast.
"""

from franel import (apery_zeta3, apery_zeta3_limit, asymptotic_ratio,
                    zeta3_reference)

print("growth-formula ratio A(n) sqrt(s (pi n/2)^(s-1)) / 2^(ns):")
for s in (1, 2, 3, 4):
    for n in (250, 500, 1000):
        r = asymptotic_ratio(s, n, precision_bits=256)
        dev = abs(r - 1)
        print(f"  s={s} n={n:5d}: ratio = {r.decimal(12)}   "
              f"|1 - ratio| = {float(dev.to_fraction()):.4e}")
    print()

print("the two solutions of the three-term recurrence")
print("(n+1)^3 u(n+1) = (2n+1)(17n^2+17n+5) u(n) - n^3 u(n-1):")
for pair in apery_zeta3(8):
    print(f"  n={pair.n}:  A = {pair.a:>10}   B = {pair.b}")
print()

ref = zeta3_reference(256)
print("convergence of 6 B(n)/A(n) to zeta(3):")
for n in (2, 5, 10, 20):
    approx = apery_zeta3_limit(n, precision_bits=256)
    diff = abs(approx - ref)
    print(f"  n={n:2d}: {approx.decimal(40)}   off by <= "
          f"{float(diff.abs_upper()):.1e}")
print(f"  ref : {ref.decimal(40)}")
