"""Partial sums of I_0(2x): one bound that works, one that breaks, and
where the two bounds trade places.

bound1(n, x) = exp(2x cos(pi/(n+1))) dominates the n-term partial sum
everywhere.  bound2(n, x) = 1 - e^{-x} + exp(2x cos(2pi/(2n+1))) would be
sharper for large x, but it fails outright on a window at n = 2.  The
threshold x0(n) is where the two bounds cross: below it bound1 is the
better estimate, above it bound2 would be, if only it held in general.
"""

import numpy as np

from fttlab import bound1, bound2, i0_partial, i0_reference, threshold_x0

print("partial sums converge to the full series (x = 2):")
for n in (1, 2, 4, 8, 16):
    print(f"  {n:2d} terms: {i0_partial(n, 2.0):.12f}")
print(f"  full    : {i0_reference(2.0):.12f}")

print()
print("n = 2 sweep: the second bound fails on an interior window")
print(f"  {'x':>5s} {'partial':>10s} {'bound1':>10s} {'bound2':>10s}")
for x in np.linspace(0.0, 7.0, 15):
    p = i0_partial(2, float(x))
    b1 = bound1(2, float(x))
    b2 = bound2(2, float(x))
    marker = "  <-- partial exceeds bound2" if p > b2 else ""
    print(f"  {x:5.2f} {p:10.4f} {b1:10.4f} {b2:10.4f}{marker}")

print()
print("n = 1 is the degenerate case: partial sum and both bounds are all 1")
print(f"  partial {i0_partial(1, 3.0)}, bound1 {bound1(1, 3.0):.12f}, bound2 {bound2(1, 3.0):.12f}")

print()
print("crossing points x0(n) where bound2 would overtake bound1:")
print(f"  {'n':>3s} {'x0':>18s} {'sign changes':>13s} {'bracket width':>15s}")
for n in range(2, 11):
    r = threshold_x0(n)
    print(
        f"  {n:3d} {r.x0:18.12f} {r.sign_changes:13d} {r.bracket_hi - r.bracket_lo:15.2e}"
    )

print()
print("scan that stops before the crossing reports not-found instead of guessing:")
r = threshold_x0(2, search_hi=0.5)
print(f"  search_hi = 0.5: found = {r.found}, sign pattern '{r.sign_pattern}'")
