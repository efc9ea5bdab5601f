"""Tour of the second-kind Chebyshev machinery.

Evaluates U_n by its recurrence, shows the trigonometric identity it encodes,
and prints the two zero families the rest of the package is built on: the
zeros of U_n and the zeros of U_n - U_{n-1}, whose extreme members become
sharp constants elsewhere.
"""

import math

import numpy as np

from fttlab import u_diff_eval, u_diff_zeros, u_eval, u_zeros

n = 5

print(f"U_{n} on a few points, recurrence vs sin((n+1)t)/sin t")
for t in (0.3, 1.0, 2.2):
    x = math.cos(t)
    via_rec = u_eval(n, x)
    via_trig = math.sin((n + 1) * t) / math.sin(t)
    print(f"  x = cos({t:.1f}) = {x:+.6f}   recurrence {via_rec:+.12f}   trig {via_trig:+.12f}")

print()
print(f"zeros of U_{n} (cosines of equally spaced angles):")
for z in u_zeros(n):
    print(f"  {z:+.15f}   U_{n}(z) = {u_eval(n, float(z)):+.2e}")

print()
print(f"zeros of U_{n} - U_{n-1} (alternating-sign cosine family):")
for z in u_diff_zeros(n):
    print(f"  {z:+.15f}   (U_{n}-U_{n-1})(z) = {u_diff_eval(n, float(z)):+.2e}")

print()
print("extremes of the difference family, which set the free-end constants:")
zs = u_diff_zeros(n)
print(f"  max = {np.max(zs):+.15f} = cos(pi/{2 * n + 1})")
print(f"  min = {np.min(zs):+.15f} = -cos(2pi/{2 * n + 1})")

print()
print("the two zero families interlace:")
plain = np.sort(u_zeros(n))
diff = np.sort(u_diff_zeros(n))
rows = ["plain ", "diff  "]
for k in range(n):
    rows[0] += f"  {plain[k]:+.4f}"
    rows[1] += f"  {diff[k]:+.4f}"
print(rows[0])
print(rows[1])
