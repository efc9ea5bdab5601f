"""The four sharp difference inequalities, live.

Each inequality compares the energy sum((a_k - a_{k-1})^2), with one or both
endpoints pinned to zero, against a trigonometric multiple of sum(a_k^2).
The constants cannot be improved: the extremal vectors below achieve
equality to machine precision, and nudging any constant breaks them.
"""

import numpy as np

from fttlab import (
    InequalityKind,
    difference_energy,
    extremal_vector,
    sharp_constant,
    threshold_alpha,
    verify,
)
from fttlab.rng import SplitMix64

n = 6

print(f"constants at n = {n}:")
for kind in InequalityKind:
    c = sharp_constant(kind, n)
    a = threshold_alpha(kind, n)
    side = "lower" if kind.is_lower else "upper"
    print(f"  {kind.value:13s}  {side} constant {c:.15f}   boundary alpha {a:+.15f}")

print()
print("random vectors keep a healthy margin:")
rng = SplitMix64(4)
a = rng.vector(n)
for kind in InequalityKind:
    report = verify(kind, a)
    directed = report.margin if kind.is_lower else -report.margin
    print(
        f"  {kind.value:13s}  energy {report.lhs:9.5f}  bound {report.rhs:9.5f}"
        f"  slack {directed:9.5f}  holds {report.holds}"
    )

print()
print("extremal vectors sit exactly on the edge:")
for kind in InequalityKind:
    v = extremal_vector(kind, n)
    report = verify(kind, v)
    print(f"  {kind.value:13s}  margin {report.margin:+.2e}   vector {np.round(v, 4)}")

print()
print("sharpness: tighten any constant by 0.1% and its extremal vector violates")
for kind in InequalityKind:
    v = extremal_vector(kind, n)
    c = sharp_constant(kind, n)
    scale = 1 + 1e-3 / c if kind.is_lower else 1 - 1e-3 / c
    report = verify(kind, v, constant_scale=scale)
    print(f"  {kind.value:13s}  tightened constant -> holds = {report.holds}")

print()
print("the energy itself, spelled out for one vector:")
a = np.array([1.0, 2.0, 1.0])
for kind in (InequalityKind.LOWER_PINNED, InequalityKind.LOWER_FREE):
    ends = "both ends pinned" if kind.pins_right_end else "right end free"
    print(f"  {ends}: energy({a}) = {difference_energy(a, kind)}")
