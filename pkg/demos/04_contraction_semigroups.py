"""Contraction semigroups from dissipative blocks, and a genuine surprise.

exp(Qx) is a contraction for all x >= 0 exactly when Q is dissipative.  At
the threshold alpha the Jordan block sits right on the boundary: norms stay
at or below one.  Push alpha past the threshold and the semigroup escapes.

The surprise: strictness does NOT transfer backwards.  The boundary block
J_2(-1/2) has a vector where the dissipativity form vanishes, yet every
norm with x > 0 is strictly below one.  strict_contraction_check reports
that disagreement instead of hiding it.
"""

import numpy as np

from fttlab import (
    JordanVariant,
    UpperBidiagonal,
    contraction_check,
    dissipativity_threshold,
    norm_preserving_subspace,
    strict_contraction_check,
)

n = 3
thr = dissipativity_threshold(n, JordanVariant.STANDARD)
xs = np.array([0.0, 0.5, 1.0, 2.0, 5.0, 10.0])

print(f"norm curve at the threshold alpha = {thr:+.6f} (n = {n}):")
curve = contraction_check(UpperBidiagonal(n, thr).to_dense(), xs=xs)
for x, norm in zip(curve.xs, curve.norms):
    print(f"  x = {x:5.2f}   ||exp(Jx)|| = {norm:.12f}")

print()
print("pushed 0.05 past the threshold the semigroup escapes:")
curve = contraction_check(UpperBidiagonal(n, thr + 0.05).to_dense(), xs=xs)
for x, norm in zip(curve.xs, curve.norms):
    marker = "  <-- exceeds 1" if norm > 1 else ""
    print(f"  x = {x:5.2f}   ||exp(Jx)|| = {norm:.12f}{marker}")

print()
print("the strictness surprise at J_2(-1/2):")
J = np.array([[-0.5, 1.0], [0.0, -0.5]])
ones = np.array([1.0, 1.0]) / np.sqrt(2)
form = float(ones @ (J @ ones))
print(f"  the form <Jv, v> at v = (1,1)/sqrt(2) is {form:+.1e}  (vanishes)")
report = strict_contraction_check(J, xs=np.linspace(1.0, 10.0, 10))
print(f"  yet on x in [1, 10]: max norm = {report.curve.max_norm:.6f} < 1")
print(f"  form-strict {report.is_strict}, grid-strict {report.grid_strict},"
      f" agree {report.agree}")
print("  the implication 'strict form => strict contraction' is sound;")
print("  its converse fails here, and the report says so rather than raising")

print()
print("norm-preserving subspaces:")
print("  J_2(-1/2): dim =", norm_preserving_subspace(J, 1.0).dim, " (nothing survives)")
Q = np.zeros((4, 4))
Q[0, 1], Q[1, 0] = 2.0, -2.0          # rotation plane: norms preserved
Q[2, 2], Q[3, 3] = -1.0, -0.3         # strictly decaying pair
basis = norm_preserving_subspace(Q, 0.5)
print(f"  rotation+decay block: dim = {basis.dim} (the rotation plane)")
print(f"  same dimension at x = 2.0: {norm_preserving_subspace(Q, 2.0).dim}")
