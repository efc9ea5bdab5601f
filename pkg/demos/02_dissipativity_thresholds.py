"""Where Jordan-type blocks stop being dissipative.

A block J_n(alpha) is dissipative exactly when every eigenvalue of its
symmetrization J^T + J is nonpositive.  The symmetrization is tridiagonal,
its spectrum is known in closed form through Chebyshev zeros, and the
threshold alpha comes out as a cosine.  This script sweeps alpha across the
threshold and watches the classification flip.
"""

import numpy as np

from fttlab import (
    JordanVariant,
    UpperBidiagonal,
    check_dissipative,
    dissipativity_threshold,
    eig_sturm,
    symmetrize,
)

n = 4

for variant in JordanVariant:
    thr = dissipativity_threshold(n, variant)
    print(f"{variant.value} block, n = {n}: threshold alpha = {thr:+.15f}")
    for shift in (-0.3, -0.05, 0.0, 0.05, 0.3):
        alpha = thr + shift
        block = UpperBidiagonal(n, alpha, variant)
        report = check_dissipative(block)
        tag = "dissipative    " if report.is_dissipative else "NOT dissipative"
        print(
            f"  alpha = thr{shift:+.2f}  {tag}  max eig(J^T+J) = {report.max_eigenvalue:+.3e}"
        )
    print()

print("spectra come from the zero families, no dense solver involved:")
alpha = 0.1
tri = symmetrize(UpperBidiagonal(n, alpha))
print(f"  standard, alpha = {alpha}:")
print("   sturm bisection :", np.array2string(eig_sturm(tri), precision=12))
print("   numpy eigvalsh  :", np.array2string(np.linalg.eigvalsh(tri.to_dense()), precision=12))

print()
print("a witness vector certifies non-dissipativity:")
bad = UpperBidiagonal(3, 0.2)
report = check_dissipative(bad)
w = report.witness
energy = float(w @ (bad.to_dense() @ w))
print(f"  alpha = 0.2 (threshold {report.threshold:+.4f}): <Jw, w> = {energy:+.6f} > 0")
