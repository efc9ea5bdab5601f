"""Jordan-type bidiagonal blocks, symmetrizations, and dissipativity.

The central objects are the n x n upper bidiagonal blocks

    J_n(alpha)      : alpha on the diagonal, ones on the superdiagonal
    J~_n(alpha)     : the same, but the last diagonal entry is alpha - 1/2

stored structurally as (n, alpha, variant) so closed forms stay exact.  Their
symmetrizations B = J^T + J are symmetric tridiagonal with constant diagonal
2 alpha (last entry 2 alpha - 1 in the modified case) and unit off-diagonal,
and everything spectral reduces to Chebyshev polynomials:

    det B_n(x)  = U_n(x)  when built at alpha = x (standard variant)
    det B~_n(x) = U_n(x) - U_{n-1}(x)              (modified variant)

A matrix A is dissipative when <Aa, a> <= 0 for every real a, equivalently
when A + A^T is negative semidefinite.  For the blocks above this reduces to
a closed-form threshold on alpha, which ``check_dissipative`` verifies
independently through a Sturm-bisection eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import solve_banded

from .errors import ConvergenceError

__all__ = [
    "JordanVariant",
    "BlockSign",
    "UpperBidiagonal",
    "SymTridiagonal",
    "DissipativityReport",
    "symmetrize",
    "det_recurrence",
    "eig_sturm",
    "eigvec_inverse_iteration",
    "quad_form",
    "dissipativity_threshold",
    "check_dissipative",
]


class JordanVariant(Enum):
    """STANDARD keeps the constant diagonal; MODIFIED lowers the last entry by 1/2."""

    STANDARD = "standard"
    MODIFIED = "modified"


class BlockSign(Enum):
    """Which signed block a dissipativity statement refers to: +J or -J."""

    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class UpperBidiagonal:
    """Structural representation of J_n(alpha) or J~_n(alpha)."""

    n: int
    alpha: float
    variant: JordanVariant = JordanVariant.STANDARD

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"block size must be a positive integer, got {self.n!r}")
        if not math.isfinite(self.alpha):
            raise ValueError(f"alpha must be finite, got {self.alpha!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "alpha", float(self.alpha))

    def diagonal(self) -> np.ndarray:
        d = np.full(self.n, self.alpha)
        if self.variant is JordanVariant.MODIFIED:
            d[-1] -= 0.5
        return d

    def to_dense(self) -> np.ndarray:
        out = np.diag(self.diagonal())
        idx = np.arange(self.n - 1)
        out[idx, idx + 1] = 1.0
        return out


@dataclass(frozen=True, eq=False)
class SymTridiagonal:
    """Symmetric tridiagonal matrix in band storage (diag, offdiag)."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self) -> None:
        diag = np.asarray(self.diag, dtype=float)
        off = np.asarray(self.offdiag, dtype=float)
        if diag.ndim != 1 or diag.size < 1:
            raise ValueError("diag must be a nonempty 1-D array")
        if off.shape != (diag.size - 1,):
            raise ValueError(f"offdiag must have length {diag.size - 1}, got {off.shape}")
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(off))):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", off)

    @property
    def n(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        out = np.diag(self.diag)
        idx = np.arange(self.n - 1)
        out[idx, idx + 1] = self.offdiag
        out[idx + 1, idx] = self.offdiag
        return out

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        if self.n > 1:
            out[:-1] += self.offdiag * v[1:]
            out[1:] += self.offdiag * v[:-1]
        return out


@dataclass(frozen=True, eq=False)
class DissipativityReport:
    """Outcome of an eigenvalue-based dissipativity check."""

    threshold: float
    is_dissipative: bool
    max_eigenvalue: float
    witness: np.ndarray


def symmetrize(block: UpperBidiagonal) -> SymTridiagonal:
    """B = J^T + J: diagonal doubles, off-diagonal is identically one."""
    return SymTridiagonal(2.0 * block.diagonal(), np.ones(block.n - 1))


def det_recurrence(tri: SymTridiagonal) -> float:
    """Continuant: b_{-1} = 0, b_0 = 1, b_k = d_k b_{k-1} - e_{k-1}^2 b_{k-2}."""
    prev, curr = 0.0, 1.0
    d = tri.diag
    e2 = tri.offdiag * tri.offdiag
    for k in range(tri.n):
        prev, curr = curr, d[k] * curr - (e2[k - 1] * prev if k > 0 else 0.0)
    return curr


def _sturm_count(diag: np.ndarray, off2: np.ndarray, lam: float, pivmin: float) -> int:
    """Number of eigenvalues strictly below lam (negative LDL^T pivots of T - lam I)."""
    count = 0
    d = diag[0] - lam
    if abs(d) < pivmin:
        d = -pivmin
    if d < 0.0:
        count += 1
    for i in range(1, diag.size):
        d = diag[i] - lam - off2[i - 1] / d
        if abs(d) < pivmin:
            d = -pivmin
        if d < 0.0:
            count += 1
    return count


def eig_sturm(tri: SymTridiagonal, tol: float = 1e-13) -> np.ndarray:
    """All eigenvalues of ``tri``, ascending, each bracketed to width <= tol.

    Bisection on the Sturm count within the Gershgorin interval.  Appropriate
    for the modest sizes used here (up to a few hundred); raises
    ``ConvergenceError`` with the offending bracket if a bisection stalls
    before reaching ``tol``.
    """
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    diag = [float(v) for v in tri.diag]
    off2 = [float(v) * float(v) for v in tri.offdiag]
    n = tri.n
    radius = [0.0] * n
    for i, e2 in enumerate(off2):
        e = math.sqrt(e2)
        radius[i] += e
        radius[i + 1] += e
    lo0 = min(d - r for d, r in zip(diag, radius)) - 1e-3
    hi0 = max(d + r for d, r in zip(diag, radius)) + 1e-3
    pivmin = max(max(off2, default=0.0), 1.0) * 1e-292
    diag_arr = np.asarray(diag)
    off2_arr = np.asarray(off2)

    out = np.empty(n)
    max_iter = 64 + int(math.ceil(math.log2(max((hi0 - lo0) / tol, 1.0))))
    for k in range(n):
        lo, hi = lo0, hi0
        it = 0
        while hi - lo > tol:
            it += 1
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break  # bracket is already at float resolution
            if _sturm_count(diag_arr, off2_arr, mid, pivmin) > k:
                hi = mid
            else:
                lo = mid
            if it > max_iter:
                raise ConvergenceError(
                    f"bisection for eigenvalue {k} stalled on bracket [{lo!r}, {hi!r}]"
                )
        out[k] = 0.5 * (lo + hi)
    return out


def eigvec_inverse_iteration(
    tri: SymTridiagonal, eigenvalue: float, tol: float = 1e-12
) -> np.ndarray:
    """Unit eigenvector for an eigenvalue known to within ``tol``.

    Inverse iteration with banded LU solves; an (almost) singular shift is
    handled by jittering the eigenvalue by ``tol``.  The result satisfies
    ``|T v - eigenvalue v| <= 10 tol``; only that residual is guaranteed,
    not any particular sign or phase.
    """
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    n = tri.n
    if n == 1:
        if abs(tri.diag[0] - eigenvalue) > 10.0 * tol:
            raise ConvergenceError(
                f"{eigenvalue!r} is not an eigenvalue of the 1x1 matrix {tri.diag[0]!r}"
            )
        return np.ones(1)

    best: np.ndarray | None = None
    best_res = math.inf
    for jitter in (0.0, tol, -tol, 100.0 * tol, -100.0 * tol):
        shift = eigenvalue + jitter
        ab = np.zeros((3, n))
        ab[0, 1:] = tri.offdiag
        ab[1, :] = tri.diag - shift
        ab[2, :-1] = tri.offdiag
        v = np.full(n, 1.0 / math.sqrt(n))
        for _ in range(6):
            try:
                w = solve_banded((1, 1), ab, v)
            except np.linalg.LinAlgError:
                break
            norm = float(np.linalg.norm(w))
            if not math.isfinite(norm) or norm == 0.0:
                break
            v = w / norm
            res = float(np.linalg.norm(tri.matvec(v) - eigenvalue * v))
            if res < best_res:
                best, best_res = v.copy(), res
            if res <= 10.0 * tol:
                return v
    raise ConvergenceError(
        f"inverse iteration residual {best_res!r} exceeds {10.0 * tol!r} "
        f"for shift {eigenvalue!r}"
    )


def quad_form(block: UpperBidiagonal, a: np.ndarray) -> float:
    """<J a, a> by the scalar formula, never by a dense product.

    Standard: alpha sum a_k^2 + sum_{k=2}^n a_k a_{k-1}; the modified variant
    subtracts a_n^2 / 2.
    """
    a = np.asarray(a, dtype=float)
    if a.shape != (block.n,):
        raise ValueError(f"vector of shape {a.shape} does not match block size {block.n}")
    if not np.all(np.isfinite(a)):
        raise ValueError("vector entries must be finite")
    out = block.alpha * float(a @ a)
    if block.n > 1:
        out += float(a[1:] @ a[:-1])
    if block.variant is JordanVariant.MODIFIED:
        out -= 0.5 * float(a[-1]) ** 2
    return out


def dissipativity_threshold(
    n: int, variant: JordanVariant, sign: BlockSign = BlockSign.PLUS
) -> float:
    """Boundary alpha for dissipativity of +J (PLUS) or -J (MINUS).

    +J_n(alpha) is dissipative iff alpha <= -cos(pi/(n+1)); -J_n(alpha) iff
    alpha >= +cos(pi/(n+1)).  The modified block replaces these by
    -cos(2 pi/(2n+1)) and +cos(pi/(2n+1)); all four are largest/smallest
    zeros of the matching Chebyshev characteristic polynomial.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ValueError(f"block size must be a positive integer, got {n!r}")
    if variant is JordanVariant.STANDARD:
        boundary = math.cos(math.pi / (n + 1))
    else:
        boundary = -math.cos(2.0 * math.pi / (2 * n + 1)) if sign is BlockSign.PLUS \
            else math.cos(math.pi / (2 * n + 1))
        return boundary
    return -boundary if sign is BlockSign.PLUS else boundary


def check_dissipative(block: UpperBidiagonal, tol: float = 1e-10) -> DissipativityReport:
    """Decide dissipativity of the block from the spectrum of J^T + J.

    The block is dissipative iff the largest eigenvalue of its symmetrization
    is <= tol.  The witness is a unit eigenvector at that eigenvalue; its
    quadratic form equals max_eigenvalue / 2 up to the eigensolver residual.
    """
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    sym = symmetrize(block)
    eig_tol = min(1e-13, tol * 1e-2)
    eigenvalues = eig_sturm(sym, tol=eig_tol)
    mu = float(eigenvalues[-1])
    witness = eigvec_inverse_iteration(sym, mu, tol=eig_tol)
    return DissipativityReport(
        threshold=dissipativity_threshold(block.n, block.variant, BlockSign.PLUS),
        is_dissipative=mu <= tol,
        max_eigenvalue=mu,
        witness=witness,
    )
