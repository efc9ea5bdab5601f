"""Contraction semigroups generated by dissipative matrices.

A matrix semigroup x -> exp(Qx) is a contraction (operator norm <= 1 for all
x >= 0) exactly when Q is dissipative; this module provides both routes to
that statement and keeps them strictly separate so they can check each other:

* ``expm_oracle``      - scaling-and-squaring Taylor exponential, the oracle
* ``exp_jordan_closed``- the closed form for bidiagonal Jordan-type blocks
* ``operator_norm``    - deterministic power iteration on M^T M
* ``contraction_check``- norm curve of exp(Qx) over a grid

On top sit the generalized sharp bound for the standard block,

    sum_{j=0}^{n-1} ( sum_{k=0}^{j} x^k/k! a_{n-j+k} )^2
        <= exp(2 x cos(pi/(n+1))) sum_j a_j^2,

whose left side is exactly ||exp(J_n(0) x) a||^2, and the free-end analogue.
For the free-end (modified) block only the exact semigroup quantity
``gftt2_exact_lhs`` obeys the corresponding bound; the tempting closed form
``gftt2_toeplitz_lhs`` built from the same x^k/k! coefficients plus an
e^{-x} tail term differs from the exact quantity for n >= 2 (the exponential
of the modified block is not Toeplitz: its last column holds terms like
2(1 - e^{-x/2}) where the polynomial form would put x).  The discrepancy
probe measures both that gap and whether the polynomial form even stays
below the bound; it is evidence-gathering, not an assertion.

``norm_preserving_subspace`` computes the subspace on which exp(Qx) acts as
an isometry, the kernel of I - exp(Q^T x) exp(Qx); for dissipative Q its
dimension does not depend on x > 0 and it is invariant under the semigroup.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._validate import as_square_matrix, as_vector
from .errors import ConsistencyError, ConvergenceError, OverflowFailure
from .inequalities import CheckReport
from .rng import SplitMix64
from .tridiagonal import JordanVariant, UpperBidiagonal

__all__ = [
    "NormCurve",
    "SubspaceBasis",
    "StrictContractionReport",
    "Gftt2ProbeReport",
    "ProbeWitness",
    "expm_oracle",
    "exp_jordan_closed",
    "operator_norm",
    "default_contraction_grid",
    "contraction_check",
    "gftt_lhs",
    "gftt_check",
    "gftt2_toeplitz_lhs",
    "gftt2_exact_lhs",
    "gftt2_discrepancy_probe",
    "norm_preserving_subspace",
    "strict_contraction_check",
]

_RESTART_SEED = 0x5EED1E55  # fixed pseudorandom restart for the power iteration


def _check_finite_scalar(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


def expm_oracle(Q, x: float, tol: float = 1e-18) -> np.ndarray:
    """exp(Qx) by scaling and squaring around a truncated Taylor core.

    The argument is halved until its 1-norm is at most 0.5, the series is
    summed until the additive term drops below ``tol``, and the result is
    squared back up.  Intermediate overflow raises ``OverflowFailure``.
    """
    Q = as_square_matrix(Q)
    x = _check_finite_scalar("x", x)
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    A = Q * x
    anorm = float(np.linalg.norm(A, 1))
    squarings = 0 if anorm <= 0.5 else int(math.ceil(math.log2(anorm / 0.5)))
    if squarings > 64:
        raise OverflowFailure(f"argument norm {anorm!r} is out of range")
    A = A / (2.0 ** squarings)

    n = A.shape[0]
    result = np.eye(n)
    term = np.eye(n)
    for k in range(1, 64):
        term = term @ A / k
        result = result + term
        if float(np.max(np.abs(term))) < tol:
            break
    else:
        raise ConvergenceError("Taylor series for the scaled exponential did not settle")

    # overflow here is an expected, checked outcome, not a warning
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(squarings):
            result = result @ result
    if not np.all(np.isfinite(result)):
        raise OverflowFailure("matrix exponential overflowed double precision")
    return result


def _taylor_coefficients(n: int, x: float) -> np.ndarray:
    """x^k / k! for k = 0..n-1, by stable ratio accumulation."""
    coeff = np.empty(n)
    coeff[0] = 1.0
    for k in range(1, n):
        coeff[k] = coeff[k - 1] * x / k
    return coeff


def exp_jordan_closed(n: int, alpha: float, x: float) -> np.ndarray:
    """Closed form of exp(J_n(alpha) x): e^{alpha x} times Toeplitz x^k/k!.

    Only the standard variant has this form; the modified block's last
    column is not polynomial in x, which is why the oracle exists.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ValueError(f"block size must be a positive integer, got {n!r}")
    alpha = _check_finite_scalar("alpha", alpha)
    x = _check_finite_scalar("x", x)
    scale = math.exp(alpha * x) if alpha * x < 709.0 else math.inf
    if not math.isfinite(scale):
        raise OverflowFailure(f"e^(alpha x) overflows for alpha*x = {alpha * x!r}")
    coeff = _taylor_coefficients(int(n), x)
    out = np.zeros((n, n))
    for k in range(n):
        out += np.diag(np.full(n - k, coeff[k]), k)
    return scale * out


def operator_norm(M, tol: float = 1e-12, max_iter: int = 20000) -> float:
    """Largest singular value via power iteration on M^T M.

    Deterministic: the start vector is all ones, and a single restart with a
    fixed pseudorandom vector is attempted if convergence stalls.  The
    estimate is accepted once two consecutive relative changes fall below
    ``tol``; exhausting both budgets raises ``ConvergenceError`` carrying the
    last estimates.
    """
    M = as_square_matrix(M)
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    largest = float(np.max(np.abs(M)))
    if largest == 0.0:
        return 0.0
    # power-of-two rescale: keeps M^T M v finite for huge entries, exactly
    scale = 2.0 ** math.frexp(largest)[1]
    M = M / scale
    n = M.shape[0]

    def run(v: np.ndarray, budget: int) -> tuple[float | None, float]:
        v = v / float(np.linalg.norm(v))
        sigma_prev = -1.0
        settled = 0
        for _ in range(budget):
            w = M @ v
            sigma = float(np.linalg.norm(w))
            g = M.T @ w
            gn = float(np.linalg.norm(g))
            if gn == 0.0:
                return None, sigma  # landed in the kernel of M^T M; restart
            v = g / gn
            if abs(sigma - sigma_prev) <= tol * max(sigma, 1e-300):
                settled += 1
                if settled >= 2:
                    return sigma, sigma
            else:
                settled = 0
            sigma_prev = sigma
        return None, sigma_prev

    def finish(sigma: float) -> float:
        value = sigma * scale
        if not math.isfinite(value):
            raise OverflowFailure(f"operator norm overflows double precision ({sigma!r} * {scale!r})")
        return value

    result, last = run(np.ones(n), max_iter // 2)
    if result is not None:
        return finish(result)
    restart = SplitMix64(_RESTART_SEED).vector(n)
    result, last2 = run(restart, max_iter // 2)
    if result is not None:
        return finish(result)
    raise ConvergenceError(
        f"power iteration stalled; last estimates {last!r} and {last2!r}"
    )


def default_contraction_grid() -> np.ndarray:
    """x = 0 plus 64 log-spaced points on (0, 10]."""
    return np.concatenate(([0.0], np.geomspace(0.01, 10.0, 64)))


@dataclass(frozen=True, eq=False)
class NormCurve:
    """Operator norms of exp(Qx) along a grid of x values."""

    xs: np.ndarray
    norms: np.ndarray

    def __post_init__(self) -> None:
        xs = np.asarray(self.xs, dtype=float)
        norms = np.asarray(self.norms, dtype=float)
        if xs.ndim != 1 or xs.shape != norms.shape:
            raise ValueError("xs and norms must be 1-D arrays of equal length")
        if xs.size > 1 and not np.all(np.diff(xs) > 0):
            raise ValueError("xs must be strictly increasing")
        if not np.all(norms >= 0.0):
            raise ValueError("norms must be nonnegative")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "norms", norms)

    @property
    def max_norm(self) -> float:
        return float(np.max(self.norms))


def _validate_grid(xs, allow_zero: bool) -> np.ndarray:
    if xs is None:
        grid = default_contraction_grid()
        return grid if allow_zero else grid[1:]
    grid = np.asarray(xs, dtype=float)
    if grid.ndim != 1 or grid.size < 1:
        raise ValueError("grid must be a nonempty 1-D array")
    if not np.all(np.isfinite(grid)):
        raise ValueError("grid values must be finite")
    lo = 0.0 if allow_zero else np.nextafter(0.0, 1.0)
    if np.min(grid) < lo or np.max(grid) > 50.0:
        bound = "[0, 50]" if allow_zero else "(0, 50]"
        raise ValueError(f"grid values must lie in {bound}")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("grid must be strictly increasing")
    return grid


def contraction_check(Q, xs=None, tol: float = 1e-10) -> NormCurve:
    """Norms of exp(Qx) along the grid; the caller compares against 1 + tol."""
    Q = as_square_matrix(Q)
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    grid = _validate_grid(xs, allow_zero=True)
    norm_tol = min(1e-12, tol / 10.0)
    norms = np.array([operator_norm(expm_oracle(Q, x), tol=norm_tol) for x in grid])
    return NormCurve(xs=grid, norms=norms)


def gftt_lhs(a, x: float) -> float:
    """sum_j ( sum_{k<=j} x^k/k! a_{n-j+k} )^2, the squared norm of the
    unit-diagonal Jordan propagator applied to a.

    Polynomial in x, hence evaluated for any finite x; the sharp bound it
    enters is claimed for x >= 0 only.
    """
    a = as_vector(a)
    x = _check_finite_scalar("x", x)
    n = a.size
    coeff = _taylor_coefficients(n, x)
    total = 0.0
    for j in range(n):
        inner = float(coeff[: j + 1] @ a[n - 1 - j:])
        total += inner * inner
    return total


def gftt_check(a, x: float, tol: float = 1e-10) -> CheckReport:
    """Check gftt_lhs(a, x) <= exp(2 x cos(pi/(n+1))) sum a_j^2."""
    a = as_vector(a)
    x = _check_finite_scalar("x", x)
    if x < 0.0:
        raise ValueError(f"the bound is claimed for x >= 0 only, got {x!r}")
    if not (tol >= 0.0):
        raise ValueError(f"tol must be nonnegative, got {tol!r}")
    lhs = gftt_lhs(a, x)
    rhs = math.exp(2.0 * x * math.cos(math.pi / (a.size + 1))) * float(a @ a)
    margin = lhs - rhs
    return CheckReport(lhs=lhs, rhs=rhs, margin=margin, holds=margin <= tol)


def gftt2_toeplitz_lhs(a, x: float) -> float:
    """Free-end analogue of ``gftt_lhs`` built from the same Toeplitz
    coefficients, with the last-coordinate term replaced by e^{-x} a_n^2.

    This is a *hypothesized* closed form: it is NOT the exact semigroup
    quantity for n >= 2 (see ``gftt2_discrepancy_probe``), and the bound it
    suggests fails for n = 2.  Kept because measuring that failure is part
    of this package's job.
    """
    a = as_vector(a)
    x = _check_finite_scalar("x", x)
    n = a.size
    coeff = _taylor_coefficients(n, x)
    total = math.exp(-x) * float(a[-1]) ** 2
    for j in range(1, n):
        inner = float(coeff[: j + 1] @ a[n - 1 - j:])
        total += inner * inner
    return total


def gftt2_exact_lhs(a, alpha: float, x: float, tol: float = 1e-18) -> float:
    """||exp(J~_n(alpha) x) a||^2 through the exponential oracle."""
    a = as_vector(a)
    alpha = _check_finite_scalar("alpha", alpha)
    x = _check_finite_scalar("x", x)
    block = UpperBidiagonal(a.size, alpha, JordanVariant.MODIFIED)
    image = expm_oracle(block.to_dense(), x, tol=tol) @ a
    return float(image @ image)


@dataclass(frozen=True, eq=False)
class ProbeWitness:
    """An extremum found by the probe together with the sample attaining it."""

    value: float
    a: np.ndarray
    x: float


@dataclass(frozen=True, eq=False)
class Gftt2ProbeReport:
    """Evidence about the hypothesized free-end closed form at one n.

    ``bound_excess``       max of (toeplitz form - claimed bound); a positive
                           value is a counterexample to the hypothesized bound.
    ``exact_discrepancy``  max of |toeplitz form - exact semigroup quantity|
                           (exact rescaled by e^{-2 alpha x}); zero only for n=1.
    """

    n: int
    samples: int
    seed: int
    alpha: float
    bound_excess: ProbeWitness | None
    exact_discrepancy: ProbeWitness | None


def gftt2_discrepancy_probe(n: int, samples: int, seed: int) -> Gftt2ProbeReport:
    """Sample the gap between the hypothesized closed form and reality.

    Draws ``samples`` pairs (a, x) with entries uniform on [-1, 1) and x
    uniform on [0, 5), reproducibly from the given seed.  Exit semantics are
    the caller's business: the probe only reports extrema, it never asserts.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    if not isinstance(samples, (int, np.integer)) or isinstance(samples, bool) or samples < 0:
        raise ValueError(f"sample count must be a nonnegative integer, got {samples!r}")
    alpha = -math.cos(2.0 * math.pi / (2 * n + 1))
    rng = SplitMix64(seed)
    excess: ProbeWitness | None = None
    discrepancy: ProbeWitness | None = None
    for _ in range(samples):
        a = rng.vector(n)
        x = 5.0 * rng.uniform()
        toeplitz = gftt2_toeplitz_lhs(a, x)
        bound = math.exp(2.0 * x * math.cos(2.0 * math.pi / (2 * n + 1))) * float(a @ a)
        exact = math.exp(-2.0 * alpha * x) * gftt2_exact_lhs(a, alpha, x)
        e_val = toeplitz - bound
        d_val = abs(toeplitz - exact)
        if excess is None or e_val > excess.value:
            excess = ProbeWitness(value=e_val, a=a, x=x)
        if discrepancy is None or d_val > discrepancy.value:
            discrepancy = ProbeWitness(value=d_val, a=a, x=x)
    return Gftt2ProbeReport(
        n=int(n), samples=int(samples), seed=int(seed), alpha=alpha,
        bound_excess=excess, exact_discrepancy=discrepancy,
    )


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Orthonormal basis, one column per basis vector (may be empty)."""

    vectors: np.ndarray
    dim: int


def norm_preserving_subspace(Q, x: float, tol: float = 1e-8) -> SubspaceBasis:
    """Basis of the subspace on which exp(Qx) preserves the norm.

    Computed as the kernel of the symmetric Gram defect
    I - exp(Q^T x) exp(Qx): eigenvectors whose eigenvalue is within ``tol``
    of zero.  For dissipative Q the dimension is independent of x > 0, which
    is re-verified at 2x; a mismatch raises ``ConsistencyError`` (tol too
    loose, or Q not actually dissipative).
    """
    Q = as_square_matrix(Q)
    x = _check_finite_scalar("x", x)
    if not (x > 0.0):
        raise ValueError(f"x must be positive, got {x!r}")
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    sym_max = float(np.linalg.eigvalsh(Q + Q.T)[-1])
    if sym_max > tol:
        raise ValueError(
            f"generator is not dissipative within tol: max eig(Q+Q^T) = {sym_max!r}"
        )
    n = Q.shape[0]

    def kernel(at: float) -> np.ndarray:
        propagator = expm_oracle(Q, at)
        defect = np.eye(n) - propagator.T @ propagator
        defect = 0.5 * (defect + defect.T)
        eigenvalues, eigenvectors = np.linalg.eigh(defect)
        return eigenvectors[:, np.abs(eigenvalues) <= tol]

    basis = kernel(x)
    check = kernel(2.0 * x)
    if basis.shape[1] != check.shape[1]:
        raise ConsistencyError(
            f"norm-preserving dimension differs between x={x!r} ({basis.shape[1]}) "
            f"and 2x ({check.shape[1]}); tol too loose or Q not dissipative"
        )
    return SubspaceBasis(vectors=basis, dim=basis.shape[1])


@dataclass(frozen=True, eq=False)
class StrictContractionReport:
    """Strict-dissipativity classification with norm-grid evidence.

    ``is_strict`` is the quadratic-form verdict (max eig(Q+Q^T) < -tol).
    ``grid_strict`` records whether every sampled norm sits below 1 - tol.
    The form verdict implies strict contraction for every x > 0, and that
    sound direction is enforced; the converse can genuinely fail (a boundary
    block has all norms strictly below one while its form vanishes on some
    vector), so ``agree`` is reported rather than asserted.
    """

    is_strict: bool
    sym_max_eigenvalue: float
    curve: NormCurve
    grid_strict: bool
    agree: bool


def strict_contraction_check(Q, xs=None, tol: float = 1e-6) -> StrictContractionReport:
    """Classify strict dissipativity and gather norm-grid evidence.

    Raises ``ConsistencyError`` only when the classification is violated in
    the provable direction: a strictly negative form with some grid norm at
    or above 1 + tol.
    """
    Q = as_square_matrix(Q)
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    grid = _validate_grid(xs, allow_zero=False)
    sym_max = float(np.linalg.eigvalsh(Q + Q.T)[-1])
    form_strict = sym_max < -tol
    norms = np.array([operator_norm(expm_oracle(Q, x), tol=1e-12) for x in grid])
    curve = NormCurve(xs=grid, norms=norms)
    if form_strict and curve.max_norm >= 1.0 + tol:
        raise ConsistencyError(
            f"strictly dissipative generator produced norm {curve.max_norm!r} >= 1"
        )
    grid_strict = bool(np.all(norms < 1.0 - tol))
    return StrictContractionReport(
        is_strict=form_strict,
        sym_max_eigenvalue=sym_max,
        curve=curve,
        grid_strict=grid_strict,
        agree=form_strict == grid_strict,
    )
