"""Partial sums of the modified Bessel function I_0(2x) and their bounds.

I_0(2x) = sum_{j>=0} x^{2j} / (j!)^2.  Writing s_n(x) for the partial sum
through j = n - 1, two candidate upper bounds are tracked:

    bound1(n, x) = exp(2 x cos(pi/(n+1)))
    bound2(n, x) = 1 - e^{-x} + exp(2 x cos(2 pi/(2n+1)))

The first dominates s_n on x >= 0 for every n.  The second does NOT: at
n = 2 there is a window of x where s_2 exceeds it (s_2(2) = 5 against
bound2 about 4.307).  bound2 is implemented exactly as written and nothing
in this module claims it holds; it is kept to be measured.

``threshold_x0`` compares the two bounds against each other.  Their gap
g_n(x) = bound2(n, x) - bound1(n, x) vanishes at x = 0 and grows linearly
with positive slope 1 + 2cos(2 pi/(2n+1)) - 2cos(pi/(n+1)), so bound2
starts out as the larger bound; for large x the strictly smaller
exponential rate in bound2 makes it the sharper one, and x0(n) is the
crossing point.  The gap has exactly one sign change on [1e-3, 100] for
moderate n >= 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, OverflowFailure

__all__ = [
    "ThresholdResult",
    "i0_partial",
    "i0_reference",
    "bound1",
    "bound2",
    "threshold_x0",
]


def _check_order(n: int, minimum: int = 1) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ValueError(f"term count must be an integer, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"term count must be at least {minimum}, got {n}")
    return int(n)


def _check_x(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise ValueError(f"argument must be finite and nonnegative, got {x!r}")
    return x


def i0_partial(n: int, x: float) -> float:
    """First n terms of I_0(2x): sum_{j=0}^{n-1} x^{2j} / (j!)^2.

    Terms accumulate by the ratio t_j = t_{j-1} (x/j)^2, which avoids
    forming x^{2j} and (j!)^2 separately.  Overflow of the sum raises
    ``OverflowFailure``; for n <= 16 that needs x beyond roughly 1e20.
    """
    n = _check_order(n)
    x = _check_x(x)
    term = 1.0
    total = 1.0
    for j in range(1, n):
        term *= (x * x) / (j * j)
        total += term
    if not math.isfinite(total):
        raise OverflowFailure(f"partial sum overflowed at n={n}, x={x!r}")
    return total


def i0_reference(x: float, tol: float = 1e-16) -> float:
    """I_0(2x) summed to relative tolerance ``tol`` (series converges for all x)."""
    x = _check_x(x)
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    term = 1.0
    total = 1.0
    for j in range(1, 4000):
        term *= (x * x) / (j * j)
        total += term
        if not math.isfinite(total):
            raise OverflowFailure(f"series overflowed at x={x!r}")
        if term <= tol * total:
            return total
    raise ConvergenceError(f"series did not reach tol={tol!r} at x={x!r}")


def bound1(n: int, x: float) -> float:
    """exp(2 x cos(pi/(n+1))); dominates i0_partial(n, .) on x >= 0."""
    n = _check_order(n)
    x = _check_x(x)
    value = 2.0 * x * math.cos(math.pi / (n + 1))
    if value >= 709.0:
        raise OverflowFailure(f"exponent {value!r} overflows double precision")
    return math.exp(value)


def bound2(n: int, x: float) -> float:
    """1 - e^{-x} + exp(2 x cos(2 pi/(2n+1))), exactly as the sharper
    free-end constant would suggest.

    This candidate FAILS for n = 2 on an interior window of x; see
    ``threshold_x0``.  It is provided to be measured, not trusted.
    """
    n = _check_order(n)
    x = _check_x(x)
    value = 2.0 * x * math.cos(2.0 * math.pi / (2 * n + 1))
    if value >= 709.0:
        raise OverflowFailure(f"exponent {value!r} overflows double precision")
    return 1.0 - math.exp(-x) + math.exp(value)


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of the sign-change scan for g_n(x) = bound2(n, x) - bound1(n, x).

    ``found`` is False when no sign change was seen in the scan range, in
    which case x0 and the bracket are NaN.  ``sign_changes`` counts scan
    intervals whose endpoints have opposite signs; ``sign_pattern`` is the
    run-length-compressed sequence of signs over the scan grid.
    """

    n: int
    found: bool
    x0: float
    bracket_lo: float
    bracket_hi: float
    sign_changes: int
    sign_pattern: str
    iterations: int


def threshold_x0(
    n: int,
    tol: float = 1e-12,
    search_hi: float = 100.0,
    scan_points: int = 512,
) -> ThresholdResult:
    """Locate the first zero crossing of bound2(n, .) - bound1(n, .).

    A geometric scan over [1e-3, search_hi] finds sign changes, then
    bisection refines the first one to absolute width ``tol``.  n = 1 is
    rejected: there cos(pi/2) = 0 and cos(2 pi/3) = -1/2 make both bounds
    identically 1, the gap vanishes everywhere, and no crossing exists.
    """
    n = _check_order(n, minimum=2)
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    if not (math.isfinite(search_hi) and search_hi > 1e-3):
        raise ValueError(f"search_hi must exceed the scan floor 1e-3, got {search_hi!r}")
    if scan_points < 2:
        raise ValueError(f"scan_points must be at least 2, got {scan_points!r}")

    def gap(x: float) -> float:
        return bound2(n, x) - bound1(n, x)

    ratio = (search_hi / 1e-3) ** (1.0 / (scan_points - 1))
    xs = [1e-3 * ratio ** k for k in range(scan_points)]
    xs[-1] = search_hi
    values = [gap(x) for x in xs]

    signs = [1 if v > 0 else (-1 if v < 0 else 0) for v in values]
    pattern_parts: list[str] = []
    for s in signs:
        mark = {1: "+", -1: "-", 0: "0"}[s]
        if not pattern_parts or pattern_parts[-1] != mark:
            pattern_parts.append(mark)
    pattern = "".join(pattern_parts)

    changes = 0
    first: tuple[float, float] | None = None
    for k in range(scan_points - 1):
        if signs[k] != 0 and signs[k + 1] != 0 and signs[k] != signs[k + 1]:
            changes += 1
            if first is None:
                first = (xs[k], xs[k + 1])

    if first is None:
        nan = math.nan
        return ThresholdResult(
            n=n, found=False, x0=nan, bracket_lo=nan, bracket_hi=nan,
            sign_changes=changes, sign_pattern=pattern, iterations=0,
        )

    lo, hi = first
    flo = gap(lo)
    iterations = 0
    while hi - lo > tol:
        iterations += 1
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # hit float resolution before the requested width
        fmid = gap(mid)
        if fmid == 0.0:
            lo = hi = mid
            break
        if (flo > 0) == (fmid > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if iterations > 200:
            raise ConvergenceError(f"bisection failed to reach width {tol!r}")
    return ThresholdResult(
        n=n, found=True, x0=0.5 * (lo + hi), bracket_lo=lo, bracket_hi=hi,
        sign_changes=changes, sign_pattern=pattern, iterations=iterations,
    )
