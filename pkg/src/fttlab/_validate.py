"""Input validation helpers shared by the numerical modules."""

from __future__ import annotations

import numpy as np


def as_vector(a) -> np.ndarray:
    """Coerce to a finite 1-D float array with at least one entry."""
    out = np.asarray(a, dtype=float)
    if out.ndim != 1 or out.size < 1:
        raise ValueError(f"expected a nonempty 1-D real vector, got shape {out.shape}")
    if not np.all(np.isfinite(out)):
        raise ValueError("vector entries must be finite")
    return out


def as_square_matrix(m) -> np.ndarray:
    """Coerce to a finite 2-D square float array."""
    out = np.asarray(m, dtype=float)
    if out.ndim != 2 or out.shape[0] != out.shape[1] or out.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {out.shape}")
    if not np.all(np.isfinite(out)):
        raise ValueError("matrix entries must be finite")
    return out
