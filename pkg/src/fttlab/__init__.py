"""Sharp discrete Wirtinger-type inequalities via Jordan-block dissipativity.

The package is organized around one chain of ideas:

``chebyshev``
    Chebyshev polynomials of the second kind, their zeros, and the zeros of
    the difference U_n - U_{n-1}; everything downstream reduces to these.
``tridiagonal``
    Jordan-type upper bidiagonal blocks, their symmetrizations, continuant
    determinants, a Sturm-bisection eigensolver and dissipativity checks.
``inequalities``
    The four sharp difference-energy inequalities (pinned and free right
    end, lower and upper bounds), their constants and extremal vectors.
``semigroup``
    Matrix exponentials, operator norms, contraction checks in the spirit of
    Lumer-Phillips, the generalized exponential bound, and norm-preserving
    subspaces.
``bessel``
    Partial sums of I_0(2x), the two exponential upper bounds and the
    crossover threshold x0(n) between them.
``cli``
    A deterministic command line front end (``fttlab --help``).
"""

from .bessel import ThresholdResult, bound1, bound2, i0_partial, i0_reference, threshold_x0
from .chebyshev import u_diff_eval, u_diff_zeros, u_eval, u_zeros
from .errors import ConsistencyError, ConvergenceError, NumericsError, OverflowFailure
from .inequalities import (
    CheckReport,
    InequalityKind,
    difference_energy,
    extremal_vector,
    sharp_constant,
    threshold_alpha,
    verify,
)
from .semigroup import (
    Gftt2ProbeReport,
    NormCurve,
    StrictContractionReport,
    SubspaceBasis,
    contraction_check,
    default_contraction_grid,
    exp_jordan_closed,
    expm_oracle,
    gftt2_discrepancy_probe,
    gftt2_exact_lhs,
    gftt2_toeplitz_lhs,
    gftt_check,
    gftt_lhs,
    norm_preserving_subspace,
    operator_norm,
    strict_contraction_check,
)
from .tridiagonal import (
    BlockSign,
    DissipativityReport,
    JordanVariant,
    SymTridiagonal,
    UpperBidiagonal,
    check_dissipative,
    det_recurrence,
    dissipativity_threshold,
    eig_sturm,
    eigvec_inverse_iteration,
    quad_form,
    symmetrize,
)

__version__ = "0.1.0"

__all__ = [
    "BlockSign",
    "CheckReport",
    "ConsistencyError",
    "ConvergenceError",
    "DissipativityReport",
    "Gftt2ProbeReport",
    "InequalityKind",
    "JordanVariant",
    "NormCurve",
    "NumericsError",
    "OverflowFailure",
    "StrictContractionReport",
    "SubspaceBasis",
    "SymTridiagonal",
    "ThresholdResult",
    "UpperBidiagonal",
    "bound1",
    "bound2",
    "check_dissipative",
    "contraction_check",
    "default_contraction_grid",
    "det_recurrence",
    "difference_energy",
    "dissipativity_threshold",
    "eig_sturm",
    "eigvec_inverse_iteration",
    "exp_jordan_closed",
    "expm_oracle",
    "extremal_vector",
    "gftt2_discrepancy_probe",
    "gftt2_exact_lhs",
    "gftt2_toeplitz_lhs",
    "gftt_check",
    "gftt_lhs",
    "i0_partial",
    "i0_reference",
    "norm_preserving_subspace",
    "operator_norm",
    "quad_form",
    "sharp_constant",
    "strict_contraction_check",
    "symmetrize",
    "threshold_alpha",
    "threshold_x0",
    "u_diff_eval",
    "u_diff_zeros",
    "u_eval",
    "u_zeros",
    "verify",
]
