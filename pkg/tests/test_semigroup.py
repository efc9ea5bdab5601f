"""Exponentials, operator norms, contraction checks, and the free-end probe.

scipy.linalg.expm and numpy's SVD are the second routes for the oracle
functions; the hand-computed 2x2 modified-block exponential

    exp(J~_2(alpha) x) = e^{alpha x} [[1, 2(1 - e^{-x/2})], [0, e^{-x/2}]]

pins down the non-Toeplitz last column that the discrepancy probe measures.
"""

import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from fttlab import (
    InequalityKind,
    JordanVariant,
    UpperBidiagonal,
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
    verify,
)
from fttlab.errors import ConsistencyError, OverflowFailure
from fttlab.rng import SplitMix64
from fttlab.semigroup import NormCurve


def random_matrix(rng, n, scale=1.0):
    return scale * np.array([[rng.symmetric() for _ in range(n)] for _ in range(n)])


def shifted_dissipative(rng, n, margin):
    """Random matrix shifted so max eig(Q+Q^T) = -2*margin exactly."""
    A = random_matrix(rng, n)
    top = np.linalg.eigvalsh(A + A.T)[-1]
    return A - (0.5 * top + margin) * np.eye(n)


class TestExpmOracle:
    def test_against_scipy(self):
        rng = SplitMix64(101)
        for n in (1, 2, 4, 8):
            for _ in range(6):
                Q = random_matrix(rng, n, scale=2.0)
                x = 4.0 * rng.uniform()
                got = expm_oracle(Q, x)
                want = scipy.linalg.expm(Q * x)
                assert np.max(np.abs(got - want)) < 1e-11 * max(
                    1.0, float(np.max(np.abs(want)))
                )

    def test_zero_argument_gives_identity(self):
        Q = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert np.array_equal(expm_oracle(Q, 0.0), np.eye(2))
        assert np.array_equal(expm_oracle(np.zeros((3, 3)), 5.0), np.eye(3))

    def test_semigroup_law(self):
        rng = SplitMix64(111)
        for _ in range(10):
            Q = random_matrix(rng, 5)
            x, y = 3.0 * rng.uniform(), 3.0 * rng.uniform()
            lhs = expm_oracle(Q, x + y)
            rhs = expm_oracle(Q, x) @ expm_oracle(Q, y)
            assert np.max(np.abs(lhs - rhs)) < 1e-10 * max(
                1.0, float(np.max(np.abs(lhs)))
            )

    def test_overflow_raises(self):
        with pytest.raises(OverflowFailure):
            expm_oracle(np.diag([1000.0, 1000.0]), 1.0)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            expm_oracle(np.ones((2, 3)), 1.0)
        with pytest.raises(ValueError):
            expm_oracle(np.eye(2), math.nan)
        with pytest.raises(ValueError):
            expm_oracle(np.eye(2), 1.0, tol=0.0)


class TestJordanClosedForm:
    def test_matches_oracle(self):
        for n in (1, 2, 5, 10):
            for alpha in (-1.0, -0.3, 0.0, 0.8):
                for x in (0.0, 0.7, 4.9):
                    got = exp_jordan_closed(n, alpha, x)
                    block = UpperBidiagonal(n, alpha).to_dense()
                    want = expm_oracle(block, x)
                    assert np.max(np.abs(got - want)) < 1e-11 * max(
                        1.0, float(np.max(np.abs(want)))
                    )

    def test_matches_scipy_on_modified_blocks_via_oracle(self):
        # the modified block has no Toeplitz form; oracle vs scipy instead
        for n in (2, 3, 6):
            block = UpperBidiagonal(n, -0.4, JordanVariant.MODIFIED).to_dense()
            for x in (0.5, 2.0):
                got = expm_oracle(block, x)
                want = scipy.linalg.expm(block * x)
                assert np.max(np.abs(got - want)) < 1e-12

    def test_hand_computed_modified_2x2(self):
        for alpha in (-0.5, 0.0, 0.3):
            for x in (0.25, 1.0, 3.0):
                block = UpperBidiagonal(2, alpha, JordanVariant.MODIFIED).to_dense()
                got = expm_oracle(block, x)
                want = math.exp(alpha * x) * np.array(
                    [
                        [1.0, 2.0 * (1.0 - math.exp(-x / 2.0))],
                        [0.0, math.exp(-x / 2.0)],
                    ]
                )
                assert np.max(np.abs(got - want)) < 1e-13

    def test_overflow_raises(self):
        with pytest.raises(OverflowFailure):
            exp_jordan_closed(3, 200.0, 10.0)


class TestOperatorNorm:
    def test_against_svd(self):
        rng = SplitMix64(121)
        for n in (1, 2, 3, 7):
            for _ in range(8):
                M = random_matrix(rng, n, scale=3.0)
                want = float(np.linalg.svd(M, compute_uv=False)[0])
                assert operator_norm(M) == pytest.approx(want, rel=1e-10, abs=1e-12)

    @given(n=st.integers(1, 6), seed=st.integers(0, 2**32))
    @settings(max_examples=60, deadline=None)
    def test_property_against_svd(self, n, seed):
        M = random_matrix(SplitMix64(seed), n)
        want = float(np.linalg.svd(M, compute_uv=False)[0])
        assert operator_norm(M) == pytest.approx(want, rel=1e-9, abs=1e-11)

    def test_zero_matrix(self):
        assert operator_norm(np.zeros((4, 4))) == 0.0

    def test_restart_covers_kernel_start(self):
        # the all-ones start vector lies exactly in the kernel of M^T M
        M = np.array([[1.0, -1.0], [1.0, -1.0]])
        assert operator_norm(M) == pytest.approx(2.0, abs=1e-10)

    def test_huge_entries_do_not_overflow(self):
        M = math.exp(300) * np.array([[1.0, 1.0], [0.0, 1.0]])
        want = math.exp(300) * float(np.linalg.svd(M / math.exp(300), compute_uv=False)[0])
        assert operator_norm(M) == pytest.approx(want, rel=1e-10)


class TestContraction:
    def test_default_grid_shape(self):
        grid = default_contraction_grid()
        assert grid[0] == 0.0
        assert grid.size == 65
        assert np.all(np.diff(grid) > 0)
        assert grid[-1] == pytest.approx(10.0, abs=1e-12)

    def test_dissipative_generators_contract_everywhere(self):
        rng = SplitMix64(131)
        for _ in range(60):
            n = rng.integer(1, 6)
            Q = shifted_dissipative(rng, n, margin=0.0)
            curve = contraction_check(Q)
            assert curve.max_norm <= 1.0 + 1e-9

    def test_non_dissipative_generators_escape(self):
        rng = SplitMix64(141)
        for _ in range(60):
            n = rng.integer(2, 6)
            Q = shifted_dissipative(rng, n, margin=-0.1)  # pushed past zero
            curve = contraction_check(Q)
            assert curve.max_norm > 1.0

    def test_norm_at_zero_is_one(self):
        Q = np.array([[-1.0, 0.5], [0.0, -2.0]])
        curve = contraction_check(Q, xs=np.array([0.0, 1.0]))
        assert curve.norms[0] == pytest.approx(1.0, abs=1e-12)

    def test_grid_validation(self):
        Q = -np.eye(2)
        with pytest.raises(ValueError):
            contraction_check(Q, xs=np.array([1.0, 0.5]))
        with pytest.raises(ValueError):
            contraction_check(Q, xs=np.array([-1.0, 1.0]))
        with pytest.raises(ValueError):
            contraction_check(Q, xs=np.array([1.0, 60.0]))

    def test_norm_curve_validation(self):
        with pytest.raises(ValueError):
            NormCurve(xs=np.array([0.0, 1.0]), norms=np.array([1.0]))
        with pytest.raises(ValueError):
            NormCurve(xs=np.array([1.0, 0.5]), norms=np.array([1.0, 1.0]))
        with pytest.raises(ValueError):
            NormCurve(xs=np.array([0.0, 1.0]), norms=np.array([1.0, -0.1]))


class TestGftt:
    def test_lhs_is_propagator_image_norm(self):
        rng = SplitMix64(151)
        for n in (1, 2, 6, 12):
            a = rng.vector(n)
            for x in (0.0, 0.4, 2.5, -1.3):
                want = float(np.sum((exp_jordan_closed(n, 0.0, x) @ a) ** 2))
                assert gftt_lhs(a, x) == pytest.approx(want, rel=1e-12, abs=1e-13)

    def test_check_holds_on_seeded_samples(self):
        rng = SplitMix64(161)
        for _ in range(200):
            n = rng.integer(1, 16)
            a = rng.vector(n)
            x = 5.0 * rng.uniform()
            assert gftt_check(a, x).holds

    def test_equality_at_zero(self):
        rng = SplitMix64(171)
        for n in (1, 3, 9):
            a = rng.vector(n)
            report = gftt_check(a, 0.0)
            assert abs(report.margin) <= 1e-13 * float(a @ a)

    def test_derivative_at_zero_recovers_pinned_lower_margin(self):
        rng = SplitMix64(181)
        h = 1e-5
        for n in (1, 2, 5, 11):
            a = rng.vector(n)
            sum_sq = float(a @ a)
            cos_t = math.cos(math.pi / (n + 1))

            def gap(x):
                return math.exp(2.0 * x * cos_t) * sum_sq - gftt_lhs(a, x)

            derivative = (gap(h) - gap(-h)) / (2.0 * h)
            margin = verify(InequalityKind.LOWER_PINNED, a).margin
            assert derivative == pytest.approx(margin, abs=1e-6 * max(1.0, sum_sq))

    def test_negative_x_rejected_by_check_only(self):
        a = np.array([1.0, 2.0])
        assert gftt_lhs(a, -3.0) >= 0.0
        with pytest.raises(ValueError):
            gftt_check(a, -0.5)


class TestGftt2:
    def test_toeplitz_form_at_n1_is_pure_decay(self):
        for x in (0.0, 0.8, 4.0):
            assert gftt2_toeplitz_lhs(np.array([1.5]), x) == pytest.approx(
                math.exp(-x) * 2.25, abs=1e-14
            )

    def test_exact_route_contracts_at_free_threshold(self):
        rng = SplitMix64(191)
        for _ in range(150):
            n = rng.integer(1, 10)
            alpha = -math.cos(2.0 * math.pi / (2 * n + 1))
            a = rng.vector(n)
            x = 5.0 * rng.uniform()
            assert gftt2_exact_lhs(a, alpha, x) <= float(a @ a) * (1.0 + 1e-10)

    def test_toeplitz_form_deviates_by_hand_computed_entry(self):
        # at a = e_2, the n = 2 gap is exactly x^2 - 4(1 - e^{-x/2})^2
        a = np.array([0.0, 1.0])
        alpha = -math.cos(2.0 * math.pi / 5.0)
        for x in (0.5, 1.0, 2.0, 4.0):
            toeplitz = gftt2_toeplitz_lhs(a, x)
            exact = math.exp(-2 * alpha * x) * gftt2_exact_lhs(a, alpha, x)
            want = x * x - 4.0 * (1.0 - math.exp(-x / 2.0)) ** 2
            assert toeplitz - exact == pytest.approx(want, abs=1e-10)

    def test_probe_finds_counterexample_at_n2(self):
        report = gftt2_discrepancy_probe(2, 300, 42)
        assert report.bound_excess.value > 0.1
        assert report.exact_discrepancy.value > 0.1
        # witness actually reproduces the reported excess
        w = report.bound_excess
        bound = math.exp(
            2.0 * w.x * math.cos(2.0 * math.pi / 5.0)
        ) * float(w.a @ w.a)
        assert gftt2_toeplitz_lhs(w.a, w.x) - bound == pytest.approx(
            w.value, rel=1e-12
        )

    def test_probe_is_clean_at_n1(self):
        report = gftt2_discrepancy_probe(1, 200, 7)
        assert report.bound_excess.value == pytest.approx(0.0, abs=1e-13)
        assert report.exact_discrepancy.value <= 1e-12

    def test_probe_deterministic_and_empty(self):
        r1 = gftt2_discrepancy_probe(3, 50, 5)
        r2 = gftt2_discrepancy_probe(3, 50, 5)
        assert r1.bound_excess.value == r2.bound_excess.value
        assert r1.bound_excess.x == r2.bound_excess.x
        assert np.array_equal(r1.bound_excess.a, r2.bound_excess.a)
        empty = gftt2_discrepancy_probe(3, 0, 5)
        assert empty.bound_excess is None
        assert empty.exact_discrepancy is None

    def test_probe_validation(self):
        with pytest.raises(ValueError):
            gftt2_discrepancy_probe(0, 10, 1)
        with pytest.raises(ValueError):
            gftt2_discrepancy_probe(2, -1, 1)


class TestNormPreservingSubspace:
    def orthogonal(self, rng, n):
        Q, _ = np.linalg.qr(
            np.array([[rng.symmetric() for _ in range(n)] for _ in range(n)])
        )
        return Q

    def test_skew_plus_strict_split(self):
        rng = SplitMix64(201)
        for skew_dim, strict_dim in ((2, 3), (0, 4), (4, 0), (2, 1)):
            n = skew_dim + strict_dim
            Q0 = np.zeros((n, n))
            if skew_dim:
                for i in range(0, skew_dim - 1, 2):
                    w = 1.0 + rng.uniform()
                    Q0[i, i + 1] = w
                    Q0[i + 1, i] = -w
            if strict_dim:
                Q0[skew_dim:, skew_dim:] = -np.diag(
                    [0.5 + rng.uniform() for _ in range(strict_dim)]
                )
            O = self.orthogonal(rng, n)
            Q = O.T @ Q0 @ O
            for x in (0.5, 2.0):
                basis = norm_preserving_subspace(Q, x)
                assert basis.dim == skew_dim
                assert basis.vectors.shape == (n, skew_dim)
                if skew_dim:
                    gram = basis.vectors.T @ basis.vectors
                    assert np.max(np.abs(gram - np.eye(skew_dim))) < 1e-10

    def test_invariant_under_semigroup(self):
        rng = SplitMix64(211)
        K = np.array([[0.0, 1.7], [-1.7, 0.0]])
        Q0 = np.zeros((5, 5))
        Q0[:2, :2] = K
        Q0[2:, 2:] = -np.diag([1.0, 0.4, 2.2])
        O = self.orthogonal(rng, 5)
        Q = O.T @ Q0 @ O
        for x in (0.5, 2.0):
            basis = norm_preserving_subspace(Q, x)
            E = expm_oracle(Q, x)
            image = E @ basis.vectors
            residual = image - basis.vectors @ (basis.vectors.T @ image)
            assert np.max(np.abs(residual)) < 1e-9

    def test_boundary_jordan_block_preserves_nothing(self):
        # the form vanishes on a vector, yet no vector keeps its norm
        J = np.array([[-0.5, 1.0], [0.0, -0.5]])
        assert norm_preserving_subspace(J, 1.0).dim == 0

    def test_identity_like_kernel_dimension(self):
        basis = norm_preserving_subspace(np.diag([0.0, -1.0]), 0.5)
        assert basis.dim == 1
        assert abs(abs(basis.vectors[0, 0]) - 1.0) < 1e-12

    def test_loose_tolerance_trips_consistency_error(self):
        with pytest.raises(ConsistencyError):
            norm_preserving_subspace(np.diag([0.0, -1.0]), 0.5, tol=0.8)

    def test_rejects_non_dissipative_and_bad_x(self):
        with pytest.raises(ValueError):
            norm_preserving_subspace(np.eye(2), 1.0)
        with pytest.raises(ValueError):
            norm_preserving_subspace(-np.eye(2), 0.0)
        with pytest.raises(ValueError):
            norm_preserving_subspace(-np.eye(2), 1.0, tol=0.0)


class TestStrictContraction:
    def test_strictly_dissipative_agrees(self):
        rng = SplitMix64(221)
        for _ in range(20):
            n = rng.integer(1, 8)
            Q = shifted_dissipative(rng, n, margin=0.05)
            report = strict_contraction_check(Q)
            assert report.is_strict
            assert report.grid_strict
            assert report.agree
            assert report.sym_max_eigenvalue < -1e-6

    def test_boundary_block_agrees_on_default_grid(self):
        # near x = 0 the norm is too close to 1 for grid-strictness, so
        # both verdicts are False and they agree
        J = np.array([[-0.5, 1.0], [0.0, -0.5]])
        report = strict_contraction_check(J)
        assert not report.is_strict
        assert not report.grid_strict
        assert report.agree

    def test_boundary_block_disagrees_away_from_zero(self):
        # all norms on [1, 10] sit strictly below 1 while the form vanishes
        # at (1, 1): the converse direction genuinely fails and the report
        # records the disagreement instead of raising
        J = np.array([[-0.5, 1.0], [0.0, -0.5]])
        report = strict_contraction_check(J, xs=np.linspace(1.0, 10.0, 16))
        assert not report.is_strict
        assert report.grid_strict
        assert not report.agree
        assert report.curve.max_norm < 1.0

    def test_expanding_generator_is_not_strict(self):
        report = strict_contraction_check(np.eye(2))
        assert not report.is_strict
        assert not report.grid_strict
        assert report.agree
