"""Unit and property tests for frame systems over the induced space."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from nframe import (
    AnchorSet,
    DimensionMismatchError,
    FrameSystem,
    GenConfig,
    SingularFrameOperatorError,
    analysis,
    build_induced_space,
    canonical_dual,
    canonical_tight,
    frame_operator,
    gen_anchor_set,
    gen_frame,
    gen_vector,
    induced_inner,
    is_bessel,
    is_frame,
    is_tight,
    optimal_bounds,
    project,
    reconstruct,
    synthesis,
)

E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])


@pytest.fixture
def mb():
    """The regression fixture: {e1, e2, (1,1,0)} with anchor e3."""
    space = build_induced_space(AnchorSet([E3]))
    return FrameSystem(space=space, vectors=np.array([E1, E2, [1.0, 1.0, 0.0]]))


@pytest.fixture
def ortho():
    space = build_induced_space(AnchorSet([E3]))
    return FrameSystem(space=space, vectors=np.array([E1, E2]))


@pytest.fixture
def scaled_anchor():
    """Orthonormal pair with anchor (0,0,2): gamma = 4."""
    space = build_induced_space(AnchorSet([[0.0, 0.0, 2.0]]))
    return FrameSystem(space=space, vectors=np.array([E1, E2]))


def random_frame(cfg, index, d=None, n=None, m=None, rng=None):
    rng = rng or np.random.default_rng(index)
    n = n or int(rng.integers(2, 5))
    d = d or int(rng.integers(n, 7))
    anchors = gen_anchor_set(cfg, d, n, index=index)
    space = build_induced_space(anchors)
    m = m or int(rng.integers(space.k, space.k + 6))
    return gen_frame(cfg, space, m, index=index)


class TestAnalysisSynthesis:
    def test_analysis_values(self, mb):
        assert_allclose(analysis(E1, mb), [1.0, 0.0, 1.0], atol=1e-15)

    def test_analysis_kills_anchor_span(self, mb):
        assert_allclose(analysis(E3, mb), [0.0, 0.0, 0.0], atol=1e-15)

    def test_analysis_gamma_scaling(self, scaled_anchor):
        assert_allclose(analysis(E1, scaled_anchor), [4.0, 0.0], atol=1e-15)

    def test_synthesis_single_and_zero(self, mb):
        assert_allclose(synthesis([1.0, 0.0, 0.0], mb), [1.0, 0.0], atol=1e-15)
        assert_allclose(synthesis([0.0, 0.0, 0.0], mb), [0.0, 0.0], atol=1e-15)

    def test_synthesis_cancellation(self, mb):
        assert_allclose(synthesis([1.0, 1.0, -1.0], mb), [0.0, 0.0], atol=1e-15)

    def test_synthesis_length_mismatch(self, mb):
        with pytest.raises(DimensionMismatchError):
            synthesis([1.0, 2.0], mb)

    def test_synthesis_norm_bounded_by_sqrt_upper(self):
        cfg = GenConfig(seed=31)
        for i in range(50):
            fs = random_frame(cfg, i)
            b = optimal_bounds(fs)
            # operator norm of synthesis into the induced space
            sv = np.linalg.svd(fs.phi, compute_uv=False)
            norm = np.sqrt(fs.gamma) * float(sv[0])
            assert norm <= np.sqrt(b.upper) + 1e-9 * max(1.0, np.sqrt(b.upper))


class TestFrameOperator:
    def test_mb_matrix(self, mb):
        assert_allclose(frame_operator(mb).matrix, [[2.0, 1.0], [1.0, 2.0]], atol=1e-15)

    def test_orthonormal_identity(self, ortho):
        assert_allclose(frame_operator(ortho).matrix, np.eye(2), atol=1e-15)

    def test_gamma_scaling(self, scaled_anchor):
        assert_allclose(frame_operator(scaled_anchor).matrix, 4.0 * np.eye(2), atol=1e-15)

    def test_quadratic_form_identity(self):
        cfg = GenConfig(seed=32)
        for i in range(50):
            fs = random_frame(cfg, i)
            f = gen_vector(cfg, fs.space.dimension, index=1000 + i)
            u = project(f, fs.space)
            coeffs = analysis(f, fs)
            lhs = induced_inner(frame_operator(fs).matrix @ u, u, fs.space)
            rhs = float(coeffs @ coeffs)
            assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


class TestBoundsAndPredicates:
    def test_mb_bounds(self, mb):
        b = optimal_bounds(mb)
        assert b.lower == pytest.approx(1.0, abs=1e-12)
        assert b.upper == pytest.approx(3.0, abs=1e-12)
        assert b.optimal

    def test_orthonormal_tight_bounds(self, ortho):
        b = optimal_bounds(ortho)
        assert (b.lower, b.upper) == (pytest.approx(1.0), pytest.approx(1.0))

    def test_deficient_family(self):
        space = build_induced_space(AnchorSet([E3]))
        fs = FrameSystem(space=space, vectors=E1.reshape(1, 3))
        b = optimal_bounds(fs)
        assert b.lower == pytest.approx(0.0, abs=1e-12)
        assert b.upper == pytest.approx(1.0, abs=1e-12)
        assert not is_frame(fs)

    def test_anchored_family_is_not_frame(self):
        space = build_induced_space(AnchorSet([E3]))
        fs = FrameSystem(space=space, vectors=E3.reshape(1, 3))
        assert not is_frame(fs)
        # but it is Bessel for any positive bound: the operator is zero
        assert is_bessel(fs, 1e-6)

    def test_mb_is_frame(self, mb):
        assert is_frame(mb)

    def test_bessel_threshold(self, mb):
        assert is_bessel(mb, 3.0)
        assert not is_bessel(mb, 2.9)

    def test_frame_inequality_random(self):
        cfg = GenConfig(seed=33)
        for i in range(100):
            fs = random_frame(cfg, i)
            b = optimal_bounds(fs)
            f = gen_vector(cfg, fs.space.dimension, index=2000 + i)
            coeffs = analysis(f, fs)
            total = float(coeffs @ coeffs)
            u = project(f, fs.space)
            norm_sq = induced_inner(u, u, fs.space)
            slack = 1e-9 * max(1.0, total)
            assert b.lower * norm_sq <= total + slack
            assert total <= b.upper * norm_sq + slack

    def test_operator_sandwich_random(self):
        cfg = GenConfig(seed=34)
        for i in range(50):
            fs = random_frame(cfg, i)
            b = optimal_bounds(fs)
            s = frame_operator(fs).matrix
            eye = np.eye(s.shape[0])
            assert np.linalg.eigvalsh(s - b.lower * eye)[0] >= -1e-9 * max(1.0, b.upper)
            assert np.linalg.eigvalsh(b.upper * eye - s)[0] >= -1e-9 * max(1.0, b.upper)
            mu = np.linalg.eigvalsh(np.linalg.inv(s))
            assert mu[0] >= 1.0 / b.upper - 1e-9 * max(1.0, 1.0 / b.upper)
            assert mu[-1] <= 1.0 / b.lower + 1e-9 * max(1.0, 1.0 / b.lower)


class TestCanonicalDual:
    def test_mb_dual_vectors(self, mb):
        dual = canonical_dual(mb)
        expected = np.array(
            [
                [2.0 / 3.0, -1.0 / 3.0, 0.0],
                [-1.0 / 3.0, 2.0 / 3.0, 0.0],
                [1.0 / 3.0, 1.0 / 3.0, 0.0],
            ]
        )
        assert_allclose(dual.vectors, expected, atol=1e-12)

    def test_mb_dual_bounds(self, mb):
        db = optimal_bounds(canonical_dual(mb))
        assert db.lower == pytest.approx(1.0 / 3.0, abs=1e-10)
        assert db.upper == pytest.approx(1.0, abs=1e-10)

    def test_orthonormal_self_dual(self, ortho):
        assert_allclose(canonical_dual(ortho).vectors, ortho.vectors, atol=1e-12)

    def test_dual_frame_operator_is_inverse(self, mb):
        s = frame_operator(mb).matrix
        s_dual = frame_operator(canonical_dual(mb)).matrix
        assert_allclose(s_dual @ s, np.eye(2), atol=1e-12)

    def test_reciprocity_random(self):
        cfg = GenConfig(seed=35)
        for i in range(60):
            fs = random_frame(cfg, i)
            b = optimal_bounds(fs)
            db = optimal_bounds(canonical_dual(fs))
            assert db.lower * b.upper == pytest.approx(1.0, rel=1e-8)
            assert db.upper * b.lower == pytest.approx(1.0, rel=1e-8)

    def test_not_a_frame_raises(self):
        space = build_induced_space(AnchorSet([E3]))
        fs = FrameSystem(space=space, vectors=E1.reshape(1, 3))
        with pytest.raises(SingularFrameOperatorError):
            canonical_dual(fs)


class TestReconstruction:
    def test_exact_on_fixture(self, mb):
        assert_allclose(reconstruct([5.0, -2.0, 7.0], mb), [5.0, -2.0], atol=1e-12)
        assert_allclose(reconstruct(E3, mb), [0.0, 0.0], atol=1e-12)

    def test_orthonormal_expansion(self, ortho):
        assert_allclose(reconstruct(E1, ortho), [1.0, 0.0], atol=1e-14)

    def test_both_expansions_random(self):
        cfg = GenConfig(seed=36)
        for i in range(100):
            fs = random_frame(cfg, i)
            f = gen_vector(cfg, fs.space.dimension, index=3000 + i)
            u = project(f, fs.space)
            rec1 = reconstruct(f, fs)
            dual = canonical_dual(fs)
            rec2 = synthesis(analysis(f, fs), dual)
            scale = max(1.0, float(np.linalg.norm(u)))
            assert np.linalg.norm(rec1 - u) <= 1e-8 * scale
            assert np.linalg.norm(rec2 - u) <= 1e-8 * scale

    def test_not_a_frame_raises(self):
        space = build_induced_space(AnchorSet([E3]))
        fs = FrameSystem(space=space, vectors=E1.reshape(1, 3))
        with pytest.raises(SingularFrameOperatorError):
            reconstruct(E1, fs)


class TestTight:
    def test_orthonormal_is_tight(self, ortho):
        flag, bound = is_tight(ortho)
        assert flag and bound == pytest.approx(1.0)

    def test_mb_is_not_tight(self, mb):
        flag, bound = is_tight(mb)
        assert not flag
        assert np.isnan(bound)

    def test_gamma_scaled_tight(self, scaled_anchor):
        flag, bound = is_tight(scaled_anchor)
        assert flag and bound == pytest.approx(4.0)

    def test_canonical_tight_fixes_orthonormal(self, ortho):
        assert_allclose(canonical_tight(ortho).vectors, ortho.vectors, atol=1e-12)

    def test_canonical_tight_mb(self, mb):
        tight = canonical_tight(mb)
        assert_allclose(frame_operator(tight).matrix, np.eye(2), atol=1e-10)

    def test_canonical_tight_scales_gamma_case(self, scaled_anchor):
        tight = canonical_tight(scaled_anchor)
        assert_allclose(tight.vectors, scaled_anchor.vectors / 2.0, atol=1e-12)
        b = optimal_bounds(tight)
        assert (b.lower, b.upper) == (pytest.approx(1.0), pytest.approx(1.0))

    def test_tight_reconstruction_identity(self, mb):
        # f = (1/A) sum <f, f_i | anchors> f_i holds for tight frames
        tight = canonical_tight(mb)
        f = np.array([2.0, -1.0, 5.0])
        rec = synthesis(analysis(f, tight), tight)
        assert_allclose(rec, project(f, mb.space), atol=1e-10)

    def test_scaling_a_tight_frame(self):
        cfg = GenConfig(seed=37)
        for i in range(40):
            fs = random_frame(cfg, i)
            tight = canonical_tight(fs)
            scaled = FrameSystem(space=fs.space, vectors=1.7 * tight.vectors)
            flag, common = is_tight(scaled)
            assert flag
            renorm = FrameSystem(space=fs.space, vectors=scaled.vectors / np.sqrt(common))
            b = optimal_bounds(renorm)
            assert abs(b.lower - 1.0) <= 1e-10
            assert abs(b.upper - 1.0) <= 1e-10

    def test_not_a_frame_raises(self):
        space = build_induced_space(AnchorSet([E3]))
        fs = FrameSystem(space=space, vectors=E3.reshape(1, 3))
        with pytest.raises(SingularFrameOperatorError):
            canonical_tight(fs)


class TestVanishingOnAnchorSpan:
    def test_coefficients_and_norm_vanish(self):
        cfg = GenConfig(seed=38)
        rng = np.random.default_rng(38)
        for i in range(50):
            fs = random_frame(cfg, i)
            anchors = fs.space.anchor_set
            weights = rng.uniform(-1.0, 1.0, size=anchors.anchors.shape[0])
            f = anchors.anchors.T @ weights
            coeffs = analysis(f, fs)
            u = project(f, fs.space)
            assert float(np.max(np.abs(coeffs))) <= 1e-12
            assert np.sqrt(induced_inner(u, u, fs.space)) <= 1e-12
