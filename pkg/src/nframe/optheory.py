"""Operators on the induced space and the frame theorems they drive.

Operators are plain k x k arrays acting on induced coordinates.  Because
the induced inner product is a positive multiple of the dot product, the
adjoint of an operator is its transpose, and operator norms between the
induced space and coefficient space pick up the gamma weight.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError
from .frames import FrameOperator, FrameSystem, frame_operator
from .nspace import _as_matrix

__all__ = [
    "sqrt_psd",
    "pseudo_inverse",
    "image_frame",
    "image_frame_operator",
    "perturb_identity",
    "combine",
    "surjectivity_frame_test",
    "dual_pair_check",
]

# Singular values at or below OP_TOL * max(1, sigma_max) count as zero;
# matches the frame decision threshold.
OP_TOL = 1e-9

# sqrt_psd rejects eigenvalues below this (absolute) floor as indefinite.
PSD_FLOOR = -1e-10


def _as_operator(u, k=None, name="operator"):
    m = _as_matrix(u, name)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got {m.shape}")
    if k is not None and m.shape[0] != k:
        raise DimensionMismatchError(f"{name} is {m.shape[0]}x{m.shape[0]}, expected {k}x{k}")
    return m


def sqrt_psd(m) -> np.ndarray:
    """Unique symmetric PSD square root of a symmetric PSD matrix.

    Raises ValueError on asymmetric or indefinite input (eigenvalues below
    -1e-10); tiny negative eigenvalues are clamped to zero.
    """
    a = _as_operator(m, name="matrix")
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - a.T)) > 1e-10 * scale:
        raise ValueError("matrix is not symmetric")
    w, v = np.linalg.eigh(a)
    if w[0] < PSD_FLOOR:
        raise ValueError(f"matrix is indefinite (smallest eigenvalue {w[0]:.3e})")
    root = v @ (np.sqrt(np.clip(w, 0.0, None))[:, None] * v.T)
    return 0.5 * (root + root.T)


def pseudo_inverse(t) -> np.ndarray:
    """Moore-Penrose pseudo-inverse with the package rank cutoff.

    Singular values at or below 1e-9 * max(1, sigma_max) are treated as
    zero, so rank decisions agree with the frame and invertibility checks.
    """
    a = _as_matrix(t, "matrix")
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    cutoff = OP_TOL * max(1.0, float(s[0])) if s.size else 0.0
    inv = np.where(s > cutoff, 1.0 / np.where(s > cutoff, s, 1.0), 0.0)
    return vt.T @ (inv[:, None] * u.T)


def image_frame(u, fs: FrameSystem) -> FrameSystem:
    """The family {U f_i}, with canonical zero-anchor-component vectors.

    The image of a frame is a frame exactly when U is invertible on the
    induced space; a rank-deficient U shows up as a zero lower bound.
    """
    um = _as_operator(u, fs.space.k, "U")
    new_phi = fs.phi @ um.T
    return FrameSystem(space=fs.space, vectors=new_phi @ fs.space.basis)


def image_frame_operator(u, fs: FrameSystem) -> FrameOperator:
    """Frame operator of {U f_i} by conjugation: U S U^T."""
    um = _as_operator(u, fs.space.k, "U")
    s = frame_operator(fs).matrix
    return FrameOperator(matrix=um @ s @ um.T)


def perturb_identity(u, fs: FrameSystem) -> FrameSystem:
    """The family {f_i + U f_i}; a frame exactly when I + U is invertible.

    Its frame operator is (I+U) S (I+U)^T.
    """
    um = _as_operator(u, fs.space.k, "U")
    shifted = np.eye(fs.space.k) + um
    new_phi = fs.phi @ shifted.T
    return FrameSystem(space=fs.space, vectors=new_phi @ fs.space.basis)


def _require_same_space(fs: FrameSystem, gs: FrameSystem):
    if len(fs) != len(gs):
        raise DimensionMismatchError(f"families have lengths {len(fs)} and {len(gs)}")
    same = fs.space is gs.space or (
        np.array_equal(fs.space.anchor_set.anchors, gs.space.anchor_set.anchors)
        and np.array_equal(fs.space.basis, gs.space.basis)
    )
    if not same:
        raise DimensionMismatchError("families live over different anchor sets")


def combine(l1, fs: FrameSystem, l2, gs: FrameSystem) -> FrameSystem:
    """The family {L1 f_i + L2 g_i} over a shared induced space.

    It is a frame exactly when the combined analysis operator has full
    column rank (is bounded below).
    """
    _require_same_space(fs, gs)
    m1 = _as_operator(l1, fs.space.k, "L1")
    m2 = _as_operator(l2, fs.space.k, "L2")
    new_phi = fs.phi @ m1.T + gs.phi @ m2.T
    return FrameSystem(space=fs.space, vectors=new_phi @ fs.space.basis)


def surjectivity_frame_test(fs: FrameSystem) -> tuple[bool, float]:
    """Surjectivity of the synthesis operator and the bound it certifies.

    Returns (synthesis surjective, 1 / ||T_dagger||^2).  The norm is taken
    between the coefficient space and the induced space, so it carries the
    gamma weight; for a frame the second component equals the optimal
    lower bound.  A non-surjective synthesis certifies nothing: (False, 0).
    """
    t = fs.phi.T  # synthesis matrix, k x m
    s = np.linalg.svd(t, compute_uv=False)
    smax = float(s[0]) if s.size else 0.0
    rank = int(np.sum(s > OP_TOL * max(1.0, smax)))
    if rank < fs.space.k:
        return False, 0.0
    tdag = pseudo_inverse(t)
    norm_sq = float(np.linalg.norm(tdag, 2)) ** 2 / fs.gamma
    return True, 1.0 / norm_sq


def dual_pair_check(fs: FrameSystem, gs: FrameSystem, tol: float = OP_TOL) -> bool:
    """Whether the two families reproduce the identity: T_F (T_G)^* = I.

    In induced coordinates the condition is gamma * phi^T psi = I.  When it
    holds, both families are frames, with lower bounds at least the
    reciprocals of each other's Bessel bounds.
    """
    _require_same_space(fs, gs)
    cross = fs.gamma * (fs.phi.T @ gs.phi)
    return bool(np.max(np.abs(cross - np.eye(fs.space.k))) <= tol)
