"""Frame systems relative to an anchor set.

A finite family {f_i} in the ambient space, viewed in the induced space
through its projected coordinate matrix phi (row i = Q f_i), is a frame
when phi has full column rank.  The frame operator in induced coordinates
is S = gamma * phi^T phi and the optimal frame bounds are its extreme
eigenvalues.  Canonical dual and tight systems are derived from S^{-1}
and S^{-1/2} and returned with zero anchor component, the canonical coset
representatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, SingularFrameOperatorError
from .nspace import InducedSpace, _as_matrix, _as_vector, project

__all__ = [
    "FrameSystem",
    "FrameOperator",
    "FrameBounds",
    "analysis",
    "synthesis",
    "frame_operator",
    "optimal_bounds",
    "is_frame",
    "is_bessel",
    "canonical_dual",
    "reconstruct",
    "is_tight",
    "canonical_tight",
]

# Scale-aware frame decision: a family is a frame when A > FRAME_TOL * max(1, B).
FRAME_TOL = 1e-9


@dataclass(frozen=True)
class FrameSystem:
    """A finite vector family over an induced space, with cached projections."""

    space: InducedSpace
    vectors: np.ndarray
    phi: np.ndarray = field(init=False)

    def __post_init__(self):
        v = _as_matrix(self.vectors, "vectors")
        if v.shape[0] < 1:
            raise ValueError("frame system needs at least one vector")
        if v.shape[1] != self.space.dimension:
            raise DimensionMismatchError(
                f"vectors have length {v.shape[1]}, ambient dimension is "
                f"{self.space.dimension}"
            )
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)
        phi = v @ self.space.basis.T
        phi.setflags(write=False)
        object.__setattr__(self, "phi", phi)

    def __len__(self) -> int:
        return self.vectors.shape[0]

    @property
    def gamma(self) -> float:
        return self.space.gamma


@dataclass(frozen=True)
class FrameBounds:
    lower: float
    upper: float
    optimal: bool = True


@dataclass(frozen=True)
class FrameOperator:
    """Symmetric PSD matrix of the frame operator in induced coordinates.

    ``source`` is the frame it was computed from, or None when the matrix
    was obtained another way (e.g. by operator conjugation).
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray = field(init=False)
    eigenvectors: np.ndarray = field(init=False)
    source: FrameSystem | None = None

    def __post_init__(self):
        m = _as_matrix(self.matrix, "matrix")
        if m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"frame operator must be square, got {m.shape}")
        m = 0.5 * (m + m.T)  # symmetrize away round-off
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        w, v = np.linalg.eigh(m)  # ascending eigenvalues
        w.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "eigenvalues", w)
        object.__setattr__(self, "eigenvectors", v)

    def apply_spectral(self, fn) -> np.ndarray:
        """Evaluate a scalar function of the operator via its eigensystem."""
        w = fn(self.eigenvalues)
        return self.eigenvectors @ (w[:, None] * self.eigenvectors.T)


def analysis(f, fs: FrameSystem) -> np.ndarray:
    """Coefficients <f, f_i | anchors> for every frame vector."""
    u = project(f, fs.space)
    return fs.gamma * (fs.phi @ u)


def synthesis(coeffs, fs: FrameSystem) -> np.ndarray:
    """Induced coordinates of sum_i c_i f_i."""
    c = _as_vector(coeffs, len(fs), "coefficients")
    return fs.phi.T @ c


def frame_operator(fs: FrameSystem) -> FrameOperator:
    """Frame operator S = gamma * phi^T phi in induced coordinates."""
    s = fs.gamma * (fs.phi.T @ fs.phi)
    return FrameOperator(matrix=s, source=fs)


def optimal_bounds(fs: FrameSystem) -> FrameBounds:
    """Optimal frame bounds: the extreme eigenvalues of the frame operator.

    A lower bound of zero signals that the family is not a frame.
    """
    w = frame_operator(fs).eigenvalues
    return FrameBounds(lower=max(float(w[0]), 0.0), upper=max(float(w[-1]), 0.0))


def is_frame(fs: FrameSystem, tol: float = FRAME_TOL) -> bool:
    """Whether the family is a frame for the induced space."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    b = optimal_bounds(fs)
    return b.lower > tol * max(1.0, b.upper)


def is_bessel(fs: FrameSystem, bound: float, tol: float = FRAME_TOL) -> bool:
    """Whether the family is Bessel with the given upper bound."""
    if bound <= 0:
        raise ValueError("Bessel bound must be positive")
    upper = optimal_bounds(fs).upper
    return upper <= bound + tol * max(1.0, bound)


def _require_frame(fs: FrameSystem) -> FrameOperator:
    op = frame_operator(fs)
    w = op.eigenvalues
    if not w[0] > FRAME_TOL * max(1.0, float(w[-1])):
        raise SingularFrameOperatorError(
            f"family is not a frame (lower bound {max(float(w[0]), 0.0):.3e})"
        )
    return op


def canonical_dual(fs: FrameSystem) -> FrameSystem:
    """Canonical dual frame {S^{-1} f_i} as zero-anchor-component vectors.

    Its frame operator is S^{-1} and its optimal bounds are the reciprocals
    of the original bounds, swapped.
    """
    op = _require_frame(fs)
    s_inv = op.apply_spectral(lambda w: 1.0 / w)
    dual_phi = fs.phi @ s_inv
    return FrameSystem(space=fs.space, vectors=dual_phi @ fs.space.basis)


def reconstruct(f, fs: FrameSystem) -> np.ndarray:
    """Expand f against the canonical dual and resynthesize.

    Returns the induced coordinates of sum_i <f, S^{-1} f_i | anchors> f_i,
    which equal project(f) for any frame; the expansion with the roles of
    the two families swapped agrees as well.
    """
    op = _require_frame(fs)
    u = project(f, fs.space)
    coeffs = fs.gamma * (fs.phi @ np.linalg.solve(op.matrix, u))
    return fs.phi.T @ coeffs


def is_tight(fs: FrameSystem, tol: float = FRAME_TOL) -> tuple[bool, float]:
    """Tightness check: (True, common bound) when the bounds agree within tol.

    For a non-tight family the second component is NaN.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    b = optimal_bounds(fs)
    if b.upper - b.lower <= tol * max(1.0, b.upper):
        return True, 0.5 * (b.lower + b.upper)
    return False, float("nan")


def canonical_tight(fs: FrameSystem) -> FrameSystem:
    """Canonical tight frame {S^{-1/2} f_i}; its frame operator is the identity."""
    op = _require_frame(fs)
    s_inv_sqrt = op.apply_spectral(lambda w: 1.0 / np.sqrt(w))
    tight_phi = fs.phi @ s_inv_sqrt
    return FrameSystem(space=fs.space, vectors=tight_phi @ fs.space.basis)
