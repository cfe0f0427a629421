"""Gram-determinant n-inner products and the induced Hilbert space.

The ambient space is R^d with the usual dot product.  Fixing an anchor
tuple (a_2, ..., a_n) of n-1 independent vectors, the n-inner product of
x and y relative to the anchors is the bordered Gram determinant

    <x, y | a_2, ..., a_n> = det [ <x,y>    <x,a_2>  ...  <x,a_n>
                                   <a_2,y>  <a_2,a_2> ... <a_2,a_n>
                                   ...
                                   <a_n,y>  <a_n,a_2> ... <a_n,a_n> ]

and the n-norm is the square root of the diagonal case.  Vectors in the
anchor span have norm zero, so the construction descends to the quotient
by that span.  We realize the quotient concretely as W, the orthogonal
complement of the anchors, carrying the scaled inner product

    <u, v>_F = gamma * (u . v),    gamma = det[<a_i, a_j>],

via an orthonormal basis Q of W (rows of a k x d matrix, k = d - (n-1)).
Projecting x to Q x picks the canonical coset representative, and the
bordered determinant factors as gamma * (Qx . Qy).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateAnchorError, DimensionMismatchError, UnstableNormError

__all__ = [
    "AmbientSpace",
    "AnchorSet",
    "InducedSpace",
    "gram_det",
    "n_inner",
    "n_inner_many",
    "n_norm",
    "build_induced_space",
    "project",
    "lift",
    "induced_inner",
    "induced_norm",
]

# Gram determinant counts as zero below this factor times the product of
# the diagonal Gram entries (floored at 1).
RANK_TOL_FACTOR = 1e-10

# Radicands in [-NORM_CLAMP, 0) clamp to zero; anything more negative is
# reported as numerical instability instead of silently masked.
NORM_CLAMP = 1e-12


def _as_vector(x, dim=None, name="vector"):
    v = np.asarray(x, dtype=float)
    if v.ndim != 1:
        raise DimensionMismatchError(f"{name} must be 1-D, got shape {v.shape}")
    if dim is not None and v.shape[0] != dim:
        raise DimensionMismatchError(f"{name} has length {v.shape[0]}, expected {dim}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite entries")
    return v


def _as_matrix(rows, name="matrix"):
    m = np.asarray(rows, dtype=float)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.ndim != 2:
        raise DimensionMismatchError(f"{name} must be 2-D, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite entries")
    return m


@dataclass(frozen=True)
class AmbientSpace:
    """The ambient Euclidean space R^d with an n-inner product of order n."""

    dimension: int
    order: int

    def __post_init__(self):
        if self.order < 2:
            raise ValueError(f"order must be >= 2, got {self.order}")
        if self.dimension < self.order:
            raise ValueError(
                f"need dimension >= order (so the complement is nontrivial), "
                f"got d={self.dimension}, n={self.order}"
            )


@dataclass(frozen=True)
class AnchorSet:
    """The fixed anchor tuple (a_2, ..., a_n) with its Gram determinant.

    Construction is permissive: a dependent tuple is representable (its
    Gram determinant is ~0) and only rejected where an induced space is
    actually needed.
    """

    anchors: np.ndarray
    gamma: float = field(init=False)

    def __post_init__(self):
        a = _as_matrix(self.anchors, "anchors")
        if a.shape[0] < 1:
            raise ValueError("anchor set needs at least one vector")
        if a.shape[0] >= a.shape[1]:
            raise DimensionMismatchError(
                f"{a.shape[0]} anchors cannot be independent in R^{a.shape[1]} "
                "while leaving a nontrivial complement"
            )
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "anchors", a)
        gram = a @ a.T
        object.__setattr__(self, "gamma", float(np.linalg.det(gram)))

    @property
    def dimension(self) -> int:
        return self.anchors.shape[1]

    @property
    def order(self) -> int:
        return self.anchors.shape[0] + 1

    @property
    def rank_tolerance(self) -> float:
        diag = np.einsum("ij,ij->i", self.anchors, self.anchors)
        return RANK_TOL_FACTOR * max(1.0, float(np.prod(diag)))

    @property
    def is_degenerate(self) -> bool:
        return self.gamma <= self.rank_tolerance


@dataclass(frozen=True)
class InducedSpace:
    """The induced Hilbert space: orthonormal basis of the anchor complement.

    ``basis`` is k x d with orthonormal rows spanning W = span(anchors)^perp;
    coordinates in this basis carry the inner product gamma * dot.
    """

    anchor_set: AnchorSet
    basis: np.ndarray

    def __post_init__(self):
        q = _as_matrix(self.basis, "basis")
        d = self.anchor_set.dimension
        k = d - (self.anchor_set.order - 1)
        if q.shape != (k, d):
            raise DimensionMismatchError(f"basis must be {k}x{d}, got {q.shape}")
        if not np.allclose(q @ q.T, np.eye(k), atol=1e-8):
            raise ValueError("basis rows are not orthonormal")
        if not np.allclose(q @ self.anchor_set.anchors.T, 0.0, atol=1e-8):
            raise ValueError("basis rows are not orthogonal to the anchors")
        q = q.copy()
        q.setflags(write=False)
        object.__setattr__(self, "basis", q)

    @property
    def k(self) -> int:
        return self.basis.shape[0]

    @property
    def dimension(self) -> int:
        return self.basis.shape[1]

    @property
    def gamma(self) -> float:
        return self.anchor_set.gamma


def gram_det(vectors) -> float:
    """Determinant of the Gram matrix [<v_p, v_q>] of the given vectors.

    Nonnegative up to round-off; zero exactly when the vectors are
    linearly dependent.
    """
    v = _as_matrix(vectors, "vectors")
    return float(np.linalg.det(v @ v.T))


def _bordered(x, y, anchors):
    a = anchors.anchors
    n = anchors.order
    m = np.empty((n, n))
    m[0, 0] = x @ y
    m[0, 1:] = a @ x
    m[1:, 0] = a @ y
    m[1:, 1:] = a @ a.T
    return m


def n_inner(x, y, anchors: AnchorSet) -> float:
    """n-inner product <x, y | a_2, ..., a_n> as a bordered Gram determinant."""
    d = anchors.dimension
    xv = _as_vector(x, d, "x")
    yv = _as_vector(y, d, "y")
    return float(np.linalg.det(_bordered(xv, yv, anchors)))


def n_inner_many(x, ys, anchors: AnchorSet) -> np.ndarray:
    """Vectorized ``n_inner(x, y_j, anchors)`` over the rows of ``ys``.

    Builds the stack of bordered matrices and evaluates one batched
    determinant; used by sampling-style certification suites.
    """
    d = anchors.dimension
    xv = _as_vector(x, d, "x")
    ym = _as_matrix(ys, "ys")
    if ym.shape[1] != d:
        raise DimensionMismatchError(f"ys rows have length {ym.shape[1]}, expected {d}")
    a = anchors.anchors
    n = anchors.order
    batch = ym.shape[0]
    m = np.empty((batch, n, n))
    m[:, 0, 0] = ym @ xv
    m[:, 0, 1:] = a @ xv
    m[:, 1:, 0] = ym @ a.T
    m[:, 1:, 1:] = a @ a.T
    return np.linalg.det(m)


def n_norm(x, anchors: AnchorSet) -> float:
    """n-norm ||x, a_2, ..., a_n||; zero exactly on the anchor span.

    Radicands in [-1e-12, 0) are round-off near the anchor span and clamp
    to zero; anything more negative raises :class:`UnstableNormError`.
    """
    r = n_inner(x, x, anchors)
    if r < -NORM_CLAMP:
        raise UnstableNormError(f"squared n-norm came out {r:.3e} < -{NORM_CLAMP:.0e}")
    return float(np.sqrt(max(r, 0.0)))


def _orthonormal_rows(rows, context):
    out = []
    for row in rows:
        v = row.astype(float).copy()
        for _ in range(2):  # one re-orthogonalization pass
            for u in out:
                v -= (v @ u) * u
        nv = np.linalg.norm(v)
        if nv <= 1e-12 * max(1.0, np.linalg.norm(row)):
            raise DegenerateAnchorError(f"{context}: vectors are linearly dependent")
        out.append(v / nv)
    return np.vstack(out)


def build_induced_space(anchors: AnchorSet, space: AmbientSpace | None = None) -> InducedSpace:
    """Construct the induced space for an anchor set.

    Orthonormalizes the anchors, then greedily completes with standard
    basis vectors: at each step the candidate with the largest residual
    norm is taken (first index wins ties), so the basis is deterministic
    given the anchor order.
    """
    d = anchors.dimension
    n = anchors.order
    if space is not None and (space.dimension, space.order) != (d, n):
        raise DimensionMismatchError(
            f"anchor set is ({d=}, {n=}) but space is "
            f"(d={space.dimension}, n={space.order})"
        )
    if anchors.is_degenerate:
        raise DegenerateAnchorError(
            f"anchor Gram determinant {anchors.gamma:.3e} is at or below the "
            f"rank tolerance {anchors.rank_tolerance:.3e}"
        )
    u = _orthonormal_rows(anchors.anchors, "anchor orthonormalization")
    k = d - (n - 1)
    residual = np.eye(d) - u.T @ u  # row i: e_i minus its anchor-span component
    rows = []
    for _ in range(k):
        norms = np.linalg.norm(residual, axis=1)
        pick = int(np.argmax(norms))
        q = residual[pick] / norms[pick]
        # second pass against everything accepted so far
        q -= u.T @ (u @ q)
        for prev in rows:
            q -= (q @ prev) * prev
        q /= np.linalg.norm(q)
        rows.append(q)
        residual -= np.outer(residual @ q, q)
    return InducedSpace(anchor_set=anchors, basis=np.vstack(rows))


def project(x, space: InducedSpace) -> np.ndarray:
    """Coordinates of the coset representative of x in the induced space."""
    xv = _as_vector(x, space.dimension, "x")
    return space.basis @ xv


def lift(u, space: InducedSpace) -> np.ndarray:
    """Ambient representative (zero anchor component) of induced coordinates."""
    uv = _as_vector(u, space.k, "u")
    return space.basis.T @ uv


def induced_inner(u, v, space: InducedSpace) -> float:
    """Inner product gamma * (u . v) on induced coordinates."""
    uv = _as_vector(u, space.k, "u")
    vv = _as_vector(v, space.k, "v")
    return float(space.gamma * (uv @ vv))


def induced_norm(u, space: InducedSpace) -> float:
    """Norm sqrt(gamma) * ||u|| on induced coordinates."""
    uv = _as_vector(u, space.k, "u")
    return float(np.sqrt(space.gamma) * np.linalg.norm(uv))
