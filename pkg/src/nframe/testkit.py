"""Seeded random instances and brute-force oracles for the property suites.

Every generator is a pure function of (config, parameters, index): entries
are drawn uniformly from [-1, 1] by a PCG64 stream seeded with
SeedSequence([seed, role, index]), where the role constant separates
anchor, frame, vector, operator and oracle draws.  Identical inputs give
bit-identical outputs, independent of call order or parallelism.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GenerationError
from .frames import FrameSystem, optimal_bounds
from .nspace import AnchorSet, InducedSpace

__all__ = [
    "GenConfig",
    "gen_anchor_set",
    "gen_frame",
    "gen_vector",
    "gen_operator",
    "oracle_bounds",
]

_ROLE_ANCHORS = 1
_ROLE_FRAME = 2
_ROLE_VECTOR = 3
_ROLE_OPERATOR = 4
_ROLE_ORACLE = 5

_MAX_RETRIES = 64

# Generated anchor sets and frames must clear this spectral floor.
_GEN_FLOOR = 1e-6


@dataclass(frozen=True)
class GenConfig:
    """Shared knobs for the random generators.

    ``cond_cap`` bounds the condition number of generated operators and the
    bound ratio B/A of generated frames, keeping instances far enough from
    the rank thresholds that theorem certification is numerically meaningful.
    """

    seed: int
    d_range: tuple[int, int] = (3, 6)
    n_range: tuple[int, int] = (2, 4)
    m_range: tuple[int, int] = (2, 12)
    cond_cap: float = 1e3

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")
        if self.n_range[0] < 2:
            raise ValueError("order must be at least 2")
        if self.d_range[0] < self.n_range[0]:
            raise ValueError("dimension range must admit d >= n")
        if self.cond_cap < 1.0:
            raise ValueError("condition cap must be >= 1")


def _rng(cfg_seed: int, role: int, index: int) -> np.random.Generator:
    if index < 0:
        raise ValueError("index must be nonnegative")
    return np.random.default_rng(np.random.SeedSequence([cfg_seed, role, index]))


def gen_anchor_set(cfg: GenConfig, d: int, n: int, index: int = 0) -> AnchorSet:
    """Random anchor set with Gram determinant above the generation floor."""
    if n < 2:
        raise ValueError(f"order n={n} must be at least 2")
    if n - 1 >= d:
        raise ValueError(f"n-1={n - 1} anchors cannot leave a complement in R^{d}")
    rng = _rng(cfg.seed, _ROLE_ANCHORS, index)
    for _ in range(_MAX_RETRIES):
        anchors = AnchorSet(rng.uniform(-1.0, 1.0, size=(n - 1, d)))
        if anchors.gamma > _GEN_FLOOR:
            return anchors
    raise GenerationError(f"no anchor set with gamma > {_GEN_FLOOR} in {_MAX_RETRIES} draws")


def gen_frame(cfg: GenConfig, space: InducedSpace, m: int, index: int = 0) -> FrameSystem:
    """Random m-vector frame over ``space`` with A > 1e-6 and B/A <= cond_cap."""
    if m < space.k:
        raise ValueError(f"m={m} vectors cannot frame a {space.k}-dimensional space")
    rng = _rng(cfg.seed, _ROLE_FRAME, index)
    for _ in range(_MAX_RETRIES):
        fs = FrameSystem(space=space, vectors=rng.uniform(-1.0, 1.0, size=(m, space.dimension)))
        b = optimal_bounds(fs)
        if b.lower > _GEN_FLOOR and b.upper <= cfg.cond_cap * b.lower:
            return fs
    raise GenerationError(
        f"no frame with A > {_GEN_FLOOR} and B/A <= {cfg.cond_cap} in {_MAX_RETRIES} draws"
    )


def gen_vector(cfg: GenConfig, d: int, index: int = 0) -> np.ndarray:
    """Random ambient vector with entries uniform in [-1, 1]."""
    return _rng(cfg.seed, _ROLE_VECTOR, index).uniform(-1.0, 1.0, size=d)


def gen_operator(cfg: GenConfig, k: int, index: int = 0, kind: str = "invertible") -> np.ndarray:
    """Random k x k operator on induced coordinates.

    kind="invertible": singular values floored at sigma_max / cond_cap.
    kind="singular":   the smallest singular value zeroed out.
    kind="raw":        the uniform draw as-is.
    """
    rng = _rng(cfg.seed, _ROLE_OPERATOR, index)
    base = rng.uniform(-1.0, 1.0, size=(k, k))
    if kind == "raw":
        return base
    u, s, vt = np.linalg.svd(base)
    if kind == "invertible":
        smax = float(s[0]) if s[0] > 0 else 1.0
        s = np.maximum(s, smax / cfg.cond_cap)
    elif kind == "singular":
        s[-1] = 0.0
    else:
        raise ValueError(f"unknown operator kind {kind!r}")
    return u @ (s[:, None] * vt)


def oracle_bounds(fs: FrameSystem, samples: int, seed: int) -> tuple[float, float]:
    """Sampled extremes of the frame-inequality ratio.

    Draws unit vectors of the induced space and returns the min and max of
    sum_i <f, f_i | anchors>^2 / ||f||_F^2.  Independent of the spectral
    route: the true optimal bounds must sandwich the result.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = _rng(seed, _ROLE_ORACLE, 0)
    v = rng.uniform(-1.0, 1.0, size=(samples, fs.space.k))
    norms_sq = np.einsum("ij,ij->i", v, v)
    flat = norms_sq <= 1e-24  # essentially-zero draws: replace deterministically
    if np.any(flat):
        v[flat] = 0.0
        v[flat, 0] = 1.0
        norms_sq[flat] = 1.0
    w = v @ fs.phi.T
    ratios = fs.gamma * np.einsum("ij,ij->i", w, w) / norms_sq
    return float(np.min(ratios)), float(np.max(ratios))
