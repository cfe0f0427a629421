"""Randomized certification of every library invariant.

Each suite re-checks one identity, inequality or equivalence on freshly
generated instances: the algebraic identities of the n-inner product, the
frame inequality and operator sandwiches, dual/tight constructions, the
operator-image theorems, the pseudo-inverse bound identity, the sampling
oracle, generator determinism, and instance round-tripping.

Residuals are normalized so that a suite trial passes exactly when
``residual <= tolerance``.  Instance draws are keyed by (seed, suite,
trial, slot), so trials are independent and reproducible in any order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import frames, instances, nspace, optheory, testkit
from .errors import NFrameError
from .testkit import GenConfig, gen_anchor_set, gen_frame, gen_operator, gen_vector

__all__ = ["SuiteResult", "run", "SUITE_NAMES"]

_ROLE_SHAPE = 101
_ROLE_SAMPLES = 102

_MAX_TRIALS = 1 << 20


@dataclass(frozen=True)
class SuiteResult:
    name: str
    trials: int
    failures: int
    worst_residual: float
    tolerance: float
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _idx(suite: int, trial: int, slot: int) -> int:
    return (suite << 26) | (trial << 4) | slot


def _rng(seed: int, role: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, role, index]))


class _Ctx:
    """Per-run generation context: config, size caps, and draw helpers."""

    def __init__(self, seed, d_max, m_max, cond_cap):
        self.cfg = GenConfig(seed=seed, d_range=(2, d_max), m_range=(1, m_max), cond_cap=cond_cap)
        self.seed = seed
        self.d_max = d_max
        self.m_max = m_max

    def shape(self, suite, trial):
        rng = _rng(self.seed, _ROLE_SHAPE, _idx(suite, trial, 0))
        n = int(rng.integers(2, min(4, self.d_max) + 1))
        d = int(rng.integers(n, self.d_max + 1))
        k = d - (n - 1)
        m = int(rng.integers(k, max(k, min(self.m_max, k + 6)) + 1))
        return d, n, m

    def anchors_space(self, suite, trial):
        d, n, m = self.shape(suite, trial)
        anchors = gen_anchor_set(self.cfg, d, n, index=_idx(suite, trial, 1))
        return anchors, nspace.build_induced_space(anchors), m

    def frame(self, suite, trial):
        anchors, space, m = self.anchors_space(suite, trial)
        fs = gen_frame(self.cfg, space, m, index=_idx(suite, trial, 2))
        return anchors, space, fs

    def samples_rng(self, suite, trial):
        return _rng(self.seed, _ROLE_SAMPLES, _idx(suite, trial, 3))


def _payload(anchors, fs=None, operators=None, vectors=None):
    doc = {"dimension": int(anchors.dimension), "anchors": anchors.anchors.tolist()}
    if fs is not None:
        doc["frame"] = fs.vectors.tolist()
    if operators:
        doc["operators"] = {k: np.asarray(v).tolist() for k, v in operators.items()}
    if vectors:
        doc["vectors"] = {k: np.asarray(v).tolist() for k, v in vectors.items()}
    return doc


# --- n-inner-product identities -------------------------------------------


def _suite_gram_projection(ctx, suite, trial):
    anchors, space, _ = ctx.anchors_space(suite, trial)
    d = anchors.dimension
    x = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 3))
    y = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 4))
    det_val = nspace.n_inner(x, y, anchors)
    proj_val = nspace.induced_inner(nspace.project(x, space), nspace.project(y, space), space)
    res = abs(det_val - proj_val) / (1.0 + abs(det_val))
    return res, _payload(anchors, vectors={"x": x, "y": y})


def _suite_cauchy_schwarz(ctx, suite, trial):
    anchors, _, _ = ctx.anchors_space(suite, trial)
    d = anchors.dimension
    x = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 3))
    y = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 4))
    inner = nspace.n_inner(x, y, anchors)
    nx = nspace.n_norm(x, anchors)
    ny = nspace.n_norm(y, anchors)
    res = max(0.0, abs(inner) - nx * ny) / max(1.0, nx * ny)
    return res, _payload(anchors, vectors={"x": x, "y": y})


def _suite_polarization(ctx, suite, trial):
    anchors, _, _ = ctx.anchors_space(suite, trial)
    d = anchors.dimension
    x = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 3))
    y = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 4))
    inner = nspace.n_inner(x, y, anchors)
    plus = nspace.n_inner(x + y, x + y, anchors)
    minus = nspace.n_inner(x - y, x - y, anchors)
    res = abs(inner - 0.25 * (plus - minus)) / max(1.0, plus, minus)
    return res, _payload(anchors, vectors={"x": x, "y": y})


def _suite_parallelogram(ctx, suite, trial):
    anchors, _, _ = ctx.anchors_space(suite, trial)
    d = anchors.dimension
    x = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 3))
    y = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 4))
    plus = nspace.n_inner(x + y, x + y, anchors)
    minus = nspace.n_inner(x - y, x - y, anchors)
    xx = nspace.n_inner(x, x, anchors)
    yy = nspace.n_inner(y, y, anchors)
    res = abs(plus + minus - 2.0 * (xx + yy)) / max(1.0, plus + minus)
    return res, _payload(anchors, vectors={"x": x, "y": y})


def _suite_sup_formula(ctx, suite, trial, samples=1000):
    anchors, space, _ = ctx.anchors_space(suite, trial)
    d = anchors.dimension
    x = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 3))
    nx = nspace.n_norm(x, anchors)
    if nx <= 1e-6:  # attainment is only claimed off the anchor span
        return 0.0, _payload(anchors, vectors={"x": x})
    y_star = nspace.lift(nspace.project(x, space), space) / nx
    attain = abs(abs(nspace.n_inner(x, y_star, anchors)) - nx) / max(1.0, nx)
    rng = ctx.samples_rng(suite, trial)
    v = rng.uniform(-1.0, 1.0, size=(samples, space.k))
    norms = np.sqrt(space.gamma) * np.linalg.norm(v, axis=1)
    keep = norms > 1e-9
    ys = (v[keep] / norms[keep, None]) @ space.basis
    vals = np.abs(nspace.n_inner_many(x, ys, anchors))
    excess = (float(np.max(vals)) - nx) / max(1.0, nx)
    return max(attain, excess), _payload(anchors, vectors={"x": x})


def _suite_anchor_permutation(ctx, suite, trial):
    anchors, _, _ = ctx.anchors_space(suite, trial)
    d = anchors.dimension
    x = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 3))
    y = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 4))
    rng = ctx.samples_rng(suite, trial)
    perm = rng.permutation(anchors.anchors.shape[0])
    shuffled = nspace.AnchorSet(anchors.anchors[perm])
    inner = nspace.n_inner(x, y, anchors)
    res = abs(nspace.n_inner(x, y, shuffled) - inner) / max(1.0, abs(inner))
    return res, _payload(anchors, vectors={"x": x, "y": y})


def _suite_homogeneity(ctx, suite, trial):
    anchors, _, _ = ctx.anchors_space(suite, trial)
    d = anchors.dimension
    x = gen_vector(ctx.cfg, d, index=_idx(suite, trial, 3))
    alpha = float(ctx.samples_rng(suite, trial).uniform(-3.0, 3.0))
    lhs = nspace.n_norm(alpha * x, anchors)
    rhs = abs(alpha) * nspace.n_norm(x, anchors)
    res = abs(lhs - rhs) / max(1.0, rhs)
    return res, _payload(anchors, vectors={"x": x})


# --- frame inequalities and constructions ---------------------------------


def _suite_frame_inequality(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    f = gen_vector(ctx.cfg, anchors.dimension, index=_idx(suite, trial, 3))
    coeffs = frames.analysis(f, fs)
    total = float(coeffs @ coeffs)
    u = nspace.project(f, space)
    norm_sq = nspace.induced_inner(u, u, space)
    b = frames.optimal_bounds(fs)
    res = max(0.0, b.lower * norm_sq - total, total - b.upper * norm_sq) / max(1.0, total)
    return res, _payload(anchors, fs, vectors={"f": f})


def _suite_quadratic_form(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    f = gen_vector(ctx.cfg, anchors.dimension, index=_idx(suite, trial, 3))
    coeffs = frames.analysis(f, fs)
    u = nspace.project(f, space)
    s = frames.frame_operator(fs).matrix
    lhs = nspace.induced_inner(s @ u, u, space)
    rhs = float(coeffs @ coeffs)
    res = abs(lhs - rhs) / max(1.0, abs(rhs))
    return res, _payload(anchors, fs, vectors={"f": f})


def _suite_operator_order(ctx, suite, trial):
    anchors, _, fs = ctx.frame(suite, trial)
    b = frames.optimal_bounds(fs)
    s = frames.frame_operator(fs).matrix
    eye = np.eye(s.shape[0])
    low = np.linalg.eigvalsh(s - b.lower * eye)
    high = np.linalg.eigvalsh(b.upper * eye - s)
    res = max(0.0, -float(low[0]), -float(high[0])) / max(1.0, b.upper)
    return res, _payload(anchors, fs)


def _suite_inverse_order(ctx, suite, trial):
    anchors, _, fs = ctx.frame(suite, trial)
    b = frames.optimal_bounds(fs)
    s = frames.frame_operator(fs).matrix
    mu = np.linalg.eigvalsh(np.linalg.inv(s))
    res = max(0.0, 1.0 / b.upper - float(mu[0]), float(mu[-1]) - 1.0 / b.lower)
    return res / max(1.0, 1.0 / b.lower), _payload(anchors, fs)


def _suite_dual_reciprocity(ctx, suite, trial):
    anchors, _, fs = ctx.frame(suite, trial)
    b = frames.optimal_bounds(fs)
    db = frames.optimal_bounds(frames.canonical_dual(fs))
    res = max(abs(db.lower * b.upper - 1.0), abs(db.upper * b.lower - 1.0))
    return res, _payload(anchors, fs)


def _suite_reconstruction(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    f = gen_vector(ctx.cfg, anchors.dimension, index=_idx(suite, trial, 3))
    u = nspace.project(f, space)
    rec_dual_coeffs = frames.reconstruct(f, fs)
    dual = frames.canonical_dual(fs)
    rec_swapped = frames.synthesis(frames.analysis(f, fs), dual)
    res = max(
        float(np.linalg.norm(rec_dual_coeffs - u)), float(np.linalg.norm(rec_swapped - u))
    ) / max(1.0, float(np.linalg.norm(u)))
    return res, _payload(anchors, fs, vectors={"f": f})


def _suite_tight_scaling(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    scale = float(ctx.samples_rng(suite, trial).uniform(0.5, 2.0))
    tight = frames.canonical_tight(fs)
    scaled = frames.FrameSystem(space=space, vectors=scale * tight.vectors)
    flag, common = frames.is_tight(scaled)
    if not flag:
        return 1.0, _payload(anchors, scaled)
    renorm = frames.FrameSystem(space=space, vectors=scaled.vectors / np.sqrt(common))
    b = frames.optimal_bounds(renorm)
    res = max(abs(b.lower - 1.0), abs(b.upper - 1.0))
    return res, _payload(anchors, scaled)


def _suite_anchored_vanishing(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    rng = ctx.samples_rng(suite, trial)
    weights = rng.uniform(-1.0, 1.0, size=anchors.anchors.shape[0])
    f = anchors.anchors.T @ weights
    coeffs = frames.analysis(f, fs)
    norm_f = nspace.induced_norm(nspace.project(f, space), space)
    res = max(float(np.max(np.abs(coeffs))) if coeffs.size else 0.0, norm_f)
    return res, _payload(anchors, fs, vectors={"f": f})


# --- operator theorems ------------------------------------------------------


def _suite_psd_sqrt(ctx, suite, trial):
    rng = ctx.samples_rng(suite, trial)
    k = int(rng.integers(1, 6))
    r = rng.uniform(-1.0, 1.0, size=(k, k))
    mat = r.T @ r
    root = optheory.sqrt_psd(mat)
    scale = max(1.0, float(np.max(np.abs(mat))))
    res = max(
        float(np.max(np.abs(root @ root - mat))),
        float(np.max(np.abs(root @ mat - mat @ root))),
    ) / scale
    return res, {"matrix": mat.tolist()}


def _suite_pinv_identity(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    t = fs.phi.T
    tdag = optheory.pseudo_inverse(t)
    res = float(np.max(np.abs(t @ tdag - np.eye(space.k))))
    return res, _payload(anchors, fs)


def _suite_image_invertible(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    u = gen_operator(ctx.cfg, space.k, index=_idx(suite, trial, 3), kind="invertible")
    ok = frames.is_frame(optheory.image_frame(u, fs))
    return (0.0 if ok else 1.0), _payload(anchors, fs, operators={"U": u})


def _suite_image_singular(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    u = gen_operator(ctx.cfg, space.k, index=_idx(suite, trial, 3), kind="singular")
    ok = frames.is_frame(optheory.image_frame(u, fs))
    return (1.0 if ok else 0.0), _payload(anchors, fs, operators={"U": u})


def _suite_image_conjugation(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    kind = "singular" if trial % 3 == 0 else "raw"
    u = gen_operator(ctx.cfg, space.k, index=_idx(suite, trial, 3), kind=kind)
    lhs = frames.frame_operator(optheory.image_frame(u, fs)).matrix
    rhs = optheory.image_frame_operator(u, fs).matrix
    res = float(np.max(np.abs(lhs - rhs)))
    return res, _payload(anchors, fs, operators={"U": u})


def _suite_perturb_conjugation(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    kind = "singular" if trial % 3 == 0 else "raw"
    u = gen_operator(ctx.cfg, space.k, index=_idx(suite, trial, 3), kind=kind)
    lhs = frames.frame_operator(optheory.perturb_identity(u, fs)).matrix
    shifted = np.eye(space.k) + u
    s = frames.frame_operator(fs).matrix
    res = float(np.max(np.abs(lhs - shifted @ s @ shifted.T)))
    return res, _payload(anchors, fs, operators={"U": u})


def _suite_combine_criterion(ctx, suite, trial):
    anchors, space, fs = ctx.frame(suite, trial)
    l1 = gen_operator(ctx.cfg, space.k, index=_idx(suite, trial, 3), kind="raw")
    if trial % 4 == 0:
        gs, l2 = fs, -l1  # exact cancellation: combined family must fail
    else:
        gs = gen_frame(ctx.cfg, space, len(fs), index=_idx(suite, trial, 4))
        l2 = gen_operator(ctx.cfg, space.k, index=_idx(suite, trial, 5), kind="raw")
    combined = optheory.combine(l1, fs, l2, gs)
    theta = fs.phi @ l1.T + gs.phi @ l2.T
    sv = np.linalg.svd(theta, compute_uv=False)
    predicted = bool(sv[-1] > optheory.OP_TOL * sv[0]) if sv[0] > 0 else False
    actual = frames.is_frame(combined)
    res = 0.0 if predicted == actual else 1.0
    return res, _payload(anchors, fs, operators={"L1": l1, "L2": l2})


def _suite_lower_bound_identity(ctx, suite, trial):
    anchors, _, fs = ctx.frame(suite, trial)
    surjective, candidate = optheory.surjectivity_frame_test(fs)
    if not surjective:
        return 1.0, _payload(anchors, fs)
    a = frames.optimal_bounds(fs).lower
    res = abs(a / candidate - 1.0)
    return res, _payload(anchors, fs)


def _suite_dual_pair_bounds(ctx, suite, trial):
    anchors, _, fs = ctx.frame(suite, trial)
    gs = frames.canonical_dual(fs)
    if not optheory.dual_pair_check(fs, gs):
        return 1.0, _payload(anchors, fs)
    b_fs = frames.optimal_bounds(fs)
    b_gs = frames.optimal_bounds(gs)
    res = max(
        max(0.0, 1.0 / b_gs.upper - b_fs.lower) / max(1.0, 1.0 / b_gs.upper),
        max(0.0, 1.0 / b_fs.upper - b_gs.lower) / max(1.0, 1.0 / b_fs.upper),
    )
    return res, _payload(anchors, fs)


# --- oracles, determinism, serialization ------------------------------------


def _suite_oracle_sandwich(ctx, suite, trial, samples=1000):
    anchors, _, fs = ctx.frame(suite, trial)
    mn, mx = testkit.oracle_bounds(fs, samples, seed=_idx(suite, trial, 7) ^ ctx.seed)
    b = frames.optimal_bounds(fs)
    res = max(0.0, b.lower - mn, mx - b.upper) / max(1.0, b.upper)
    return res, _payload(anchors, fs)


def _suite_determinism(ctx, suite, trial):
    d, n, m = ctx.shape(suite, trial)
    a1 = gen_anchor_set(ctx.cfg, d, n, index=_idx(suite, trial, 1))
    a2 = gen_anchor_set(ctx.cfg, d, n, index=_idx(suite, trial, 1))
    same = np.array_equal(a1.anchors, a2.anchors)
    if same:
        space = nspace.build_induced_space(a1)
        f1 = gen_frame(ctx.cfg, space, m, index=_idx(suite, trial, 2))
        f2 = gen_frame(ctx.cfg, space, m, index=_idx(suite, trial, 2))
        same = np.array_equal(f1.vectors, f2.vectors)
    return (0.0 if same else 1.0), _payload(a1)


def _suite_roundtrip(ctx, suite, trial):
    anchors, _, fs = ctx.frame(suite, trial)
    f = gen_vector(ctx.cfg, anchors.dimension, index=_idx(suite, trial, 3))
    inst = instances.Instance(
        dimension=anchors.dimension,
        anchors=anchors.anchors,
        frame=fs.vectors,
        vectors={"f": f},
    )
    reread = instances.loads_instance(instances.dumps_instance(inst))
    space2 = reread.induced_space()
    fs2 = reread.frame_system(space2)
    b1 = frames.optimal_bounds(fs)
    b2 = frames.optimal_bounds(fs2)
    c1 = frames.analysis(f, fs)
    c2 = frames.analysis(reread.vectors["f"], fs2)
    res = max(
        abs(b1.lower - b2.lower),
        abs(b1.upper - b2.upper),
        float(np.max(np.abs(c1 - c2))),
    )
    return res, _payload(anchors, fs, vectors={"f": f})


_SUITES = [
    ("gram_projection_agreement", _suite_gram_projection, 1e-9),
    ("cauchy_schwarz", _suite_cauchy_schwarz, 1e-9),
    ("polarization", _suite_polarization, 1e-9),
    ("parallelogram", _suite_parallelogram, 1e-9),
    ("sup_formula", _suite_sup_formula, 1e-9),
    ("anchor_permutation", _suite_anchor_permutation, 1e-12),
    ("norm_homogeneity", _suite_homogeneity, 1e-12),
    ("frame_inequality", _suite_frame_inequality, 1e-9),
    ("frame_quadratic_form", _suite_quadratic_form, 1e-9),
    ("operator_order", _suite_operator_order, 1e-9),
    ("inverse_operator_order", _suite_inverse_order, 1e-9),
    ("dual_reciprocity", _suite_dual_reciprocity, 1e-8),
    ("reconstruction", _suite_reconstruction, 1e-8),
    ("tight_scaling", _suite_tight_scaling, 1e-10),
    ("anchored_vanishing", _suite_anchored_vanishing, 1e-12),
    ("psd_sqrt", _suite_psd_sqrt, 1e-9),
    ("pinv_identity", _suite_pinv_identity, 1e-9),
    ("image_invertible", _suite_image_invertible, 0.5),
    ("image_singular", _suite_image_singular, 0.5),
    ("image_conjugation", _suite_image_conjugation, 1e-10),
    ("perturb_conjugation", _suite_perturb_conjugation, 1e-10),
    ("combine_criterion", _suite_combine_criterion, 0.5),
    ("lower_bound_identity", _suite_lower_bound_identity, 1e-7),
    ("dual_pair_bounds", _suite_dual_pair_bounds, 1e-8),
    ("oracle_sandwich", _suite_oracle_sandwich, 1e-9),
    ("generator_determinism", _suite_determinism, 0.5),
    ("instance_roundtrip", _suite_roundtrip, 1e-15),
]

SUITE_NAMES = [name for name, _, _ in _SUITES]


def run(seed: int, trials: int, d_max: int = 6, m_max: int = 12, cond_cap: float = 1e3):
    """Run every suite for the given number of trials.

    Returns a list of SuiteResult; a failing suite carries the first
    counterexample instance, serialized in the instance-document layout.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if trials >= _MAX_TRIALS:
        raise ValueError(f"trials must be below {_MAX_TRIALS}")
    if d_max < 2:
        raise ValueError("d_max must be at least 2")
    ctx = _Ctx(seed, d_max, m_max, cond_cap)
    results = []
    for sidx, (name, fn, tol) in enumerate(_SUITES):
        failures = 0
        worst = 0.0
        counterexample = None
        for trial in range(trials):
            try:
                residual, payload = fn(ctx, sidx, trial)
            except NFrameError as exc:
                residual, payload = float("inf"), {"error": str(exc)}
            worst = max(worst, residual)
            if not residual <= tol:
                failures += 1
                if counterexample is None:
                    counterexample = {"trial": trial, "residual": residual, "instance": payload}
        results.append(
            SuiteResult(
                name=name,
                trials=trials,
                failures=failures,
                worst_residual=worst,
                tolerance=tol,
                counterexample=counterexample,
            )
        )
    return results
