"""Finite frame theory relative to an anchor tuple.

Evaluate Gram-determinant n-inner products on R^d, pass to the Hilbert
space induced by an anchor tuple, and work with frames there: analysis
and synthesis, optimal bounds, canonical dual and tight frames, exact
reconstruction, operator images, and randomized certification of the
underlying theorems.
"""

from .errors import (
    DegenerateAnchorError,
    DimensionMismatchError,
    GenerationError,
    InstanceFormatError,
    NFrameError,
    SingularFrameOperatorError,
    UnstableNormError,
)
from .frames import (
    FrameBounds,
    FrameOperator,
    FrameSystem,
    analysis,
    canonical_dual,
    canonical_tight,
    frame_operator,
    is_bessel,
    is_frame,
    is_tight,
    optimal_bounds,
    reconstruct,
    synthesis,
)
from .instances import Instance, dumps_instance, load_instance, loads_instance, save_instance
from .nspace import (
    AmbientSpace,
    AnchorSet,
    InducedSpace,
    build_induced_space,
    gram_det,
    induced_inner,
    induced_norm,
    lift,
    n_inner,
    n_inner_many,
    n_norm,
    project,
)
from .optheory import (
    combine,
    dual_pair_check,
    image_frame,
    image_frame_operator,
    perturb_identity,
    pseudo_inverse,
    sqrt_psd,
    surjectivity_frame_test,
)
from .testkit import GenConfig, gen_anchor_set, gen_frame, gen_operator, gen_vector, oracle_bounds

__version__ = "0.1.0"

__all__ = [
    "AmbientSpace",
    "AnchorSet",
    "InducedSpace",
    "FrameSystem",
    "FrameOperator",
    "FrameBounds",
    "GenConfig",
    "Instance",
    "NFrameError",
    "DimensionMismatchError",
    "DegenerateAnchorError",
    "UnstableNormError",
    "SingularFrameOperatorError",
    "GenerationError",
    "InstanceFormatError",
    "gram_det",
    "n_inner",
    "n_inner_many",
    "n_norm",
    "build_induced_space",
    "project",
    "lift",
    "induced_inner",
    "induced_norm",
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
    "sqrt_psd",
    "pseudo_inverse",
    "image_frame",
    "image_frame_operator",
    "perturb_identity",
    "combine",
    "surjectivity_frame_test",
    "dual_pair_check",
    "gen_anchor_set",
    "gen_frame",
    "gen_vector",
    "gen_operator",
    "oracle_bounds",
    "load_instance",
    "loads_instance",
    "save_instance",
    "dumps_instance",
]
