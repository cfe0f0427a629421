"""Frames under bounded operators: images, perturbations, combinations.

The image {U f_i} of a frame is again a frame exactly when U is
invertible on the induced space; the frame operator transforms by
conjugation.  Combining two Bessel families with operators is a frame
exactly when the stacked analysis map keeps full column rank, and a pair
whose mixed synthesis gives the identity certifies both as frames.
"""

import numpy as np

from nframe import (
    AnchorSet,
    FrameSystem,
    build_induced_space,
    canonical_dual,
    combine,
    dual_pair_check,
    frame_operator,
    image_frame,
    image_frame_operator,
    is_frame,
    optimal_bounds,
    perturb_identity,
    pseudo_inverse,
    surjectivity_frame_test,
)

space = build_induced_space(AnchorSet([[0.0, 0.0, 1.0]]))
fs = FrameSystem(space=space, vectors=np.array([[1, 0, 0], [0, 1, 0], [1, 1, 0.0]]))
S = frame_operator(fs).matrix

# invertible image: bounds scale inside [A/||U^-1||^2, B ||U||^2]
U = np.array([[2.0, 0.0], [0.0, 2.0]])
image = image_frame(U, fs)
print("image under 2I is a frame:", is_frame(image))
print("its bounds:", optimal_bounds(image))
print("conjugated operator U S U^T =\n", image_frame_operator(U, fs).matrix)

# a rank-deficient operator destroys the lower bound
P = np.array([[1.0, 0.0], [0.0, 0.0]])
print("\nimage under a rank-1 projector is a frame:", is_frame(image_frame(P, fs)))

# perturbing by I + U
zero = np.zeros((2, 2))
print("\nperturbation by U = 0 keeps the coordinates:",
      np.allclose(perturb_identity(zero, fs).phi, fs.phi))
print("perturbation by U = -I annihilates:",
      is_frame(perturb_identity(-np.eye(2), fs)))

# combining two families with operators
gs = FrameSystem(space=space, vectors=np.array([[0, 1, 0], [1, 0, 0], [2, -1, 0.0]]))
combined = combine(np.eye(2), fs, 0.5 * np.eye(2), gs)
print("\ncombined family frame?", is_frame(combined), optimal_bounds(combined))
cancel = combine(np.eye(2), fs, -np.eye(2), fs)
print("self-cancellation frame?", is_frame(cancel))

# surjectivity of synthesis certifies the lower bound via the pseudo-inverse
surjective, certified = surjectivity_frame_test(fs)
print("\nsynthesis surjective:", surjective)
print("1 / ||T_dagger||^2 =", certified, " (the optimal lower bound)")
print("pseudo-inverse of the synthesis matrix:\n", pseudo_inverse(fs.phi.T))

# a frame and its canonical dual reproduce the identity
dual = canonical_dual(fs)
print("\nframe + canonical dual are a dual pair:", dual_pair_check(fs, dual))
print("frame with itself:", dual_pair_check(fs, fs))
