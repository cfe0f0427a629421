"""Frames relative to an anchor, optimal bounds, and the canonical dual.

A finite family {f_i} is a frame for the induced space when the analysis
coefficients <f, f_i | anchors> control ||f||_F from both sides.  The
frame operator makes this quantitative, and its inverse produces the
canonical dual frame and exact reconstruction.
"""

import numpy as np

from nframe import (
    AnchorSet,
    FrameSystem,
    analysis,
    build_induced_space,
    canonical_dual,
    frame_operator,
    is_frame,
    optimal_bounds,
    oracle_bounds,
    project,
    reconstruct,
    synthesis,
)

space = build_induced_space(AnchorSet([[0.0, 0.0, 1.0]]))
fs = FrameSystem(space=space, vectors=np.array([[1, 0, 0], [0, 1, 0], [1, 1, 0.0]]))

S = frame_operator(fs)
print("frame operator S =\n", S.matrix)
print("eigenvalues:", S.eigenvalues)

b = optimal_bounds(fs)
print("optimal bounds (A, B) =", (b.lower, b.upper))
print("is a frame:", is_frame(fs))

# sampling the frame-inequality ratio confirms the spectral bounds
mn, mx = oracle_bounds(fs, 10_000, seed=1)
print(f"sampled ratio range: [{mn:.6f}, {mx:.6f}]  (must sit inside [A, B])")

# analysis and synthesis
f = np.array([5.0, -2.0, 7.0])
coeffs = analysis(f, fs)
print("\nanalysis coefficients of f:", coeffs)
print("synthesis of those coefficients:", synthesis(coeffs, fs))
print("note: synthesis . analysis is the frame operator, not the identity")

# the canonical dual undoes the frame operator
dual = canonical_dual(fs)
print("\ncanonical dual vectors:\n", dual.vectors)
db = optimal_bounds(dual)
print("dual bounds:", (db.lower, db.upper), " (reciprocals of (B, A))")

# exact reconstruction: f = sum <f, S^-1 f_i | a> f_i in the induced space
u = reconstruct(f, fs)
print("\nreconstructed coordinates:", u)
print("project(f)              :", project(f, space))

# the swapped expansion f = sum <f, f_i | a> S^-1 f_i agrees
swapped = synthesis(analysis(f, fs), dual)
print("swapped expansion       :", swapped)
