"""Tight frames and canonicalization by the inverse square root.

A tight frame has equal optimal bounds, so reconstruction needs no matrix
inverse: f = (1/A) sum <f, f_i | a> f_i.  Any frame becomes normalized
tight (A = B = 1) after multiplying its vectors by S^{-1/2}.
"""

import numpy as np

from nframe import (
    AnchorSet,
    FrameSystem,
    analysis,
    build_induced_space,
    canonical_tight,
    frame_operator,
    gen_anchor_set,
    gen_frame,
    GenConfig,
    is_tight,
    optimal_bounds,
    project,
    synthesis,
    sqrt_psd,
)

space = build_induced_space(AnchorSet([[0.0, 0.0, 1.0]]))
fs = FrameSystem(space=space, vectors=np.array([[1, 0, 0], [0, 1, 0], [1, 1, 0.0]]))

flag, bound = is_tight(fs)
print("starting frame tight?", flag)

tight = canonical_tight(fs)
print("canonical tight vectors:\n", tight.vectors)
flag, bound = is_tight(tight)
print("tight now?", flag, " common bound:", bound)
print("frame operator ~ identity:\n", frame_operator(tight).matrix)

# tight reconstruction is a plain weighted sum
f = np.array([2.0, -1.0, 5.0])
rec = synthesis(analysis(f, tight), tight) / bound
print("\n(1/A) sum <f, f_i|a> f_i =", rec)
print("project(f)               =", project(f, space))

# sqrt_psd is the workhorse: the unique PSD square root
S = frame_operator(fs).matrix
R = sqrt_psd(S)
print("\nsqrt of the frame operator:\n", R)
print("R @ R ==\n", R @ R)

# a randomly generated frame canonicalizes just as well
cfg = GenConfig(seed=2024)
anchors = gen_anchor_set(cfg, 6, 3)
space6 = build_induced_space(anchors)
random_fs = gen_frame(cfg, space6, 9)
b = optimal_bounds(random_fs)
print(f"\nrandom frame in R^6: bounds ({b.lower:.4f}, {b.upper:.4f})")
tb = optimal_bounds(canonical_tight(random_fs))
print(f"after canonicalization: bounds ({tb.lower:.12f}, {tb.upper:.12f})")
