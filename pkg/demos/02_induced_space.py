"""From a semi-inner product to a genuine Hilbert space.

Relative to an anchor tuple, all of R^d collapses onto the orthogonal
complement of the anchors: cosets x + span(anchors) become points of a
k-dimensional Hilbert space with inner product gamma * dot.  This script
builds that space and shows that projections respect cosets exactly.
"""

import numpy as np

from nframe import (
    AnchorSet,
    build_induced_space,
    induced_inner,
    lift,
    n_inner,
    project,
)

rng = np.random.default_rng(0)

F = AnchorSet(rng.uniform(-1, 1, size=(2, 5)))  # two random anchors in R^5
space = build_induced_space(F)
print("ambient dimension:", space.dimension)
print("induced dimension k =", space.k)
print("gamma =", space.gamma)
print("basis rows orthonormal:", np.allclose(space.basis @ space.basis.T, np.eye(space.k)))
print("basis annihilates anchors:", np.allclose(space.basis @ F.anchors.T, 0.0))

# projecting picks the canonical coset representative
x = rng.uniform(-1, 1, size=5)
u = project(x, space)
print("\nx projects to", u)

# shifting x by any anchor combination lands in the same coset
shift = F.anchors.T @ np.array([2.5, -1.75])
print("project(x + anchor shift) =", project(x + shift, space))
print("coset-invariant:", np.allclose(u, project(x + shift, space)))

# the induced inner product reproduces the n-inner product of representatives
y = rng.uniform(-1, 1, size=5)
v = project(y, space)
print("\ngamma * (u . v)      =", induced_inner(u, v, space))
print("n_inner(x, y | F)    =", n_inner(x, y, F))

# lifting returns the zero-anchor-component representative of a coset
w = lift(u, space)
print("\nlift(project(x)) =", w)
print("it is orthogonal to the anchors:", np.allclose(F.anchors @ w, 0.0))
print("project(lift(u)) == u:", np.allclose(project(w, space), u))
