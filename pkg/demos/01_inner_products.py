"""Evaluating n-inner products and n-norms.

The n-inner product of x and y relative to a tuple of anchor vectors is a
bordered Gram determinant; the n-norm is the square root of its diagonal.
Vectors inside the anchor span are invisible to this geometry.
"""

import numpy as np

from nframe import AnchorSet, gram_det, n_inner, n_norm

# one anchor in R^3: the classical area-like 2-inner product
F = AnchorSet([[0.0, 0.0, 1.0]])
print("anchor Gram determinant gamma =", F.gamma)

x = np.array([1.0, 2.0, 3.0])
y = np.array([4.0, 5.0, 6.0])
print("<x, y | e3> =", n_inner(x, y, F))  # <x,y> - x3*y3 = 14
print("||x, e3||   =", n_norm(x, F))      # sqrt(5): length of x with e3 removed

# anything in the anchor span has norm zero
print("||7*e3, e3|| =", n_norm([0.0, 0.0, 7.0], F))

# scaling an anchor scales gamma and the whole geometry with it
F4 = AnchorSet([[0.0, 0.0, 2.0]])
print("\ngamma for anchor (0,0,2):", F4.gamma)
print("<e1, e1 | (0,0,2)> =", n_inner([1, 0, 0], [1, 0, 0], F4))

# the Cauchy-Schwarz inequality is strict unless x, y are parallel mod span(F)
lhs = abs(n_inner(x, y, F))
rhs = n_norm(x, F) * n_norm(y, F)
print(f"\nCauchy-Schwarz: |<x,y|a>| = {lhs:.6f} <= {rhs:.6f} = ||x,a|| ||y,a||")

# polarization recovers the inner product from norms alone
pol = 0.25 * (n_norm(x + y, F) ** 2 - n_norm(x - y, F) ** 2)
print(f"polarization:   {pol:.12f} vs direct {n_inner(x, y, F):.12f}")

# two anchors in R^4: a genuine 3-inner product
G = AnchorSet([[0, 0, 1, 0], [0, 0, 0, 1.0]])
print("\n3-inner product in R^4, gamma =", G.gamma)
print("<e1, e2 | e3, e4> =", n_inner([1, 0, 0, 0], [0, 1, 0, 0], G))
print("Gram determinant of {e1, e2}:", gram_det([[1, 0, 0, 0], [0, 1, 0, 0]]))
