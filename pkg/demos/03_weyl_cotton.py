# # Weyl and Cotton tensors as minimal-norm projections
#
# Two classical geometric tensors come out of the same projection.
# The Weyl tensor is the trace-free part of an algebraic curvature tensor.
# The Cotton tensor is the trace-free part of a derivative-built rank-3 tensor.

import numpy as np

from minnorm import (
    cotton,
    gen_cotton_input,
    norm2,
    project3,
    project4,
    random_algebraic_curvature,
    ricci,
    scalar_curvature,
    weyl,
)
from minnorm.geometry import curvature_residuals

# ## Weyl
#
# Random algebraic curvature tensors are built from Kulkarni-Nomizu products
# of symmetric matrices, so they have all the Riemann symmetries.

for n in (3, 4, 5):
    R = random_algebraic_curvature(n, seed=n)
    gap = np.sqrt(norm2(project4(R.tensor) - weyl(R)))
    print(f"n={n}: symmetry residual {max(curvature_residuals(R).values()):.1e}, "
          f"scalar curvature {scalar_curvature(R):+.4f}, "
          f"||W|| = {np.sqrt(norm2(weyl(R))):.3e}, ||project4(R) - W|| = {gap:.1e}")

# In three dimensions the Weyl tensor vanishes identically: the curvature is
# entirely determined by its Ricci part.

R3 = random_algebraic_curvature(3, seed=11)
print("Ricci in 3d:\n", np.round(ricci(R3), 4))

# ## Cotton

for n in (3, 4):
    inp = gen_cotton_input(n, seed=7)
    gap = np.sqrt(norm2(project3(inp.t) - cotton(inp)))
    print(f"n={n}: ||project3(t) - C|| = {gap:.1e}")
