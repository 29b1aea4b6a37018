# # Trace-free part of a rank-3 tensor
#
# A rank-3 tensor T on R^n has three traces, one per pair of slots. Removing
# them with the smallest possible change gives the trace-free part F.
# The correction is a combination of "trace times Kronecker delta" terms
# with fixed coefficients depending only on n.

import numpy as np

from minnorm import coeffs3, norm2, norm_formula3, project3, traces3

rng = np.random.default_rng(0)
n = 4
T = rng.standard_normal((n, n, n))

# ## The coefficients
#
# Nine numbers, but only two distinct values: one when a trace is placed
# back on its own slot pair, one otherwise.

table = coeffs3(n)
print(f"n={n}: own-slot coefficient {table.diag:+.6f}, cross coefficient {table.off:+.6f}")

# ## Projecting

F = project3(T)
print("largest trace component before:", traces3(T).max_abs())
print("largest trace component after: ", traces3(F).max_abs())

# The squared norm of F can be read off from T and its traces alone,
# without building F.

print("||F||^2 direct :", norm2(F))
print("||F||^2 formula:", norm_formula3(T))
print("||T||^2        :", norm2(T))

# ## It really is a projection
#
# Projecting twice changes nothing, and what was removed is orthogonal to
# what was kept.

print("idempotence gap:", np.abs(project3(F) - F).max())
print("<F, T - F>     :", float(np.sum(F * (T - F))))
