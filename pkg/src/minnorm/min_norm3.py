"""Closed-form minimal-norm trace-free part of a rank-3 tensor.

Among all tensors ``T + sum_a c_a E_a``, where the ``E_a`` are the nine
trace-times-delta elements of :func:`~minnorm.tensor_core.ansatz_basis3`,
the one of least Frobenius norm uses two constants::

    x1 = y2 = z3 = -(n+1) / ((n-1)(n+2))      (trace on its own slot)
    every other coefficient = 1 / ((n-1)(n+2))
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimTooSmall
from .tensor_core import LABELS3, ansatz_basis3, check_tensor, norm2, traces3

__all__ = ["CoefficientTable3", "coeffs3", "project3", "norm_formula3"]

_DIAG_LABELS = ("x1", "y2", "z3")


@dataclass(frozen=True)
class CoefficientTable3:
    dim: int
    diag: float
    off: float

    def vector(self) -> np.ndarray:
        """Coefficients aligned with ``LABELS3``."""
        return np.array([self.diag if lab in _DIAG_LABELS else self.off for lab in LABELS3])


def coeffs3(dim: int) -> CoefficientTable3:
    if dim < 2:
        raise DimTooSmall(f"rank-3 closed form needs dim >= 2, got {dim}")
    den = (dim - 1) * (dim + 2)
    return CoefficientTable3(dim=dim, diag=-(dim + 1) / den, off=1.0 / den)


def project3(T) -> np.ndarray:
    """Minimal-norm trace-free tensor in the affine family through ``T``.

    Applied unconditionally: when the trace vectors are linearly
    dependent the coefficients stop being unique but the projection does
    not change.
    """
    T = check_tensor(T, 3)
    table = coeffs3(T.shape[0])
    return T + ansatz_basis3(T).combine(table.vector())


def norm_formula3(T) -> float:
    """Squared norm of :func:`project3` from the traces alone."""
    T = check_tensor(T, 3)
    n = T.shape[0]
    t1, t2, t3 = traces3(T).vectors()
    den = (n - 1) * (n + 2)
    squares = t1 @ t1 + t2 @ t2 + t3 @ t3
    cross = t1 @ t2 + t1 @ t3 + t2 @ t3
    return norm2(T) - (n + 1) / den * squares + 2.0 / den * cross
