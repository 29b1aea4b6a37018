"""Curvature-like test inputs and the classical Weyl and Cotton formulas.

Everything is pointwise linear algebra: algebraic curvature tensors come
from Kulkarni-Nomizu products of symmetric matrices, and the Cotton
input is built from a synthetic stand-in for the covariant derivative of
the Ricci tensor that obeys the contracted second Bianchi identity.

Sign convention: ``Ric[i, j] = sum_k R[k, i, k, j]``, so the round
sphere ``R = delta_ik delta_jl - delta_il delta_jk`` has positive scalar
curvature ``n(n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimTooSmall, ShapeMismatch
from .tensor_core import check_tensor, traces4

__all__ = [
    "AlgebraicCurvature",
    "CottonInput",
    "kulkarni_nomizu",
    "random_algebraic_curvature",
    "curvature_residuals",
    "ricci",
    "scalar_curvature",
    "weyl",
    "gen_cotton_input",
    "cotton",
]


@dataclass(frozen=True)
class AlgebraicCurvature:
    tensor: np.ndarray

    @property
    def n(self) -> int:
        return self.tensor.shape[0]


@dataclass(frozen=True)
class CottonInput:
    """``t[i, j, k]`` models ``R_{ik,j} - R_{ij,k}``; ``r`` models ``dR``."""

    t: np.ndarray
    r: np.ndarray

    @property
    def n(self) -> int:
        return self.t.shape[0]


def _symmetric(h: np.ndarray, name: str) -> np.ndarray:
    h = np.asarray(h, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ShapeMismatch(f"{name} must be square, got shape {h.shape}")
    if not np.allclose(h, h.T, rtol=0.0, atol=1e-12 * max(1.0, np.abs(h).max())):
        raise ShapeMismatch(f"{name} must be symmetric")
    return h


def kulkarni_nomizu(h, k) -> AlgebraicCurvature:
    h = _symmetric(h, "h")
    k = _symmetric(k, "k")
    if h.shape != k.shape:
        raise ShapeMismatch(f"h and k differ in shape: {h.shape} vs {k.shape}")
    R = (
        np.einsum("ik,jl->ijkl", h, k)
        + np.einsum("jl,ik->ijkl", h, k)
        - np.einsum("il,jk->ijkl", h, k)
        - np.einsum("jk,il->ijkl", h, k)
    )
    return AlgebraicCurvature(R)


def random_algebraic_curvature(n: int, seed: int, terms: int = 3) -> AlgebraicCurvature:
    """Sum of ``terms`` Kulkarni-Nomizu products of random symmetric matrices."""
    if n < 3:
        raise DimTooSmall(f"curvature generator needs n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    R = np.zeros((n,) * 4)
    for _ in range(terms):
        a, b = rng.standard_normal((2, n, n))
        R += kulkarni_nomizu(a + a.T, b + b.T).tensor
    return AlgebraicCurvature(R)


def curvature_residuals(R) -> dict[str, float]:
    """Max violation of each algebraic curvature identity."""
    R = np.asarray(getattr(R, "tensor", R), dtype=float)
    return {
        "antisym12": float(np.abs(R + R.transpose(1, 0, 2, 3)).max()),
        "antisym34": float(np.abs(R + R.transpose(0, 1, 3, 2)).max()),
        "pair": float(np.abs(R - R.transpose(2, 3, 0, 1)).max()),
        # R_ijkl + R_iklj + R_iljk
        "bianchi": float(np.abs(R + R.transpose(0, 2, 3, 1) + R.transpose(0, 3, 1, 2)).max()),
    }


def ricci(R: AlgebraicCurvature) -> np.ndarray:
    return np.array(traces4(R.tensor).m13)


def scalar_curvature(R: AlgebraicCurvature) -> float:
    return float(np.trace(ricci(R)))


def weyl(R: AlgebraicCurvature) -> np.ndarray:
    Rt = check_tensor(R.tensor, 4)
    n = Rt.shape[0]
    Ric = ricci(R)
    scal = float(np.trace(Ric))
    d = np.eye(n)
    ric_delta = (
        np.einsum("jl,ik->ijkl", Ric, d)
        - np.einsum("jk,il->ijkl", Ric, d)
        - np.einsum("il,jk->ijkl", Ric, d)
        + np.einsum("ik,jl->ijkl", Ric, d)
    )
    dd = np.einsum("jl,ik->ijkl", d, d) - np.einsum("jk,il->ijkl", d, d)
    return Rt - ric_delta / (n - 2) + scal / ((n - 1) * (n - 2)) * dd


def gen_cotton_input(n: int, seed: int) -> CottonInput:
    """Random ``d ~ nabla Ric`` obeying ``div Ric = dR / 2``, then its skew part.

    ``d[i, j, k]`` stands for ``R_{ij,k}``: symmetric in ``(i, j)``, with
    a delta correction making ``sum_j d[i, j, j] = sum_j d[j, j, i] / 2``.
    """
    if n < 2:
        raise DimTooSmall(f"cotton generator needs n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    d = rng.standard_normal((n, n, n))
    d = 0.5 * (d + d.transpose(1, 0, 2))
    div = np.einsum("ijj->i", d)
    grad = np.einsum("jji->i", d)
    # adding p_i d_jk + p_j d_ik shifts div by (n+1)p and grad by 2p
    p = -(div - 0.5 * grad) / n
    eye = np.eye(n)
    d = d + np.einsum("i,jk->ijk", p, eye) + np.einsum("j,ik->ijk", p, eye)
    t = d.transpose(0, 2, 1) - d
    return CottonInput(t=t, r=np.einsum("jji->i", d))


def cotton(inp: CottonInput) -> np.ndarray:
    n = inp.n
    d = np.eye(n)
    corr = np.einsum("j,ik->ijk", inp.r, d) - np.einsum("k,ij->ijk", inp.r, d)
    return inp.t - corr / (2 * (n - 1))
