"""Dense covariant tensors over R^n: construction, traces, inner products
and the trace-times-delta families the projections correct along.

Tensors are plain numpy arrays of shape ``(n,) * order``.  Row-major
(C-order) flattening gives the on-disk layout: entry ``(i, j, k)`` sits
at ``i*n**2 + j*n + k``.  Arrays returned from this module are marked
read-only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimTooSmall, LengthMismatch, ShapeMismatch

__all__ = [
    "MIN_DIM",
    "TRACE_PAIRS",
    "LABELS3",
    "LABELS4",
    "TraceSet3",
    "TraceSet4",
    "AnsatzBasis",
    "new_tensor",
    "check_tensor",
    "kronecker2",
    "delta_delta",
    "traces3",
    "traces4",
    "inner",
    "norm2",
    "ansatz_basis3",
    "ansatz_basis4",
    "placement4",
    "label4",
]

# Smallest dimension for which the closed forms are defined:
# rank 3 divides by (n-1)(n+2), rank 4 by (n-2).
MIN_DIM = {3: 2, 4: 3}

# Slot pairs contracted by the six rank-4 traces, in canonical order.
TRACE_PAIRS = ("12", "13", "14", "23", "24", "34")
_LETTERS4 = ("x", "y", "z", "u", "v", "w")
_EINSUM_TRACE4 = {
    "12": "kkij->ij",
    "13": "kikj->ij",
    "14": "kijk->ij",
    "23": "ikkj->ij",
    "24": "ikjk->ij",
    "34": "ijkk->ij",
}

# Free-index placements of a trace matrix M in a rank-4 element
# M_{ab} delta_{cd}.  Subscript variables (x_1..x_6) use M in source
# order, superscript ones (x^1..x^6) use its transpose.
SUB_PLACEMENTS = ("ij", "ik", "il", "jk", "jl", "kl")
SUP_PLACEMENTS = ("ji", "ki", "li", "kj", "lj", "lk")
DELTA_DELTA = ("ij,kl", "ik,jl", "il,jk")

LABELS3 = ("x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3")
LABELS4 = tuple(
    lab
    for c in _LETTERS4
    for lab in [f"{c}_{p}" for p in range(1, 7)] + [f"{c}^{p}" for p in range(1, 7)]
) + ("r", "s", "t")


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def new_tensor(order: int, dim: int, data) -> np.ndarray:
    """Build a validated, read-only tensor from flat row-major data.

    Raises
    ------
    LengthMismatch
        ``len(data) != dim ** order``.
    DimTooSmall
        ``dim`` below the closed-form minimum for ``order``.
    """
    if order not in MIN_DIM:
        raise ShapeMismatch(f"order must be 3 or 4, got {order}")
    flat = np.asarray(data, dtype=float).ravel()
    if flat.size != dim**order:
        raise LengthMismatch(f"expected {dim}**{order} = {dim**order} values, got {flat.size}")
    if dim < MIN_DIM[order]:
        raise DimTooSmall(f"order-{order} tensors need dim >= {MIN_DIM[order]}, got {dim}")
    return _frozen(flat.reshape((dim,) * order))


def check_tensor(T, order: int | None = None, closed_form: bool = True) -> np.ndarray:
    """Coerce ``T`` to a float array and check it is a cube of the right order.

    With ``closed_form`` the dimension must also clear ``MIN_DIM``.
    """
    T = np.asarray(T, dtype=float)
    if order is not None and T.ndim != order:
        raise ShapeMismatch(f"expected an order-{order} tensor, got ndim={T.ndim}")
    if T.ndim not in MIN_DIM or len(set(T.shape)) != 1:
        raise ShapeMismatch(f"not a rank-3/4 cubic tensor: shape {T.shape}")
    if closed_form and T.shape[0] < MIN_DIM[T.ndim]:
        raise DimTooSmall(f"order-{T.ndim} tensors need dim >= {MIN_DIM[T.ndim]}, got {T.shape[0]}")
    return T


def kronecker2(dim: int) -> np.ndarray:
    """The Kronecker delta as an ``dim x dim`` identity matrix."""
    return np.eye(dim)


def delta_delta(dim: int, pattern: str) -> np.ndarray:
    """Rank-4 product of two deltas, e.g. ``pattern="ik,jl"`` for d_ik d_jl."""
    d = np.eye(dim)
    return np.einsum(f"{pattern}->ijkl", d, d)


@dataclass(frozen=True)
class TraceSet3:
    """The three single traces of a rank-3 tensor."""

    t1: np.ndarray
    t2: np.ndarray
    t3: np.ndarray

    def vectors(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.t1, self.t2, self.t3)

    def gram(self) -> np.ndarray:
        """3x3 matrix of inner products between the trace vectors."""
        V = np.stack(self.vectors())
        return V @ V.T

    def max_abs(self) -> float:
        return float(max(np.abs(v).max(initial=0.0) for v in self.vectors()))


@dataclass(frozen=True)
class TraceSet4:
    """Six single-trace matrices and three double-trace scalars of a rank-4 tensor.

    ``m13[i, j] = sum_k T[k, i, k, j]`` and so on; ``d1324`` contracts
    slots (1,3) and (2,4) together.
    """

    m12: np.ndarray
    m13: np.ndarray
    m14: np.ndarray
    m23: np.ndarray
    m24: np.ndarray
    m34: np.ndarray
    d1234: float
    d1324: float
    d1423: float

    def matrices(self) -> dict[str, np.ndarray]:
        return {p: getattr(self, "m" + p) for p in TRACE_PAIRS}

    def doubles(self) -> np.ndarray:
        return np.array([self.d1234, self.d1324, self.d1423])

    def max_abs(self) -> float:
        single = max(np.abs(m).max(initial=0.0) for m in self.matrices().values())
        return float(max(single, np.abs(self.doubles()).max()))


def traces3(T) -> TraceSet3:
    T = check_tensor(T, 3, closed_form=False)
    return TraceSet3(
        t1=_frozen(np.einsum("ill->i", T)),
        t2=_frozen(np.einsum("lil->i", T)),
        t3=_frozen(np.einsum("lli->i", T)),
    )


def traces4(T) -> TraceSet4:
    T = check_tensor(T, 4, closed_form=False)
    mats = {"m" + p: _frozen(np.einsum(_EINSUM_TRACE4[p], T)) for p in TRACE_PAIRS}
    return TraceSet4(
        **mats,
        d1234=float(np.einsum("llkk->", T)),
        d1324=float(np.einsum("lklk->", T)),
        d1423=float(np.einsum("lkkl->", T)),
    )


def inner(A, B) -> float:
    """Frobenius inner product of two tensors of equal shape."""
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.shape != B.shape:
        raise ShapeMismatch(f"shapes differ: {A.shape} vs {B.shape}")
    return float(np.dot(A.ravel(), B.ravel()))


def norm2(A) -> float:
    """Squared Frobenius norm."""
    return inner(A, A)


@dataclass(frozen=True)
class AnsatzBasis:
    """Ordered trace-times-delta tensors spanning the correction space.

    ``elements[a]`` is the tensor multiplied by the coefficient named
    ``labels[a]``.
    """

    order: int
    dim: int
    elements: np.ndarray
    labels: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def matrix(self) -> np.ndarray:
        """Elements as rows of an ``(m, n**order)`` matrix."""
        return self.elements.reshape(len(self.labels), -1)

    def combine(self, coeffs) -> np.ndarray:
        """Sum of ``coeffs[a] * elements[a]``."""
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.shape != (len(self.labels),):
            raise ShapeMismatch(f"need {len(self.labels)} coefficients, got shape {coeffs.shape}")
        return np.tensordot(coeffs, self.elements, axes=1)

    def element(self, label: str) -> np.ndarray:
        return self.elements[self.labels.index(label)]


def ansatz_basis3(T) -> AnsatzBasis:
    T = check_tensor(T, 3, closed_form=False)
    n = T.shape[0]
    d = np.eye(n)
    elems = []
    for t in traces3(T).vectors():
        elems.append(np.einsum("i,jk->ijk", t, d))  # t_i d_jk
        elems.append(np.einsum("j,ik->ijk", t, d))  # t_j d_ik
        elems.append(np.einsum("k,ij->ijk", t, d))  # t_k d_ij
    return AnsatzBasis(3, n, _frozen(np.array(elems)), LABELS3)


def placement4(M: np.ndarray, pattern: str) -> np.ndarray:
    """``M_{pattern} * delta_{rest}`` as a rank-4 tensor over ``ijkl``."""
    rest = "".join(c for c in "ijkl" if c not in pattern)
    return np.einsum(f"{pattern},{rest}->ijkl", M, np.eye(M.shape[0]))


def ansatz_basis4(T) -> AnsatzBasis:
    T = check_tensor(T, 4, closed_form=False)
    n = T.shape[0]
    mats = traces4(T).matrices()
    elems = [placement4(mats[p], pat) for p in TRACE_PAIRS for pat in SUB_PLACEMENTS + SUP_PLACEMENTS]
    elems += [delta_delta(n, pat) for pat in DELTA_DELTA]
    return AnsatzBasis(4, n, _frozen(np.array(elems)), LABELS4)


def label4(pair: str, pattern: str) -> str:
    """Coefficient label for trace ``pair`` placed on free indices ``pattern``."""
    letter = _LETTERS4[TRACE_PAIRS.index(pair)]
    if pattern in SUB_PLACEMENTS:
        return f"{letter}_{SUB_PLACEMENTS.index(pattern) + 1}"
    return f"{letter}^{SUP_PLACEMENTS.index(pattern) + 1}"
