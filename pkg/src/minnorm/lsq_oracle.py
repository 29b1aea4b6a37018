"""Numerical minimiser used to check the closed forms.

The objective ``||T + sum_a c_a E_a||^2`` is quadratic in ``c``; its
normal equations are ``G c = b`` with ``G[a, b] = <E_a, E_b>`` and
``b[a] = -<T, E_a>``.  ``G`` is only positive *semi*-definite (the
elements are dependent at small ``n`` or for degenerate traces), so the
solve goes through a truncated symmetric eigendecomposition.  Any
solution of the normal equations gives the same minimiser ``F``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .exceptions import NumericalFailure, ShapeMismatch
from .min_norm3 import coeffs3, norm_formula3, project3
from .min_norm4 import coeffs4, norm_formula4, project4, term_listing4
from .tensor_core import (
    LABELS4,
    AnsatzBasis,
    ansatz_basis3,
    ansatz_basis4,
    check_tensor,
    norm2,
    traces3,
    traces4,
)

__all__ = [
    "GramSystem",
    "OracleReport",
    "CoefficientAudit",
    "gram_system",
    "solve_min_norm",
    "verify",
    "barred3",
    "audit_coeffs4",
    "EIG_CUTOFF",
]

EIG_CUTOFF = 1e-12


@dataclass(frozen=True)
class GramSystem:
    gram: np.ndarray
    rhs: np.ndarray
    labels: tuple[str, ...]


@dataclass(frozen=True)
class OracleReport:
    order: int
    dim: int
    coeff_closed: np.ndarray
    coeff_oracle: np.ndarray
    proj_residual: float
    gram_rank: int
    gram_cond: float
    norm_closed: float
    norm_oracle: float
    trace_residual: float

    def to_dict(self) -> dict:
        out = asdict(self)
        out["coeff_closed"] = self.coeff_closed.tolist()
        out["coeff_oracle"] = self.coeff_oracle.tolist()
        return out


def gram_system(T, basis: AnsatzBasis) -> GramSystem:
    T = np.asarray(T, dtype=float)
    if T.shape != basis.elements.shape[1:]:
        raise ShapeMismatch(f"tensor shape {T.shape} does not match basis {basis.elements.shape[1:]}")
    B = basis.matrix()
    return GramSystem(gram=B @ B.T, rhs=-(B @ T.ravel()), labels=basis.labels)


def _eigh(gram: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    try:
        w, V = np.linalg.eigh(gram)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigendecomposition failed: {exc}") from exc
    if not np.all(np.isfinite(w)):
        raise NumericalFailure("eigendecomposition returned non-finite eigenvalues")
    return w, V


def _solve(system: GramSystem) -> tuple[np.ndarray, int, float]:
    w, V = _eigh(system.gram)
    lam_max = float(w[-1]) if w.size else 0.0
    if lam_max <= 0.0:
        return np.zeros(len(system.labels)), 0, float("inf")
    keep = w > EIG_CUTOFF * lam_max
    Vk = V[:, keep]
    coeffs = Vk @ ((Vk.T @ system.rhs) / w[keep])
    lam_min = float(w[0])
    cond = lam_max / lam_min if lam_min > 0.0 else float("inf")
    return coeffs, int(keep.sum()), cond


def solve_min_norm(T, basis: AnsatzBasis | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Minimiser ``F`` and the minimum-length coefficient vector that yields it."""
    T = check_tensor(T, closed_form=False)
    if basis is None:
        basis = ansatz_basis3(T) if T.ndim == 3 else ansatz_basis4(T)
    coeffs, _, _ = _solve(gram_system(T, basis))
    return T + basis.combine(coeffs), coeffs


def _trace_residual(F: np.ndarray) -> float:
    return (traces3(F) if F.ndim == 3 else traces4(F)).max_abs()


def verify(T, order: int | None = None) -> OracleReport:
    """Run closed form and oracle side by side on ``T``."""
    T = check_tensor(T, order)
    n = T.shape[0]
    if T.ndim == 3:
        basis = ansatz_basis3(T)
        closed = coeffs3(n).vector()
        F_closed, norm_closed = project3(T), norm_formula3(T)
    else:
        basis = ansatz_basis4(T)
        closed = coeffs4(n).resolve(traces4(T))
        F_closed, norm_closed = project4(T), norm_formula4(T)
    coeffs, rank, cond = _solve(gram_system(T, basis))
    F_oracle = T + basis.combine(coeffs)
    diff = np.sqrt(norm2(F_closed - F_oracle))
    return OracleReport(
        order=T.ndim,
        dim=n,
        coeff_closed=closed,
        coeff_oracle=coeffs,
        proj_residual=float(diff / max(1.0, np.sqrt(norm2(T)))),
        gram_rank=rank,
        gram_cond=cond,
        norm_closed=float(norm_closed),
        norm_oracle=norm2(F_oracle),
        trace_residual=_trace_residual(F_closed),
    )


def barred3(coeffs, n: int) -> np.ndarray:
    """The nine shifted combinations that vanish at a rank-3 critical point.

    For each trace ``a`` and slot ``s``: ``sum_q c[a, q] + (n-1) c[a, s]``
    plus one when ``s`` is the trace's own slot (x1, y2, z3).
    """
    c = np.asarray(coeffs, dtype=float).reshape(3, 3)
    bar = c.sum(axis=1, keepdims=True) + (n - 1) * c
    return (bar + np.eye(3)).ravel()


@dataclass(frozen=True)
class CoefficientAudit:
    """Per-label comparison of the grouped closed form, the variable
    listing from the derivation, and the oracle."""

    dim: int
    labels: tuple[str, ...]
    closed: np.ndarray
    oracle: np.ndarray
    listing: dict[str, list[float]]
    gram_rank: int

    def listing_conflicts(self, tol: float = 1e-12) -> list[dict]:
        """Labels where the listing disagrees with the grouped form or is
        missing/duplicated, each with the oracle's value."""
        rows = []
        for a, lab in enumerate(self.labels[:72]):
            vals = self.listing.get(lab, [])
            if len(vals) == 1 and abs(vals[0] - self.closed[a]) <= tol:
                continue
            rows.append(
                {
                    "label": lab,
                    "listing": vals,
                    "closed": float(self.closed[a]),
                    "oracle": float(self.oracle[a]),
                }
            )
        return rows

    def max_closed_vs_oracle(self) -> float:
        return float(np.abs(self.closed - self.oracle).max())


def audit_coeffs4(T) -> CoefficientAudit:
    """Compare coefficient tables against oracle coefficients for ``T``.

    Only meaningful when the Gram matrix has full rank (n >= 4 for
    generic T); otherwise the oracle returns the minimum-length solution.
    """
    T = check_tensor(T, 4)
    n = T.shape[0]
    basis = ansatz_basis4(T)
    coeffs, rank, _ = _solve(gram_system(T, basis))
    return CoefficientAudit(
        dim=n,
        labels=LABELS4,
        closed=coeffs4(n).resolve(traces4(T)),
        oracle=coeffs,
        listing=term_listing4(n),
        gram_rank=rank,
    )
