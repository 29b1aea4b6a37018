"""Closed-form minimal-norm trace-free part of a rank-4 tensor.

The 72 trace-placement coefficients are constants per dimension and take
five distinct values; the three delta-delta coefficients ``r, s, t`` are a
fixed linear map of the double traces.  Each term below is written as
``"<trace pair>:<free indices>"``, e.g. ``"13:ki"`` is
``T^{(1,3)}_{ki} delta_{jl}``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .exceptions import DimTooSmall, SymmetryViolated
from .tensor_core import (
    DELTA_DELTA,
    LABELS4,
    TRACE_PAIRS,
    TraceSet4,
    ansatz_basis4,
    check_tensor,
    delta_delta,
    label4,
    norm2,
    placement4,
    traces4,
)

__all__ = [
    "CoefficientTable4",
    "coeffs4",
    "group_values4",
    "term_listing4",
    "project4",
    "norm_formula4",
    "project4_pairwise_symmetric",
    "norm_formula4_pairwise_symmetric",
    "project4_totally_symmetric",
    "norm_formula4_totally_symmetric",
    "rst_map",
    "symmetrize",
]

_GROUPS = {
    "A": "12:ij 12:ji 13:ik 13:ki 14:il 14:li 23:jk 23:kj 24:jl 24:lj 34:kl 34:lk",
    "B": "12:lk 13:lj 14:kj 23:li 24:ki 34:ji",
    "C": "12:kl 13:jl 14:jk 23:il 24:ik 34:ij",
    "D": (
        "12:ki 12:kj 12:il 12:jl 13:jk 13:il 13:ji 13:kl 14:ik 14:jl 14:ji 14:lk "
        "23:ij 23:kl 23:ik 23:jl 24:ij 24:il 24:jk 24:lk 34:ik 34:il 34:kj 34:lj"
    ),
    "E": (
        "12:ik 12:jk 12:li 12:lj 13:kj 13:li 13:ij 13:lk 14:ki 14:lj 14:ij 14:kl "
        "23:ji 23:lk 23:ki 23:lj 24:ji 24:li 24:kj 24:kl 34:ki 34:li 34:jk 34:jl"
    ),
}

# Per-variable assignment as listed in the derivation, kept verbatim
# (including its repeated and missing variables) so it can be audited.
_TERM_LISTING = {
    "D": "x^2 x^4 x_3 x_5 y_3 y_4 y_6 y^1 z_2 z_5 z^1 z^6 u_1 u_2 u_5 u_6 "
    "v_1 v_3 v_4 v^6 w_2 w_3 w^4 w^5",
    "E": "x_2 x_4 x^3 x^5 y^3 y^4 y^6 y_1 z^2 z^5 z_1 z_6 u^1 u^2 u^5 u^6 "
    "v^1 v^3 v^4 v_6 w^2 w^3 w_4 w_5",
    "A": "x^1 x_1 y^2 y_2 z^3 z_3 u^4 u_4 v^5 v_5 v^6 v_6",
    "B": "x^6 y^5 z^4 u^3 v^2 w^1",
    "C": "x_6 y_5 z_4 u_3 v_2 w_1",
}

# Pairwise-symmetric specialisation: only untransposed placements remain.
_GROUPS_PAIRWISE = {
    "A": "12:ij 13:ik 14:il 23:jk 24:jl 34:kl",
    "C": "12:kl 13:jl 14:jk 23:il 24:ik 34:ij",
    "D": (
        "12:ik 12:il 12:jk 12:jl 13:ij 13:il 13:jk 13:kl 14:ij 14:ik 14:jl 14:kl "
        "23:ij 23:ik 23:jl 23:kl 24:ij 24:il 24:jk 24:kl 34:ik 34:il 34:jk 34:jl"
    ),
}


def _check_dim(n: int) -> None:
    if n < 3:
        raise DimTooSmall(f"rank-4 closed form needs dim >= 3, got {n}")


def group_values4(n: int) -> dict[str, float]:
    """The five distinct trace-placement coefficients at dimension ``n``."""
    _check_dim(n)
    return {
        "A": -2.0 / (n * (n - 2) * (n + 4)),
        "B": 4.0 / (n * (n - 2) * (n + 2) * (n + 4)),
        "C": -(n**3 + 4 * n**2 - 4) / (n * (n - 2) * (n + 2) * (n + 4)),
        "D": (n + 3) / ((n - 2) * (n + 2) * (n + 4)),
        "E": -1.0 / ((n - 2) * (n + 2) * (n + 4)),
    }


def rst_map(n: int) -> np.ndarray:
    """3x3 map from ``(d1234, d1324, d1423)`` to ``(r, s, t)``."""
    _check_dim(n)
    diag = (n**2 + 3 * n + 6) / ((n - 2) * (n - 1) * (n + 2) * (n + 4))
    off = -(3 * n + 2) / ((n - 1) * (n - 2) * (n + 2) * (n + 4))
    return np.full((3, 3), off) + (diag - off) * np.eye(3)


@dataclass(frozen=True)
class CoefficientTable4:
    """Closed-form coefficients for dimension ``dim``.

    ``placements`` is aligned with the first 72 entries of ``LABELS4``;
    ``groups`` names the value class (A-E) of each placement label.
    """

    dim: int
    placements: np.ndarray
    rst: np.ndarray
    groups: dict[str, str]

    def resolve(self, ts: TraceSet4) -> np.ndarray:
        """Full 75-vector for a tensor with traces ``ts``."""
        return np.concatenate([self.placements, self.rst @ ts.doubles()])


def coeffs4(dim: int) -> CoefficientTable4:
    values = group_values4(dim)
    groups: dict[str, str] = {}
    for name, terms in _GROUPS.items():
        for term in terms.split():
            pair, pattern = term.split(":")
            groups[label4(pair, pattern)] = name
    assert len(groups) == 72
    vec = np.array([values[groups[lab]] for lab in LABELS4[:72]])
    return CoefficientTable4(dim=dim, placements=vec, rst=rst_map(dim), groups=groups)


def term_listing4(n: int) -> dict[str, list[float]]:
    """Values the derivation's variable listing assigns to each label.

    Labels listed twice get two entries; labels never listed are absent.
    """
    values = group_values4(n)
    out: dict[str, list[float]] = defaultdict(list)
    for name, labels in _TERM_LISTING.items():
        for lab in labels.split():
            out[lab].append(values[name])
    return dict(out)


def project4(T) -> np.ndarray:
    """Minimal-norm trace-free tensor in the 75-parameter family through ``T``."""
    T = check_tensor(T, 4)
    basis = ansatz_basis4(T)
    return T + basis.combine(coeffs4(T.shape[0]).resolve(traces4(T)))


def norm_formula4(T) -> float:
    """Squared norm of :func:`project4` from the traces alone."""
    T = check_tensor(T, 4)
    n = T.shape[0]
    ts = traces4(T)
    M = ts.matrices()

    def ip(a: str, b: str, transpose: bool = False) -> float:
        B = M[b].T if transpose else M[b]
        return float(np.sum(M[a] * B))

    den = (n - 2) * (n + 2) * (n + 4)
    plus = [
        ("12", "24", True), ("12", "14", True), ("12", "23", False), ("12", "13", False),
        ("13", "23", False), ("13", "14", False), ("13", "34", True), ("14", "24", False),
        ("14", "34", True), ("23", "24", False), ("23", "34", False), ("24", "34", False),
    ]
    # same pairs with the transposition flipped
    minus = [(a, b, not tr) for a, b, tr in plus]
    opposite = [("12", "34"), ("13", "24"), ("14", "23")]

    total = norm2(T)
    total += 2 * (n + 3) / den * sum(ip(*p) for p in plus)
    total -= 2.0 / den * sum(ip(*p) for p in minus)
    total -= 4.0 / ((n - 2) * n * (n + 4)) * sum(ip(a, b) + ip(a, b, True) for a, b in opposite)
    total += 4.0 / (n * den) * sum(ip(p, p, True) for p in TRACE_PAIRS)
    total -= (n**3 + 4 * n**2 - 4) / (n * den) * sum(ip(p, p) for p in TRACE_PAIRS)
    total += _double_trace_term(n, ts.doubles())
    return total


def _double_trace_term(n: int, d: np.ndarray) -> float:
    d1, d2, d3 = d
    den = (n - 2) * (n - 1) * (n + 2) * (n + 4)
    return (n**2 + 3 * n + 6) / den * (d1 * d1 + d2 * d2 + d3 * d3) - 2 * (3 * n + 2) / den * (
        d2 * d1 + d2 * d3 + d1 * d3
    )


def _scale(T: np.ndarray) -> float:
    return max(1.0, float(np.sqrt(norm2(T))))


def _require_symmetric_traces(T: np.ndarray, ts: TraceSet4, tol: float) -> None:
    scale = _scale(T)
    for pair, M in ts.matrices().items():
        err = float(np.abs(M - M.T).max())
        if err > tol * scale:
            raise SymmetryViolated(f"trace T^({pair[0]},{pair[1]}) not symmetric: |M - M^T| = {err:.3e}")


def _add_rst(F: np.ndarray, n: int, ts: TraceSet4) -> np.ndarray:
    for c, pattern in zip(rst_map(n) @ ts.doubles(), DELTA_DELTA):
        F = F + c * delta_delta(n, pattern)
    return F


def project4_pairwise_symmetric(T, tol: float = 1e-10) -> np.ndarray:
    """:func:`project4` for tensors whose six trace matrices are symmetric."""
    T = check_tensor(T, 4)
    n = T.shape[0]
    ts = traces4(T)
    _require_symmetric_traces(T, ts, tol)
    values = {
        "A": -4.0 / (n * (n - 2) * (n + 4)),
        "C": -(n**2 + 2 * n - 4) / (n * (n - 2) * (n + 4)),
        "D": 1.0 / ((n + 4) * (n - 2)),
    }
    M = ts.matrices()
    F = T.copy()
    for name, terms in _GROUPS_PAIRWISE.items():
        for term in terms.split():
            pair, pattern = term.split(":")
            F += values[name] * placement4(M[pair], pattern)
    return _add_rst(F, n, ts)


def norm_formula4_pairwise_symmetric(T, tol: float = 1e-10) -> float:
    """Squared norm of the projection for symmetric-trace tensors."""
    T = check_tensor(T, 4)
    n = T.shape[0]
    ts = traces4(T)
    _require_symmetric_traces(T, ts, tol)
    M = ts.matrices()

    def ip(a: str, b: str) -> float:
        return float(np.sum(M[a] * M[b]))

    adjacent = [
        ("12", "24"), ("12", "14"), ("12", "23"), ("12", "13"), ("13", "23"), ("13", "14"),
        ("13", "34"), ("14", "24"), ("14", "34"), ("23", "24"), ("23", "34"), ("24", "34"),
    ]
    opposite = [("12", "34"), ("13", "24"), ("14", "23")]
    total = norm2(T)
    total += 2.0 / ((n - 2) * (n + 4)) * sum(ip(a, b) for a, b in adjacent)
    total -= 8.0 / ((n - 2) * n * (n + 4)) * sum(ip(a, b) for a, b in opposite)
    total -= (n**2 + 2 * n - 4) / ((n - 2) * n * (n + 4)) * sum(ip(p, p) for p in TRACE_PAIRS)
    return total + _double_trace_term(n, ts.doubles())


def _require_totally_symmetric(T: np.ndarray, tol: float) -> None:
    scale = _scale(T)
    # adjacent transpositions generate all 24 slot permutations
    for axes in [(1, 0, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)]:
        err = float(np.abs(T - T.transpose(axes)).max())
        if err > tol * scale:
            raise SymmetryViolated(f"tensor not symmetric under slot swap {axes}: {err:.3e}")


def project4_totally_symmetric(T, tol: float = 1e-10) -> np.ndarray:
    """:func:`project4` for tensors invariant under every slot permutation."""
    T = check_tensor(T, 4)
    _require_totally_symmetric(T, tol)
    n = T.shape[0]
    Tij = np.einsum("ijll->ij", T)
    total = float(np.trace(Tij))
    F = T.copy()
    for pattern in ("ij", "ik", "il", "jk", "jl", "kl"):
        F -= placement4(Tij, pattern) / (n + 4)
    dd = sum(delta_delta(n, p) for p in DELTA_DELTA)
    return F + total / ((n + 4) * (n + 2)) * dd


def norm_formula4_totally_symmetric(T, tol: float = 1e-10) -> float:
    T = check_tensor(T, 4)
    _require_totally_symmetric(T, tol)
    n = T.shape[0]
    Tij = np.einsum("ijll->ij", T)
    total = float(np.trace(Tij))
    return norm2(T) - 6.0 / (n + 4) * float(np.sum(Tij * Tij)) + 3 * total**2 / ((n + 4) * (n + 2))


def symmetrize(T) -> np.ndarray:
    """Average of ``T`` over all 24 slot permutations."""
    T = np.asarray(T, dtype=float)
    return sum(T.transpose(p) for p in permutations(range(4))) / 24.0
