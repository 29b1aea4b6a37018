"""Minimal-norm trace-free projections of rank-3 and rank-4 tensors."""

from .exceptions import (
    DimTooSmall,
    LengthMismatch,
    MinNormError,
    NumericalFailure,
    ShapeMismatch,
    SymmetryViolated,
)
from .geometry import (
    AlgebraicCurvature,
    CottonInput,
    cotton,
    gen_cotton_input,
    kulkarni_nomizu,
    random_algebraic_curvature,
    ricci,
    scalar_curvature,
    weyl,
)
from .lsq_oracle import OracleReport, audit_coeffs4, gram_system, solve_min_norm, verify
from .min_norm3 import coeffs3, norm_formula3, project3
from .min_norm4 import (
    coeffs4,
    norm_formula4,
    norm_formula4_pairwise_symmetric,
    norm_formula4_totally_symmetric,
    project4,
    project4_pairwise_symmetric,
    project4_totally_symmetric,
)
from .tensor_core import (
    AnsatzBasis,
    TraceSet3,
    TraceSet4,
    ansatz_basis3,
    ansatz_basis4,
    inner,
    kronecker2,
    new_tensor,
    norm2,
    traces3,
    traces4,
)

__version__ = "0.1.0"
