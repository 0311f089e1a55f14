"""First Hochschild cohomology of quiver algebras with exact linear algebra."""

from .algebra import (
    AlgebraElement,
    IdealSpec,
    NotAdmissibleError,
    QuotientElement,
    QuotientPresentation,
    build_presentation,
    presentation,
)
from .derivations import (
    ArrowType,
    Derivation,
    DerivationValues,
    Face,
    HypothesisError,
    Inner,
    Vertex,
    Violation,
    apply,
    cycle_identity_check,
    extend_derivation,
    f2_subspace,
    standard_basis,
    truncated_diff_basis,
)
from .linalg import ExactMatrix, FieldSpec, ModP, nullspace, rank, rref
from .oracle import oracle_diff_dim, oracle_h1, oracle_hh1, oracle_quotient_diff_dim
from .planar import (
    Dart,
    EmbeddingError,
    FaceSet,
    NotPlanarError,
    RotationSystem,
    build_embedding,
    h1_basis_planar,
    hh1_basis_planar,
)
from .problem import ParseError, ProblemSpec, analyze, export_dot, format_problem, parse_input
from .quiver import Arrow, Path, Quiver, QuiverError

__version__ = "0.1.0"
