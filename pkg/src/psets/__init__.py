"""Exact computation of P-vertices and P-sets of symmetric rational matrices."""

from psets._backend import BACKEND
from psets.core import (
    Theorem1Verdict,
    VertexClass,
    classify_all,
    classify_vertex,
    deletion_gap,
    inverse_zero_block,
    is_pset,
    jacobi_check,
    pset_by_pairs,
    pvertex_rows_independent,
    theorem1_conditions,
    weak_pair_test,
)
from psets.enumeration import (
    PairGraph,
    is_pset_fast,
    maximal_cliques,
    maximal_psets,
    p_vertices,
    pair_graph,
)
from psets.errors import (
    AsymmetricMatrix,
    CapExceeded,
    CardinalityTooSmall,
    DimensionMismatch,
    IndexOutOfRange,
    InternalInvariantError,
    InvalidSpec,
    ParseError,
    PreconditionViolated,
    PsetError,
    SingularMatrix,
)
from psets.exactla import (
    Matrix,
    Rational,
    SymMatrix,
    dependent_on_others,
    det,
    identity,
    index_set,
    inverse,
    matmul,
    nullity,
    principal,
    rank,
    row_in_span,
    submatrix_delete,
    submatrix_keep,
    zeros,
)
from psets.matgen import GenSpec, generate, graph_of

__version__ = "0.1.0"
