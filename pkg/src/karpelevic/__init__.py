"""Karpelevic eigenvalue regions of stochastic matrices.

Computes the region of all eigenvalues attainable by n-by-n row-stochastic
matrices: boundary-arc enumeration via Farey pairs, parametric realizing
matrices for every arc, root-continuation tracing, and membership queries.
"""

from ._kernels import BACKEND
from .arcs import (
    ArcDescriptor,
    ArcType,
    RealPolynomial,
    arc_endpoints,
    arc_from_endpoints,
    classify_arc,
    enumerate_arcs,
    ito_polynomial,
    reduced_ito_polynomial,
)
from .errors import ArcTraceError, InvalidOrderError, KarpelevicError, MultipleRootError
from .farey import Fraction, divisor_pair_check, farey_sequence, is_farey_pair
from .matrices import (
    Digraph,
    ParametricStochasticMatrix,
    Weight,
    characteristic_polynomial,
    digraph_of,
    evaluate,
    is_irreducible,
    is_primitive,
    matrix_power,
    rank_one_update_det,
    realizing_matrix,
)
from .polyroots import (
    RootSet,
    arc_tangent,
    find_pi_root,
    multiple_root_witness,
    resultant_pi,
    roots,
    trinomial,
)
from .region import (
    ArcTrace,
    BoundaryModel,
    boundary,
    convexity_report,
    differentiability_scan,
    membership,
    power_arc_check,
    trace_arc,
)

__version__ = "0.1.0"

__all__ = [
    "ArcDescriptor",
    "ArcTrace",
    "ArcTraceError",
    "ArcType",
    "BACKEND",
    "BoundaryModel",
    "Digraph",
    "Fraction",
    "InvalidOrderError",
    "KarpelevicError",
    "MultipleRootError",
    "ParametricStochasticMatrix",
    "RealPolynomial",
    "RootSet",
    "Weight",
    "arc_endpoints",
    "arc_from_endpoints",
    "arc_tangent",
    "boundary",
    "characteristic_polynomial",
    "classify_arc",
    "convexity_report",
    "differentiability_scan",
    "digraph_of",
    "divisor_pair_check",
    "enumerate_arcs",
    "evaluate",
    "farey_sequence",
    "find_pi_root",
    "is_farey_pair",
    "is_irreducible",
    "is_primitive",
    "ito_polynomial",
    "matrix_power",
    "membership",
    "multiple_root_witness",
    "power_arc_check",
    "rank_one_update_det",
    "realizing_matrix",
    "reduced_ito_polynomial",
    "resultant_pi",
    "roots",
    "trace_arc",
    "trinomial",
]
