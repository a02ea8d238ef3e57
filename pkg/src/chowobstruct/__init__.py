"""Exact Chow-group computations for complements of ample hypersurfaces in
products of projective spaces, and the mod-2 obstruction Sq^2(c2) + c1*c2
deciding algebraizability of rank-2 topological bundles on them."""

from .abelian import AbelianPresentation, GroupElement, InfiniteGroupError, bezout
from .chow import (
    AmbientMismatchError,
    AmbientSpace,
    ChowClass,
    class_str,
    cup,
    divisor_multiplication_matrix,
    parse_class,
    reduce_mod2,
)
from .complement import (
    AssumptionKind,
    ClosedFormReport,
    ComplementModel,
    Direction,
    ExactnessCertificate,
    InapplicableAssumptionError,
    PushforwardAssumption,
    Status,
    closed_form_check,
    complement_group,
    restrict,
)
from .intlinalg import (
    IntegerMatrix,
    SnfDecomposition,
    hermite_normal_form,
    hermite_reduce,
    lattice_contains,
    smith_normal_form,
    xgcd,
)
from .obstruction import (
    ChernPair,
    ClassifyRow,
    DimensionUnsupportedError,
    ObstructionReport,
    Verdict,
    classify_all,
    decide,
    sq2_descends,
    theta,
)
from .steenrod import SQ1_JUSTIFICATION, sq1, sq2, sq2_monomial

__version__ = "0.1.0"

__all__ = [
    "AbelianPresentation",
    "AmbientMismatchError",
    "AmbientSpace",
    "AssumptionKind",
    "ChernPair",
    "ChowClass",
    "ClassifyRow",
    "ClosedFormReport",
    "ComplementModel",
    "DimensionUnsupportedError",
    "Direction",
    "ExactnessCertificate",
    "GroupElement",
    "InapplicableAssumptionError",
    "InfiniteGroupError",
    "IntegerMatrix",
    "ObstructionReport",
    "PushforwardAssumption",
    "SQ1_JUSTIFICATION",
    "SnfDecomposition",
    "Status",
    "Verdict",
    "bezout",
    "class_str",
    "classify_all",
    "closed_form_check",
    "complement_group",
    "cup",
    "decide",
    "divisor_multiplication_matrix",
    "hermite_normal_form",
    "hermite_reduce",
    "lattice_contains",
    "parse_class",
    "reduce_mod2",
    "restrict",
    "smith_normal_form",
    "sq1",
    "sq2",
    "sq2_descends",
    "sq2_monomial",
    "theta",
    "xgcd",
]
