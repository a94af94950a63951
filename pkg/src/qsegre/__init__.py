"""qsegre: product-state geometry and entanglement measures for pure states.

Multipartite pure states as projective amplitude tensors, the Segre map and
its determinantal separability ideal, concurrence-type measures built from
flattening minors, and Plucker coordinates/relations of Grassmannians, with
an exact Gaussian-rational backend alongside complex doubles.
"""

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    MalformedInput,
    MissingVariable,
    NonFinite,
    NotProduct,
    QsegreError,
    ShapeError,
    TooLarge,
    WrongShape,
    ZeroVector,
)
from .gaussrat import GaussRat
from .grassmann import (
    PlueckerRelation,
    PlueckerSet,
    check_relations,
    pluecker_coordinates,
    pluecker_measure,
    pluecker_relations,
    pluecker_set_to_json,
)
from .poly import (
    ANY_DEGREE,
    Monomial,
    MultiPoly,
    PluVar,
    StateVar,
    evaluate,
    format_poly,
    is_homogeneous,
    poly_add,
    poly_mul,
)
from .segre import (
    MeasureReport,
    SegreIdeal,
    concurrence2,
    generalized_concurrence,
    is_bipartite_separable,
    is_fully_separable,
    measure_report_to_json,
    minor_sum,
    minor_sum_direct,
    segre_generators,
    state_assignment,
)
from .states import (
    Bipartition,
    Flattening,
    LocalState,
    PureState,
    apply_local_unitaries,
    apply_local_unitary,
    canonical_bipartitions,
    flatten,
    local_factors,
    make_bipartition,
    make_local,
    make_state,
    normalize,
    permute_modes,
    segre_map,
    state_from_json,
    state_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "ANY_DEGREE",
    "Bipartition",
    "DimensionMismatch",
    "Flattening",
    "GaussRat",
    "IndexOutOfRange",
    "LocalState",
    "MalformedInput",
    "MeasureReport",
    "MissingVariable",
    "Monomial",
    "MultiPoly",
    "NonFinite",
    "NotProduct",
    "PluVar",
    "PlueckerRelation",
    "PlueckerSet",
    "PureState",
    "QsegreError",
    "SegreIdeal",
    "ShapeError",
    "StateVar",
    "TooLarge",
    "WrongShape",
    "ZeroVector",
    "apply_local_unitaries",
    "apply_local_unitary",
    "canonical_bipartitions",
    "check_relations",
    "concurrence2",
    "evaluate",
    "flatten",
    "format_poly",
    "generalized_concurrence",
    "is_bipartite_separable",
    "is_fully_separable",
    "is_homogeneous",
    "local_factors",
    "make_bipartition",
    "make_local",
    "make_state",
    "measure_report_to_json",
    "minor_sum",
    "minor_sum_direct",
    "normalize",
    "permute_modes",
    "pluecker_coordinates",
    "pluecker_measure",
    "pluecker_relations",
    "pluecker_set_to_json",
    "poly_add",
    "poly_mul",
    "segre_generators",
    "segre_map",
    "state_assignment",
    "state_from_json",
    "state_to_json",
]
