"""Combinatorial invariants of unitary PEL data at an unramified prime,
with exact differential-operator and measure checks on truncated
expansions."""

from .errors import (
    AssignmentError,
    CompositionError,
    ContextMismatch,
    DatumError,
    HypothesisError,
    InvalidWeight,
    MeasureError,
    MuordinaryError,
    NotSimple,
    OddSlopeCount,
    PrecisionError,
    ShapeMismatch,
    SlopeEHalf,
    UnknownCoordinate,
)
from .lr import dim_irrep, lr_coefficient, restrict_to_blocks
from .padics import (
    BinomialVector,
    PrecisionContext,
    UExpansion,
    binomial_to_series,
    series_add,
    series_congruent,
    series_mul,
    series_scale,
)
from .shimura import (
    CascadePiece,
    NewtonPolygon,
    Orbit,
    PELDatum,
    cascade,
    cascade_inventory,
    dual_orbit,
    gr_ranks,
    hasse_weight,
    is_ordinary,
    levi_shape,
    moonen_parameter_count,
    newton_from_multtype,
    newton_slopes,
    slope_decomposition,
)
from .theta import (
    CoordinateAssignment,
    KummerResult,
    MeasureHandle,
    ThetaOperator,
    kummer_check,
    moment,
    theta_apply,
    theta_binomial,
    theta_coordinate,
    theta_simple,
    verify_theta_congruence,
)
from .weights import (
    DominantWeight,
    LeviWeight,
    LRDecomposition,
    WeightClassReport,
    char_congruent,
    classify,
    classify_levi,
    dominant_dim,
    embed_in_dominant,
    exponents_congruent,
    is_multiplicity_free,
    is_simple,
    levi_dim,
    restrict_to_levi,
    scalar_weight,
    simple_report,
    theta_hypotheses,
    weights_coprime,
    zero_levi_weight,
)

__version__ = "0.1.0"
