"""Complex Fenchel-Nielsen coordinates on quasi-Fuchsian punctured-torus space.

Construct the marked two-generator matrix groups, convert between the
coordinate systems that describe them (length/twist-bend, endpoint
normalisation, plumbing parameter, Maskit parameter), evaluate Farey-word
traces, trace rational pleating rays inside lambda-slices, and render limit
sets and slice figures.
"""

from .errors import (
    BoundaryDegenerateError,
    BranchCutError,
    DegenerateInputError,
    DegenerateNormalizationError,
    DomainError,
    FuchsianInputError,
    OutOfChartError,
    QftError,
    RayTraceError,
    SearchFailureError,
    SingularRayError,
    StepTooLargeError,
    UsageError,
)
from .farey import Slope, Word, enumerate_slopes, evaluate, farey_parents, trace_slope, word
from .groups import (
    FNCoords,
    GroupData,
    NormalizedGroup,
    build_group,
    coordinate_map,
    coords_from_endpoints,
    from_endpoints,
    gen_K,
    gen_S,
    gen_Sprime,
    gen_T,
    nielsen_move,
    normalize,
)
from .limitset import PointSet, RenderConfig, limit_points, rasterize
from .moebius import INFINITY, ExtComplex, MoebiusMap, is_infinity
from .pleating import (
    LambdaSlice,
    PleatingRay,
    QfVerdict,
    ShearValue,
    complex_shear,
    fuchsian_footpoint,
    is_tame,
    qf_heuristic,
    theta0,
    trace_ray,
)
from .plumbing import (
    PlumbingParams,
    coords_of_mu,
    gen_T_mu,
    maskit_generators,
    maskit_limit_error,
    mu_of,
    plumbing_params,
    plumbing_t,
    tame_mu_interval,
    w_coord,
    z_coord,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryDegenerateError", "BranchCutError", "DegenerateInputError",
    "DegenerateNormalizationError", "DomainError", "FuchsianInputError",
    "OutOfChartError", "QftError", "RayTraceError", "SearchFailureError",
    "SingularRayError", "StepTooLargeError", "UsageError",
    "Slope", "Word", "enumerate_slopes", "evaluate", "farey_parents",
    "trace_slope", "word",
    "FNCoords", "GroupData", "NormalizedGroup", "build_group",
    "coordinate_map", "coords_from_endpoints", "from_endpoints",
    "gen_K", "gen_S", "gen_Sprime", "gen_T", "nielsen_move", "normalize",
    "PointSet", "RenderConfig", "limit_points", "rasterize",
    "INFINITY", "ExtComplex", "MoebiusMap", "is_infinity",
    "LambdaSlice", "PleatingRay", "QfVerdict", "ShearValue",
    "complex_shear", "fuchsian_footpoint", "is_tame", "qf_heuristic",
    "theta0", "trace_ray",
    "PlumbingParams", "coords_of_mu", "gen_T_mu", "maskit_generators",
    "maskit_limit_error", "mu_of", "plumbing_params", "plumbing_t",
    "tame_mu_interval", "w_coord", "z_coord",
    "__version__",
]
