"""Twisted cohomology of simplicial complexes carrying a closed 1-cocycle.

The package computes the cohomology of rank-one local systems whose edge
weights are powers lambda**theta(e) of a monodromy parameter, in exact
rational / number field arithmetic or complex floats, together with the
Wang-sequence calculus for fiber bundles over a circle, a discrete Hodge
decomposition, and the comparison-geometry constants that control these
dimensions on curved spaces.
"""

from .bounds import (
    BoundsConfig,
    ProductValue,
    b_n,
    b_n_detail,
    bc_limit_check,
    c_of_b,
    small_b_limit,
    wallis,
)
from .cocycles import (
    OneCocycle,
    ZeroCochain,
    coboundary_of,
    gauge_transform,
    holonomy,
    is_exact,
    validate_closed,
    zero_cocycle,
)
from .complexes import (
    SimplicialComplex,
    boundary_matrix,
    circle,
    euler_characteristic,
    path_complex,
    point,
    sphere_boundary,
)
from .constructions import (
    CoveringData,
    MappingTorus,
    ProductComplex,
    SimplicialMap,
    cyclic_cover,
    mapping_torus,
    product,
    torus_grid,
    torus_grid_map,
)
from .errors import (
    BackendMismatchError,
    ConstructionError,
    IncompleteCocycleError,
    InvalidLoopError,
    InvalidMapError,
    NormalizationError,
    NovikovError,
    NumericalError,
    ReducibilityError,
)
from .hodge import (
    HodgeParts,
    InnerProduct,
    adjoint,
    harmonic_dim,
    harmonic_representative,
    hodge_decompose,
    laplacian,
    laplacian_spectrum,
    novikov_normalize,
    spectral_gap,
    volume,
)
from .scalars import (
    Matrix,
    MinimalPolynomial,
    NumberFieldElement,
    parse_scalar,
    rank,
    scalar_literal,
)
from .serialization import (
    complex_from_json,
    complex_to_json,
    load_action,
    load_complex,
    save_action,
    save_complex,
)
from .twisted import (
    BettiProfile,
    LocalSystemWeights,
    betti_profile,
    duality_check,
    kunneth_check,
    twisted_coboundary,
)
from .verify import SUITES, run_suite
from .wang import FiberCohomologyAction, WangProfile, induced_action, wang_dims

__version__ = "0.1.0"

__all__ = [
    "BackendMismatchError",
    "BettiProfile",
    "BoundsConfig",
    "ConstructionError",
    "CoveringData",
    "FiberCohomologyAction",
    "HodgeParts",
    "IncompleteCocycleError",
    "InnerProduct",
    "InvalidLoopError",
    "InvalidMapError",
    "LocalSystemWeights",
    "MappingTorus",
    "Matrix",
    "MinimalPolynomial",
    "NormalizationError",
    "NovikovError",
    "NumberFieldElement",
    "NumericalError",
    "OneCocycle",
    "ProductComplex",
    "ProductValue",
    "ReducibilityError",
    "SUITES",
    "SimplicialComplex",
    "SimplicialMap",
    "WangProfile",
    "ZeroCochain",
    "adjoint",
    "b_n",
    "b_n_detail",
    "bc_limit_check",
    "betti_profile",
    "boundary_matrix",
    "c_of_b",
    "circle",
    "coboundary_of",
    "complex_from_json",
    "complex_to_json",
    "cyclic_cover",
    "duality_check",
    "euler_characteristic",
    "gauge_transform",
    "harmonic_dim",
    "harmonic_representative",
    "hodge_decompose",
    "holonomy",
    "induced_action",
    "is_exact",
    "kunneth_check",
    "laplacian",
    "laplacian_spectrum",
    "load_action",
    "load_complex",
    "mapping_torus",
    "novikov_normalize",
    "parse_scalar",
    "path_complex",
    "point",
    "product",
    "rank",
    "run_suite",
    "save_action",
    "save_complex",
    "scalar_literal",
    "small_b_limit",
    "spectral_gap",
    "sphere_boundary",
    "torus_grid",
    "torus_grid_map",
    "twisted_coboundary",
    "validate_closed",
    "volume",
    "wallis",
    "wang_dims",
    "zero_cocycle",
]
