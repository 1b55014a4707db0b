"""Exact classification of line-bundle numerical classes on elliptic ruled surfaces.

Everything is integer arithmetic on the rank-two numerical lattice of the
surface: cohomology tables, effectivity, ampleness, base-point-freeness,
normal presentation, Koszulness, and the splitting witnesses behind the
classifications.  See the CLI (``ellsurf --help``) for the command surface.
"""

from .cohomology import (
    ALL_EFFECTIVE,
    EFFECTIVITY_INDETERMINATE,
    INDETERMINATE,
    NONE_EFFECTIVE,
    POSITIVE,
    ZERO,
    CohomologyProfile,
    DimStatus,
    EffectivityStatus,
    chi,
    class_profile,
    cohomology_profile,
    effectivity_status,
    exact,
    ray_h0,
    vanishing_table,
)
from .positivity import (
    PositivityReport,
    SpecialMember,
    class_all_bpf,
    is_ample,
    is_ample_and_all_bpf,
    positivity_report,
    special_bpf_members,
)
from .presentation import (
    CHAR_ASSUMPTION,
    AdjointVerdict,
    CurveBounds,
    Decomposition,
    DecompositionCase,
    ProductMode,
    ProductVerdict,
    VanishingHypotheses,
    adjoint_np_check,
    adjoint_np_threshold,
    brute_force_decompose,
    brute_force_search_bounds,
    curve_bounds,
    decompose_np,
    is_koszul,
    is_normally_presented,
    product_np_check,
    prop21_hypotheses,
    thm43_classify,
)
from .render import RegionCell, ascii_region, region_cell, region_cells, svg_region
from .surface import (
    BoundaryTag,
    BundleRef,
    NumClass,
    SurfaceModel,
    TagPlacementError,
    canonical_class,
    class_add,
    class_scale,
    intersect,
    ray_index,
    serre_dual_class,
    validate_tag,
)
from .verify import SuiteResult, VerifyReport, run_suites

__version__ = "0.1.0"

__all__ = [
    "ALL_EFFECTIVE",
    "CHAR_ASSUMPTION",
    "EFFECTIVITY_INDETERMINATE",
    "INDETERMINATE",
    "NONE_EFFECTIVE",
    "POSITIVE",
    "ZERO",
    "AdjointVerdict",
    "BoundaryTag",
    "BundleRef",
    "CohomologyProfile",
    "CurveBounds",
    "Decomposition",
    "DecompositionCase",
    "DimStatus",
    "EffectivityStatus",
    "NumClass",
    "PositivityReport",
    "ProductMode",
    "ProductVerdict",
    "RegionCell",
    "SpecialMember",
    "SuiteResult",
    "SurfaceModel",
    "TagPlacementError",
    "VanishingHypotheses",
    "VerifyReport",
    "adjoint_np_check",
    "adjoint_np_threshold",
    "ascii_region",
    "brute_force_decompose",
    "brute_force_search_bounds",
    "canonical_class",
    "chi",
    "class_add",
    "class_all_bpf",
    "class_profile",
    "class_scale",
    "cohomology_profile",
    "curve_bounds",
    "decompose_np",
    "effectivity_status",
    "exact",
    "intersect",
    "is_ample",
    "is_ample_and_all_bpf",
    "is_koszul",
    "is_normally_presented",
    "positivity_report",
    "product_np_check",
    "prop21_hypotheses",
    "ray_h0",
    "ray_index",
    "region_cell",
    "region_cells",
    "run_suites",
    "serre_dual_class",
    "special_bpf_members",
    "svg_region",
    "thm43_classify",
    "validate_tag",
    "vanishing_table",
]
