"""Divisor-class arithmetic and Hilbert-scheme bookkeeping for curves on a
smooth cubic surface.

The public surface is re-exported here; the CLI lives in ``cubiccurves.cli``.
"""

from .cohomology import (
    CohomologyTriple,
    ZariskiDecomposition,
    adjoint_fixed_part,
    cohomology,
    euler_char,
    fixed_part,
    h0,
    is_effective,
    is_nef,
)
from .census import CensusRecord, census_csv, census_range, enumerate_families
from .curve import (
    CurveReport,
    abnormality,
    has_smooth_member,
    hodge_genus_bound,
    invariants,
    normality_profile,
    require_smooth_member,
)
from .errors import (
    DegeneratePoints,
    DegreeTooSmall,
    DprimeNotNef,
    GenusOutOfHodgeRange,
    InvalidK,
    NonPositiveDegree,
    NotALine,
    NotEffective,
    NotSmoothMember,
    PreconditionError,
)
from .lattice import (
    Cremona,
    DivisorClass,
    K,
    Perm,
    StandardReduction,
    ZERO,
    apply_generator,
    apply_word,
    canonical,
    conics27,
    degree,
    intersect,
    is_standard,
    lines27,
    reduce_to_standard,
)
from .obstruction import (
    HilbertDimResult,
    KleppeVerdict,
    ObstructionVerdict,
    classify,
    flag_dim,
    gen_obstructed,
    h0_normal,
    h1_normal,
    hilbert_dim,
    kleppe_verdict,
    restriction_surjective,
)
from .oracle import PointConfig, exact_rank, h0_interpolation, point_config

__version__ = "0.1.0"

__all__ = [
    "CensusRecord",
    "CohomologyTriple",
    "Cremona",
    "CurveReport",
    "DegeneratePoints",
    "DegreeTooSmall",
    "DivisorClass",
    "DprimeNotNef",
    "GenusOutOfHodgeRange",
    "HilbertDimResult",
    "InvalidK",
    "K",
    "KleppeVerdict",
    "NonPositiveDegree",
    "NotALine",
    "NotEffective",
    "NotSmoothMember",
    "ObstructionVerdict",
    "Perm",
    "PointConfig",
    "PreconditionError",
    "StandardReduction",
    "ZERO",
    "ZariskiDecomposition",
    "abnormality",
    "adjoint_fixed_part",
    "apply_generator",
    "apply_word",
    "canonical",
    "census_csv",
    "census_range",
    "classify",
    "cohomology",
    "conics27",
    "degree",
    "enumerate_families",
    "euler_char",
    "exact_rank",
    "fixed_part",
    "flag_dim",
    "gen_obstructed",
    "h0",
    "h0_interpolation",
    "h0_normal",
    "h1_normal",
    "has_smooth_member",
    "hilbert_dim",
    "hodge_genus_bound",
    "intersect",
    "invariants",
    "is_effective",
    "is_nef",
    "is_standard",
    "kleppe_verdict",
    "lines27",
    "normality_profile",
    "point_config",
    "reduce_to_standard",
    "require_smooth_member",
    "restriction_surjective",
]
