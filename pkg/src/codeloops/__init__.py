"""Code loops from doubly even binary codes: construction, classification,
representation search, and code isomorphism testing."""

from .codes import (
    BinaryCode,
    Codeword,
    ClassPartition,
    InternalInvariantError,
    InvalidCodeError,
    NotDoublyEvenError,
    RepType,
    format_code,
    meet_weight,
    parse_code,
)
from .equivalence import code_isomorphism, cycle_notation, distinguishing_invariant
from .factorset import FactorSet, Violation, build_factor_set, verify_factor_set
from .loops import (
    AssociativeLoopError,
    CharVector,
    CodeLoop,
    LoopClass,
    build_loop,
    canonical_catalog,
    characteristic_vector,
    classify,
    loops_isomorphic,
)
from .catalog import (
    CatalogEntry,
    all_loop_ids,
    canonical_loop,
    catalog_entries,
    catalog_entry,
    parse_loop_id,
)
from .search import (
    MinimalityCertificate,
    ParamVector3,
    ParamVector4,
    Representation,
    Solution3,
    Solution4,
    congruence_targets,
    enumerate_reduced,
    minimal_representation,
    solve_system3,
    solve_system4,
    verify_representation,
)

__all__ = [
    "AssociativeLoopError",
    "BinaryCode",
    "CatalogEntry",
    "CharVector",
    "ClassPartition",
    "CodeLoop",
    "Codeword",
    "FactorSet",
    "InternalInvariantError",
    "InvalidCodeError",
    "LoopClass",
    "MinimalityCertificate",
    "NotDoublyEvenError",
    "ParamVector3",
    "ParamVector4",
    "RepType",
    "Representation",
    "Solution3",
    "Solution4",
    "Violation",
    "all_loop_ids",
    "build_factor_set",
    "build_loop",
    "canonical_catalog",
    "canonical_loop",
    "catalog_entries",
    "catalog_entry",
    "characteristic_vector",
    "classify",
    "code_isomorphism",
    "congruence_targets",
    "cycle_notation",
    "distinguishing_invariant",
    "enumerate_reduced",
    "format_code",
    "loops_isomorphic",
    "meet_weight",
    "minimal_representation",
    "parse_code",
    "parse_loop_id",
    "solve_system3",
    "solve_system4",
    "verify_factor_set",
    "verify_representation",
]

__version__ = "0.1.0"
