"""Shuffle-preserved colorings of complete bipartite and k-partite
multigraphs: rectangle-cover representations, extremal constructions,
monochromatic-subgraph detection, superimposed-clique counting, and an
exhaustive avoidance search."""

from .core import (
    ColorMatrix,
    CoverageViolation,
    KPartiteCover,
    KPartiteCoverageViolation,
    KPartiteShuffleViolation,
    KPartiteWitness,
    LocalProfile,
    LocalityViolation,
    NotShufflePreserved,
    OverlapError,
    Rectangle,
    RectangleCover,
    ShuffleViolation,
    Violation,
    Witness,
    avoidance_threshold,
    check_coverage,
    check_kpartite_coverage,
    guaranteed_p,
    local_profile,
    locality_violation,
    matrix_local_profile,
    matrix_to_rectangles,
    rectangles_to_matrix,
    triple_count,
    validate_kpartite,
    validate_shuffle_preserved,
)
from .constructions import (
    GenerationFailed,
    RecursiveMatrixParams,
    construct_kpartite_avoiding,
    construct_mod_m,
    construct_recursive_matrix,
    random_cover,
)
from .formats import (
    FormatError,
    clique_family_from_obj,
    clique_family_to_obj,
    cover_from_obj,
    cover_to_obj,
    kpartite_from_obj,
    kpartite_to_obj,
    load_instance,
    parse_matrix,
    rectangle_to_obj,
    violation_to_obj,
    witness_to_obj,
    write_matrix,
)
from .detect import (
    CliqueFamily,
    InstanceTooLarge,
    NotTwoColored,
    SuperimposedWitness,
    TooManySubsets,
    find_mono_biclique_brute,
    find_mono_biclique_fast,
    find_mono_kpartite,
    find_mono_kpartite_brute,
    max_superimposed,
    superimposed_bound,
    verify_biclique_witness,
    verify_kpartite_witness,
)
from .search import (
    CSV_HEADER,
    INCONCLUSIVE,
    SAT,
    UNSAT,
    SearchOutcome,
    SearchParams,
    SearchStats,
    TableRow,
    search_avoiding,
    table_row_csv,
    threshold_table,
)

__version__ = "0.1.0"

__all__ = [
    "ColorMatrix",
    "CoverageViolation",
    "KPartiteCover",
    "KPartiteCoverageViolation",
    "KPartiteShuffleViolation",
    "KPartiteWitness",
    "LocalProfile",
    "LocalityViolation",
    "NotShufflePreserved",
    "OverlapError",
    "Rectangle",
    "RectangleCover",
    "ShuffleViolation",
    "Violation",
    "Witness",
    "avoidance_threshold",
    "check_coverage",
    "check_kpartite_coverage",
    "guaranteed_p",
    "local_profile",
    "locality_violation",
    "matrix_local_profile",
    "matrix_to_rectangles",
    "rectangles_to_matrix",
    "triple_count",
    "validate_kpartite",
    "validate_shuffle_preserved",
    "FormatError",
    "clique_family_from_obj",
    "clique_family_to_obj",
    "cover_from_obj",
    "cover_to_obj",
    "kpartite_from_obj",
    "kpartite_to_obj",
    "load_instance",
    "parse_matrix",
    "rectangle_to_obj",
    "violation_to_obj",
    "witness_to_obj",
    "write_matrix",
    "GenerationFailed",
    "RecursiveMatrixParams",
    "construct_kpartite_avoiding",
    "construct_mod_m",
    "construct_recursive_matrix",
    "random_cover",
    "CliqueFamily",
    "InstanceTooLarge",
    "NotTwoColored",
    "SuperimposedWitness",
    "TooManySubsets",
    "find_mono_biclique_brute",
    "find_mono_biclique_fast",
    "find_mono_kpartite",
    "find_mono_kpartite_brute",
    "max_superimposed",
    "superimposed_bound",
    "verify_biclique_witness",
    "verify_kpartite_witness",
    "CSV_HEADER",
    "INCONCLUSIVE",
    "SAT",
    "UNSAT",
    "SearchOutcome",
    "SearchParams",
    "SearchStats",
    "TableRow",
    "search_avoiding",
    "table_row_csv",
    "threshold_table",
]
