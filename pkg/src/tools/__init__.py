"""
Public API for the vincular enumeration tools.

Import from this module rather than from the submodules.

Example Usage:
    >>> from src.tools import parse_pattern_set, guaranteed_scheme, SchemeEvaluator
    >>>
    >>> scheme = guaranteed_scheme(parse_pattern_set("12-3"))
    >>> SchemeEvaluator(scheme).sequence(6).values
    [1, 2, 5, 15, 52, 203]

Module Organization:
    - Exceptions: Error hierarchy
    - Permutations: Words, reduction, deletion, symmetries
    - Patterns: Vincular pattern grammar and containment
    - Gap Vectors: Spacing vectors and gap bases
    - Scenarios: Reversible deletion tests
    - Schemes: Triples, validation, constructive schemes, documents
    - Evaluation: Counts and inversion refinement
    - Oracle: Brute-force avoiders
    - File Operations: Scheme files
"""

# ============================================================================
# EXCEPTIONS
# ============================================================================
from .exceptions import (
    VincularError,
    PatternError,
    PermutationError,
    OracleLimitError,
    SchemeError,
    SurveyBudgetError,
    ConfigError,
    FileOpError,
)

# ============================================================================
# PERMUTATIONS
# ============================================================================
from .permutations import (
    Perm,
    EMPTY,
    reduce_word,
    is_permutation,
    order_isomorphic,
    delete,
    children,
    inversions,
    reverse_perm,
    complement_perm,
    format_word,
)

# ============================================================================
# PATTERNS
# ============================================================================
from .patterns import (
    VincularPattern,
    PatternSet,
    NULL,
    format_pattern,
    parse_pattern,
    parse_pattern_set,
    format_pattern_set,
    make_pattern_set,
    reverse_set,
    complement_set,
    find_copy,
    contains,
    avoids_all,
    contains_any,
    contains_with_head_in_prefix,
    pattern_word,
    implies,
    is_redundant_set,
)

# ============================================================================
# GAP VECTORS
# ============================================================================
from .gap_vectors import (
    GapBasis,
    spacing_vector,
    satisfies_criterion,
    build_A,
    is_gap_vector,
    gap_basis,
    minimal_antichain,
)

# ============================================================================
# SCENARIOS & REVERSIBLE DELETION
# ============================================================================
from .scenarios import (
    ScenarioWord,
    ScenarioSession,
    partial_matches,
    scenarios,
    scenario_delete,
    preimages,
    is_reversibly_deletable,
    find_rd_set,
)

# ============================================================================
# SCHEMES
# ============================================================================
from .scheme import (
    DiscoveryParams,
    SchemeTriple,
    Scheme,
    NoScheme,
    ValidationReport,
    validate,
    complement_scheme,
    minimize_scheme,
    guaranteed_scheme,
    serialize,
    deserialize,
    scheme_from_triples,
)

# ============================================================================
# EVALUATION
# ============================================================================
from .evaluate import (
    QPolynomial,
    SequenceResult,
    SchemeEvaluator,
    merge_spacing,
    inversion_increment,
    count,
    sequence,
    count_by_inversions,
)

# ============================================================================
# ORACLE
# ============================================================================
from .oracle import (
    DEFAULT_ORACLE_LIMIT,
    iter_avoiders,
    brute_avoiders,
    brute_count,
    brute_count_by_inversions,
    brute_sequence,
)

# ============================================================================
# FILE OPERATIONS
# ============================================================================
from .file_ops import (
    FileOperations,
    FileOperationResult,
    save_scheme,
    load_scheme,
)


# ============================================================================
# PUBLIC API EXPORTS
# ============================================================================
__all__ = [
    # Exceptions
    'VincularError',
    'PatternError',
    'PermutationError',
    'OracleLimitError',
    'SchemeError',
    'SurveyBudgetError',
    'ConfigError',
    'FileOpError',

    # Permutations
    'Perm',
    'EMPTY',
    'reduce_word',
    'is_permutation',
    'order_isomorphic',
    'delete',
    'children',
    'inversions',
    'reverse_perm',
    'complement_perm',
    'format_word',

    # Patterns
    'VincularPattern',
    'PatternSet',
    'NULL',
    'format_pattern',
    'parse_pattern',
    'parse_pattern_set',
    'format_pattern_set',
    'make_pattern_set',
    'reverse_set',
    'complement_set',
    'find_copy',
    'contains',
    'avoids_all',
    'contains_any',
    'contains_with_head_in_prefix',
    'pattern_word',
    'implies',
    'is_redundant_set',

    # Gap vectors
    'GapBasis',
    'spacing_vector',
    'satisfies_criterion',
    'build_A',
    'is_gap_vector',
    'gap_basis',
    'minimal_antichain',

    # Scenarios
    'ScenarioWord',
    'ScenarioSession',
    'partial_matches',
    'scenarios',
    'scenario_delete',
    'preimages',
    'is_reversibly_deletable',
    'find_rd_set',

    # Schemes
    'DiscoveryParams',
    'SchemeTriple',
    'Scheme',
    'NoScheme',
    'ValidationReport',
    'validate',
    'complement_scheme',
    'minimize_scheme',
    'guaranteed_scheme',
    'serialize',
    'deserialize',
    'scheme_from_triples',

    # Evaluation
    'QPolynomial',
    'SequenceResult',
    'SchemeEvaluator',
    'merge_spacing',
    'inversion_increment',
    'count',
    'sequence',
    'count_by_inversions',

    # Oracle
    'DEFAULT_ORACLE_LIMIT',
    'iter_avoiders',
    'brute_avoiders',
    'brute_count',
    'brute_count_by_inversions',
    'brute_sequence',

    # File operations
    'FileOperations',
    'FileOperationResult',
    'save_scheme',
    'load_scheme',
]


# ============================================================================
# VERSION INFO
# ============================================================================
__version__ = '1.0.0'
__description__ = 'Enumeration schemes for vincular pattern avoidance'
