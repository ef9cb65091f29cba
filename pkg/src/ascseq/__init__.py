"""Pattern-avoiding ascent sequences, 132-avoiding permutations, the statistics
asc and rlm, and the bistatistic-preserving bijection between the families.
"""

from .bijection import ascent_to_permutation, permutation_to_ascent
from .core import (
    AscentSequenceError,
    PermutationError,
    ValidationError,
    format_seq,
    is_ascent_sequence,
    is_permutation,
    parse_seq,
    standardize,
    validate_ascent_sequence,
    validate_permutation,
)
from .decompose import (
    AscentSplit,
    PermSplit,
    join_ascent_sequence,
    join_permutation,
    split_ascent_sequence,
    split_permutation,
)
from .enumeration import (
    ASCENT_CAP,
    PERM_CAP,
    EquidistributionReport,
    JointDistribution,
    ascent_sequences,
    ascent_sequences_avoiding,
    catalan,
    count_ascent_sequences_avoiding,
    count_permutations_avoiding,
    joint_distribution,
    permutations_avoiding,
    verify_equidistribution,
)
from .patterns import (
    PATTERN_021,
    PATTERN_132,
    PatternContainedError,
    avoids_perm,
    avoids_word,
    iter_occurrences_perm,
    iter_occurrences_word,
    nonzero_weakly_increasing,
    occurrences_perm,
    occurrences_word,
    validate_word_pattern,
)
from .stats import SpecialMaxInfo, asc, rlm, special_maximum

__version__ = "0.1.0"

__all__ = [
    "ASCENT_CAP",
    "AscentSequenceError",
    "AscentSplit",
    "EquidistributionReport",
    "JointDistribution",
    "PATTERN_021",
    "PATTERN_132",
    "PERM_CAP",
    "PatternContainedError",
    "PermSplit",
    "PermutationError",
    "SpecialMaxInfo",
    "ValidationError",
    "asc",
    "ascent_sequences",
    "ascent_sequences_avoiding",
    "ascent_to_permutation",
    "avoids_perm",
    "avoids_word",
    "catalan",
    "count_ascent_sequences_avoiding",
    "count_permutations_avoiding",
    "format_seq",
    "is_ascent_sequence",
    "is_permutation",
    "iter_occurrences_perm",
    "iter_occurrences_word",
    "join_ascent_sequence",
    "join_permutation",
    "joint_distribution",
    "nonzero_weakly_increasing",
    "occurrences_perm",
    "occurrences_word",
    "parse_seq",
    "permutation_to_ascent",
    "permutations_avoiding",
    "rlm",
    "special_maximum",
    "split_ascent_sequence",
    "split_permutation",
    "standardize",
    "validate_ascent_sequence",
    "validate_permutation",
    "validate_word_pattern",
    "verify_equidistribution",
]
