"""Exact toolkit for pattern-avoiding permutations counted by the
central binomial coefficients: enumeration, the code word bijection,
barrier-bounded lattice path counting, and a symmetry-class scanner."""

from .avoiders import (
    DEFAULT_BUDGET,
    AvoiderSequence,
    allowed_insertions,
    count_sequence,
    extensions,
    generate_avoiders,
    insert_max,
    iter_levels,
)
from .codewords import (
    B,
    E,
    FORBIDDEN_PATTERNS,
    Word,
    decode,
    encode,
    enumerate_code_words,
    format_word,
    is_code_word,
    parse_word,
    pivot_position,
    restrict,
    validate_word,
    word_violation,
)
from .errors import (
    BudgetExceededError,
    ForbiddenPatternError,
    InvalidPathError,
    InvalidTailError,
    InvalidWordError,
)
from .lattice import (
    EAST,
    NORTH,
    LatticePath,
    binom,
    binomial_identity,
    central_binomial,
    count_paths_brute,
    count_paths_closed,
    first_touch,
    iter_paths,
    path_from_json,
    path_to_json,
    path_to_tail,
    reflect_bad_path,
    tail_to_path,
    word_count_from_paths,
)
from .perms import (
    PatternSet,
    Perm,
    avoids_all,
    canonical_key,
    complement,
    contains_pattern,
    find_occurrence,
    format_perm,
    inverse,
    is_permutation,
    key_text,
    parse_perm,
    pattern_set,
    perm,
    reverse,
    symmetry_orbit,
)
from .wilf import (
    CANDIDATE_CLASSES,
    ClassReport,
    ScanResult,
    catalan,
    enumerate_quadruple_classes,
    scan_for_sequence,
    verify_candidates,
)

__version__ = "0.1.0"
