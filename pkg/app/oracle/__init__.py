from .brute_force import (
    DEFAULT_CAP,
    GroupElement,
    OracleGroup,
    bruhat_le,
    count_reduced_words,
    enumerate_group,
    inversion_count,
    lower_interval,
    min_coset_reps,
    oracle_positive_roots,
    oracle_poset,
    unique_below,
    unique_expression_set,
)
