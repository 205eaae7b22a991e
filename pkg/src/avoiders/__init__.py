"""Exact enumeration of {1243, 2134}-avoiding permutations.

The package has four layers: entry-level permutation predicates (``perms``),
exhaustive class enumeration with prefix pruning (``enumeration``), the
length-reducing bijection onto lists of start-small 123-avoiders
(``bijection``), and exact rational power-series arithmetic for the
generating functions involved (``series``).  ``verify`` cross-checks all of
them against each other, and ``cli`` exposes everything as a command line.
"""

from .bijection import (
    DecompositionStep,
    InverseParams,
    decompose,
    format_perm_list,
    inverse_params,
    parse_perm_list,
    phi,
    phi_inverse,
    recompose,
)
from .enumeration import (
    ClassDescriptor,
    count_avoiders,
    count_class,
    count_start_small_123_avoiders,
    enumerate_avoiders,
    enumerate_class,
    naive_avoiders,
)
from .perms import (
    AVOIDED_PAIR,
    PATTERN_123,
    PATTERN_1243,
    PATTERN_2134,
    avoids,
    contains,
    contains_123,
    format_perm,
    is_permutation,
    is_start_small,
    key_mid123_entries,
    mid123_entries,
    parse_perm,
    right_to_left_maxima,
    standardize,
)
from .series import (
    PowerSeries,
    SequencePair,
    catalan_series,
    counting_sequences,
    gf_full,
    gf_start_small,
    integer_coefficients,
    invert_transform,
    kotesovec_series,
    poly,
    sqrt_one_minus_4x,
)

__all__ = [
    "AVOIDED_PAIR",
    "PATTERN_123",
    "PATTERN_1243",
    "PATTERN_2134",
    "ClassDescriptor",
    "DecompositionStep",
    "InverseParams",
    "PowerSeries",
    "SequencePair",
    "avoids",
    "catalan_series",
    "contains",
    "contains_123",
    "count_avoiders",
    "count_class",
    "count_start_small_123_avoiders",
    "counting_sequences",
    "decompose",
    "enumerate_avoiders",
    "enumerate_class",
    "format_perm",
    "format_perm_list",
    "gf_full",
    "gf_start_small",
    "integer_coefficients",
    "inverse_params",
    "invert_transform",
    "is_permutation",
    "is_start_small",
    "key_mid123_entries",
    "kotesovec_series",
    "mid123_entries",
    "naive_avoiders",
    "parse_perm",
    "parse_perm_list",
    "phi",
    "phi_inverse",
    "poly",
    "recompose",
    "right_to_left_maxima",
    "sqrt_one_minus_4x",
    "standardize",
]

__version__ = "0.1.0"
