"""Bounded-weight de Bruijn sequences: construction, polynomial-time decoding,
and universal cycles for t-subsets and t-multisets."""

__version__ = "0.1.0"

from .counting import DecodeContext, clear_caches, decode_context, s_up
from .cycles import (
    brute_rank,
    cycle_length,
    generate_down,
    generate_up,
    iter_necklaces,
    list_necklaces,
)
from .decode import (
    cycle_length_down,
    cycle_length_up,
    rank_down,
    rank_up,
    smallest_neck,
    unrank_down,
    unrank_up,
)
from .necklaces import (
    first_necklace,
    increment_last_nonmax,
    next_necklace,
    smallest_necklace_with_prefix,
    weighted_successor_geq,
)
from .strings import (
    aperiodic_prefix,
    complement,
    is_necklace,
    pq_split,
    weight,
)
from .subsets import (
    diff_to_multiset,
    diff_to_subset,
    multiset_rank,
    multiset_to_diff,
    multiset_unrank,
    subset_rank,
    subset_to_diff,
    subset_unrank,
)

__all__ = [
    "DecodeContext",
    "aperiodic_prefix",
    "brute_rank",
    "clear_caches",
    "complement",
    "cycle_length",
    "cycle_length_down",
    "cycle_length_up",
    "decode_context",
    "diff_to_multiset",
    "diff_to_subset",
    "first_necklace",
    "generate_down",
    "generate_up",
    "increment_last_nonmax",
    "is_necklace",
    "iter_necklaces",
    "list_necklaces",
    "multiset_rank",
    "multiset_to_diff",
    "multiset_unrank",
    "next_necklace",
    "pq_split",
    "rank_down",
    "rank_up",
    "s_up",
    "smallest_neck",
    "smallest_necklace_with_prefix",
    "subset_rank",
    "subset_to_diff",
    "subset_unrank",
    "unrank_down",
    "unrank_up",
    "weight",
    "weighted_successor_geq",
]
