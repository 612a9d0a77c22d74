from .binomial import (
    MAX_BINOMIAL,
    BinomialRep,
    binomial_rep,
    checked_add,
    checked_comb,
    rank,
    rank_sum,
    unrank,
)
from .dset import (
    DSet,
    Family,
    Ordering,
    as_dset,
    borel_leq,
    family_squashed_cmp,
    iter_squashed,
    shadow,
    shift_by,
    shift_family,
    squashed_cmp,
)

__all__ = [
    "MAX_BINOMIAL",
    "BinomialRep",
    "DSet",
    "Family",
    "Ordering",
    "as_dset",
    "binomial_rep",
    "borel_leq",
    "checked_add",
    "checked_comb",
    "family_squashed_cmp",
    "iter_squashed",
    "rank",
    "rank_sum",
    "shadow",
    "shift_by",
    "shift_family",
    "squashed_cmp",
    "unrank",
]
