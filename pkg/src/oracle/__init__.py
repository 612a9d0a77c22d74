from .identities import identity_failures, random_family, verify_identities, verify_identity_sweep
from .report import VerificationReport
from .sweeps import (
    ShiftWitness,
    SweepTally,
    enum_families,
    equality_cases,
    find_shift_witness,
    iter_shifted_families,
    search_shift_noninclusion,
    verify_min_theorem,
    verify_segment_lemmas,
    verify_shadow_theorem,
    verify_shift_shadow,
    verify_structure_preservation,
)
from .universe import Universe, get_universe, iter_bits, masks_of_weight

__all__ = [
    "ShiftWitness",
    "SweepTally",
    "Universe",
    "VerificationReport",
    "enum_families",
    "equality_cases",
    "find_shift_witness",
    "get_universe",
    "identity_failures",
    "iter_bits",
    "iter_shifted_families",
    "masks_of_weight",
    "random_family",
    "search_shift_noninclusion",
    "verify_identities",
    "verify_identity_sweep",
    "verify_min_theorem",
    "verify_segment_lemmas",
    "verify_shadow_theorem",
    "verify_shift_shadow",
    "verify_structure_preservation",
]
