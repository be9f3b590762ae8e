"""Gray codes through nested set chains."""

from .core import (
    DifferenceSequence,
    DomainError,
    FailureReason,
    ResourceLimitError,
    StepseqError,
    SteppingSequence,
    SubsetMask,
    VerificationReport,
    apply_move,
    hamming_weight,
    new_chain,
    occurrence_profile,
    subset_at,
    v2,
    verify,
)
from .generators import (
    combine_first,
    combine_second,
    greedy,
    humble,
    recursive_r,
    stream_for_c,
    stream_for_j,
)

__version__ = "0.1.0"
