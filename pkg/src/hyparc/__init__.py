"""Classify hyperplane-arrangement complements in projective space.

Given the defining linear forms of a hyperplane arrangement, compute the
possible dimensions of linear subspaces meeting the complement generically
(equivalently, the achievable dimensions of dense point sets on the
complement), and produce a certified witness subspace of the maximal
dimension.
"""

from .arrangement import Arrangement, ArrangementProfile, LinearForm, load, profile
from .corollaries import Verdict, cross_check, finiteness_verdict, general_position_bound
from .dimension_search import (
    DimensionReport,
    PartitionCheck,
    achievable_dimensions,
    brute_force_max_parts,
    check_partition,
    max_valid_parts,
)
from .exact_linalg import (
    DimensionMismatchError,
    InternalError,
    Subspace,
    contains,
    intersect,
    span,
    sum_spaces,
    zero_set,
)
from .witness import (
    UChain,
    WitnessSubspace,
    build_u_chain,
    build_witness_for_mplus1,
    shrink_witness,
    verify_cond,
    witness_subspace,
)

__all__ = [
    "Arrangement",
    "ArrangementProfile",
    "LinearForm",
    "load",
    "profile",
    "Verdict",
    "cross_check",
    "finiteness_verdict",
    "general_position_bound",
    "DimensionReport",
    "PartitionCheck",
    "achievable_dimensions",
    "brute_force_max_parts",
    "check_partition",
    "max_valid_parts",
    "DimensionMismatchError",
    "InternalError",
    "Subspace",
    "contains",
    "intersect",
    "span",
    "sum_spaces",
    "zero_set",
    "UChain",
    "WitnessSubspace",
    "build_u_chain",
    "build_witness_for_mplus1",
    "shrink_witness",
    "verify_cond",
    "witness_subspace",
]
