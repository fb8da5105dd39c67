"""Free class-2 nilpotent groups, central quotients and rank-2 witnesses."""

from ._core import (
    ConditionCheck,
    ConditionReport,
    ConstructionResult,
    CyclicCentralSubgroup,
    DiophantineSolution,
    GroupElement,
    InternalError,
    KernelReport,
    WitnessPair,
    brute_force_witness_search,
    commutator,
    commutator_exponents,
    det_a,
    gcd_many,
    identity,
    inv,
    is_central_mod_c,
    kernel_rank,
    membership_in_c,
    mul,
    pair_count,
    pair_index,
    pfaffian4,
    pow,
    rank3_subgroup,
    search_space_size,
    selftest,
    solve_linear_2var,
    soundness_sweep,
    theorem_a_construct,
    theorem_b_condition,
    theorem_c_check,
    verify_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
