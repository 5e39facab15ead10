"""Grundy values, periodicity certificates and conjecture sweeps for
subtraction games with a one-time pass move."""

from passnim._core import (
    AgreementRecord,
    BlockPattern,
    BlockSegment,
    CapacityError,
    CheckReport,
    ConditionAReport,
    ConditionAWitness,
    Family,
    FamilySweepReport,
    GrundyTable,
    Move,
    Outcome,
    PassGrundyTable,
    PeriodCertificate,
    PeriodNotFoundError,
    SubtractionSet,
    SweepCell,
    Violation,
    check_condition_a,
    check_pass_independence,
    check_reverse_mex,
    check_reverse_mex_pass,
    closed_form_rule,
    detect_period,
    detect_period_pass,
    detect_period_values,
    dist,
    empirical_independence_threshold,
    family_pass_threshold,
    family_rule,
    grundy_closed,
    grundy_pass_closed,
    grundy_table,
    last_independence_violation,
    mex,
    moves,
    outcome_by_grundy,
    outcome_by_grundy_pass,
    outcome_by_search,
    pass_grundy_table,
    pass_loop_pattern,
    pass_loop_values,
    pass_prefix_pattern,
    pass_prefix_values,
    sweep_family,
    test_reverse_mex_iff_condition_a,
    value_at,
    value_at_pass,
    verify_block_theorem,
    verify_closed_form_theorem,
    window_mod,
    winning_moves,
    winning_moves_pass,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
