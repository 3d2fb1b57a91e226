# coding:utf-8
"""
Affiliate matching markets

Two-sided one-to-one markets in which employers rank tuples combining
their own hire with the placements of their affiliated applicants. This
package validates such markets, classifies matchings under greedy and
strict stability, enumerates stable sets exhaustively, clears markets with
a branch-and-bound solver restricted to greedily stable matchings, and
generates seeded random markets from combination strategies.

Run ``python -m affmatch --help`` for the command-line interface.
"""
from affmatch._errors import (
    AffmatchError,
    BoundExceeded,
    DuplicateAffiliation,
    IncompleteApplicantOrder,
    IncompleteProfile,
    InconsistentProfiles,
    InstanceSyntaxError,
    InstanceTooLarge,
    InvalidConfig,
    InvalidMatching,
    InvalidReport,
    InvalidSpec,
    InvalidTuple,
    MarketError,
    SizeMismatch,
    UnknownAgent,
)
from affmatch._generator import GeneratorSpec, generate_market
from affmatch._io import dump, load, parse, serialize, to_document
from affmatch._market import (
    EmployerTuple,
    Market,
    consistent_profile_count,
    count_consistent_profiles,
    count_profiles,
    count_valid_tuples,
    infer_consistency,
    is_consistent_with,
    is_valid_tuple,
    matching_from_index,
    matching_index,
    valid_tuples,
    validate_market,
)
from affmatch._objective import OBJECTIVES, score
from affmatch._oracle import (
    StableSetReport,
    definition_equivalence_check,
    enumerate_matchings,
    matching_outcomes,
    rank_matchings,
    stable_set,
    witness_blocking_pairs,
)
from affmatch._reduce import (
    classical_stable_set,
    deferred_acceptance,
    reduced_instance,
)
from affmatch._report import render_text
from affmatch._solver import (
    AssignmentVariables,
    SolveResult,
    SolverConfig,
    StabilityCut,
    Status,
    leaf_cuts,
    solve,
    verify_result,
)
from affmatch._stability import (
    GreedyBlockingPair,
    StrictBlockingCoalition,
    check_coalition,
    coalition_violations,
    employer_outcome,
    find_blocking_coalition,
    find_greedy_blocking_pairs,
    find_strict_blocking_coalition,
    is_greedily_stable,
    is_strictly_stable,
    verify_greedy_blocking_pair,
)
from affmatch._strategy import (
    StrategyInput,
    alpha_affiliate_first,
    alpha_candidate_first,
    alpha_uniform_random,
    alpha_weighted,
)

__all__ = [
    'Market',
    'EmployerTuple',
    'validate_market',
    'is_valid_tuple',
    'valid_tuples',
    'count_valid_tuples',
    'count_profiles',
    'count_consistent_profiles',
    'consistent_profile_count',
    'is_consistent_with',
    'infer_consistency',
    'matching_index',
    'matching_from_index',
    'employer_outcome',
    'GreedyBlockingPair',
    'StrictBlockingCoalition',
    'find_greedy_blocking_pairs',
    'is_greedily_stable',
    'verify_greedy_blocking_pair',
    'check_coalition',
    'coalition_violations',
    'find_blocking_coalition',
    'find_strict_blocking_coalition',
    'is_strictly_stable',
    'StableSetReport',
    'enumerate_matchings',
    'stable_set',
    'witness_blocking_pairs',
    'definition_equivalence_check',
    'matching_outcomes',
    'rank_matchings',
    'reduced_instance',
    'deferred_acceptance',
    'classical_stable_set',
    'OBJECTIVES',
    'score',
    'Status',
    'SolverConfig',
    'SolveResult',
    'AssignmentVariables',
    'StabilityCut',
    'leaf_cuts',
    'solve',
    'verify_result',
    'StrategyInput',
    'alpha_weighted',
    'alpha_candidate_first',
    'alpha_affiliate_first',
    'alpha_uniform_random',
    'GeneratorSpec',
    'generate_market',
    'parse',
    'serialize',
    'to_document',
    'load',
    'dump',
    'render_text',
    'AffmatchError',
    'MarketError',
    'SizeMismatch',
    'DuplicateAffiliation',
    'InvalidTuple',
    'IncompleteProfile',
    'IncompleteApplicantOrder',
    'UnknownAgent',
    'InstanceSyntaxError',
    'InvalidMatching',
    'InstanceTooLarge',
    'InconsistentProfiles',
    'InvalidConfig',
    'InvalidSpec',
    'InvalidReport',
    'BoundExceeded',
]

__version__ = "1.0.0"
