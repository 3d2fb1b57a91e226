# coding:utf-8
"""
Exhaustive ground truth: enumerate every perfect matching and classify it.

Deliberately brute force; it is the reference the solver is checked
against.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from affmatch._common import (
    DEFAULT_MAX_N,
    DEFAULT_STRICT_MAX_N,
    _call_handlers,
    _config_handlers,
    _prepare_logger,
    _resolve_max_n,
)
from affmatch._errors import InstanceTooLarge
from affmatch._market import Market, iter_matchings, matching_index
from affmatch._stability import (
    GreedyBlockingPair,
    StrictBlockingCoalition,
    find_greedy_blocking_pairs,
    find_strict_blocking_coalition,
    realized_ranks,
)
from affmatch._typing import (Agent, Matching, _Handlers, _MaybeCallable,
                              _MaybeLogger)

GREEDY = 'greedy'
STRICT = 'strict'
NOTIONS = (GREEDY, STRICT)

Certificate = Union[GreedyBlockingPair, StrictBlockingCoalition]


@dataclass(frozen=True)
class StableSetReport:
    """Classification of every matching of a market under one notion.

    Attributes:
        notion: ``'greedy'`` or ``'strict'``.
        total: Number of matchings classified (n!).
        stable: Stable matchings in canonical order.
        certificates: For each unstable matching, its certificates of
            instability: every greedy blocking pair, or the first strict
            blocking coalition.
    """
    notion: str
    total: int
    stable: Tuple[Matching, ...]
    certificates: Dict[Matching, Tuple[Certificate, ...]]

    @property
    def core_empty(self) -> bool:
        return not self.stable


def _check_bound(n: int, max_n, default: int) -> int:
    bound = _resolve_max_n(max_n, default)
    if n > bound:
        raise InstanceTooLarge(n, bound)
    return bound


def enumerate_matchings(
    n: int, max_n: Optional[_MaybeCallable[int]] = None
) -> List[Matching]:
    """All n! perfect matchings in canonical order.

    For n = 3 the six matchings are, in order, a_i -> e_i; {a1e1, a2e3,
    a3e2}; {a1e2, a2e1, a3e3}; {a1e2, a2e3, a3e1}; {a1e3, a2e1, a3e2};
    {a1e3, a2e2, a3e1}.
    """
    _check_bound(n, max_n, DEFAULT_MAX_N)
    return list(iter_matchings(n))


def stable_set(market: Market, notion: str = GREEDY,
               *,
               max_n: Optional[_MaybeCallable[int]] = None,
               threads: int = 1,
               on_classified: _Handlers = None,
               logger: _MaybeLogger = 'affmatch') -> StableSetReport:
    """Classify every matching of ``market`` under ``notion``.

    Args:
        market: The market.
        notion: ``'greedy'`` or ``'strict'``.
        max_n: Exhaustive-search bound; defaults to 8 for the greedy
            notion and 6 for the strict one (``AFFMATCH_MAX_N`` overrides
            both). If a callable is passed, it is evaluated at call time.
        threads: Worker threads for classification. The report does not
            depend on it.
        on_classified: Callable (or iterable of callables) called with a
            details dict after each matching is classified, in canonical
            order.
        logger: Name or Logger object to log to. Defaults to 'affmatch'.
    """
    if notion not in NOTIONS:
        raise ValueError("unknown notion %r" % notion)
    default = DEFAULT_MAX_N if notion == GREEDY else DEFAULT_STRICT_MAX_N
    bound = _check_bound(market.n, max_n, default)
    handlers = _config_handlers(on_classified)
    logger = _prepare_logger(logger)

    def classify(matching: Matching) -> Tuple[Certificate, ...]:
        if notion == GREEDY:
            return tuple(find_greedy_blocking_pairs(market, matching))
        coalition = find_strict_blocking_coalition(market, matching, bound)
        return (coalition,) if coalition is not None else ()

    matchings = list(iter_matchings(market.n))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(classify, matchings))
    else:
        results = [classify(matching) for matching in matchings]

    stable = []
    certificates = {}
    for index, (matching, found) in enumerate(zip(matchings, results),
                                              start=1):
        if found:
            certificates[matching] = found
        else:
            stable.append(matching)
        _call_handlers(handlers, notion=notion, index=index,
                       matching=matching, stable=not found)

    if logger is not None:
        logger.log(logging.DEBUG, "%s stable set: %d of %d matchings",
                   notion, len(stable), len(matchings))
    return StableSetReport(notion, len(matchings), tuple(stable),
                           certificates)


def _witness_table(market: Market) -> List[Tuple[Matching, List[int]]]:
    return [(witness, realized_ranks(market, witness)[1])
            for witness in iter_matchings(market.n)]


def witness_blocking_pairs(
    market: Market, matching: Matching,
    table: Optional[Sequence[Tuple[Matching, List[int]]]] = None,
) -> List[Tuple[int, int]]:
    """Greedy blocking pairs by the existential formulation: ``(a, e)``
    blocks when some matching ``mu'`` with ``mu'(a) = e`` gives ``e`` a
    better tuple ``(a, mu'(R_e))`` and ``a`` prefers ``e`` to its partner.
    """
    if table is None:
        table = _witness_table(market)
    applicant_now, employer_now = realized_ranks(market, matching)
    rank = market.applicant_rank
    found = set()
    for witness, employer_then in table:
        for a, e in enumerate(witness):
            if (e != matching[a] and rank[a, e] < applicant_now[a]
                    and employer_then[e] < employer_now[e]):
                found.add((a, e))
    return sorted(found)


def definition_equivalence_check(
    market: Market, max_n: Optional[_MaybeCallable[int]] = None
) -> bool:
    """Whether the profile-scan and existential-witness formulations of a
    greedy blocking pair agree on every matching and pair."""
    _check_bound(market.n, max_n, DEFAULT_MAX_N)
    table = _witness_table(market)
    for matching, _ in table:
        scanned = [(p.applicant, p.employer)
                   for p in find_greedy_blocking_pairs(market, matching)]
        if scanned != witness_blocking_pairs(market, matching, table):
            return False
    return True


class MatchingOutcomes(NamedTuple):
    index: int
    matching: Matching
    applicant_ranks: Tuple[int, ...]
    employer_ranks: Tuple[int, ...]


def matching_outcomes(market: Market, matching: Matching) -> MatchingOutcomes:
    applicant_ranks, employer_ranks = realized_ranks(market, matching)
    return MatchingOutcomes(matching_index(tuple(matching)), tuple(matching),
                            tuple(applicant_ranks), tuple(employer_ranks))


def rank_matchings(market: Market, agent: Agent, side: str = 'employer',
                   max_n: Optional[_MaybeCallable[int]] = None
                   ) -> List[List[int]]:
    """One agent's profile rewritten as an order over whole matchings.

    Returns groups of 1-based matching indices, best group first; matchings
    in one group give the agent the same outcome.
    """
    _check_bound(market.n, max_n, DEFAULT_MAX_N)
    if side == 'employer':
        k = market.employer_index(agent)
    elif side == 'applicant':
        k = market.applicant_index(agent)
    else:
        raise ValueError("side must be 'applicant' or 'employer'")
    groups: Dict[int, List[int]] = {}
    for matching in iter_matchings(market.n):
        outcome = matching_outcomes(market, matching)
        ranks: Sequence[int] = (outcome.employer_ranks if side == 'employer'
                                else outcome.applicant_ranks)
        groups.setdefault(ranks[k], []).append(outcome.index)
    return [groups[r] for r in sorted(groups)]
