# coding:utf-8
"""
Greedy and strict stability with certificate-producing detectors.

Employer outcomes are compared by profile rank only.
"""
from typing import (Dict, FrozenSet, Iterable, List, NamedTuple, Optional,
                    Sequence, Tuple)

from affmatch._common import _resolve_max_n
from affmatch._errors import InstanceTooLarge
from affmatch._market import (
    EmployerTuple,
    Market,
    check_matching,
    invert,
    iter_matchings,
)
from affmatch._typing import Agent, Matching, _MaybeCallable


class Outcome(NamedTuple):
    employer: int
    entry: EmployerTuple
    rank: int


class GreedyBlockingPair(NamedTuple):
    applicant: int
    employer: int
    witness_tuple: EmployerTuple
    witness_matching: Matching


class StrictBlockingCoalition(NamedTuple):
    applicants: FrozenSet[int]
    employers: FrozenSet[int]
    witness: Matching


class Violation(NamedTuple):
    side: str  # 'applicant' or 'employer'
    agent: int
    reason: str


def employer_outcome(market: Market, matching: Matching,
                     e: Agent) -> Outcome:
    """The realized tuple of employer ``e`` and its profile rank."""
    j = market.employer_index(e)
    matching = check_matching(market, matching)
    entry = market.realized_tuple(j, matching)
    return Outcome(j, entry, market.tuple_rank(j, entry))


def _applicant_ranks(market: Market, matching: Matching) -> List[int]:
    rank = market.applicant_rank
    return [int(rank[a, e]) for a, e in enumerate(matching)]


def _employer_ranks(market: Market, matching: Matching) -> List[int]:
    inverse = invert(matching)
    return [market.tuple_rank(e, market.realized_tuple(e, matching, inverse))
            for e in range(market.n)]


def complete_matching(n: int, partial: Dict[int, int]) -> Matching:
    """Extend a partial applicant-to-employer assignment to a perfect
    matching, filling free applicants with free employers in roster
    order."""
    taken = set(partial.values())
    free = iter(e for e in range(n) if e not in taken)
    return tuple(partial[a] if a in partial else next(free)
                 for a in range(n))


def _witness(market: Market, a: int, e: int,
             entry: EmployerTuple) -> Matching:
    partial = {a: e}
    partial.update(zip(market.affiliations[e], entry.placements))
    return complete_matching(market.n, partial)


def find_greedy_blocking_pairs(market: Market,
                               matching: Matching) -> List[GreedyBlockingPair]:
    """Every greedy blocking pair of ``matching``.

    ``(a, e)`` blocks when ``a`` ranks ``e`` above its partner and ``e``
    ranks some tuple hiring ``a`` above its realized tuple, wherever its
    affiliates end up. Pairs come in applicant then employer roster order;
    each carries the best such tuple and a matching realizing it.
    """
    matching = check_matching(market, matching)
    n = market.n
    current = _employer_ranks(market, matching)
    rank = market.applicant_rank
    best = market.best_rank_by_hire
    pairs = []
    for a in range(n):
        partner = matching[a]
        for e in range(n):
            if e == partner or rank[a, e] >= rank[a, partner]:
                continue
            if 0 < best[e, a] < current[e]:
                entry = market.employer_profiles[e][best[e, a] - 1]
                pairs.append(GreedyBlockingPair(
                    a, e, entry, _witness(market, a, e, entry)))
    return pairs


def is_greedily_stable(market: Market, matching: Matching) -> bool:
    return not find_greedy_blocking_pairs(market, matching)


def verify_greedy_blocking_pair(market: Market, matching: Matching,
                                pair: GreedyBlockingPair) -> bool:
    """Re-check a certificate against the definition."""
    matching = check_matching(market, matching)
    witness = check_matching(market, pair.witness_matching)
    a, e = pair.applicant, pair.employer
    if witness[a] != e or matching[a] == e:
        return False
    if market.applicant_rank[a, e] >= market.applicant_rank[a, matching[a]]:
        return False
    realized = market.realized_tuple(e, witness)
    if realized != pair.witness_tuple:
        return False
    current = market.tuple_rank(e, market.realized_tuple(e, matching))
    return market.tuple_rank(e, realized) < current


def coalition_violations(market: Market, matching: Matching,
                         witness: Matching, applicants: Iterable[Agent],
                         employers: Iterable[Agent]) -> List[Violation]:
    """Every member of ``(C_A, C_E)`` failing a blocking condition under
    ``witness``, employers first, each side in roster order.

    Reasons: ``affiliate_outside`` (an affiliate of a member employer is
    not in ``C_A``), ``partner_outside`` (the witness partner is not in the
    coalition) and ``not_improved`` (no strict improvement).
    """
    matching = check_matching(market, matching)
    witness = check_matching(market, witness)
    c_a = {market.applicant_index(a) for a in applicants}
    c_e = {market.employer_index(e) for e in employers}
    before = _employer_ranks(market, matching)
    witness_inverse = invert(witness)
    violations = []
    for e in sorted(c_e):
        if not set(market.affiliations[e]) <= c_a:
            violations.append(Violation('employer', e, 'affiliate_outside'))
        if witness_inverse[e] not in c_a:
            violations.append(Violation('employer', e, 'partner_outside'))
        after = market.tuple_rank(
            e, market.realized_tuple(e, witness, witness_inverse))
        if after >= before[e]:
            violations.append(Violation('employer', e, 'not_improved'))
    rank = market.applicant_rank
    for a in sorted(c_a):
        if witness[a] not in c_e:
            violations.append(Violation('applicant', a, 'partner_outside'))
        if rank[a, witness[a]] >= rank[a, matching[a]]:
            violations.append(Violation('applicant', a, 'not_improved'))
    return violations


def check_coalition(market: Market, matching: Matching, witness: Matching,
                    applicants: Iterable[Agent],
                    employers: Iterable[Agent]) -> bool:
    """Whether ``(C_A, C_E)`` strictly blocks ``matching`` via
    ``witness``. Both sets must be nonempty."""
    applicants, employers = list(applicants), list(employers)
    if not applicants or not employers:
        return False
    return not coalition_violations(market, matching, witness,
                                    applicants, employers)


def _maximal_coalition(market: Market, applicant_before: Sequence[int],
                       employer_before: Sequence[int],
                       witness: Matching
                       ) -> Optional[StrictBlockingCoalition]:
    rank = market.applicant_rank
    witness_inverse = invert(witness)
    improvers_a = {a for a, e in enumerate(witness)
                   if rank[a, e] < applicant_before[a]}
    if not improvers_a:
        return None
    improvers_e = set()
    for e in range(market.n):
        entry = market.realized_tuple(e, witness, witness_inverse)
        if market.tuple_rank(e, entry) < employer_before[e]:
            improvers_e.add(e)

    # shrink to the largest self-contained coalition
    changed = True
    while changed and improvers_a and improvers_e:
        changed = False
        for e in sorted(improvers_e):
            if (witness_inverse[e] not in improvers_a
                    or not set(market.affiliations[e]) <= improvers_a):
                improvers_e.discard(e)
                changed = True
        for a in sorted(improvers_a):
            if witness[a] not in improvers_e:
                improvers_a.discard(a)
                changed = True
    if improvers_a and improvers_e:
        return StrictBlockingCoalition(
            frozenset(improvers_a), frozenset(improvers_e), witness)
    return None


def find_blocking_coalition(market: Market, matching: Matching,
                            witness: Matching
                            ) -> Optional[StrictBlockingCoalition]:
    """The unique maximal strict blocking coalition of ``matching``
    realized by ``witness``, or None if there is none.

    Raises:
        ValueError: if ``witness`` equals ``matching``.
    """
    matching = check_matching(market, matching)
    witness = check_matching(market, witness)
    if witness == matching:
        raise ValueError("witness matching must differ from the matching")
    return _maximal_coalition(
        market, _applicant_ranks(market, matching),
        _employer_ranks(market, matching), witness)


def find_strict_blocking_coalition(
    market: Market, matching: Matching,
    max_n: Optional[_MaybeCallable[int]] = None,
) -> Optional[StrictBlockingCoalition]:
    """First strict blocking coalition over all witness matchings in
    canonical order, or None when ``matching`` is strictly stable.

    Raises:
        InstanceTooLarge: if the market exceeds the exhaustive-search bound
            (``max_n``, ``AFFMATCH_MAX_N`` or 8).
    """
    bound = _resolve_max_n(max_n)
    if market.n > bound:
        raise InstanceTooLarge(market.n, bound)
    matching = check_matching(market, matching)
    applicant_before = _applicant_ranks(market, matching)
    employer_before = _employer_ranks(market, matching)
    for witness in iter_matchings(market.n):
        if witness == matching:
            continue
        coalition = _maximal_coalition(market, applicant_before,
                                       employer_before, witness)
        if coalition is not None:
            return coalition
    return None


def is_strictly_stable(market: Market, matching: Matching,
                       max_n: Optional[_MaybeCallable[int]] = None) -> bool:
    return find_strict_blocking_coalition(market, matching, max_n) is None


def realized_ranks(market: Market,
                   matching: Matching) -> Tuple[List[int], List[int]]:
    """Realized rank of every applicant and every employer."""
    matching = check_matching(market, matching)
    return (_applicant_ranks(market, matching),
            _employer_ranks(market, matching))
