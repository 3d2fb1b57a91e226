# coding:utf-8
"""
Reduction of consistent markets to classical stable marriage.

When every employer's profile is consistent with a base order over
applicants, a pair ``(a, e)`` greedily blocks exactly when it blocks in the
stable-marriage instance whose employer orders are those base orders, so
applicant-proposing deferred acceptance clears the market.
"""
import collections
import logging
from typing import List, NamedTuple, Optional, Tuple

from affmatch._common import _logger, _resolve_max_n
from affmatch._errors import InconsistentProfiles, InstanceTooLarge
from affmatch._market import Market, infer_consistency, iter_matchings
from affmatch._typing import Matching, _MaybeCallable


class ReducedInstance(NamedTuple):
    applicant_orders: Tuple[Tuple[int, ...], ...]
    employer_orders: Tuple[Tuple[int, ...], ...]


def inconsistent_employers(market: Market) -> List[int]:
    """Employers whose profile admits no base order, in roster order."""
    return [e for e, profile in enumerate(market.employer_profiles)
            if infer_consistency(profile) is None]


def reduced_instance(market: Market) -> ReducedInstance:
    """The stable-marriage instance of a consistent market.

    Raises:
        InconsistentProfiles: naming every employer without a base order.
    """
    orders = []
    offending = []
    for e, profile in enumerate(market.employer_profiles):
        base = infer_consistency(profile, market.n)
        if base is None:
            offending.append(market.employers[e])
        else:
            orders.append(base)
    if offending:
        raise InconsistentProfiles(offending)
    return ReducedInstance(market.applicant_orders, tuple(orders))


def deferred_acceptance(market: Market) -> Matching:
    """Applicant-proposing deferred acceptance on the reduced instance.

    The result is greedily stable on the original market.

    Raises:
        InconsistentProfiles: if some employer profile is not consistent.
    """
    instance = reduced_instance(market)
    n = market.n
    priority = [{a: k for k, a in enumerate(order)}
                for order in instance.employer_orders]
    next_choice = [0] * n
    held = [-1] * n
    free = collections.deque(range(n))
    proposals = 0
    while free:
        a = free.popleft()
        e = instance.applicant_orders[a][next_choice[a]]
        next_choice[a] += 1
        proposals += 1
        incumbent = held[e]
        if incumbent < 0:
            held[e] = a
        elif priority[e][a] < priority[e][incumbent]:
            held[e] = a
            free.append(incumbent)
        else:
            free.append(a)
    _logger.log(logging.DEBUG, "Deferred acceptance: %d proposals",
                proposals)
    matching = [0] * n
    for e, a in enumerate(held):
        matching[a] = e
    return tuple(matching)


def classical_blocking_pairs(instance: ReducedInstance,
                             matching: Matching) -> List[Tuple[int, int]]:
    n = len(matching)
    applicant_rank = [{e: k for k, e in enumerate(order)}
                      for order in instance.applicant_orders]
    employer_rank = [{a: k for k, a in enumerate(order)}
                     for order in instance.employer_orders]
    inverse = [0] * n
    for a, e in enumerate(matching):
        inverse[e] = a
    return [(a, e) for a in range(n) for e in range(n)
            if applicant_rank[a][e] < applicant_rank[a][matching[a]]
            and employer_rank[e][a] < employer_rank[e][inverse[e]]]


def classical_stable_set(
    market: Market, max_n: Optional[_MaybeCallable[int]] = None
) -> List[Matching]:
    """Stable matchings of the reduced instance, in canonical order."""
    bound = _resolve_max_n(max_n)
    if market.n > bound:
        raise InstanceTooLarge(market.n, bound)
    instance = reduced_instance(market)
    return [matching for matching in iter_matchings(market.n)
            if not classical_blocking_pairs(instance, matching)]
