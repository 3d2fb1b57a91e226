# coding:utf-8
"""
Linear clearing objectives over realized ranks.

Each objective is a sum of per-agent terms, one function of an applicant's
realized rank and one of an employer's. Terms never decrease as rank
grows, so the term of the best attainable rank is an admissible bound.
"""
from typing import Callable, NamedTuple

import numpy as np

from affmatch._errors import InvalidConfig
from affmatch._market import Market, check_matching
from affmatch._stability import realized_ranks
from affmatch._typing import Matching

FEASIBILITY = 'feasibility'
MIN_APPLICANT_RANK_SUM = 'min_applicant_rank_sum'
MIN_EMPLOYER_RANK_SUM = 'min_employer_rank_sum'
MAX_TOP_CHOICES = 'max_top_choices'
MIN_EGALITARIAN_SUM = 'min_egalitarian_sum'

_Term = Callable[[np.ndarray], np.ndarray]


class Objective(NamedTuple):
    kind: str
    applicant_term: _Term
    employer_term: _Term
    maximize: bool = False

    @property
    def uses_applicants(self) -> bool:
        return self.kind in (MIN_APPLICANT_RANK_SUM, MAX_TOP_CHOICES,
                             MIN_EGALITARIAN_SUM)

    @property
    def uses_employers(self) -> bool:
        return self.kind in (MIN_EMPLOYER_RANK_SUM, MAX_TOP_CHOICES,
                             MIN_EGALITARIAN_SUM)


def _nothing(ranks: np.ndarray) -> np.ndarray:
    return np.zeros_like(ranks)


def _rank(ranks: np.ndarray) -> np.ndarray:
    return ranks


def _missed_top(ranks: np.ndarray) -> np.ndarray:
    # -1 per agent holding its top choice
    return -(ranks == 1).astype(np.int64)


OBJECTIVES = {
    FEASIBILITY: Objective(FEASIBILITY, _nothing, _nothing),
    MIN_APPLICANT_RANK_SUM: Objective(MIN_APPLICANT_RANK_SUM,
                                      _rank, _nothing),
    MIN_EMPLOYER_RANK_SUM: Objective(MIN_EMPLOYER_RANK_SUM,
                                     _nothing, _rank),
    MAX_TOP_CHOICES: Objective(MAX_TOP_CHOICES, _missed_top, _missed_top,
                               maximize=True),
    MIN_EGALITARIAN_SUM: Objective(MIN_EGALITARIAN_SUM, _rank, _rank),
}


def get_objective(kind: str) -> Objective:
    try:
        return OBJECTIVES[kind]
    except KeyError:
        raise InvalidConfig(
            "unknown objective %r (expected one of %s)"
            % (kind, ", ".join(OBJECTIVES))) from None


def cost(market: Market, matching: Matching, objective: Objective) -> int:
    """Value the solver minimizes; the negated score for maximized
    objectives."""
    applicant_ranks, employer_ranks = realized_ranks(market, matching)
    total = objective.applicant_term(np.asarray(applicant_ranks)).sum()
    total += objective.employer_term(np.asarray(employer_ranks)).sum()
    return int(total)


def score(market: Market, matching: Matching, objective: str) -> int:
    """Objective value of ``matching``.

    feasibility is always 0; rank-sum objectives sum realized ranks (1 =
    best); max_top_choices counts agents on both sides holding their top
    choice.
    """
    spec = get_objective(objective)
    value = cost(market, check_matching(market, matching), spec)
    return -value if spec.maximize else value
