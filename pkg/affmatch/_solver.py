# coding:utf-8
"""
Branch-and-bound clearing over greedily stable matchings.

The search assigns applicant rows in roster order, trying employers in
the applicant's preference order. Complete leaves are tested for greedy
stability; unstable leaves feed a cut pool that later prunes partial
assignments. The search is exhaustive, so an empty result proves the
greedy core is empty.

Stability cuts are linear in the assignment variables ``z[i, j]``:

- ``no_good``: ``sum_i (1 - z[i, s(i)]) >= 1`` excludes one full
  assignment ``s``.
- ``conditional_pair`` for a blocking pair ``(i, j)`` seen with employer
  ``j``'s affiliates placed at ``p_k -> g_k``::

      z[i, j] + sum(z[i, l] for e_l preferred by a_i to e_j)
              + sum(z[l, j] for a_l such that e_j ranks (a_l, g) above
                    every tuple hiring a_i)
              + sum(1 - z[p_k, g_k]) >= 1

  Every greedily stable matching satisfies it: either the snapshot does
  not hold, or a_i is matched at least as well, or e_j already holds a
  hire beating every tuple with a_i.
"""
import datetime
import enum
import logging
from dataclasses import dataclass, field
from datetime import timedelta
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from affmatch._common import (
    _call_handlers,
    _config_handlers,
    _log_cut,
    _log_finish,
    _log_incumbent,
    _prepare_logger,
)
from affmatch._errors import BoundExceeded, InvalidConfig, InvalidMatching
from affmatch._market import (
    EmployerTuple,
    Market,
    check_matching,
    is_valid_tuple,
)
from affmatch._objective import (
    FEASIBILITY,
    Objective,
    cost,
    get_objective,
)
from affmatch._stability import find_greedy_blocking_pairs
from affmatch._typing import Matching, _Handlers, _MaybeLogger

NOGOOD = 'nogood'
NOGOOD_CONDITIONAL = 'nogood+conditional'
CUT_MODES = (NOGOOD, NOGOOD_CONDITIONAL)


class Status(str, enum.Enum):
    STABLE = 'stable'
    EMPTY_CORE = 'empty_core'
    INFEASIBLE = 'infeasible'
    BOUND_EXCEEDED = 'bound_exceeded'


class AssignmentVariables:
    """Binary assignment matrix ``z`` with unit row and column sums."""

    def __init__(self, z: np.ndarray) -> None:
        z = np.asarray(z, dtype=np.int8)
        n = z.shape[0]
        if (z.shape != (n, n) or not np.isin(z, (0, 1)).all()
                or not (z.sum(axis=0) == 1).all()
                or not (z.sum(axis=1) == 1).all()):
            raise InvalidMatching("z is not a perfect assignment matrix")
        self.z = z

    @classmethod
    def from_matching(cls, matching: Matching) -> 'AssignmentVariables':
        n = len(matching)
        z = np.zeros((n, n), dtype=np.int8)
        z[np.arange(n), list(matching)] = 1
        return cls(z)

    @property
    def matching(self) -> Matching:
        return tuple(int(j) for j in self.z.argmax(axis=1))


class StabilityCut(NamedTuple):
    """``sum(z[positive]) + sum(1 - z[negative]) >= 1``."""
    kind: str  # 'no_good' or 'conditional_pair'
    positive: Tuple[Tuple[int, int], ...]
    negative: Tuple[Tuple[int, int], ...]
    pair: Optional[Tuple[int, int]] = None

    def evaluate(self, variables: Union[AssignmentVariables,
                                        np.ndarray]) -> int:
        """Left-hand side of the cut at a full assignment."""
        z = (variables.z if isinstance(variables, AssignmentVariables)
             else np.asarray(variables))
        lhs = sum(int(z[i, j]) for i, j in self.positive)
        lhs += sum(1 - int(z[i, j]) for i, j in self.negative)
        return lhs

    def is_satisfied(self, variables: Union[AssignmentVariables,
                                            np.ndarray]) -> bool:
        return self.evaluate(variables) >= 1


def no_good_cut(matching: Matching) -> StabilityCut:
    return StabilityCut('no_good', (), tuple(enumerate(matching)))


def conditional_pair_cut(market: Market, i: int, j: int,
                         snapshot: Sequence[int]) -> StabilityCut:
    """Cut for pair ``(a_i, e_j)`` given employer ``j``'s affiliates placed
    at ``snapshot`` (one employer per affiliate)."""
    affiliates = market.affiliations[j]
    placements = tuple(snapshot)
    rank = market.applicant_rank
    positive = [(i, j)]
    positive += [(i, ell) for ell in range(market.n)
                 if rank[i, ell] < rank[i, j]]
    threshold = market.best_rank_by_hire[j, i]
    for ell in range(market.n):
        entry = EmployerTuple(ell, placements)
        if (is_valid_tuple(j, affiliates, entry)
                and market.tuple_rank(j, entry) < threshold):
            positive.append((ell, j))
    negative = tuple(zip(affiliates, placements))
    return StabilityCut('conditional_pair', tuple(positive), negative,
                        (i, j))


def leaf_cuts(market: Market, matching: Matching,
              mode: str = NOGOOD_CONDITIONAL) -> List[StabilityCut]:
    """Cuts separating an unstable full assignment; empty if it is
    greedily stable."""
    pairs = find_greedy_blocking_pairs(market, matching)
    if not pairs:
        return []
    cuts = [no_good_cut(matching)]
    if mode == NOGOOD_CONDITIONAL:
        for pair in pairs:
            j = pair.employer
            snapshot = [matching[p] for p in market.affiliations[j]]
            cuts.append(conditional_pair_cut(market, pair.applicant, j,
                                             snapshot))
    return cuts


@dataclass(frozen=True)
class SolverConfig:
    """Solver settings.

    Attributes:
        objective: Objective name, see ``affmatch.OBJECTIVES``.
        cuts: ``'nogood'`` or ``'nogood+conditional'``.
        node_budget: Maximum number of search nodes.
        raise_on_bound: Raise BoundExceeded instead of returning a
            ``bound_exceeded`` result when the budget runs out.
    """
    objective: str = FEASIBILITY
    cuts: str = NOGOOD
    node_budget: int = 10 ** 7
    raise_on_bound: bool = False

    def __post_init__(self) -> None:
        get_objective(self.objective)
        if self.cuts not in CUT_MODES:
            raise InvalidConfig("unknown cut strategy %r (expected %s)"
                                % (self.cuts, " or ".join(CUT_MODES)))
        if (not isinstance(self.node_budget, int)
                or isinstance(self.node_budget, bool)
                or self.node_budget < 1):
            raise InvalidConfig("node_budget must be a positive integer")


@dataclass
class SolveStatistics:
    nodes: int = 0
    leaves: int = 0
    no_good_cuts: int = 0
    conditional_cuts: int = 0
    pruned_by_bound: int = 0
    pruned_by_cut: int = 0
    wall_time: float = 0.0

    @property
    def cuts(self) -> int:
        return self.no_good_cuts + self.conditional_cuts


@dataclass(frozen=True)
class SolveResult:
    status: Status
    objective: str
    matching: Optional[Matching] = None
    score: Optional[int] = None
    statistics: SolveStatistics = field(default_factory=SolveStatistics)
    cuts: Tuple[StabilityCut, ...] = ()


class _BudgetExhausted(Exception):
    pass


class _Search:

    def __init__(self, market: Market, objective: Objective,
                 config: SolverConfig, on_incumbent, on_cut) -> None:
        self.market = market
        self.objective = objective
        self.config = config
        self.on_incumbent = on_incumbent
        self.on_cut = on_cut
        n = market.n
        self.assign = [-1] * n
        self.owner = [-1] * n
        self.pool: List[StabilityCut] = []
        self.best_cost: Optional[int] = None
        self.best: Optional[Matching] = None
        self.stats = SolveStatistics()
        self.start = datetime.datetime.now()

    def elapsed(self) -> float:
        return timedelta.total_seconds(datetime.datetime.now() - self.start)

    def run(self) -> None:
        self._visit(0)

    def _visit(self, row: int) -> None:
        stats = self.stats
        stats.nodes += 1
        if stats.nodes > self.config.node_budget:
            raise _BudgetExhausted()
        n = self.market.n
        if row == n:
            stats.leaves += 1
        if self._cut_off():
            stats.pruned_by_cut += 1
            return
        if self.best_cost is not None and self._bound() >= self.best_cost:
            stats.pruned_by_bound += 1
            return
        if row == n:
            self._leaf()
            return
        for col in self.market.applicant_orders[row]:
            if self.owner[col] >= 0:
                continue
            self.assign[row] = col
            self.owner[col] = row
            self._visit(row + 1)
            self.assign[row] = -1
            self.owner[col] = -1

    def _literal(self, i: int, j: int) -> int:
        # 1 true, 0 false, -1 still open
        if self.assign[i] == j:
            return 1
        if self.assign[i] >= 0 or self.owner[j] >= 0:
            return 0
        return -1

    def _cut_off(self) -> bool:
        for cut in self.pool:
            if all(self._literal(i, j) == 0 for i, j in cut.positive) and \
                    all(self._literal(i, j) == 1 for i, j in cut.negative):
                return True
        return False

    def _bound(self) -> int:
        market, objective = self.market, self.objective
        total = 0
        if objective.uses_applicants:
            rank = market.applicant_rank
            free = [j for j in range(market.n) if self.owner[j] < 0]
            best = []
            for i, j in enumerate(self.assign):
                if j >= 0:
                    best.append(rank[i, j])
                else:
                    best.append(min(rank[i, c] for c in free))
            total += int(objective.applicant_term(np.asarray(best)).sum())
        if objective.uses_employers:
            best = [self._best_employer_rank(e) for e in range(market.n)]
            total += int(objective.employer_term(np.asarray(best)).sum())
        return total

    def _best_employer_rank(self, e: int) -> int:
        # best-ranked tuple of e still realizable by some completion
        assign, owner = self.assign, self.owner
        affiliates = self.market.affiliations[e]
        for rank, entry in enumerate(self.market.employer_profiles[e], 1):
            if owner[e] >= 0:
                if entry.hire != owner[e]:
                    continue
            elif assign[entry.hire] >= 0:
                continue
            for p, g in zip(affiliates, entry.placements):
                if assign[p] >= 0:
                    if assign[p] != g:
                        break
                elif owner[g] >= 0:
                    break
            else:
                return rank
        return len(self.market.employer_profiles[e])

    def _leaf(self) -> None:
        matching = tuple(self.assign)
        value = cost(self.market, matching, self.objective)
        cuts = leaf_cuts(self.market, matching, self.config.cuts)
        if not cuts:
            self.best_cost = value
            self.best = matching
            _call_handlers(self.on_incumbent, matching=matching,
                           nodes=self.stats.nodes, cuts=self.stats.cuts,
                           elapsed=self.elapsed(), cost=value)
            return
        for cut in cuts:
            self.pool.append(cut)
            if cut.kind == 'no_good':
                self.stats.no_good_cuts += 1
            else:
                self.stats.conditional_cuts += 1
            _call_handlers(self.on_cut, matching=matching,
                           nodes=self.stats.nodes, cuts=self.stats.cuts,
                           elapsed=self.elapsed(), cut=cut)


def solve(market: Market,
          objective: Optional[str] = None,
          config: Optional[SolverConfig] = None,
          *,
          on_incumbent: _Handlers = None,
          on_cut: _Handlers = None,
          on_finish: _Handlers = None,
          logger: _MaybeLogger = 'affmatch',
          incumbent_log_level: int = logging.INFO,
          cut_log_level: int = logging.DEBUG,
          finish_log_level: int = logging.INFO) -> SolveResult:
    """Optimize an objective over the greedily stable matchings.

    Args:
        market: The market to clear.
        objective: Objective name; overrides ``config.objective``.
        config: Solver settings; defaults to ``SolverConfig()``.
        on_incumbent: Callable (or iterable of callables) with a unary
            signature called when a better stable matching is found. The
            parameter is a dict containing details about the search.
        on_cut: Callable (or iterable of callables) called for each cut
            added to the pool.
        on_finish: Callable (or iterable of callables) called once when
            the search ends.
        logger: Name or Logger object to log to. Defaults to 'affmatch';
            None disables the default log handlers.
        incumbent_log_level: log level for the incumbent event.
        cut_log_level: log level for the cut event.
        finish_log_level: log level for the finish event.

    Raises:
        InvalidConfig: for an unknown objective or bad settings.
        BoundExceeded: if the node budget runs out and
            ``config.raise_on_bound`` is set.
    """
    if config is None:
        config = SolverConfig()
    if objective is not None and objective != config.objective:
        config = SolverConfig(objective, config.cuts, config.node_budget,
                              config.raise_on_bound)
    spec = get_objective(config.objective)

    logger = _prepare_logger(logger)
    on_incumbent = _config_handlers(
        on_incumbent, default_handler=_log_incumbent,
        logger=logger, log_level=incumbent_log_level)
    on_cut = _config_handlers(
        on_cut, default_handler=_log_cut,
        logger=logger, log_level=cut_log_level)
    on_finish = _config_handlers(
        on_finish, default_handler=_log_finish,
        logger=logger, log_level=finish_log_level)

    search = _Search(market, spec, config, on_incumbent, on_cut)
    exhausted = False
    try:
        search.run()
    except _BudgetExhausted:
        exhausted = True
        search.stats.nodes = config.node_budget
    search.stats.wall_time = search.elapsed()

    if exhausted:
        status = Status.BOUND_EXCEEDED
    elif search.best is not None:
        status = Status.STABLE
    elif search.stats.leaves == 0:
        status = Status.INFEASIBLE
    else:
        status = Status.EMPTY_CORE

    matching = search.best
    value = None
    if matching is not None:
        value = -search.best_cost if spec.maximize else search.best_cost
    result = SolveResult(status, config.objective, matching, value,
                         search.stats, tuple(search.pool))
    _call_handlers(on_finish, matching=matching or (),
                   nodes=search.stats.nodes, cuts=search.stats.cuts,
                   elapsed=search.stats.wall_time, status=status.value)
    if exhausted and config.raise_on_bound:
        raise BoundExceeded(config.node_budget, result)
    return result


def verify_result(market: Market, result: SolveResult) -> bool:
    """Whether a ``stable`` result's matching is greedily stable."""
    if result.status is not Status.STABLE or result.matching is None:
        return False
    matching = check_matching(market, result.matching)
    return not find_greedy_blocking_pairs(market, matching)
