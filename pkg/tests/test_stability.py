# coding:utf-8
import itertools

import pytest

import affmatch
from affmatch import EmployerTuple
from affmatch._stability import Violation
from tests.common import (MU1, MU2, MU3, MU4, MU5, MU6, _consistent_market,
                          _empty_core_market, _generated, _single_market)

BLOCKING_PAIRS = {
    MU1: [(0, 1), (0, 2), (1, 0), (1, 2)],
    MU2: [(0, 1), (0, 2), (1, 0), (2, 2)],
    MU3: [(0, 2)],
    MU4: [(0, 2), (1, 0)],
    MU5: [(2, 2)],
    MU6: [(1, 0)],
}


def test_employer_outcome():
    market = _empty_core_market()
    outcome = affmatch.employer_outcome(market, MU1, 'e1')
    assert outcome.entry == EmployerTuple(0, (0,))
    assert outcome.rank == 2

    outcome = affmatch.employer_outcome(market, MU5, 'e1')
    assert outcome.entry == EmployerTuple(1, (2,))
    assert outcome.rank == 1

    assert affmatch.employer_outcome(market, MU1, 'e2').rank == 5


def test_employer_outcome_rejects_bad_matching():
    market = _empty_core_market()
    with pytest.raises(affmatch.InvalidMatching):
        affmatch.employer_outcome(market, (0, 0, 1), 'e1')
    with pytest.raises(affmatch.InvalidMatching):
        affmatch.employer_outcome(market, (0, 1), 'e1')


def test_find_greedy_blocking_pairs():
    market = _empty_core_market()
    for matching, expected in BLOCKING_PAIRS.items():
        pairs = affmatch.find_greedy_blocking_pairs(market, matching)
        assert [(p.applicant, p.employer) for p in pairs] == expected
        assert not affmatch.is_greedily_stable(market, matching)


def test_greedy_blocking_pair_witness():
    market = _empty_core_market()
    pair = affmatch.find_greedy_blocking_pairs(market, MU1)[0]
    assert (pair.applicant, pair.employer) == (0, 1)
    # e2 hires a1 and places its affiliate a2 at e3
    assert pair.witness_tuple == EmployerTuple(0, (2,))
    assert pair.witness_matching == MU4


def test_verify_greedy_blocking_pair():
    market = _empty_core_market()
    for matching in BLOCKING_PAIRS:
        for pair in affmatch.find_greedy_blocking_pairs(market, matching):
            assert affmatch.verify_greedy_blocking_pair(market, matching,
                                                        pair)
    pair = affmatch.find_greedy_blocking_pairs(market, MU1)[0]
    assert not affmatch.verify_greedy_blocking_pair(market, MU5, pair)


def test_consistent_market_has_greedy_stable_matching():
    market = _consistent_market()
    assert affmatch.is_greedily_stable(market, MU5)
    assert not affmatch.is_greedily_stable(market, MU1)


def test_coalition_checks_against_mu1():
    market = _empty_core_market()

    violations = affmatch.coalition_violations(
        market, MU1, MU3, ['a1', 'a2'], ['e1', 'e2'])
    assert violations == [Violation('employer', 0, 'not_improved')]

    violations = affmatch.coalition_violations(
        market, MU1, MU6, ['a1', 'a3'], ['e1', 'e3'])
    assert Violation('applicant', 2, 'not_improved') in violations

    violations = affmatch.coalition_violations(
        market, MU1, MU2, ['a2', 'a3'], ['e2', 'e3'])
    assert Violation('employer', 2, 'not_improved') in violations

    for witness, c_a, c_e in [(MU3, ['a1', 'a2'], ['e1', 'e2']),
                              (MU6, ['a1', 'a3'], ['e1', 'e3']),
                              (MU2, ['a2', 'a3'], ['e2', 'e3'])]:
        assert not affmatch.check_coalition(market, MU1, witness, c_a, c_e)


def test_coalition_violation_reasons():
    market = _empty_core_market()
    # e2's affiliate a2 is outside and e2's witness partner a1 is outside
    violations = affmatch.coalition_violations(market, MU1, MU4, ['a3'],
                                               ['e2'])
    reasons = {v.reason for v in violations if v.side == 'employer'}
    assert reasons == {'affiliate_outside', 'partner_outside'}


def test_check_coalition_needs_both_sides():
    market = _empty_core_market()
    assert not affmatch.check_coalition(market, MU1, MU3, [], ['e1'])
    assert not affmatch.check_coalition(market, MU1, MU3, ['a1'], [])


def test_find_blocking_coalition():
    market = _empty_core_market()
    assert affmatch.find_blocking_coalition(market, MU6, MU5) is None
    with pytest.raises(ValueError):
        affmatch.find_blocking_coalition(market, MU1, MU1)


def test_find_blocking_coalition_is_checkable():
    market = _generated(3, 4)
    for matching in affmatch.enumerate_matchings(4):
        for witness in affmatch.enumerate_matchings(4):
            if witness == matching:
                continue
            found = affmatch.find_blocking_coalition(market, matching,
                                                     witness)
            if found is not None:
                assert found.witness == witness
                assert affmatch.check_coalition(
                    market, matching, witness, found.applicants,
                    found.employers)


def _nonempty_subsets(n):
    return [c for k in range(1, n + 1)
            for c in itertools.combinations(range(n), k)]


@pytest.mark.parametrize('seed, n', [(1, 3), (2, 3), (5, 3), (8, 3),
                                     (3, 4), (11, 4)])
def test_find_blocking_coalition_matches_subset_search(seed, n):
    market = _generated(seed, n)
    subsets = _nonempty_subsets(n)
    for matching in affmatch.enumerate_matchings(n):
        for witness in affmatch.enumerate_matchings(n):
            if witness == matching:
                continue
            found = affmatch.find_blocking_coalition(market, matching,
                                                     witness)
            exists = any(
                affmatch.check_coalition(market, matching, witness, ca, ce)
                for ca in subsets for ce in subsets)
            assert (found is not None) == exists


def test_mu1_is_strictly_stable():
    market = _empty_core_market()
    assert affmatch.find_strict_blocking_coalition(market, MU1) is None
    assert affmatch.is_strictly_stable(market, MU1)


def test_strict_blocking_coalition_for_unstable_matching():
    market = _empty_core_market()
    unstable = [m for m in affmatch.enumerate_matchings(3)
                if not affmatch.is_strictly_stable(market, m)]
    assert unstable
    for matching in unstable:
        coalition = affmatch.find_strict_blocking_coalition(market, matching)
        assert affmatch.check_coalition(
            market, matching, coalition.witness, coalition.applicants,
            coalition.employers)


def test_strict_search_bound(monkeypatch):
    market = _empty_core_market()
    with pytest.raises(affmatch.InstanceTooLarge):
        affmatch.find_strict_blocking_coalition(market, MU1, max_n=2)
    with pytest.raises(affmatch.InstanceTooLarge):
        affmatch.is_strictly_stable(market, MU1, max_n=lambda: 2)

    monkeypatch.setenv('AFFMATCH_MAX_N', '2')
    with pytest.raises(affmatch.InstanceTooLarge):
        affmatch.is_strictly_stable(market, MU1)
    assert affmatch.is_strictly_stable(market, MU1, max_n=3)


@pytest.mark.parametrize('affiliated', [True, False])
def test_single_pair_is_stable(affiliated):
    market = _single_market(affiliated)
    assert affmatch.find_greedy_blocking_pairs(market, (0,)) == []
    assert affmatch.is_greedily_stable(market, (0,))
    assert affmatch.is_strictly_stable(market, (0,))
