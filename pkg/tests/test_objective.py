# coding:utf-8
import pytest

import affmatch
from affmatch._objective import get_objective
from tests.common import MU1, MU5, _empty_core_market


def test_scores_at_mu1():
    market = _empty_core_market()
    assert affmatch.score(market, MU1, 'feasibility') == 0
    assert affmatch.score(market, MU1, 'min_applicant_rank_sum') == 7
    assert affmatch.score(market, MU1, 'min_employer_rank_sum') == 10
    assert affmatch.score(market, MU1, 'min_egalitarian_sum') == 17
    assert affmatch.score(market, MU1, 'max_top_choices') == 1


def test_scores_at_mu5():
    market = _empty_core_market()
    # a1->e3 (1), a2->e1 (1), a3->e2 (3); e1 rank 1, e2 rank 4, e3 rank 5
    assert affmatch.score(market, MU5, 'min_applicant_rank_sum') == 5
    assert affmatch.score(market, MU5, 'min_employer_rank_sum') == 10
    assert affmatch.score(market, MU5, 'max_top_choices') == 3


def test_objective_sides():
    assert not get_objective('feasibility').uses_applicants
    assert get_objective('min_applicant_rank_sum').uses_applicants
    assert not get_objective('min_applicant_rank_sum').uses_employers
    assert get_objective('max_top_choices').maximize
    assert set(affmatch.OBJECTIVES) == {
        'feasibility', 'min_applicant_rank_sum', 'min_employer_rank_sum',
        'max_top_choices', 'min_egalitarian_sum'}


def test_unknown_objective():
    with pytest.raises(affmatch.InvalidConfig):
        affmatch.score(_empty_core_market(), MU1, 'max_welfare')


def test_score_rejects_bad_matching():
    with pytest.raises(affmatch.InvalidMatching):
        affmatch.score(_empty_core_market(), (1, 1, 1), 'feasibility')
