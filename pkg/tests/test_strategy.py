# coding:utf-8
from fractions import Fraction

import pytest

import affmatch
from affmatch import EmployerTuple, StrategyInput
from affmatch._random import SplitMix64

# applicants Alex, Ryan, Taylor; employers BMU, LU, WSU
ALEX, RYAN, TAYLOR = 0, 1, 2
BMU, LU, WSU = 0, 1, 2

EXAMPLE = StrategyInput(applicant_base=(ALEX, RYAN, TAYLOR),
                        employer_base=(LU, BMU, WSU),
                        owner=BMU, affiliates=(RYAN,))


def _t(hire, placement):
    return EmployerTuple(hire, (placement,))


def test_candidate_first():
    expected = (_t(ALEX, LU), _t(ALEX, WSU), _t(RYAN, BMU),
                _t(TAYLOR, LU), _t(TAYLOR, WSU))
    assert affmatch.alpha_weighted(EXAMPLE, 1) == expected
    assert affmatch.alpha_candidate_first(EXAMPLE) == expected


def test_affiliate_first():
    expected = (_t(ALEX, LU), _t(TAYLOR, LU), _t(RYAN, BMU),
                _t(ALEX, WSU), _t(TAYLOR, WSU))
    assert affmatch.alpha_weighted(EXAMPLE, 0) == expected
    assert affmatch.alpha_affiliate_first(EXAMPLE) == expected


def test_weighted_half():
    expected = (_t(ALEX, LU), _t(RYAN, BMU), _t(ALEX, WSU),
                _t(TAYLOR, LU), _t(TAYLOR, WSU))
    assert affmatch.alpha_weighted(EXAMPLE, 0.5) == expected
    assert affmatch.alpha_weighted(EXAMPLE, Fraction(1, 2)) == expected
    assert affmatch.alpha_weighted(EXAMPLE, '1/2') == expected


def test_weighted_rejects_lambda_out_of_range():
    with pytest.raises(ValueError):
        affmatch.alpha_weighted(EXAMPLE, 1.5)


def test_consistency_of_example_strategies():
    candidate = affmatch.alpha_candidate_first(EXAMPLE)
    assert affmatch.infer_consistency(candidate) == (ALEX, RYAN, TAYLOR)
    # hires A, T, R, A, T are not grouped
    affiliate = affmatch.alpha_affiliate_first(EXAMPLE)
    assert affmatch.infer_consistency(affiliate) is None
    assert not affmatch.is_consistent_with(affiliate, (ALEX, RYAN, TAYLOR))


def test_no_affiliates():
    spec = StrategyInput(applicant_base=(2, 0, 1), employer_base=(0, 1, 2),
                         owner=1)
    expected = tuple(EmployerTuple(a, ()) for a in (2, 0, 1))
    assert affmatch.alpha_candidate_first(spec) == expected
    assert affmatch.alpha_affiliate_first(spec) == expected


def test_candidate_first_is_consistent_with_base():
    rng = SplitMix64(2024)
    for n in range(1, 6):
        for _ in range(10):
            base = tuple(rng.permutation(n))
            affiliates = tuple(rng.permutation(n)[:rng.below(min(n, 2) + 1)])
            spec = StrategyInput(applicant_base=base,
                                 employer_base=tuple(rng.permutation(n)),
                                 owner=rng.below(n), affiliates=affiliates)
            profile = affmatch.alpha_candidate_first(spec)
            inferred = affmatch.infer_consistency(profile, n)
            assert inferred is not None
            assert affmatch.is_consistent_with(profile, base)


def test_uniform_random_orders_every_valid_tuple():
    rng = SplitMix64(5)
    profile = affmatch.alpha_uniform_random(EXAMPLE, rng)
    assert sorted(profile) == sorted(affmatch.alpha_candidate_first(EXAMPLE))
    again = affmatch.alpha_uniform_random(EXAMPLE, SplitMix64(5))
    assert profile == again


def test_strategy_input_validation():
    with pytest.raises(affmatch.InvalidSpec):
        StrategyInput(applicant_base=(0, 0, 1), employer_base=(0, 1, 2),
                      owner=0)
    with pytest.raises(affmatch.InvalidSpec):
        StrategyInput(applicant_base=(0, 1, 2), employer_base=(0, 1),
                      owner=2)
    with pytest.raises(affmatch.InvalidSpec):
        StrategyInput(applicant_base=(0, 1, 2), employer_base=(0, 1, 2),
                      owner=0, affiliates=(1, 1))
