# coding:utf-8
"""
Combination strategies: turn an employer's base order over applicants and
base order over employers into a profile over its valid tuples.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from affmatch._errors import InvalidSpec
from affmatch._market import EmployerTuple, _iter_valid_tuples
from affmatch._random import SplitMix64

Profile = Tuple[EmployerTuple, ...]


@dataclass(frozen=True)
class StrategyInput:
    """One employer's base orders.

    Attributes:
        applicant_base: Applicant indices best-first.
        employer_base: Employer indices best-first (the owner included).
        owner: Index of the employer whose profile is built.
        affiliates: The owner's affiliates, in order.
    """
    applicant_base: Tuple[int, ...]
    employer_base: Tuple[int, ...]
    owner: int
    affiliates: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n, m = len(self.applicant_base), len(self.employer_base)
        if sorted(self.applicant_base) != list(range(n)):
            raise InvalidSpec("applicant_base must order every applicant")
        if sorted(self.employer_base) != list(range(m)):
            raise InvalidSpec("employer_base must order every employer")
        if not 0 <= self.owner < m:
            raise InvalidSpec("owner %d is not an employer" % self.owner)
        if (len(set(self.affiliates)) != len(self.affiliates)
                or any(not 0 <= a < n for a in self.affiliates)):
            raise InvalidSpec("affiliates must be distinct applicants")


def alpha_weighted(spec: StrategyInput,
                   lam: Union[float, Fraction, str]) -> Profile:
    """Blend candidate and placement ranks with weight ``lam``.

    Each valid tuple scores ``lam * rank(hire) + (1 - lam) * mean rank of
    its placements`` (placements count 0 when there are no affiliates);
    lower scores come first. Ties go to tuples hiring one of the owner's
    own affiliates, then to the better-ranked hire, then to the better
    placement ranks read left to right. ``lam = 1`` ranks candidates first,
    ``lam = 0`` ranks affiliate placement first.
    """
    weight = Fraction(lam)
    if not 0 <= weight <= 1:
        raise ValueError("lambda must lie in [0, 1], got %s" % lam)
    a_rank = {a: k for k, a in enumerate(spec.applicant_base, start=1)}
    e_rank = {e: k for k, e in enumerate(spec.employer_base, start=1)}
    own = set(spec.affiliates)

    def key(entry: EmployerTuple):
        placement_ranks = tuple(e_rank[g] for g in entry.placements)
        placement = (Fraction(sum(placement_ranks), len(placement_ranks))
                     if placement_ranks else Fraction(0))
        score = weight * a_rank[entry.hire] + (1 - weight) * placement
        return (score, entry.hire not in own, a_rank[entry.hire],
                placement_ranks)

    entries = _iter_valid_tuples(len(spec.applicant_base),
                                 len(spec.employer_base), spec.owner,
                                 spec.affiliates)
    return tuple(sorted(entries, key=key))


def alpha_candidate_first(spec: StrategyInput) -> Profile:
    """Group tuples by hire in base order: an affiliate-agnostic
    employer."""
    return alpha_weighted(spec, 1)


def alpha_affiliate_first(spec: StrategyInput) -> Profile:
    """Rank tuples by where the affiliates land first."""
    return alpha_weighted(spec, 0)


def alpha_uniform_random(spec: StrategyInput, rng: SplitMix64) -> Profile:
    """A uniformly random strict order over the valid tuples."""
    entries = list(_iter_valid_tuples(len(spec.applicant_base),
                                      len(spec.employer_base), spec.owner,
                                      spec.affiliates))
    rng.shuffle(entries)
    return tuple(entries)
