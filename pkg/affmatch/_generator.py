# coding:utf-8
"""
Seeded random markets.

Draw order from one SplitMix64 stream seeded with ``seed``:

1. affiliations: ``bijection`` draws one permutation ``p`` and affiliates
   applicant ``p[j]`` with employer ``j``; ``random_partial`` visits
   applicants in roster order, affiliating each with probability
   ``density`` to an employer drawn uniformly;
2. one permutation of employers per applicant (its order, best-first);
3. per employer, a permutation of applicants then a permutation of
   employers (its two base orders), then, for ``uniform_random`` only, a
   shuffle of its valid tuples.

Agents are labelled ``a1..an`` and ``e1..en``.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional

from affmatch._common import DEFAULT_MAX_N, _logger
from affmatch._errors import InvalidSpec
from affmatch._market import Market, validate_market
from affmatch._random import SplitMix64
from affmatch._strategy import (
    StrategyInput,
    alpha_uniform_random,
    alpha_weighted,
)

BIJECTION = 'bijection'
RANDOM_PARTIAL = 'random_partial'
AFFILIATION_PATTERNS = (BIJECTION, RANDOM_PARTIAL)

CANDIDATE_FIRST = 'candidate_first'
AFFILIATE_FIRST = 'affiliate_first'
WEIGHTED = 'weighted'
UNIFORM_RANDOM = 'uniform_random'
STRATEGIES = (CANDIDATE_FIRST, AFFILIATE_FIRST, WEIGHTED, UNIFORM_RANDOM)


@dataclass(frozen=True)
class GeneratorSpec:
    """Everything that determines a generated market.

    Attributes:
        seed: Stream seed, an integer in ``[0, 2**64)``.
        n: Applicants and employers per side.
        affiliation: ``'bijection'`` or ``'random_partial'``.
        density: Affiliation probability for ``'random_partial'``.
        strategy: Combination strategy building employer profiles.
        lam: Candidate weight for the ``'weighted'`` strategy.
    """
    seed: int
    n: int
    affiliation: str = BIJECTION
    density: float = 0.5
    strategy: str = CANDIDATE_FIRST
    lam: Optional[float] = None

    def __post_init__(self) -> None:
        if (not isinstance(self.seed, int) or isinstance(self.seed, bool)
                or not 0 <= self.seed < 1 << 64):
            raise InvalidSpec("seed must be an integer in [0, 2**64)")
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidSpec("n must be a positive integer")
        if self.affiliation not in AFFILIATION_PATTERNS:
            raise InvalidSpec("unknown affiliation pattern %r"
                              % self.affiliation)
        if not 0 <= self.density <= 1:
            raise InvalidSpec("density must lie in [0, 1]")
        if self.strategy not in STRATEGIES:
            raise InvalidSpec("unknown strategy %r" % self.strategy)
        if self.strategy == WEIGHTED:
            if self.lam is None or not 0 <= self.lam <= 1:
                raise InvalidSpec(
                    "the weighted strategy needs lambda in [0, 1]")

    def to_document(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {
            'seed': self.seed,
            'n': self.n,
            'affiliation': self.affiliation,
        }
        if self.affiliation == RANDOM_PARTIAL:
            doc['density'] = self.density
        doc['strategy'] = self.strategy
        if self.strategy == WEIGHTED:
            doc['lambda'] = self.lam
        return doc

    @classmethod
    def from_document(cls, doc: Mapping[str, Any]) -> 'GeneratorSpec':
        try:
            return cls(seed=doc['seed'], n=doc['n'],
                       affiliation=doc.get('affiliation', BIJECTION),
                       density=doc.get('density', 0.5),
                       strategy=doc.get('strategy', CANDIDATE_FIRST),
                       lam=doc.get('lambda'))
        except (KeyError, TypeError) as e:
            raise InvalidSpec("malformed generator block: %s" % e) from None


def _affiliations(spec: GeneratorSpec, rng: SplitMix64) -> List[List[int]]:
    n = spec.n
    members: List[List[int]] = [[] for _ in range(n)]
    if spec.affiliation == BIJECTION:
        for e, a in enumerate(rng.permutation(n)):
            members[e].append(a)
    else:
        for a in range(n):
            if rng.random() < spec.density:
                members[rng.below(n)].append(a)
    return members


def generate_market(spec: GeneratorSpec) -> Market:
    """Build the market ``spec`` describes; a pure function of ``spec``."""
    n = spec.n
    if n > DEFAULT_MAX_N:
        _logger.warning("Generating n=%d, above the default exhaustive "
                        "bound %d", n, DEFAULT_MAX_N)
    rng = SplitMix64(spec.seed)
    applicants = ['a%d' % (i + 1) for i in range(n)]
    employers = ['e%d' % (j + 1) for j in range(n)]

    members = _affiliations(spec, rng)
    applicant_prefs = {
        label: [employers[j] for j in rng.permutation(n)]
        for label in applicants
    }

    employer_prefs = {}
    for e, label in enumerate(employers):
        strategy_input = StrategyInput(
            applicant_base=tuple(rng.permutation(n)),
            employer_base=tuple(rng.permutation(n)),
            owner=e,
            affiliates=tuple(members[e]),
        )
        if spec.strategy == UNIFORM_RANDOM:
            profile = alpha_uniform_random(strategy_input, rng)
        else:
            lam = {CANDIDATE_FIRST: Fraction(1),
                   AFFILIATE_FIRST: Fraction(0)}.get(spec.strategy, spec.lam)
            profile = alpha_weighted(strategy_input, lam)
        employer_prefs[label] = [
            [applicants[entry.hire]] + [employers[g] for g in entry.placements]
            for entry in profile
        ]

    return validate_market({
        'applicants': applicants,
        'employers': employers,
        'affiliations': {
            employers[e]: [applicants[a] for a in members[e]]
            for e in range(n)
        },
        'applicant_prefs': applicant_prefs,
        'employer_prefs': employer_prefs,
        'generator': spec.to_document(),
    })
