# coding:utf-8
"""
Market data model, tuple validity and consistency analysis.

Agents are stored by roster index; labels are kept for I/O and reports.
An employer tuple ``(hire, placements)`` reads "hire applicant ``hire`` and
place the k-th affiliate at employer ``placements[k]``". A tuple owned by
employer ``e`` with affiliates ``p_1..p_r`` is valid iff for every k,
``placements[k] == e`` exactly when ``hire == p_k``, and the placements are
pairwise distinct.
"""
import itertools
import math
from dataclasses import dataclass, field
from typing import (Any, Dict, Iterator, List, Mapping, NamedTuple, Optional,
                    Sequence, Tuple)

import numpy as np

from affmatch._errors import (
    DuplicateAffiliation,
    IncompleteApplicantOrder,
    IncompleteProfile,
    InvalidMatching,
    InvalidTuple,
    MarketError,
    SizeMismatch,
    UnknownAgent,
)
from affmatch._typing import Agent, Matching


class EmployerTuple(NamedTuple):
    hire: int
    placements: Tuple[int, ...]


@dataclass(frozen=True)
class Market:
    """A validated, immutable affiliate matching market.

    Build instances with :func:`validate_market` (or ``parse``); the
    constructor does not re-check the invariants.

    Attributes:
        applicants: Applicant labels in roster order.
        employers: Employer labels in roster order.
        affiliations: Per employer, the ordered affiliate applicant indices.
        applicant_orders: Per applicant, employer indices best-first.
        employer_profiles: Per employer, every valid tuple best-first.
        provenance: Optional generator block the market was built from.
    """
    applicants: Tuple[str, ...]
    employers: Tuple[str, ...]
    affiliations: Tuple[Tuple[int, ...], ...]
    applicant_orders: Tuple[Tuple[int, ...], ...]
    employer_profiles: Tuple[Tuple[EmployerTuple, ...], ...]
    provenance: Optional[Mapping[str, Any]] = field(
        default=None, compare=False, hash=False, repr=False)

    applicant_rank: np.ndarray = field(
        init=False, compare=False, hash=False, repr=False)
    affiliate_of: np.ndarray = field(
        init=False, compare=False, hash=False, repr=False)
    best_rank_by_hire: np.ndarray = field(
        init=False, compare=False, hash=False, repr=False)
    _tuple_rank: Tuple[Dict[EmployerTuple, int], ...] = field(
        init=False, compare=False, hash=False, repr=False)
    _applicant_index: Dict[str, int] = field(
        init=False, compare=False, hash=False, repr=False)
    _employer_index: Dict[str, int] = field(
        init=False, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        n, m = len(self.applicants), len(self.employers)

        # applicant_rank[i, j]: 1-based rank of employer j for applicant i
        applicant_rank = np.zeros((n, m), dtype=np.int64)
        for i, order in enumerate(self.applicant_orders):
            applicant_rank[i, list(order)] = np.arange(1, m + 1)

        affiliate_of = np.full(n, -1, dtype=np.int64)
        for e, affiliates in enumerate(self.affiliations):
            affiliate_of[list(affiliates)] = e

        # best_rank_by_hire[e, a]: best rank among e's tuples hiring a
        best = np.zeros((m, n), dtype=np.int64)
        tuple_rank = []
        for e, profile in enumerate(self.employer_profiles):
            ranks = {}
            for rank, entry in enumerate(profile, start=1):
                ranks[entry] = rank
                if best[e, entry.hire] == 0:
                    best[e, entry.hire] = rank
            tuple_rank.append(ranks)

        for arr in (applicant_rank, affiliate_of, best):
            arr.setflags(write=False)

        set_ = object.__setattr__
        set_(self, 'applicant_rank', applicant_rank)
        set_(self, 'affiliate_of', affiliate_of)
        set_(self, 'best_rank_by_hire', best)
        set_(self, '_tuple_rank', tuple(tuple_rank))
        set_(self, '_applicant_index',
             {label: i for i, label in enumerate(self.applicants)})
        set_(self, '_employer_index',
             {label: j for j, label in enumerate(self.employers)})

    @property
    def n(self) -> int:
        return len(self.applicants)

    def applicant_index(self, agent: Agent) -> int:
        return _resolve(agent, self._applicant_index, 'applicant')

    def employer_index(self, agent: Agent) -> int:
        return _resolve(agent, self._employer_index, 'employer')

    def profile(self, e: Agent) -> Tuple[EmployerTuple, ...]:
        return self.employer_profiles[self.employer_index(e)]

    def tuple_rank(self, e: int, entry: EmployerTuple) -> int:
        """Profile rank of ``entry`` for employer ``e`` (1 = best)."""
        return self._tuple_rank[e][entry]

    def realized_tuple(self, e: int, matching: Matching,
                       inverse: Optional[Sequence[int]] = None
                       ) -> EmployerTuple:
        """The tuple ``(mu(e), mu(R_e))`` employer ``e`` gets under a
        matching."""
        if inverse is None:
            inverse = invert(matching)
        placements = tuple(matching[p] for p in self.affiliations[e])
        return EmployerTuple(inverse[e], placements)

    def tuple_labels(self, entry: EmployerTuple) -> Tuple[str, ...]:
        return (self.applicants[entry.hire],) + tuple(
            self.employers[g] for g in entry.placements)

    def pairs(self, matching: Matching) -> List[Tuple[str, str]]:
        return [(self.applicants[i], self.employers[j])
                for i, j in enumerate(matching)]


def _resolve(agent: Agent, index: Mapping[str, int], side: str) -> int:
    if isinstance(agent, (int, np.integer)) and not isinstance(agent, bool):
        if 0 <= agent < len(index):
            return int(agent)
        raise UnknownAgent("no %s at roster index %d" % (side, agent))
    try:
        return index[agent]  # type: ignore[index]
    except (KeyError, TypeError):
        raise UnknownAgent("unknown %s %r" % (side, agent)) from None


def invert(matching: Matching) -> Tuple[int, ...]:
    """Applicant index per employer index."""
    inverse = [0] * len(matching)
    for a, e in enumerate(matching):
        inverse[e] = a
    return tuple(inverse)


def check_matching(market: Market, matching: Sequence[int]) -> Matching:
    """Return ``matching`` as a tuple, or raise InvalidMatching unless it
    is a perfect matching of the market."""
    result = tuple(int(e) for e in matching)
    if len(result) != market.n or sorted(result) != list(range(market.n)):
        raise InvalidMatching(
            "%r is not a perfect matching of %d applicants"
            % (list(result), market.n))
    return result


def is_valid_tuple(e: int, affiliates: Sequence[int],
                   entry: EmployerTuple) -> bool:
    if len(entry.placements) != len(affiliates):
        return False
    if len(set(entry.placements)) != len(entry.placements):
        return False
    return all((g == e) == (entry.hire == p)
               for p, g in zip(affiliates, entry.placements))


def _iter_valid_tuples(n: int, m: int, e: int,
                       affiliates: Sequence[int]) -> Iterator[EmployerTuple]:
    # permutations() yields distinct placements in lexicographic order
    for hire in range(n):
        for placements in itertools.permutations(range(m), len(affiliates)):
            entry = EmployerTuple(hire, placements)
            if is_valid_tuple(e, affiliates, entry):
                yield entry


def valid_tuples(market: Market, e: Agent) -> List[EmployerTuple]:
    """Every valid tuple of employer ``e`` in canonical order: hire by
    roster order, then placements lexicographic by roster order."""
    j = market.employer_index(e)
    return list(_iter_valid_tuples(
        market.n, len(market.employers), j, market.affiliations[j]))


def count_valid_tuples(n: int, m: int, r: int) -> int:
    """Size of one employer's tuple universe.

    ``(n - r) * P(m - 1, r) + r * P(m - 1, r - 1)`` with P the falling
    factorial: a non-affiliate hire places all r affiliates away from the
    employer, an affiliate hire pins its own slot to the employer.
    """
    if r < 0 or r > n:
        raise ValueError("need 0 <= r <= n, got r=%d, n=%d" % (r, n))
    count = (n - r) * math.perm(m - 1, r)
    if r:
        count += r * math.perm(m - 1, r - 1)
    return count


def count_profiles(n: int, m: int, r: int) -> int:
    """Number of strict orders over one employer's valid tuples, i.e. the
    number of possible combination strategy outputs."""
    return math.factorial(count_valid_tuples(n, m, r))


def count_consistent_profiles(
    n: int, m: int, r: int,
    affiliate_positions: Optional[Sequence[int]] = None,
) -> int:
    """Profiles consistent with one fixed base order over applicants.

    Each hire's tuples form one contiguous group and only the order inside
    groups is free, so the count is the product of the group factorials.

    Args:
        n: Number of applicants.
        m: Number of employers.
        r: Number of affiliates of the employer.
        affiliate_positions: Optional roster indices of the affiliates;
            checked for consistency with ``n`` and ``r``. The count does not
            depend on which applicants are affiliates.
    """
    if affiliate_positions is not None:
        positions = list(affiliate_positions)
        if (len(positions) != r or len(set(positions)) != r
                or any(not 0 <= p < n for p in positions)):
            raise ValueError(
                "affiliate_positions must be %d distinct indices below %d"
                % (r, n))
    count_valid_tuples(n, m, r)  # argument check
    outside = math.factorial(math.perm(m - 1, r)) ** (n - r)
    inside = math.factorial(math.perm(m - 1, r - 1)) ** r if r else 1
    return outside * inside


def consistent_profile_count(market: Market, e: Agent) -> int:
    """Per-employer count of profiles consistent with a fixed base order,
    from the employer's actual tuple groups."""
    sizes: Dict[int, int] = {}
    for entry in valid_tuples(market, e):
        sizes[entry.hire] = sizes.get(entry.hire, 0) + 1
    count = 1
    for size in sizes.values():
        count *= math.factorial(size)
    return count


def is_consistent_with(profile: Sequence[EmployerTuple],
                       base: Sequence[int]) -> bool:
    """Whether the hires of ``profile``, read best-first, follow ``base``.

    Args:
        profile: Employer tuples best-first.
        base: Strict order over applicant indices, best-first.
    """
    position = {a: k for k, a in enumerate(base)}
    last = -1
    for entry in profile:
        try:
            current = position[entry.hire]
        except KeyError:
            raise ValueError(
                "applicant %d missing from base order" % entry.hire) from None
        if current < last:
            return False
        last = current
    return True


def infer_consistency(profile: Sequence[EmployerTuple],
                      n: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """The base order witnessing consistency of ``profile``, or None.

    The order lists hires by first appearance; when ``n`` is given,
    applicants that never appear as a hire follow in roster order.
    """
    order: List[int] = []
    seen = set()
    for entry in profile:
        if order and entry.hire == order[-1]:
            continue
        if entry.hire in seen:
            return None
        seen.add(entry.hire)
        order.append(entry.hire)
    if n is not None:
        order.extend(a for a in range(n) if a not in seen)
    return tuple(order)


def _labels(raw: Mapping[str, Any], key: str) -> Tuple[str, ...]:
    value = raw.get(key)
    if not isinstance(value, (list, tuple)) or not all(
            isinstance(label, str) for label in value):
        raise MarketError("expected a list of labels", '/' + key)
    if len(set(value)) != len(value):
        raise MarketError("duplicate label", '/' + key)
    if not value:
        raise MarketError("roster is empty", '/' + key)
    return tuple(value)


def _known(index: Mapping[str, int], label: Any) -> bool:
    return isinstance(label, str) and label in index


def _mapping(raw: Mapping[str, Any], key: str) -> Mapping[str, Any]:
    value = raw.get(key, {})
    if not isinstance(value, Mapping):
        raise MarketError("expected an object", '/' + key)
    return value


def validate_market(raw: Mapping[str, Any]) -> Market:
    """Validate a raw market document and build a :class:`Market`.

    Args:
        raw: Mapping with ``applicants``, ``employers``, ``affiliations``,
            ``applicant_prefs`` and ``employer_prefs`` keys shaped like the
            instance document, plus an optional ``generator`` block.

    Raises:
        SizeMismatch, DuplicateAffiliation, InvalidTuple, IncompleteProfile,
        IncompleteApplicantOrder, UnknownAgent, or MarketError for
        malformed fields. Every error carries the offending ``pointer``.
    """
    if not isinstance(raw, Mapping):
        raise MarketError("market document must be an object")
    applicants = _labels(raw, 'applicants')
    employers = _labels(raw, 'employers')
    n, m = len(applicants), len(employers)
    if n != m:
        raise SizeMismatch(
            "%d applicants but %d employers; only square markets are "
            "supported" % (n, m), '/employers')
    a_index = {label: i for i, label in enumerate(applicants)}
    e_index = {label: j for j, label in enumerate(employers)}

    affiliations: List[Tuple[int, ...]] = [()] * m
    owner: Dict[int, str] = {}
    for label, members in _mapping(raw, 'affiliations').items():
        pointer = '/affiliations/%s' % label
        if label not in e_index:
            raise UnknownAgent("unknown employer %r" % label, pointer)
        if not isinstance(members, (list, tuple)):
            raise MarketError("expected a list of applicants", pointer)
        indices = []
        for member in members:
            if not _known(a_index, member):
                raise UnknownAgent("unknown applicant %r" % (member,),
                                   pointer)
            a = a_index[member]
            if a in owner:
                raise DuplicateAffiliation(
                    "applicant %r already affiliated with %r"
                    % (member, owner[a]), pointer)
            owner[a] = label
            indices.append(a)
        affiliations[e_index[label]] = tuple(indices)

    prefs = _mapping(raw, 'applicant_prefs')
    for label in prefs:
        if label not in a_index:
            raise UnknownAgent("unknown applicant %r" % label,
                               '/applicant_prefs/%s' % label)
    applicant_orders = []
    for label in applicants:
        pointer = '/applicant_prefs/%s' % label
        order = prefs.get(label)
        if not isinstance(order, (list, tuple)):
            raise IncompleteApplicantOrder(
                "missing order for applicant %r" % label, pointer)
        for item in order:
            if not _known(e_index, item):
                raise UnknownAgent("unknown employer %r" % (item,), pointer)
        if len(order) != m or len(set(order)) != m:
            raise IncompleteApplicantOrder(
                "order must rank each of the %d employers exactly once" % m,
                pointer)
        applicant_orders.append(tuple(e_index[item] for item in order))

    tuple_prefs = _mapping(raw, 'employer_prefs')
    for label in tuple_prefs:
        if label not in e_index:
            raise UnknownAgent("unknown employer %r" % label,
                               '/employer_prefs/%s' % label)
    profiles = []
    for e, label in enumerate(employers):
        pointer = '/employer_prefs/%s' % label
        entries = tuple_prefs.get(label)
        if not isinstance(entries, (list, tuple)):
            raise IncompleteProfile("missing profile for employer %r" % label,
                                    pointer, employer=label)
        profile = []
        seen = set()
        affiliates = affiliations[e]
        for k, item in enumerate(entries):
            item_pointer = '%s/%d' % (pointer, k)
            if (not isinstance(item, (list, tuple))
                    or len(item) != 1 + len(affiliates)):
                raise InvalidTuple(
                    "tuple must list a hire and %d placements"
                    % len(affiliates), item_pointer,
                    employer=label, entry=_as_strings(item))
            if not _known(a_index, item[0]):
                raise UnknownAgent("unknown applicant %r" % (item[0],),
                                   item_pointer)
            for placement in item[1:]:
                if not _known(e_index, placement):
                    raise UnknownAgent("unknown employer %r" % (placement,),
                                       item_pointer)
            entry = EmployerTuple(
                a_index[item[0]], tuple(e_index[g] for g in item[1:]))
            if not is_valid_tuple(e, affiliates, entry):
                raise InvalidTuple(
                    "tuple %r is not valid for employer %r"
                    % (list(item), label), item_pointer,
                    employer=label, entry=item)
            if entry in seen:
                raise IncompleteProfile(
                    "tuple %r listed twice" % (list(item),), item_pointer,
                    employer=label)
            seen.add(entry)
            profile.append(entry)
        expected = count_valid_tuples(n, m, len(affiliates))
        if len(profile) != expected:
            raise IncompleteProfile(
                "profile of %r ranks %d of its %d valid tuples"
                % (label, len(profile), expected), pointer, employer=label)
        profiles.append(tuple(profile))

    provenance = raw.get('generator')
    if provenance is not None and not isinstance(provenance, Mapping):
        raise MarketError("expected an object", '/generator')

    return Market(
        applicants=applicants,
        employers=employers,
        affiliations=tuple(affiliations),
        applicant_orders=tuple(applicant_orders),
        employer_profiles=tuple(profiles),
        provenance=dict(provenance) if provenance is not None else None,
    )


def _as_strings(item: Any) -> Optional[Tuple[str, ...]]:
    if isinstance(item, (list, tuple)):
        return tuple(str(x) for x in item)
    return None


def iter_matchings(n: int) -> Iterator[Matching]:
    """All perfect matchings of an n-by-n market, lexicographic on the
    employer-per-applicant array."""
    return itertools.permutations(range(n))


def matching_index(matching: Matching) -> int:
    """1-based position of ``matching`` in canonical order (Lehmer code)."""
    remaining = sorted(matching)
    index = 0
    for k, e in enumerate(matching):
        pos = remaining.index(e)
        index += pos * math.factorial(len(matching) - k - 1)
        remaining.pop(pos)
    return index + 1


def matching_from_index(n: int, index: int) -> Matching:
    """Inverse of :func:`matching_index`."""
    if not 1 <= index <= math.factorial(n):
        raise ValueError("index %d out of range for n=%d" % (index, n))
    remaining = list(range(n))
    code = index - 1
    result = []
    for k in range(n, 0, -1):
        pos, code = divmod(code, math.factorial(k - 1))
        result.append(remaining.pop(pos))
    return tuple(result)
