# coding:utf-8
import collections
import copy
import functools
import json
import pathlib

import affmatch

INSTANCES = pathlib.Path(affmatch.__file__).parent / 'instances'
EMPTY_CORE = INSTANCES / 'empty_core_3x3.json'

# the six matchings of the 3x3 market, in canonical order
MU1, MU2, MU3, MU4, MU5, MU6 = (
    (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


# create event handler which log their invocations to a dict
def _log_hdlrs():
    log = collections.defaultdict(list)

    def log_hdlr(event, details):
        log[event].append(details)

    log_incumbent = functools.partial(log_hdlr, 'incumbent')
    log_cut = functools.partial(log_hdlr, 'cut')
    log_finish = functools.partial(log_hdlr, 'finish')

    return log, log_incumbent, log_cut, log_finish


def _empty_core_raw():
    with open(EMPTY_CORE, encoding='utf-8') as f:
        return json.load(f)


def _empty_core_market():
    return affmatch.load(EMPTY_CORE)


def _raw_copy(raw):
    return copy.deepcopy(raw)


# build a market from index data: applicant orders, one affiliate tuple
# per employer and a profile (list of (hire, placements)) per employer
def _build_market(applicant_orders, affiliations, profiles):
    n = len(applicant_orders)
    a = ['a%d' % (i + 1) for i in range(n)]
    e = ['e%d' % (j + 1) for j in range(n)]
    return affmatch.validate_market({
        'applicants': a,
        'employers': e,
        'affiliations': {e[j]: [a[i] for i in affiliations[j]]
                         for j in range(n)},
        'applicant_prefs': {a[i]: [e[j] for j in applicant_orders[i]]
                            for i in range(n)},
        'employer_prefs': {
            e[j]: [[a[hire]] + [e[g] for g in placements]
                   for hire, placements in profiles[j]]
            for j in range(n)},
    })


# the 3x3 applicant orders with every employer candidate-first over
# a1 > a2 > a3 (placements e1 > e2 > e3)
def _consistent_market():
    orders = [(2, 1, 0), (0, 2, 1), (2, 0, 1)]
    affiliations = [(0,), (1,), (2,)]
    profiles = [
        affmatch.alpha_candidate_first(affmatch.StrategyInput(
            applicant_base=(0, 1, 2), employer_base=(0, 1, 2),
            owner=j, affiliates=affiliations[j]))
        for j in range(3)]
    return _build_market(orders, affiliations, profiles)


def _generated(seed, n, strategy='uniform_random', **kwargs):
    return affmatch.generate_market(
        affmatch.GeneratorSpec(seed=seed, n=n, strategy=strategy, **kwargs))


# the 1x1 market, with a1 affiliated to e1 or unaffiliated
def _single_market(affiliated):
    if affiliated:
        return _build_market([(0,)], [(0,)], [[(0, (0,))]])
    return _build_market([(0,)], [()], [[(0, ())]])
