# coding:utf-8
"""
Machine reports and their text rendering.

Every command result is first built as a plain JSON-ready dict (the
machine report); the text form is rendered from that dict alone, so it
never shows a fact the machine form lacks. Matchings are named by their
1-based canonical index together with the explicit pair list.
"""
from typing import Any, Dict, List, Mapping, Optional, Sequence

from affmatch._errors import InvalidReport
from affmatch._market import Market, matching_index
from affmatch._oracle import GREEDY, StableSetReport
from affmatch._solver import SolveResult
from affmatch._stability import GreedyBlockingPair, StrictBlockingCoalition
from affmatch._typing import Matching

Report = Dict[str, Any]


def matching_ref(market: Market, matching: Matching) -> Report:
    return {
        'index': matching_index(tuple(matching)),
        'pairs': [list(pair) for pair in market.pairs(matching)],
    }


def _certificate(market: Market, cert) -> Report:
    if isinstance(cert, GreedyBlockingPair):
        return {
            'applicant': market.applicants[cert.applicant],
            'employer': market.employers[cert.employer],
            'witness_tuple': list(market.tuple_labels(cert.witness_tuple)),
            'witness_matching': matching_index(cert.witness_matching),
        }
    assert isinstance(cert, StrictBlockingCoalition)
    return {
        'applicants': [market.applicants[a] for a in sorted(cert.applicants)],
        'employers': [market.employers[e] for e in sorted(cert.employers)],
        'witness_matching': matching_index(cert.witness),
    }


def stable_set_report(market: Market, result: StableSetReport) -> Report:
    matchings = []
    for matching in _canonical(result):
        entry = matching_ref(market, matching)
        certificates = result.certificates.get(matching, ())
        entry['stable'] = not certificates
        entry['certificates'] = [_certificate(market, c)
                                 for c in certificates]
        matchings.append(entry)
    return {
        'command': 'stable',
        'notion': result.notion,
        'n': market.n,
        'total': result.total,
        'stable_count': len(result.stable),
        'core_empty': result.core_empty,
        'stable': [matching_index(m) for m in result.stable],
        'matchings': matchings,
    }


def _canonical(result: StableSetReport) -> List[Matching]:
    return sorted(set(result.stable) | set(result.certificates),
                  key=matching_index)


def solve_report(market: Market, result: SolveResult,
                 timings: bool = False) -> Report:
    stats = result.statistics
    statistics: Report = {
        'nodes': stats.nodes,
        'leaves': stats.leaves,
        'no_good_cuts': stats.no_good_cuts,
        'conditional_cuts': stats.conditional_cuts,
        'pruned_by_bound': stats.pruned_by_bound,
        'pruned_by_cut': stats.pruned_by_cut,
    }
    if timings:
        statistics['wall_time'] = round(stats.wall_time, 6)
    return {
        'command': 'solve',
        'objective': result.objective,
        'status': result.status.value,
        'matching': (matching_ref(market, result.matching)
                     if result.matching is not None else None),
        'score': result.score,
        'statistics': statistics,
    }


def enumerate_report(market: Market,
                     matchings: Sequence[Matching]) -> Report:
    return {
        'command': 'enumerate',
        'n': market.n,
        'total': len(matchings),
        'matchings': [matching_ref(market, m) for m in matchings],
    }


def reduce_report(market: Market, matching: Matching,
                  base_orders: Sequence[Sequence[int]]) -> Report:
    return {
        'command': 'reduce',
        'base_orders': {
            market.employers[e]: [market.applicants[a] for a in order]
            for e, order in enumerate(base_orders)
        },
        'matching': matching_ref(market, matching),
    }


def validate_report(market: Market,
                    inconsistent: Sequence[int]) -> Report:
    return {
        'command': 'validate',
        'valid': True,
        'n': market.n,
        'affiliates': sum(len(r) for r in market.affiliations),
        'inconsistent_employers': [market.employers[e]
                                   for e in inconsistent],
    }


def experiment_report(rows: Sequence[Mapping[str, Any]],
                      settings: Mapping[str, Any]) -> Report:
    return {
        'command': 'experiment',
        'settings': dict(settings),
        'markets': len(rows),
        'empty_cores': sum(1 for row in rows if row['stable_count'] == 0),
        'rows': [dict(row) for row in rows],
    }


def _pairs_text(ref: Optional[Mapping[str, Any]]) -> str:
    if ref is None:
        return "-"
    pairs = " ".join("%s-%s" % (a, e) for a, e in ref['pairs'])
    return "mu%d  %s" % (ref['index'], pairs)


def _certificate_text(cert: Mapping[str, Any]) -> str:
    if 'applicant' in cert:
        return "(%s,%s) via (%s) in mu%d" % (
            cert['applicant'], cert['employer'],
            ",".join(cert['witness_tuple']), cert['witness_matching'])
    return "{%s | %s} via mu%d" % (
        ",".join(cert['applicants']), ",".join(cert['employers']),
        cert['witness_matching'])


def _render_stable(report: Report) -> List[str]:
    lines = ["%s stability: %d of %d matchings stable%s" % (
        report['notion'], report['stable_count'], report['total'],
        " (core empty)" if report['core_empty'] else "")]
    for entry in report['matchings']:
        if entry['stable']:
            lines.append("  %s  stable" % _pairs_text(entry))
            continue
        label = "blocked by" if report['notion'] == GREEDY else "coalition"
        lines.append("  %s  %s %s" % (
            _pairs_text(entry), label,
            "; ".join(_certificate_text(c) for c in entry['certificates'])))
    return lines


def _render_solve(report: Report) -> List[str]:
    lines = ["objective %s: %s" % (report['objective'], report['status'])]
    if report['matching'] is not None:
        lines.append("  matching %s" % _pairs_text(report['matching']))
        lines.append("  score %d" % report['score'])
    stats = report['statistics']
    lines.append("  " + ", ".join("%s=%s" % (k, stats[k]) for k in stats))
    return lines


def _render_enumerate(report: Report) -> List[str]:
    lines = ["%d matchings of a %d-by-%d market" % (
        report['total'], report['n'], report['n'])]
    lines += ["  " + _pairs_text(ref) for ref in report['matchings']]
    return lines


def _render_reduce(report: Report) -> List[str]:
    lines = ["deferred acceptance: %s" % _pairs_text(report['matching'])]
    for employer, order in report['base_orders'].items():
        lines.append("  %s base order %s" % (employer, " > ".join(order)))
    return lines


def _render_validate(report: Report) -> List[str]:
    lines = ["valid market: n=%d, %d affiliates" % (
        report['n'], report['affiliates'])]
    if report['inconsistent_employers']:
        lines.append("  inconsistent profiles: %s"
                     % ", ".join(report['inconsistent_employers']))
    else:
        lines.append("  every employer profile is consistent")
    return lines


def _render_experiment(report: Report) -> List[str]:
    settings = report['settings']
    lines = ["%d markets (%s), %d with an empty %s core" % (
        report['markets'],
        ", ".join("%s=%s" % (k, settings[k]) for k in settings),
        report['empty_cores'], settings.get('notion', GREEDY))]
    for row in report['rows']:
        lines.append("  seed %d: %d stable" % (row['seed'],
                                               row['stable_count']))
    return lines


_RENDERERS = {
    'stable': _render_stable,
    'solve': _render_solve,
    'enumerate': _render_enumerate,
    'reduce': _render_reduce,
    'validate': _render_validate,
    'experiment': _render_experiment,
}


def render_text(report: Mapping[str, Any]) -> str:
    """Human-readable rendering of a machine report."""
    try:
        renderer = _RENDERERS[report['command']]
        lines = renderer(dict(report))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidReport("not a machine report (%s)" % e) from None
    return "\n".join(lines) + "\n"
