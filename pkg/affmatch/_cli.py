# coding:utf-8
"""
Command-line driver.

Exit codes: 0 success (a nonempty stable set, or a stable solve result);
1 invalid input or I/O failure; 2 empty core; 3 node budget exhausted;
4 no feasible assignment; 64 usage error.
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from affmatch import __version__
from affmatch._errors import AffmatchError
from affmatch._generator import (
    AFFILIATION_PATTERNS,
    CANDIDATE_FIRST,
    STRATEGIES,
    WEIGHTED,
    GeneratorSpec,
    generate_market,
)
from affmatch._io import dumps, parse, serialize
from affmatch._market import Market
from affmatch._oracle import GREEDY, NOTIONS, enumerate_matchings, stable_set
from affmatch._objective import FEASIBILITY, OBJECTIVES
from affmatch._reduce import (
    deferred_acceptance,
    inconsistent_employers,
    reduced_instance,
)
from affmatch._report import (
    enumerate_report,
    experiment_report,
    reduce_report,
    render_text,
    solve_report,
    stable_set_report,
    validate_report,
)
from affmatch._solver import CUT_MODES, NOGOOD, SolverConfig, Status, solve

EX_OK = 0
EX_ERROR = 1
EX_EMPTY_CORE = 2
EX_BOUND_EXCEEDED = 3
EX_INFEASIBLE = 4
EX_USAGE = 64

_SOLVE_EXIT = {
    Status.STABLE: EX_OK,
    Status.EMPTY_CORE: EX_EMPTY_CORE,
    Status.BOUND_EXCEEDED: EX_BOUND_EXCEEDED,
    Status.INFEASIBLE: EX_INFEASIBLE,
}


class _Parser(argparse.ArgumentParser):

    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, "%s: error: %s\n" % (self.prog, message))


class _Failure(Exception):
    pass


def _read(path: str) -> bytes:
    if path == '-':
        stream = getattr(sys.stdin, 'buffer', sys.stdin)
        data = stream.read()
        return data.encode('utf-8') if isinstance(data, str) else data
    with open(path, 'rb') as f:
        return f.read()


def _load_market(path: str) -> Market:
    data = _read(path)
    try:
        return parse(data)
    except AffmatchError as e:
        raise _Failure("%s: %s" % ('<stdin>' if path == '-' else path,
                                    e)) from None


def _emit(args: argparse.Namespace, report: Dict[str, Any]) -> None:
    if args.format == 'json':
        sys.stdout.write(dumps(report))
    else:
        sys.stdout.write(render_text(report))


def _cmd_validate(args: argparse.Namespace) -> int:
    market = _load_market(args.file)
    _emit(args, validate_report(market, inconsistent_employers(market)))
    return EX_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    market = _load_market(args.file)
    _emit(args, enumerate_report(market, enumerate_matchings(market.n)))
    return EX_OK


def _cmd_stable(args: argparse.Namespace) -> int:
    market = _load_market(args.file)
    result = stable_set(market, args.notion, threads=args.threads)
    _emit(args, stable_set_report(market, result))
    return EX_EMPTY_CORE if result.core_empty else EX_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    market = _load_market(args.file)
    config = SolverConfig(objective=args.objective, cuts=args.cuts,
                          node_budget=args.node_budget)
    result = solve(market, config=config)
    _emit(args, solve_report(market, result, timings=args.timings))
    return _SOLVE_EXIT[result.status]


def _cmd_reduce(args: argparse.Namespace) -> int:
    market = _load_market(args.file)
    instance = reduced_instance(market)
    matching = deferred_acceptance(market)
    _emit(args, reduce_report(market, matching, instance.employer_orders))
    return EX_OK


def _generator_spec(args: argparse.Namespace, seed: int) -> GeneratorSpec:
    return GeneratorSpec(seed=seed, n=args.n, affiliation=args.affiliation,
                         density=args.density, strategy=args.strategy,
                         lam=args.lam)


def _cmd_generate(args: argparse.Namespace) -> int:
    market = generate_market(_generator_spec(args, args.seed))
    sys.stdout.write(serialize(market))
    return EX_OK


def _cmd_experiment(args: argparse.Namespace) -> int:
    rows: List[Dict[str, Any]] = []
    for seed in range(args.seed, args.seed + args.markets):
        market = generate_market(_generator_spec(args, seed))
        result = stable_set(market, args.notion, threads=args.threads)
        rows.append({'seed': seed, 'total': result.total,
                     'stable_count': len(result.stable)})
    settings = _generator_spec(args, args.seed).to_document()
    del settings['seed']
    settings['notion'] = args.notion
    _emit(args, experiment_report(rows, settings))
    return EX_OK


def _cmd_report(args: argparse.Namespace) -> int:
    data = _read(args.file)
    try:
        report = json.loads(data.decode('utf-8'))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise _Failure("%s: not a JSON report (%s)"
                       % (args.file, e)) from None
    if args.format == 'json':
        render_text(report)
        sys.stdout.write(dumps(report))
    else:
        sys.stdout.write(render_text(report))
    return EX_OK


def _positive(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % value)
    if number < 1:
        raise argparse.ArgumentTypeError("%r is not positive" % value)
    return number


def _unit(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not a number" % value)
    if not 0 <= number <= 1:
        raise argparse.ArgumentTypeError("%r is not in [0, 1]" % value)
    return number


def _seed(value: str) -> int:
    try:
        number = int(value, 0)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % value)
    if not 0 <= number < 1 << 64:
        raise argparse.ArgumentTypeError("%r is not a 64-bit seed" % value)
    return number


def _add_generator_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--seed', type=_seed, required=True)
    parser.add_argument('--n', type=_positive, required=True)
    parser.add_argument('--strategy', choices=STRATEGIES,
                        default=CANDIDATE_FIRST)
    parser.add_argument('--lambda', dest='lam', type=_unit, default=None,
                        help="candidate weight for --strategy weighted")
    parser.add_argument('--affiliation', choices=AFFILIATION_PATTERNS,
                        default='bijection')
    parser.add_argument('--density', type=_unit, default=0.5,
                        help="affiliation probability for random_partial")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=('text', 'json'), default='text')
    common.add_argument('-v', '--verbose', action='count', default=0)
    common.add_argument('-q', '--quiet', action='store_true')

    parser = _Parser(prog='affmatch',
                     description="Analyze and clear affiliate matching "
                                 "markets.")
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    def command(name: str, handler: Callable[[argparse.Namespace], int],
                summary: str, needs_file: bool = True
                ) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=summary)
        if needs_file:
            p.add_argument('file', metavar='FILE',
                           help="instance document, or - for stdin")
        p.set_defaults(handler=handler)
        return p

    command('validate', _cmd_validate, "check an instance document")
    command('enumerate', _cmd_enumerate, "list every perfect matching")

    p = command('stable', _cmd_stable, "compute the stable set")
    p.add_argument('--notion', choices=NOTIONS, default=GREEDY)
    p.add_argument('--threads', type=_positive, default=1)

    p = command('solve', _cmd_solve,
                "optimize over greedily stable matchings")
    p.add_argument('--objective', choices=tuple(OBJECTIVES),
                   default=FEASIBILITY)
    p.add_argument('--cuts', choices=CUT_MODES, default=NOGOOD)
    p.add_argument('--node-budget', type=_positive, default=10 ** 7)
    p.add_argument('--timings', action='store_true',
                   help="include wall time in the report")

    command('reduce', _cmd_reduce,
            "clear a consistent market by deferred acceptance")

    p = command('generate', _cmd_generate, "emit a seeded random market",
                needs_file=False)
    _add_generator_options(p)

    p = command('experiment', _cmd_experiment,
                "stable-set sizes over consecutive seeds",
                needs_file=False)
    _add_generator_options(p)
    p.add_argument('--markets', type=_positive, default=10)
    p.add_argument('--notion', choices=NOTIONS, default=GREEDY)
    p.add_argument('--threads', type=_positive, default=1)

    command('report', _cmd_report, "render a JSON machine report as text")
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger('affmatch').setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, 'strategy', None) == WEIGHTED and args.lam is None:
        parser.error("--strategy weighted requires --lambda")
    _configure_logging(args)
    try:
        return args.handler(args)
    except _Failure as e:
        sys.stderr.write("affmatch: %s\n" % e)
    except (AffmatchError, OSError) as e:
        sys.stderr.write("affmatch: error: %s\n" % e)
    return EX_ERROR
