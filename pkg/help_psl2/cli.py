# -*- coding: utf-8 -*-
"""
Command-line front end::

    help-psl2 table --p 7 --kmax 2
    help-psl2 verify --p 17 --r 2 --n 3 --json report.json
    help-psl2 solve --p 7 --r 2 --n 3

Exit codes: 0 - verified (or nothing to verify), 1 - ``verify`` found a
nontrivial admissible chain, 2 - usage or parameter error.
"""
import argparse
import json
import logging
import os
import sys
import time
from typing import Any, Dict, List, Optional, Sequence

from .base_utils import attrs
from .formatters import format_as_dict, format_as_text
from .helpsolver import DEFAULT_BOUND, VERIFIED, solve, verify_theorem1
from .psl2 import GroupData, brauer_table, build_group


logger = logging.getLogger(__name__)

SCHEMA_VERSION = '1'
THREADS_ENV = 'HELP_PSL2_THREADS'

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


@attrs
class ReportDocument(object):
    """ Machine-readable result of a CLI command. Everything except
    :timing: is deterministic; all values are JSON-native, with rationals
    as ``"num/den"`` strings.
    """
    def __init__(self,
                 command,  # type: str
                 group,  # type: Dict[str, int]
                 parameters,  # type: Dict[str, Any]
                 classes,  # type: List[Dict[str, Any]]
                 results,  # type: Dict[str, Any]
                 timing=None,  # type: Optional[Dict[str, float]]
                 schema_version=SCHEMA_VERSION,  # type: str
                 ):
        # type: (...) -> None
        self.command = command
        self.group = group
        self.parameters = parameters
        self.classes = classes
        self.results = results
        self.timing = timing
        self.schema_version = schema_version

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            'schema_version': self.schema_version,
            'command': self.command,
            'group': self.group,
            'parameters': self.parameters,
            'classes': self.classes,
            'results': self.results,
            'timing': self.timing,
        }

    @classmethod
    def from_dict(cls, data):
        # type: (Dict[str, Any]) -> ReportDocument
        version = data.get('schema_version')
        if version is None:
            raise ValueError('report has no schema_version')
        if version != SCHEMA_VERSION:
            raise ValueError('unsupported report schema version {!r}'.format(
                version))
        return cls(
            command=data['command'],
            group=data['group'],
            parameters=data['parameters'],
            classes=data['classes'],
            results=data['results'],
            timing=data.get('timing'),
            schema_version=version,
        )


def dumps_report(doc):
    # type: (ReportDocument) -> str
    """ Canonical JSON: sorted keys, 2-space indent, trailing newline. """
    return json.dumps(doc.to_dict(), indent=2, sort_keys=True) + '\n'


def loads_report(text):
    # type: (str) -> ReportDocument
    return ReportDocument.from_dict(json.loads(text))


def group_document(G):
    # type: (GroupData) -> Dict[str, int]
    return {'p': G.p, 'f': G.f, 'q': G.q, 'd': G.d, 'o_a': G.o_a, 'o_b': G.o_b}


def cmd_table(args):
    # type: (argparse.Namespace) -> int
    G = build_group(args.p, args.f)
    table = brauer_table(G, args.kmax)
    results = {
        'characters': [
            {'k': phi.k,
             'degree': phi.degree,
             'values': {str(c.id): format_as_dict(v) for c, v in
                        zip(table.classes, table.values(phi.k))}}
            for phi in table.characters
        ],
    }
    doc = _document('table', G, {'kmax': args.kmax}, results)
    _emit(args, format_as_text(table), doc)
    return EXIT_OK


def cmd_verify(args):
    # type: (argparse.Namespace) -> int
    return _run_solver(args, verify_theorem1)


def cmd_solve(args):
    # type: (argparse.Namespace) -> int
    _run_solver(args, solve)
    return EXIT_OK


def _run_solver(args, func):
    G = build_group(args.p, args.f)
    n_jobs = jobs_from_env(os.environ)
    report = func(G, args.r, args.n,
                  chars=args.k,
                  bound=args.bound,
                  assume_bovdi=not args.no_bovdi,
                  n_jobs=n_jobs,
                  check_stability=args.check_stability)
    parameters = {
        'r': args.r,
        'n': args.n,
        'chars': report.chars,
        'bound': args.bound,
        'assume_bovdi': report.assume_bovdi,
        'check_stability': args.check_stability,
    }
    results = {
        'verdict': report.verdict,
        'note': report.note,
        'chains': format_as_dict(report.chains),
        'rejections': format_as_dict(report.rejections),
        'candidates': report.candidates,
        'pruned': report.pruned,
        'bound_stable': report.bound_stable,
    }
    doc = _document(args.command, G, parameters, results)
    _emit(args, format_as_text(report), doc)
    if report.verdict is None or report.verdict == VERIFIED:
        return EXIT_OK
    return EXIT_COUNTEREXAMPLE


def _document(command, G, parameters, results):
    # type: (str, GroupData, Dict[str, Any], Dict[str, Any]) -> ReportDocument
    return ReportDocument(
        command=command,
        group=group_document(G),
        parameters=parameters,
        classes=format_as_dict(G.classes),
        results=results,
    )


def _emit(args, text, doc):
    # type: (argparse.Namespace, str, ReportDocument) -> None
    doc.timing = {'seconds': round(time.perf_counter() - args.started, 3)}
    if args.json == '-':
        sys.stdout.write(dumps_report(doc))
        return
    print(text)
    if args.json is not None:
        with open(args.json, 'w') as f:
            f.write(dumps_report(doc))
        logger.info('report written to %s', args.json)


def jobs_from_env(environ):
    # type: (Dict[str, str]) -> int
    """ Worker processes requested by HELP_PSL2_THREADS (0 = one per CPU).

    >>> jobs_from_env({}), jobs_from_env({'HELP_PSL2_THREADS': '3'})
    (1, 3)
    """
    value = environ.get(THREADS_ENV, '').strip()
    if not value:
        return 1
    try:
        jobs = int(value)
    except ValueError:
        jobs = -1
    if jobs < 0:
        raise ValueError('{} must be a non-negative integer, got {!r}'.format(
            THREADS_ENV, value))
    return jobs or os.cpu_count() or 1


def parse_kset(value):
    # type: (str) -> List[int]
    """
    >>> parse_kset('1,2,5')
    [1, 2, 5]
    """
    try:
        chars = [int(k) for k in value.split(',') if k.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            'expected a comma-separated list of integers, got {!r}'.format(
                value))
    if not chars or any(k < 0 for k in chars):
        raise argparse.ArgumentTypeError(
            'expected non-negative character indices, got {!r}'.format(value))
    return chars


def get_parser():
    # type: () -> argparse.ArgumentParser
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--p', type=int, required=True,
                        help='Characteristic: a prime.')
    common.add_argument('--f', type=int, default=1,
                        help='q = p^f (default: %(default)s).')
    common.add_argument('--json', nargs='?', const='-', default=None,
                        metavar='PATH',
                        help='Write a JSON report to PATH, or to standard '
                             'output if PATH is omitted or "-".')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log progress (-v) or search details (-vv) '
                             'to standard error.')

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument('--r', type=int, required=True,
                        help='A prime different from p.')
    solver.add_argument('--n', type=int, required=True,
                        help='Unit order is r^n.')
    solver.add_argument('--k', type=parse_kset, default=None,
                        help='Brauer characters phi_k to use, e.g. 1,2,5 '
                             '(default: phi_1..phi_K with '
                             'K = min(r^(n-1) + 1, max(o_a, o_b) - 1)).')
    solver.add_argument('--bound', type=int, default=DEFAULT_BOUND,
                        help='Partial augmentations are searched in '
                             '[-bound, bound] (default: %(default)s).')
    solver.add_argument('--check-stability', action='store_true',
                        help='Repeat the search with bound + 2 and report '
                             'whether the chain list changes.')
    solver.add_argument('--no-bovdi', action='store_true',
                        help='Use Brauer character constraints only, without '
                             'the sum-zero and mu(1) restrictions.')

    parser = argparse.ArgumentParser(
        prog='help-psl2',
        description='HeLP method for torsion units of prime power order '
                    'in the integral group ring of PSL(2, p^f).')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    table = subparsers.add_parser(
        'table', parents=[common],
        help='Print the classes and Brauer characters of PSL(2, p^f).')
    table.add_argument('--kmax', type=int, default=3,
                       help='Print phi_0 .. phi_kmax (default: %(default)s).')
    table.set_defaults(func=cmd_table)

    verify = subparsers.add_parser(
        'verify', parents=[common, solver],
        help='Check that all admissible units of order r^n are rationally '
             'conjugate to group elements.')
    verify.set_defaults(func=cmd_verify)

    solve_ = subparsers.add_parser(
        'solve', parents=[common, solver],
        help='List all admissible partial augmentation chains.')
    solve_.set_defaults(func=cmd_solve)
    return parser


def main(argv=None):
    # type: (Optional[Sequence[str]]) -> int
    args = get_parser().parse_args(argv)
    args.started = time.perf_counter()
    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(
            args.verbose, logging.DEBUG),
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE
