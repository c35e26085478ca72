# -*- coding: utf-8 -*-
from functools import singledispatch
from typing import List

from tabulate import tabulate

from help_psl2.helpsolver import ChainResult, SolverReport
from help_psl2.psl2 import BrauerTable, GroupData
from .utils import format_cyclo, format_numeric


@singledispatch
def format_as_text(obj):
    # type: (...) -> str
    """ Format a :class:`~help_psl2.psl2.BrauerTable`, a
    :class:`~help_psl2.psl2.GroupData` or a
    :class:`~help_psl2.helpsolver.SolverReport` as text.
    """
    raise TypeError('format_as_text is not supported for {}'.format(
        type(obj).__name__))


@format_as_text.register(GroupData)
def _format_group(G):
    # type: (GroupData) -> str
    return '\n'.join(_group_lines(G))


@format_as_text.register(BrauerTable)
def _format_brauer_table(table):
    # type: (BrauerTable) -> str
    lines = _group_lines(table.group)
    header = ['', 'degree'] + [c.label for c in table.classes]
    exact = []
    numeric = []
    for phi in table.characters:
        values = table.values(phi.k)
        name = 'phi_{}'.format(phi.k)
        exact.append([name, phi.degree] + [format_cyclo(v) for v in values])
        numeric.append([name, phi.degree] + [format_numeric(v) for v in values])
    lines.extend([
        '',
        'Brauer characters on {}-regular classes:'.format(table.group.p),
        tabulate(exact, headers=header, disable_numparse=True),
        '',
        'Numeric values:',
        tabulate(numeric, headers=header, disable_numparse=True),
    ])
    return '\n'.join(lines)


@format_as_text.register(SolverReport)
def _format_report(report):
    # type: (SolverReport) -> str
    G = report.group
    N = report.r ** report.n
    lines = ['{}: units of order {} = {}^{}'.format(
        G.name, N, report.r, report.n)]
    lines.append('characters: {}'.format(
        ', '.join('phi_{}'.format(k) for k in report.chars)))
    lines.append('box: [-{0}, {0}]{1}'.format(
        report.bound, '' if report.assume_bovdi else ', Bovdi restrictions off'))
    if report.verdict is not None:
        lines.append('verdict: {}'.format(report.verdict))
    if report.note:
        lines.append('note: {}'.format(report.note))
    lines.append('admissible chains: {}'.format(len(report.chains)))
    for idx, res in enumerate(report.chains, 1):
        lines.append('')
        lines.extend(_chain_lines(G, idx, res))
    lines.append('')
    lines.append('candidates: {}, pruned subtrees: {}'.format(
        report.candidates, report.pruned))
    if report.rejections:
        lines.append('rejected by: {}'.format(', '.join(
            '{} ({})'.format(key, count)
            for key, count in report.rejections.items())))
    if report.bound_stable is not None:
        lines.append('stable at bound {}: {}'.format(
            report.bound + 2, 'yes' if report.bound_stable else 'no'))
    return '\n'.join(lines)


def _group_lines(G):
    # type: (GroupData) -> List[str]
    rows = [[c.id, c.label, c.family, c.parameter, c.element_order]
            for c in G.classes]
    return [
        '{} (p={}, f={}, d={})'.format(G.name, G.p, G.f, G.d),
        tabulate(rows, headers=['id', 'class', 'family', 'parameter', 'order']),
    ]


def _chain_lines(G, idx, res):
    # type: (GroupData, int, ChainResult) -> List[str]
    lines = ['chain {} ({}):'.format(
        idx, 'trivial' if res.trivial else 'NOT trivial')]
    for vector in res.chain.vectors:
        entries = ', '.join(
            '{}: {}'.format(G.class_by_id(cid).label, eps)
            for cid, eps in vector.support().items())
        lines.append('  order {}: {}'.format(vector.unit_order, entries))
    N = res.chain.unit_order
    rows = [['phi_{}'.format(t.k)] + [str(t.values[e]) for e in range(N)]
            for t in res.tables]
    header = ['mu(z^e)'] + ['e={}'.format(e) for e in range(N)]
    lines.extend('  ' + line for line in
                 tabulate(rows, headers=header, disable_numparse=True)
                 .splitlines())
    if res.bovdi_sums:
        lines.append('  sums over classes of order r^m: {}'.format(', '.join(
            'm={}: {}'.format(m, s) for m, s in sorted(res.bovdi_sums.items()))))
    return lines
