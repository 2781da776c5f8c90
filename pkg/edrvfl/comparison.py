#!/usr/bin/env python
#
# Copyright 2026 The edrvfl Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""
Comparison of several methods over several datasets: accuracy table,
average ranks and pairwise signed-rank tests.
"""

import collections
import logging

from edrvfl.stats import IncompleteMatrix, TooFewPairs, average_ranks, \
    wilcoxon_signed_rank

logger = logging.getLogger(__name__)

SIGNIFICANCE = 0.05

Entry = collections.namedtuple('Entry', 'mean std')


def _entry(result):
    if isinstance(result, dict):
        return (result['dataset'], result['variant'],
                Entry(float(result['mean']), result.get('std')))
    return result.dataset, result.variant, Entry(result.mean, result.std)


class ComparisonReport(object):
    """
    :ivar methods: method names, in order of first appearance.
    :ivar datasets: datasets every method has a result for.
    :ivar matrix: methods x datasets mean accuracies.
    :ivar stds: methods x datasets standard deviations, None when unknown.
    :ivar ranks: average rank of every method.
    :ivar pvalues: dict from ``(row, column)`` method pairs to the two-sided
        p-value, None when too few datasets differ.
    :ivar symbols: dict from the same pairs to ``'+'`` (row significantly
        better), ``'-'`` (significantly worse) or ``''``.
    """
    def __init__(self, methods, datasets, matrix, stds, ranks, pvalues,
                 symbols):
        self.methods = methods
        self.datasets = datasets
        self.matrix = matrix
        self.stds = stds
        self.ranks = ranks
        self.pvalues = pvalues
        self.symbols = symbols

    def to_dict(self):
        return {
            'methods': self.methods,
            'datasets': self.datasets,
            'accuracy': dict(
                (method, dict(zip(self.datasets, row)))
                for method, row in zip(self.methods, self.matrix)),
            'std': dict(
                (method, dict(zip(self.datasets, row)))
                for method, row in zip(self.methods, self.stds)),
            'average_ranks': dict(zip(self.methods, self.ranks)),
            'wilcoxon': [
                {'row': row, 'column': column,
                 'p_value': self.pvalues[(row, column)],
                 'symbol': self.symbols[(row, column)]}
                for row in self.methods for column in self.methods
                if row != column],
        }


def build_report(results, significance=SIGNIFICANCE):
    """
    Builds a :py:class:`ComparisonReport` from run results or
    ``{dataset, variant, mean}`` dicts. Datasets missing for some method
    are left out with a warning.

    :raises: :py:exc:`edrvfl.stats.IncompleteMatrix` when no dataset is
        shared by every method.
    """
    table = collections.OrderedDict()
    for result in results:
        dataset, method, entry = _entry(result)
        row = table.setdefault(method, collections.OrderedDict())
        if dataset in row:
            logger.warning('Duplicate result of %s on %s, keeping the last '
                           'one', method, dataset)
        row[dataset] = entry
    methods = list(table)
    if not methods:
        raise IncompleteMatrix('no results to compare')
    every = []
    for row in table.values():
        every.extend(d for d in row if d not in every)
    datasets = [d for d in every if all(d in row for row in table.values())]
    dropped = [d for d in every if d not in datasets]
    if dropped:
        logger.warning('Datasets without a result for every method are not '
                       'compared: %s', ', '.join(dropped))
    if not datasets:
        raise IncompleteMatrix('no dataset has results for every method')

    matrix = [[table[m][d].mean for d in datasets] for m in methods]
    stds = [[table[m][d].std for d in datasets] for m in methods]
    ranks = [float(r) for r in average_ranks(matrix)]
    pvalues, symbols = {}, {}
    for i, row in enumerate(methods):
        for j, column in enumerate(methods):
            if i == j:
                continue
            try:
                test = wilcoxon_signed_rank(matrix[i], matrix[j])
            except TooFewPairs:
                pvalues[(row, column)] = None
                symbols[(row, column)] = ''
                continue
            pvalues[(row, column)] = test.p_value
            symbol = ''
            if test.p_value < significance:
                symbol = '+' if test.statistic > 0 else '-'
            symbols[(row, column)] = symbol
    return ComparisonReport(methods, datasets, matrix, stds, ranks,
                            pvalues, symbols)


def _cell(mean, std):
    if std is None:
        return '%.2f' % (100 * mean)
    return '%.2f+-%.2f' % (100 * mean, 100 * std)


def _format_rows(rows):
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    return ['  '.join(cell.ljust(width) for cell, width in
                      zip(row, widths)).rstrip() for row in rows]


def render_table(report):
    """
    Plain-text rendering: accuracy (percent) of every method on every
    dataset, the average ranks and the matrix of pairwise test symbols.
    """
    rows = [['dataset'] + report.methods]
    for position, dataset in enumerate(report.datasets):
        rows.append([dataset] + [
            _cell(report.matrix[m][position], report.stds[m][position])
            for m in range(len(report.methods))])
    rows.append(['average rank'] + ['%.2f' % r for r in report.ranks])
    lines = _format_rows(rows)

    symbols = [['vs'] + report.methods]
    for row in report.methods:
        symbols.append([row] + [
            '.' if row == column else report.symbols[(row, column)] or '='
            for column in report.methods])
    lines.append('')
    lines.extend(_format_rows(symbols))
    return '\n'.join(lines) + '\n'
