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

import unittest

from edrvfl.comparison import build_report, render_table
from edrvfl.stats import IncompleteMatrix

from tests.mothers import run_result_mother


def constant_results(variant, means):
    return [{'dataset': 'd%d' % position, 'variant': variant, 'mean': mean}
            for position, mean in enumerate(means)]


class TestBuildReport(unittest.TestCase):
    def test_ranks(self):
        results = constant_results('better', [0.9] * 6) + \
            constant_results('worse', [0.8] * 6)
        report = build_report(results)
        self.assertEqual(['better', 'worse'], report.methods)
        self.assertEqual([1.0, 2.0], report.ranks)

    def test_significance_symbols(self):
        results = constant_results('better', [0.9, 0.8, 0.7, 0.6, 0.5, 0.4]) \
            + constant_results('worse', [0.85, 0.7, 0.55, 0.4, 0.25, 0.1])
        report = build_report(results)
        self.assertAlmostEqual(0.03125, report.pvalues[('better', 'worse')])
        self.assertEqual('+', report.symbols[('better', 'worse')])
        self.assertEqual('-', report.symbols[('worse', 'better')])

    def test_too_few_datasets(self):
        results = constant_results('a', [0.9, 0.8]) + \
            constant_results('b', [0.8, 0.7])
        report = build_report(results)
        self.assertIsNone(report.pvalues[('a', 'b')])
        self.assertEqual('', report.symbols[('a', 'b')])

    def test_incomplete_datasets_dropped(self):
        results = constant_results('a', [0.9, 0.8, 0.7]) + \
            constant_results('b', [0.8, 0.7])
        report = build_report(results)
        self.assertEqual(['d0', 'd1'], report.datasets)

    def test_nothing_shared(self):
        results = [{'dataset': 'x', 'variant': 'a', 'mean': 0.5},
                   {'dataset': 'y', 'variant': 'b', 'mean': 0.5}]
        self.assertRaises(IncompleteMatrix, build_report, results)
        self.assertRaises(IncompleteMatrix, build_report, [])

    def test_run_results_and_constants(self):
        results = [run_result_mother(dataset='noisy', variant='edrvfl'),
                   {'dataset': 'noisy', 'variant': 'svm', 'mean': 0.5}]
        report = build_report(results)
        self.assertEqual([[0.75], [0.5]], report.matrix)
        self.assertIsNone(report.stds[1][0])

    def test_to_dict_and_table(self):
        results = constant_results('a', [0.9, 0.5]) + \
            constant_results('b', [0.8, 0.6])
        report = build_report(results)
        document = report.to_dict()
        self.assertEqual(0.9, document['accuracy']['a']['d0'])
        self.assertEqual({'a': 1.5, 'b': 1.5}, document['average_ranks'])
        self.assertEqual(2, len(document['wilcoxon']))
        table = render_table(report)
        self.assertIn('90.00', table)
        self.assertIn('average rank', table)
        self.assertEqual(table, render_table(build_report(results)))


if __name__ == '__main__':
    unittest.main()
