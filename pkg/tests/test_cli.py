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

import csv
import json
import os
import shutil
import tempfile
import unittest

from mox3 import mox

from edrvfl import cli
from edrvfl.model_io import load_model

from tests.mothers import noisy_dataset, run_result_mother, toy_dataset

TINY_HP = ['--hp', 'n=20', '--hp', 'l_max=2']


def write_csv(path, dataset, header=True):
    with open(path, 'w', newline='') as fd:
        writer = csv.writer(fd)
        if header:
            writer.writerow(['f%d' % column for column in range(dataset.d)]
                            + ['label'])
        for row, label in zip(dataset.features, dataset.y):
            writer.writerow([repr(float(v)) for v in row] +
                            [dataset.label_names[label]])


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.toy = self.path('toy.csv')
        write_csv(self.toy, toy_dataset())
        self.noisy = self.path('noisy.csv')
        write_csv(self.noisy, noisy_dataset())

    def tearDown(self):
        shutil.rmtree(self.directory)

    def path(self, *names):
        return os.path.join(self.directory, *names)

    def write_json(self, name, document):
        with open(self.path(name), 'w') as fd:
            json.dump(document, fd)
        return self.path(name)

    def read_lines(self, *names):
        with open(self.path(*names)) as fd:
            return fd.read().splitlines()


class TestTrainAndPredict(CliTestCase):
    def train(self, *extra):
        return cli.main(['train', self.toy, '--label-column', 'label',
                         '--seed', '1', '--out', self.path('run')] +
                        TINY_HP + list(extra))

    def test_train(self):
        self.assertEqual(cli.EXIT_OK, self.train('--variant', 'wpedrvfl',
                                                 '--hp', 'p=0.2'))
        model = load_model(self.path('run', cli.MODEL_FILE))
        self.assertEqual(2, model.depth)
        self.assertEqual(['c0', 'c1'], model.label_names)
        with open(self.path('run', cli.TRAIN_REPORT_FILE)) as fd:
            report = json.load(fd)
        self.assertEqual('wpedrvfl', report['variant'])
        self.assertEqual(2, len(report['layer_accuracies']))
        self.assertIsNone(report['sample_weights'][0])

    def test_unknown_variant(self):
        self.assertEqual(cli.EXIT_CONFIG, self.train('--variant', 'svm'))

    def test_variant_conflict(self):
        self.assertEqual(cli.EXIT_CONFIG, self.train('--hp', 'p=0.5'))

    def test_missing_dataset(self):
        self.assertEqual(cli.EXIT_DATA, cli.main(
            ['train', self.path('absent.csv'), '--label-column', 'label']))

    def test_missing_label_column(self):
        self.assertEqual(cli.EXIT_DATA, cli.main(
            ['train', self.toy, '--label-column', 'class']))

    def test_bad_arguments(self):
        self.assertEqual(cli.EXIT_CONFIG, cli.main(['train', '--seed', 'x']))
        self.assertEqual(cli.EXIT_CONFIG, cli.main([]))

    def test_predict(self):
        self.assertEqual(cli.EXIT_OK, self.train())
        self.assertEqual(cli.EXIT_OK, cli.main(
            ['predict', self.path('run', cli.MODEL_FILE), self.toy,
             '--has-header', '--label-column', 'label',
             '--out', self.path('labels.txt')]))
        expected = [toy_dataset().label_names[c] for c in toy_dataset().y]
        self.assertEqual(expected, self.read_lines('labels.txt'))

    def test_predict_wrong_width(self):
        self.assertEqual(cli.EXIT_OK, self.train())
        self.assertEqual(cli.EXIT_DATA, cli.main(
            ['predict', self.path('run', cli.MODEL_FILE), self.noisy,
             '--has-header', '--label-column', 'label']))

    def test_predict_empty(self):
        self.assertEqual(cli.EXIT_OK, self.train())
        open(self.path('empty.csv'), 'w').close()
        self.assertEqual(cli.EXIT_OK, cli.main(
            ['predict', self.path('run', cli.MODEL_FILE),
             self.path('empty.csv'), '--out', self.path('labels.txt')]))
        self.assertEqual([], self.read_lines('labels.txt'))

    def test_missing_model(self):
        self.assertEqual(cli.EXIT_DATA, cli.main(
            ['predict', self.path('absent.json'), self.toy]))


class TestBenchmark(CliTestCase):
    def setUp(self):
        super(TestBenchmark, self).setUp()
        self.mox = mox.Mox()
        self.manifest = self.write_json('manifest.json', {'datasets': [
            {'name': 'toy', 'path': 'toy.csv', 'label_column': 'label'},
            {'name': 'noisy', 'path': 'noisy.csv', 'label_column': -1}]})
        self.grid = self.write_json('grid.json', {
            'format_version': '1', 'lambda': [0.5, 2.0], 'n': [20],
            'l_max': [2]})

    def benchmark(self, out, *extra):
        return cli.main(['benchmark', self.manifest, '--variants',
                         'edrvfl,pedrvfl', '--grid', self.grid,
                         '--repetitions', '2', '--folds', '2',
                         '--out', self.path(out)] + list(extra))

    def test_results(self):
        self.assertEqual(cli.EXIT_OK, self.benchmark('a', '--seed', '0'))
        lines = self.read_lines('a', cli.RESULTS_FILE)
        self.assertEqual(4, len(lines))
        pairs = [(json.loads(line)['dataset'], json.loads(line)['variant'])
                 for line in lines]
        self.assertEqual([('toy', 'edrvfl'), ('toy', 'pedrvfl'),
                          ('noisy', 'edrvfl'), ('noisy', 'pedrvfl')], pairs)
        self.assertEqual(4, len(self.read_lines('a', cli.TIMINGS_FILE)))
        self.assertTrue(os.path.exists(self.path('a', cli.COMPARISON_FILE)))

    def test_reproducible(self):
        self.assertEqual(cli.EXIT_OK, self.benchmark('a', '--seed', '3'))
        self.assertEqual(cli.EXIT_OK, self.benchmark('b', '--seed', '3'))
        self.assertEqual(self.read_lines('a', cli.RESULTS_FILE),
                         self.read_lines('b', cli.RESULTS_FILE))

    def test_resume_from_store(self):
        store = self.path('results.db')
        self.assertEqual(cli.EXIT_OK, self.benchmark(
            'a', '--seed', '0', '--store', store))
        self.assertEqual(cli.EXIT_OK, self.benchmark(
            'b', '--seed', '0', '--store', store))
        self.assertEqual(self.read_lines('a', cli.RESULTS_FILE),
                         self.read_lines('b', cli.RESULTS_FILE))

    def test_stored_results_skipped(self):
        store = self.mox.CreateMockAnything()
        store.lookup(mox.IgnoreArg()).AndReturn(
            run_result_mother(dataset='toy', variant='edrvfl'))
        store.lookup(mox.IgnoreArg()).AndReturn(None)
        store.record(mox.IgnoreArg(), mox.IgnoreArg())
        store.close()
        self.mox.stubs.Set(cli, 'ResultStore', lambda location: store)
        evaluated = []

        def fake_repeat_runs(dataset, variant, *args):
            evaluated.append((dataset.name, variant.name))
            return run_result_mother(dataset=dataset.name,
                                     variant=variant.name)
        self.mox.stubs.Set(cli, 'repeat_runs', fake_repeat_runs)
        self.mox.ReplayAll()

        self.assertEqual(cli.EXIT_OK, cli.main(
            ['benchmark', self.toy, '--label-column', 'label',
             '--variants', 'edrvfl,pedrvfl', '--grid', self.grid,
             '--seed', '0', '--store', self.path('results.db'),
             '--out', self.path('a')]))
        self.mox.VerifyAll()
        self.assertEqual([('toy', 'pedrvfl')], evaluated)
        variants = [json.loads(line)['variant']
                    for line in self.read_lines('a', cli.RESULTS_FILE)]
        self.assertEqual(['edrvfl', 'pedrvfl'], variants)

    def test_seed_required(self):
        self.assertEqual(cli.EXIT_CONFIG, self.benchmark('a'))

    def test_config_file(self):
        config = self.write_json('run.json', {
            'format_version': '1', 'dataset': 'toy.csv',
            'label_column': 'label', 'variants': ['edrvfl'],
            'grid': 'grid.json', 'repetitions': 1, 'folds': 2, 'seed': 5,
            'out': self.path('c')})
        self.assertEqual(cli.EXIT_OK, cli.main(['benchmark', '--config',
                                                config]))
        self.assertEqual(1, len(self.read_lines('c', cli.RESULTS_FILE)))

    def tearDown(self):
        self.mox.UnsetStubs()
        super(TestBenchmark, self).tearDown()


class TestSweepAndCompare(CliTestCase):
    def test_sweep(self):
        self.assertEqual(cli.EXIT_OK, cli.main(
            ['sweep', self.noisy, '--label-column', 'label', '--parameter',
             'p', '--values', '0,0.2,0.4,0.6,0.8', '--folds', '2',
             '--out', self.path('sweep.csv')] + TINY_HP))
        lines = self.read_lines('sweep.csv')
        self.assertEqual('p,accuracy', lines[0])
        self.assertEqual(['0.0', '0.2', '0.4', '0.6', '0.8'],
                         [line.split(',')[0] for line in lines[1:]])

    def test_sweep_out_of_range(self):
        self.assertEqual(cli.EXIT_CONFIG, cli.main(
            ['sweep', self.noisy, '--label-column', 'label', '--parameter',
             'p', '--values', '1.0']))

    def test_compare(self):
        published = self.path('published.jsonl')
        with open(published, 'w') as fd:
            for dataset, means in (('x', (0.9, 0.7)), ('y', (0.8, 0.6))):
                for variant, mean in zip(('ours', 'theirs'), means):
                    fd.write(json.dumps({'dataset': dataset,
                                         'variant': variant,
                                         'mean': mean}) + '\n')
        self.assertEqual(cli.EXIT_OK, cli.main(
            ['compare', published, '--out', self.path('cmp')]))
        with open(self.path('cmp', cli.COMPARISON_FILE)) as fd:
            report = json.load(fd)
        self.assertEqual({'ours': 1.0, 'theirs': 2.0},
                         report['average_ranks'])

    def test_compare_unreadable(self):
        self.assertEqual(cli.EXIT_CONFIG, cli.main(
            ['compare', self.path('absent.jsonl')]))


if __name__ == '__main__':
    unittest.main()
