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

import json
import os
import shutil
import tempfile
import unittest

import numpy as np

from edrvfl.dataset import ClassTooSmall, Dataset, DatasetError, \
    ManifestError, MissingLabelColumn, ParseError, SingleClass, \
    decode_labels, encode_labels, load_csv, load_dataset, \
    load_feature_csv, load_manifest, one_hot, zscore_apply, zscore_fit


class TestCsv(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write(self, text, name='data.csv'):
        path = os.path.join(self.directory, name)
        with open(path, 'w') as fd:
            fd.write(text)
        return path

    def test_load_with_header(self):
        path = self.write('a,b,class\n1,2,x\n3,4,y\n')
        raw = load_csv(path, 'class')
        np.testing.assert_array_equal([[1.0, 2.0], [3.0, 4.0]],
                                      raw.features)
        self.assertEqual(['x', 'y'], raw.labels)
        self.assertEqual(['a', 'b'], raw.header)
        self.assertEqual('class', raw.label_name)

    def test_label_column_by_index(self):
        path = self.write('x,1,2\ny,3,4\n')
        raw = load_csv(path, 0, has_header=False)
        np.testing.assert_array_equal([[1.0, 2.0], [3.0, 4.0]],
                                      raw.features)
        raw = load_csv(path, '-3', has_header=False)
        self.assertEqual(['x', 'y'], raw.labels)

    def test_non_numeric_feature(self):
        path = self.write('a,b,class\n1,2,x\n3,oops,y\n')
        try:
            load_csv(path, 'class')
            self.fail('ParseError expected')
        except ParseError as e:
            self.assertEqual(3, e.row)
            self.assertEqual(1, e.column)

    def test_missing_value(self):
        path = self.write('a,b,class\n1,,x\n')
        self.assertRaises(ParseError, load_csv, path, 'class')

    def test_ragged_row(self):
        path = self.write('a,b,class\n1,2,x\n3,y\n')
        self.assertRaises(ParseError, load_csv, path, 'class')

    def test_missing_label_column(self):
        path = self.write('a,b,class\n1,2,x\n')
        self.assertRaises(MissingLabelColumn, load_csv, path, 'label')
        self.assertRaises(MissingLabelColumn, load_csv, path, 5)

    def test_name_without_header(self):
        path = self.write('1,2,x\n')
        self.assertRaises(MissingLabelColumn, load_csv, path, 'class',
                          False)

    def test_missing_file(self):
        self.assertRaises(DatasetError, load_csv,
                          os.path.join(self.directory, 'none.csv'), 0)

    def test_feature_csv_drops_label(self):
        path = self.write('a,class,b\n1,x,2\n')
        np.testing.assert_array_equal(
            [[1.0, 2.0]], load_feature_csv(path, True, 'class'))

    def test_empty_feature_csv(self):
        path = self.write('')
        self.assertEqual((0, 0), load_feature_csv(path).shape)

    def test_load_dataset(self):
        path = self.write('a,class\n1,y\n2,x\n3,y\n', name='blobs.csv')
        dataset = load_dataset(path, 'class')
        self.assertEqual('blobs', dataset.name)
        np.testing.assert_array_equal([1, 0, 1], dataset.y)
        self.assertEqual(['x', 'y'], dataset.label_names)

    def test_manifest(self):
        self.write('a,class\n1,x\n2,y\n', name='one.csv')
        manifest = self.write(json.dumps({'datasets': [
            {'path': 'one.csv', 'label_column': 'class'},
            {'name': 'two', 'path': 'two.csv', 'label_column': 0,
             'has_header': False}]}), name='manifest.json')
        entries = load_manifest(manifest)
        self.assertEqual(['one', 'two'], [e['name'] for e in entries])
        self.assertEqual(os.path.join(self.directory, 'one.csv'),
                         entries[0]['path'])
        self.assertTrue(entries[0]['has_header'])
        self.assertFalse(entries[1]['has_header'])

    def test_bad_manifest(self):
        manifest = self.write('[{"path": "x.csv"}]', name='manifest.json')
        self.assertRaises(ManifestError, load_manifest, manifest)
        manifest = self.write('not json', name='broken.json')
        self.assertRaises(ManifestError, load_manifest, manifest)


class TestLabels(unittest.TestCase):
    def test_lexicographic_encoding(self):
        y, k, names = encode_labels(['b', 'a', 'c', 'a'])
        np.testing.assert_array_equal([1, 0, 2, 0], y)
        self.assertEqual(3, k)
        self.assertEqual(['a', 'b', 'c'], names)
        self.assertEqual(['b', 'a', 'c', 'a'], decode_labels(y, names))

    def test_single_class(self):
        self.assertRaises(SingleClass, encode_labels, ['a', 'a'])

    def test_one_hot(self):
        np.testing.assert_array_equal([[0.0, 1.0], [1.0, 0.0]],
                                      one_hot([1, 0], 2))


class TestNormalization(unittest.TestCase):
    def test_zscore(self):
        stats = zscore_fit([[1.0, 5.0], [3.0, 5.0]])
        np.testing.assert_array_equal([2.0, 5.0], stats.mean)
        np.testing.assert_array_equal([1.0, 0.0], stats.std)
        np.testing.assert_array_equal(
            [[-1.0, 0.0], [1.0, 0.0]],
            zscore_apply([[1.0, 5.0], [3.0, 5.0]], stats))

    def test_constant_column_is_zero(self):
        X = np.full((4, 1), 0.1)
        stats = zscore_fit(X)
        np.testing.assert_array_equal(np.zeros((4, 1)),
                                      zscore_apply(X, stats))

    def test_width_mismatch(self):
        stats = zscore_fit(np.ones((2, 2)))
        self.assertRaises(DatasetError, zscore_apply, np.ones((2, 3)), stats)


class TestDataset(unittest.TestCase):
    def test_subset_refits_normalization(self):
        dataset = Dataset([[0.0], [2.0], [10.0], [20.0]], [0, 1, 0, 1], 2,
                          ['a', 'b'])
        part = dataset.subset([0, 1])
        np.testing.assert_array_equal([[-1.0], [1.0]], part.X)
        np.testing.assert_array_equal([1.0], part.norm_stats.mean)
        self.assertEqual(2, part.m)

    def test_label_range(self):
        self.assertRaises(DatasetError, Dataset, [[0.0], [1.0]], [0, 2], 2,
                          ['a', 'b'])

    def test_targets(self):
        dataset = Dataset([[0.0], [1.0]], [1, 0], 2, ['a', 'b'])
        np.testing.assert_array_equal([[0.0, 1.0], [1.0, 0.0]], dataset.Y)
        self.assertEqual((2, 1), (dataset.m, dataset.d))

    def test_class_too_small_carries_label(self):
        error = ClassTooSmall('a', 'too small')
        self.assertEqual('a', error.label)


if __name__ == '__main__':
    unittest.main()
