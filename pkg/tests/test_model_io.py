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

from edrvfl.model_io import FORMAT_VERSION, FormatVersionMismatch, \
    ModelIoError, load_model, marshall, save_model, unmarshall
from edrvfl.network import predict, train

from tests.mothers import hp_mother, noisy_dataset


class TestModelIo(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.path = os.path.join(self.directory, 'model.json')
        self.dataset = noisy_dataset()
        self.model, _ = train(self.dataset,
                              hp_mother(n=6, omega_r=0.5, p=0.5))

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_round_trip_predictions(self):
        save_model(self.model, self.path)
        loaded = load_model(self.path)
        X_new = np.random.default_rng(0).normal(size=(100, self.dataset.d))
        expected, expected_outputs = predict(self.model, X_new)
        labels, outputs = predict(loaded, X_new)
        np.testing.assert_array_equal(expected, labels)
        for a, b in zip(expected_outputs.scores, outputs.scores):
            np.testing.assert_array_equal(a, b)
        self.assertEqual(self.model.hyperparams, loaded.hyperparams)
        self.assertEqual(self.model.label_names, loaded.label_names)
        for a, b in zip(self.model.layers, loaded.layers):
            np.testing.assert_array_equal(a.keep_mask, b.keep_mask)
            self.assertEqual(a.bn_stats, b.bn_stats)

    def test_no_temporary_left(self):
        save_model(self.model, self.path)
        self.assertEqual(['model.json'], os.listdir(self.directory))

    def test_version(self):
        document = marshall(self.model)
        self.assertEqual(FORMAT_VERSION, document['format_version'])
        document['format_version'] = '2'
        self.assertRaises(FormatVersionMismatch, unmarshall, document)
        del document['format_version']
        self.assertRaises(FormatVersionMismatch, unmarshall, document)

    def test_truncated_file(self):
        save_model(self.model, self.path)
        with open(self.path) as fd:
            text = fd.read()
        with open(self.path, 'w') as fd:
            fd.write(text[:len(text) // 2])
        self.assertRaises(ModelIoError, load_model, self.path)

    def test_malformed_document(self):
        document = json.loads(json.dumps(marshall(self.model)))
        del document['layers'][0]['W']
        self.assertRaises(ModelIoError, unmarshall, document)

    def test_missing_file(self):
        self.assertRaises(ModelIoError, load_model,
                          os.path.join(self.directory, 'none.json'))


if __name__ == '__main__':
    unittest.main()
