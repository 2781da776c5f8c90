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

import numpy as np

from edrvfl.weighting import MAX_WRONG_WEIGHT, update_sample_weights, \
    weights_conserved


class TestUpdateSampleWeights(unittest.TestCase):
    def test_wrong_samples_take_the_rest(self):
        correct = np.array([True] * 8 + [False] * 2)
        w = update_sample_weights(correct, 0.5)
        np.testing.assert_array_equal([0.5] * 8 + [3.0] * 2, w)
        self.assertEqual(10.0, w.sum())

    def test_all_correct(self):
        np.testing.assert_array_equal(
            np.ones(6), update_sample_weights(np.ones(6, dtype=bool), 0.3))

    def test_all_wrong(self):
        np.testing.assert_array_equal(
            np.ones(6), update_sample_weights(np.zeros(6, dtype=bool), 0.3))

    def test_no_weighting(self):
        correct = np.array([True, False, True])
        np.testing.assert_array_equal(
            np.ones(3), update_sample_weights(correct, 1.0))

    def test_conservation(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            m = int(rng.integers(1, 200))
            correct = rng.random(m) < rng.random()
            w = update_sample_weights(correct, float(rng.uniform(0.01, 1)))
            self.assertTrue(weights_conserved(w))
            self.assertLessEqual(abs(w.sum() - m), 1e-9 * m)

    def test_clamp(self):
        m = 3 * 10 ** 6
        correct = np.ones(m, dtype=bool)
        correct[0] = False
        w = update_sample_weights(correct, 0.01)
        self.assertEqual(MAX_WRONG_WEIGHT, w[0])

    def test_invalid_omega(self):
        self.assertRaises(ValueError, update_sample_weights, [True], 0.0)
        self.assertRaises(ValueError, update_sample_weights, [True], 1.5)


if __name__ == '__main__':
    unittest.main()
