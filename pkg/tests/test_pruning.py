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

from edrvfl.pruning import neuron_importance, prune_mask, pruned_count
from edrvfl.solvers import DimensionMismatch


class TestNeuronImportance(unittest.TestCase):
    def test_sum_of_absolute_weights(self):
        beta = np.array([[0.5, -0.5], [0.1, 0.2], [9.0, 9.0]])
        np.testing.assert_allclose([1.0, 0.3], neuron_importance(beta, 2))

    def test_zero_row(self):
        beta = np.array([[0.0, 0.0], [0.1, 0.2]])
        self.assertEqual(0.0, neuron_importance(beta, 2)[0])

    def test_class_permutation(self):
        beta = np.random.default_rng(0).normal(size=(6, 3))
        np.testing.assert_array_equal(neuron_importance(beta, 4),
                                      neuron_importance(beta[:, ::-1], 4))

    def test_every_class_order(self):
        rng = np.random.default_rng(7)
        beta = rng.normal(size=(40, 5))
        theta = neuron_importance(beta, 30)
        for _ in range(10):
            order = rng.permutation(5)
            permuted = neuron_importance(beta[:, order], 30)
            np.testing.assert_array_equal(theta, permuted)
            np.testing.assert_array_equal(prune_mask(theta, 0.5),
                                          prune_mask(permuted, 0.5))

    def test_too_few_rows(self):
        self.assertRaises(DimensionMismatch, neuron_importance,
                          np.ones((2, 2)), 3)


class TestPruneMask(unittest.TestCase):
    def test_lowest_pruned(self):
        np.testing.assert_array_equal([True, False],
                                      prune_mask([1.0, 0.3], 0.5))

    def test_no_pruning(self):
        np.testing.assert_array_equal([True] * 3,
                                      prune_mask([0.1, 0.2, 0.3], 0.0))

    def test_ties_prune_lower_index(self):
        np.testing.assert_array_equal([False, True, True],
                                      prune_mask([0.2, 0.2, 0.9], 1.0 / 3))

    def test_count(self):
        keep = prune_mask(np.arange(100, dtype=float), 0.29)
        self.assertEqual(71, keep.sum())
        self.assertFalse(keep[:29].any())

    def test_keeps_one(self):
        self.assertEqual(0, pruned_count(1, 0.9))
        self.assertEqual(1, prune_mask([0.5, 0.1], 0.99).sum())

    def test_invalid_rate(self):
        self.assertRaises(ValueError, prune_mask, [1.0], 1.0)


if __name__ == '__main__':
    unittest.main()
