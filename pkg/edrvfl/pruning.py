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

import math

import numpy as np

from edrvfl.solvers import DimensionMismatch


def neuron_importance(beta, n):
    """
    Importance of every hidden neuron of a layer: the sum over classes of
    the absolute output weights of the neuron. Only the first ``n`` rows of
    beta belong to hidden neurons, the rest (direct link) are never scored.

    :param beta: output weights of the layer.
    :param n: number of hidden neurons.
    :type n: int
    :returns: importance vector of length n.
    :raises: :py:exc:`edrvfl.solvers.DimensionMismatch`
    """
    beta = np.asarray(beta, dtype=np.float64)
    if beta.ndim != 2 or beta.shape[0] < n:
        raise DimensionMismatch(
            'output weights of shape %s have fewer than %d neuron rows' % (
                beta.shape, n))
    # sorted rows: the sum is the same for any class order
    return np.sort(np.abs(beta[:n]), axis=1).sum(axis=1)


def pruned_count(n, p):
    # tolerance absorbs products such as 0.29 * 100 = 28.999999999999996
    return min(int(math.floor(p * n + 1e-9)), n - 1)


def prune_mask(theta, p):
    """
    Marks the ``floor(p * n)`` least important neurons as pruned. Ties are
    pruned by lower index first and at least one neuron is always kept.

    :param theta: importance vector.
    :param p: pruning rate in ``[0, 1)``.
    :type p: float
    :returns: boolean keep mask.
    """
    if not 0 <= p < 1:
        raise ValueError('pruning rate must be in [0, 1), got %r' % p)
    theta = np.asarray(theta, dtype=np.float64).reshape(-1)
    keep = np.ones(theta.shape[0], dtype=bool)
    count = pruned_count(theta.shape[0], p)
    if count > 0:
        keep[np.argsort(theta, kind='stable')[:count]] = False
    return keep
