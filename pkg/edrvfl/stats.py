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
Accuracy, average ranks and the Wilcoxon signed-rank test.
"""

import math

import numpy as np
from scipy import stats as st

# Minimum of non-zero differences for a signed-rank test.
MIN_PAIRS = 5
# Largest number of non-zero differences with an exact p-value.
EXACT_LIMIT = 20


class StatsError(Exception):
    pass


class LengthMismatch(StatsError):
    pass


class IncompleteMatrix(StatsError):
    pass


class TooFewPairs(StatsError):
    pass


def accuracy(pred_labels, true_labels):
    """
    Fraction of correct predictions.

    :raises: :py:exc:`LengthMismatch` on different or zero lengths.
    """
    pred = np.asarray(pred_labels).reshape(-1)
    true = np.asarray(true_labels).reshape(-1)
    if pred.shape != true.shape:
        raise LengthMismatch('%d predictions for %d labels' % (
            pred.shape[0], true.shape[0]))
    if pred.shape[0] == 0:
        raise LengthMismatch('accuracy of an empty prediction')
    return float(np.count_nonzero(pred == true)) / pred.shape[0]


def mean_std(values):
    """
    Mean and population standard deviation. Sums are exactly rounded so
    the result does not depend on the order of ``values``.
    """
    values = [float(v) for v in values]
    if not values:
        raise StatsError('mean of no values')
    mean = math.fsum(values) / len(values)
    variance = math.fsum((v - mean) ** 2 for v in values) / len(values)
    return mean, math.sqrt(variance)


def average_ranks(matrix):
    """
    Ranks methods on every dataset, 1 being the most accurate and ties
    sharing the average of their positions, then averages over datasets.

    :param matrix: methods x datasets accuracies.
    :returns: average rank of every method.
    :raises: :py:exc:`IncompleteMatrix`
    """
    try:
        accuracies = np.array(matrix, dtype=np.float64)
    except (TypeError, ValueError):
        raise IncompleteMatrix('accuracy matrix has missing entries')
    if accuracies.ndim != 2 or 0 in accuracies.shape:
        raise IncompleteMatrix('accuracy matrix must be methods x datasets, '
                               'got shape %s' % (accuracies.shape,))
    if not np.all(np.isfinite(accuracies)):
        raise IncompleteMatrix('accuracy matrix has missing entries')
    ranks = st.rankdata(-accuracies, axis=0)
    return ranks.mean(axis=1)


class WilcoxonResult(object):
    """
    :ivar statistic: signed rank sum ``w_plus - w_minus``.
    :ivar p_value: two-sided p-value.
    :ivar n: number of non-zero differences.
    :ivar exact: whether the p-value comes from the exact distribution.
    """
    def __init__(self, statistic, p_value, n, w_plus, w_minus, exact):
        self.statistic = statistic
        self.p_value = p_value
        self.n = n
        self.w_plus = w_plus
        self.w_minus = w_minus
        self.exact = exact

    def __iter__(self):
        return iter((self.statistic, self.p_value))

    def __repr__(self):
        return 'WilcoxonResult(statistic=%r, p_value=%r, n=%d)' % (
            self.statistic, self.p_value, self.n)


def _exact_p_value(ranks, w_plus):
    # ranks are multiples of 1/2, doubling keeps the support integral
    doubled = np.rint(2 * ranks).astype(np.int64)
    total = int(doubled.sum())
    counts = np.zeros(total + 1)
    counts[0] = 1.0
    for rank in doubled:
        shifted = counts.copy()
        shifted[rank:] += counts[:total + 1 - rank]
        counts = shifted
    probabilities = counts / 2.0 ** len(doubled)
    observed = int(round(2 * w_plus))
    lower = math.fsum(probabilities[:observed + 1])
    upper = math.fsum(probabilities[observed:])
    return min(1.0, 2 * min(lower, upper))


def _normal_p_value(ranks, w_plus):
    n = len(ranks)
    mean = n * (n + 1) / 4.0
    _, ties = np.unique(ranks, return_counts=True)
    variance = n * (n + 1) * (2 * n + 1) / 24.0 - \
        float(np.sum(ties ** 3 - ties)) / 48.0
    if variance <= 0:
        return 1.0
    z = (w_plus - mean) / math.sqrt(variance)
    return min(1.0, 2 * st.norm.sf(abs(z)))


def wilcoxon_signed_rank(a, b):
    """
    Two-sided Wilcoxon signed-rank test on paired accuracies. Zero
    differences are dropped; up to :py:data:`EXACT_LIMIT` remaining pairs
    the p-value is exact, beyond that the normal approximation with tie
    correction is used.

    :returns: :py:class:`WilcoxonResult`, which also unpacks as
        ``(statistic, p_value)``.
    :raises: :py:exc:`LengthMismatch`, :py:exc:`TooFewPairs`
    """
    a = np.asarray(a, dtype=np.float64).reshape(-1)
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if a.shape != b.shape:
        raise LengthMismatch('%d values paired with %d' % (
            a.shape[0], b.shape[0]))
    differences = a - b
    differences = differences[differences != 0]
    n = differences.shape[0]
    if n < MIN_PAIRS:
        raise TooFewPairs('%d non-zero differences, at least %d needed' % (
            n, MIN_PAIRS))
    ranks = st.rankdata(np.abs(differences))
    w_plus = math.fsum(ranks[differences > 0])
    w_minus = math.fsum(ranks[differences < 0])
    exact = n <= EXACT_LIMIT
    if exact:
        p_value = _exact_p_value(ranks, w_plus)
    else:
        p_value = _normal_p_value(ranks, w_plus)
    return WilcoxonResult(w_plus - w_minus, p_value, n, w_plus, w_minus,
                          exact)
