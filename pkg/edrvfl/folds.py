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
Stratified cross-validation folds and the inner train/validation split.
"""

import logging

import numpy as np

from edrvfl.dataset import ClassTooSmall

logger = logging.getLogger(__name__)


class FoldPlan(object):
    """
    Train/test index pairs of a k-fold cross-validation.

    :param folds: list of ``(train_indices, test_indices)`` tuples.
    :param seed: seed the plan was drawn with.
    """
    def __init__(self, folds, seed):
        self.folds = folds
        self.seed = seed

    @property
    def n_folds(self):
        return len(self.folds)

    def __len__(self):
        return len(self.folds)

    def __iter__(self):
        return iter(self.folds)

    def __getitem__(self, position):
        return self.folds[position]

    def __eq__(self, other):
        return isinstance(other, FoldPlan) \
            and self.n_folds == other.n_folds \
            and all(np.array_equal(a_train, b_train) and
                    np.array_equal(a_test, b_test)
                    for (a_train, a_test), (b_train, b_test)
                    in zip(self.folds, other.folds))

    def __ne__(self, other):
        return not self == other

    def to_dict(self):
        return {
            'seed': self.seed,
            'folds': [{'train': train.tolist(), 'test': test.tolist()}
                      for train, test in self.folds],
        }


def _class_members(y, indices=None):
    """
    Yields ``(label, members)`` for every class, in ascending label order.
    """
    y = np.asarray(y)
    if indices is None:
        indices = np.arange(y.shape[0])
    labels = y[indices]
    for label in np.unique(labels):
        yield label, indices[labels == label]


def stratified_kfold(y, folds, seed):
    """
    Splits sample indices in ``folds`` test sets preserving class
    proportions. Members of each class are shuffled and dealt round-robin,
    continuing from the fold where the previous class stopped so fold sizes
    differ by at most one.

    :param y: integer labels.
    :param folds: number of folds, at least 2.
    :type folds: int
    :param seed: random seed.
    :rtype: :py:class:`FoldPlan`
    :raises: :py:exc:`edrvfl.dataset.ClassTooSmall`
    """
    if folds < 2:
        raise ValueError('at least 2 folds are needed, got %d' % folds)
    y = np.asarray(y)
    rng = np.random.default_rng(seed)
    test_sets = [[] for _ in range(folds)]
    offset = 0
    for label, members in _class_members(y):
        if members.shape[0] < folds:
            raise ClassTooSmall(
                label, 'Class %s has %d samples, fewer than %d folds' % (
                    label, members.shape[0], folds))
        members = members[rng.permutation(members.shape[0])]
        for position, index in enumerate(members):
            test_sets[(offset + position) % folds].append(index)
        offset = (offset + members.shape[0]) % folds

    everything = np.arange(y.shape[0])
    plan = []
    for test in test_sets:
        test = np.sort(np.array(test, dtype=np.int64))
        plan.append((np.setdiff1d(everything, test), test))
    return FoldPlan(plan, seed)


def _allocate(counts, fraction):
    """
    Splits ``round(fraction * sum(counts))`` between classes proportionally,
    handing rounding leftovers to the largest remainders.
    """
    counts = np.asarray(counts, dtype=np.float64)
    total = int(np.floor(fraction * counts.sum() + 0.5))
    quotas = fraction * counts
    allocation = np.floor(quotas).astype(np.int64)
    leftover = total - int(allocation.sum())
    if leftover > 0:
        order = np.argsort(-(quotas - allocation), kind='stable')
        allocation[order[:leftover]] += 1
    return allocation


def train_val_split(train_indices, y, fraction, seed):
    """
    Stratified split of training indices into fit and validation parts.

    :param train_indices: indices available for training.
    :param y: integer labels of the whole dataset.
    :param fraction: share of ``train_indices`` used for validation.
    :type fraction: float
    :param seed: random seed.
    :returns: ``(fit_indices, val_indices)``, both sorted.
    :raises: :py:exc:`edrvfl.dataset.ClassTooSmall` when a class has fewer
        than two training samples.
    """
    if not 0 < fraction < 1:
        raise ValueError('validation fraction must be in (0, 1), got %r' %
                         fraction)
    train_indices = np.sort(np.asarray(train_indices, dtype=np.int64))
    groups = list(_class_members(y, train_indices))
    for label, members in groups:
        if members.shape[0] < 2:
            raise ClassTooSmall(
                label, 'Class %s has %d training samples, cannot hold out '
                'a validation part' % (label, members.shape[0]))
    allocation = _allocate([members.shape[0] for _, members in groups],
                           fraction)
    rng = np.random.default_rng(seed)
    fit, val = [], []
    for (label, members), size in zip(groups, allocation):
        size = min(int(size), members.shape[0] - 1)
        members = members[rng.permutation(members.shape[0])]
        val.append(members[:size])
        fit.append(members[size:])
    return np.sort(np.concatenate(fit)), np.sort(np.concatenate(val))
