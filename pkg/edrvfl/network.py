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
Ensemble deep random vector functional link networks.

Every hidden layer is an independent classifier over ``[H | X]``, its
hidden features next to the normalized input. Optional sample weighting
(from the second layer on) and neuron pruning (propagation only) turn the
plain network into the weighted, pruned or weighted pruned variants; all of
them run through :func:`train`.
"""

import logging

import numpy as np

from edrvfl.dataset import zscore_apply
from edrvfl.hyperparams import MAJORITY_VOTE, MEAN_SCORE
from edrvfl.layer import LayerModel, NetworkError, StatsNotFitted, \
    hidden_features, init_layer_weights
from edrvfl.pruning import neuron_importance, prune_mask
from edrvfl.solvers import DimensionMismatch, solve_output_weights
from edrvfl.weighting import update_sample_weights

logger = logging.getLogger(__name__)

__all__ = ['NetworkError', 'StatsNotFitted', 'ClassAbsent',
           'DepthOutOfRange', 'EnsembleModel', 'LayerOutputs', 'train',
           'predict', 'predict_prefix', 'aggregate', 'depth_profile']


class ClassAbsent(NetworkError):
    """ The training targets miss at least one class.
    """
    pass


class DepthOutOfRange(NetworkError):
    pass


class LayerOutputs(object):
    """
    Raw scores of every layer classifier on a set of samples.

    :param scores: list of ``m x k`` score matrices, one per layer.
    :param sample_weights: weights each layer was solved with, None for
        unweighted solves. Only filled in by :func:`train`.
    """
    def __init__(self, scores, sample_weights=None):
        self.scores = list(scores)
        self.sample_weights = sample_weights

    @property
    def labels(self):
        return [np.argmax(score, axis=1) for score in self.scores]

    def __len__(self):
        return len(self.scores)

    def __repr__(self):
        return 'LayerOutputs(layers=%d)' % len(self.scores)


class EnsembleModel(object):
    """
    A trained network: its layers, the hyper-parameters it was trained with
    and the input normalization.
    """
    def __init__(self, layers, hyperparams, norm_stats, label_names, k):
        self.layers = list(layers)
        self.hyperparams = hyperparams
        self.norm_stats = norm_stats
        self.label_names = list(label_names)
        self.k = int(k)

    @property
    def d(self):
        return self.norm_stats.width

    @property
    def depth(self):
        return len(self.layers)

    def __repr__(self):
        return 'EnsembleModel(depth=%d, d=%d, k=%d)' % (
            self.depth, self.d, self.k)


def _design_matrix(H, X):
    return np.hstack([H, X])


def train(dataset, hp):
    """
    Trains every layer of the network in turn.

    For each layer: draw its random weights, compute its hidden features
    fitting batch statistics, solve its output weights over ``[H | X]``
    (weighted from the second layer on when ``omega_r < 1``), update the
    sample weights from its correct and wrong predictions and, when pruning
    is on, mask its least important neurons out of the next layer input.

    :param dataset: normalized training data.
    :type dataset: :py:class:`edrvfl.dataset.Dataset`
    :param hp: hyper-parameters.
    :type hp: :py:class:`edrvfl.hyperparams.HyperParams`
    :returns: tuple ``(EnsembleModel, LayerOutputs)`` with the training
        scores.
    :raises: :py:exc:`ClassAbsent`, :py:exc:`edrvfl.solvers.SolverError`
    """
    X, y = dataset.X, dataset.y
    missing = sorted(set(range(dataset.k)) - set(np.unique(y).tolist()))
    if missing:
        raise ClassAbsent('Training data has no samples of class(es) %s' %
                          ', '.join(str(dataset.label_names[c])
                                    for c in missing))
    Y = dataset.Y
    inputs = X
    weights = None
    layers, scores, used_weights = [], [], []
    for index in range(1, hp.l_max + 1):
        W, bias_row = init_layer_weights(inputs.shape[1], hp.n, hp.seed,
                                         index, hp.include_bias)
        layer = LayerModel(W, bias_row)
        H = hidden_features(inputs, layer, hp, fit_mode=True)
        D = _design_matrix(H, X)
        solve_weights = weights if index >= 2 and hp.weighting else None
        layer.beta = solve_output_weights(D, Y, hp.lambda_, solve_weights,
                                          hp.solver)
        score = D.dot(layer.beta)
        correct = np.argmax(score, axis=1) == y
        logger.debug('Layer %d: training accuracy %.4f', index,
                     correct.mean())
        if hp.weighting:
            weights = update_sample_weights(correct, hp.omega_r)
        if hp.pruning:
            layer.keep_mask = prune_mask(
                neuron_importance(layer.beta, hp.n), hp.p)
            logger.debug('Layer %d: %d of %d neurons propagate', index,
                         layer.kept, hp.n)
        layers.append(layer)
        scores.append(score)
        used_weights.append(solve_weights)
        inputs = _design_matrix(H[:, layer.keep_mask], X)
    model = EnsembleModel(layers, hp, dataset.norm_stats,
                          dataset.label_names, dataset.k)
    return model, LayerOutputs(scores, used_weights)


def _prepare_features(model, X_new):
    features = np.asarray(X_new, dtype=np.float64)
    if features.size == 0:
        features = features.reshape(0, model.d)
    if features.ndim != 2 or features.shape[1] != model.d:
        raise DimensionMismatch('model expects %d features, got shape %s' % (
            model.d, features.shape))
    return zscore_apply(features, model.norm_stats)


def layer_outputs(model, X, depth=None):
    """
    Scores of the first ``depth`` layers on already normalized input.
    Deeper layers are never evaluated.
    """
    depth = model.depth if depth is None else depth
    hp = model.hyperparams
    inputs = X
    scores = []
    for layer in model.layers[:depth]:
        H = hidden_features(inputs, layer, hp, fit_mode=False)
        scores.append(_design_matrix(H, X).dot(layer.beta))
        inputs = _design_matrix(H[:, layer.keep_mask], X)
    return LayerOutputs(scores)


def aggregate(scores, mode=MEAN_SCORE):
    """
    Combines the scores of several layers into one label per sample.

    ``mean_score`` takes the argmax of the mean score. ``majority_vote``
    takes the most voted layer label, ties broken by the mean score and then
    by the lower class index.

    :param scores: list of ``m x k`` score matrices.
    :param mode: ``'mean_score'`` or ``'majority_vote'``.
    :returns: integer labels.
    """
    if not scores:
        raise NetworkError('Nothing to aggregate')
    stacked = np.stack([np.asarray(s, dtype=np.float64) for s in scores])
    mean = stacked.mean(axis=0)
    if mode == MEAN_SCORE:
        return np.argmax(mean, axis=1)
    if mode == MAJORITY_VOTE:
        m, k = mean.shape
        counts = np.zeros((m, k), dtype=np.int64)
        rows = np.arange(m)
        for votes in np.argmax(stacked, axis=2):
            counts[rows, votes] += 1
        top = counts == counts.max(axis=1, keepdims=True)
        return np.argmax(np.where(top, mean, -np.inf), axis=1)
    raise NetworkError('Unknown aggregation %r' % mode)


def predict(model, X_new):
    """
    Predicts raw (not yet normalized) samples with every layer.

    :returns: tuple ``(labels, LayerOutputs)``.
    :raises: :py:exc:`edrvfl.solvers.DimensionMismatch`
    """
    outputs = layer_outputs(model, _prepare_features(model, X_new))
    return aggregate(outputs.scores, model.hyperparams.aggregation), outputs


def predict_prefix(model, X_new, depth):
    """
    Predicts using only the first ``depth`` layers of the model, as a
    network trained with ``l_max = depth`` would.

    :raises: :py:exc:`DepthOutOfRange`
    """
    if not 1 <= depth <= model.depth:
        raise DepthOutOfRange('depth must be within [1, %d], got %r' % (
            model.depth, depth))
    outputs = layer_outputs(model, _prepare_features(model, X_new), depth)
    return aggregate(outputs.scores, model.hyperparams.aggregation)


def depth_profile(model, X_new, y):
    """
    Accuracy of the ensemble of the first 1, 2, ... layers, evaluating
    every layer only once.

    :returns: list with one accuracy per depth.
    """
    y = np.asarray(y)
    outputs = layer_outputs(model, _prepare_features(model, X_new))
    mode = model.hyperparams.aggregation
    return [float(np.mean(aggregate(outputs.scores[:depth], mode) == y))
            for depth in range(1, model.depth + 1)]
