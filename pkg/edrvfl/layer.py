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
One hidden layer: random weight generation and the forward pass
``g(BN(input W + b))``.
"""

import numpy as np

from edrvfl.normalization import apply_activation, batch_norm_apply, \
    batch_norm_fit
from edrvfl.solvers import DimensionMismatch


class NetworkError(Exception):
    """ Any error relative to training or using a network.
    """
    pass


class StatsNotFitted(NetworkError):
    """ Inference was requested on a layer whose batch statistics were
    never fit.
    """
    pass


def layer_rng(seed, layer_index):
    """
    Counter-based generator keyed by ``(seed, layer_index)``: the stream of
    a layer never depends on how many numbers other layers consumed.
    """
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence([seed, layer_index])))


def init_layer_weights(d_in, n, seed, layer_index, include_bias=True):
    """
    Draws the fixed random weights of a hidden layer, i.i.d. uniform in
    ``[-1, 1]``.

    :param d_in: width of the layer input.
    :type d_in: int
    :param n: number of hidden neurons.
    :type n: int
    :param seed: network seed.
    :type seed: int
    :param layer_index: 1-based position of the layer.
    :type layer_index: int
    :param include_bias: whether to draw a bias row too.
    :type include_bias: bool
    :returns: tuple ``(W, bias_row)``, bias_row is None without bias.
    """
    if d_in < 1 or n < 1:
        raise ValueError('layer needs d_in >= 1 and n >= 1, got %d, %d' % (
            d_in, n))
    rng = layer_rng(seed, layer_index)
    W = rng.uniform(-1.0, 1.0, size=(d_in, n))
    bias_row = rng.uniform(-1.0, 1.0, size=(1, n)) if include_bias else None
    return W, bias_row


class LayerModel(object):
    """
    Everything needed to replay one trained hidden layer.

    :param W: input to hidden weights, ``d_in x n``.
    :param bias_row: optional ``1 x n`` bias.
    :param bn_stats: batch statistics frozen at training time.
    :param keep_mask: boolean vector, False for neurons pruned from the
        input of the next layer.
    :param beta: output weights of this layer classifier over
        ``[H | X]``.
    """
    def __init__(self, W, bias_row=None, bn_stats=None, keep_mask=None,
                 beta=None):
        self.W = np.asarray(W, dtype=np.float64)
        self.bias_row = None if bias_row is None else \
            np.asarray(bias_row, dtype=np.float64).reshape(1, -1)
        self.bn_stats = bn_stats
        if keep_mask is None:
            keep_mask = np.ones(self.W.shape[1], dtype=bool)
        self.keep_mask = np.asarray(keep_mask, dtype=bool)
        self.beta = None if beta is None else np.asarray(beta,
                                                         dtype=np.float64)
        if self.keep_mask.shape != (self.n,) or not self.keep_mask.any():
            raise NetworkError('keep mask must have %d entries, at least '
                               'one of them true' % self.n)

    @property
    def d_in(self):
        return self.W.shape[0]

    @property
    def n(self):
        return self.W.shape[1]

    @property
    def kept(self):
        return int(self.keep_mask.sum())

    def __repr__(self):
        return 'LayerModel(d_in=%d, n=%d, kept=%d)' % (
            self.d_in, self.n, self.kept)


def hidden_features(input_features, layer, params, fit_mode):
    """
    Full hidden output of a layer, pruned neurons included. The layer's own
    classifier always sees every neuron; only propagation honours the mask.

    In fit mode the batch statistics are fit on this input and stored in
    the layer, otherwise the stored ones are used.

    :raises: :py:exc:`edrvfl.solvers.DimensionMismatch`,
        :py:exc:`StatsNotFitted`
    """
    inputs = np.asarray(input_features, dtype=np.float64)
    if inputs.ndim != 2 or inputs.shape[1] != layer.d_in:
        raise DimensionMismatch(
            'layer expects %d input columns, got shape %s' % (
                layer.d_in, inputs.shape))
    Z = inputs.dot(layer.W)
    if layer.bias_row is not None:
        Z = Z + layer.bias_row
    if params.renormalize:
        if fit_mode:
            layer.bn_stats = batch_norm_fit(Z, params.epsilon)
        elif layer.bn_stats is None:
            raise StatsNotFitted('layer batch statistics are not fitted')
        Z = batch_norm_apply(Z, layer.bn_stats, params.bn_params)
    return apply_activation(Z, params.activation)


def forward_layer(input_features, layer, params, fit_mode):
    """
    Hidden output of a layer as propagated to the next one: columns of
    pruned neurons are dropped.
    """
    return hidden_features(input_features, layer, params, fit_mode)[
        :, layer.keep_mask]
