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
Hidden layer non-linearities and the batch normalization used to
re-normalize pre-activation values.
"""

import numpy as np
from scipy.special import expit

from edrvfl.solvers import DimensionMismatch, EmptyMatrix

DEFAULT_EPSILON = 1e-5


def _relu(H):
    return np.maximum(H, 0.0)


ACTIVATIONS = {
    'relu': _relu,
    'sigmoid': expit,
    'tanh': np.tanh,
}


def apply_activation(H, kind='relu'):
    """
    Applies the activation function elementwise.

    :param H: real matrix.
    :param kind: one of ``relu``, ``sigmoid``, ``tanh``.
    :type kind: string
    :returns: matrix with the same shape as H.
    """
    try:
        function = ACTIVATIONS[kind]
    except KeyError:
        raise ValueError('Unknown activation %r, expected one of %s' % (
            kind, ', '.join(sorted(ACTIVATIONS))))
    return function(np.asarray(H, dtype=np.float64))


class BatchNormStats(object):
    """
    Per-column statistics of a batch, frozen after fitting so the same
    transformation can be applied at prediction time.

    :param mu: per-column mean.
    :param sigma2: per-column population variance.
    :param epsilon: value added to the variance before the square root.
    :type epsilon: float
    """
    def __init__(self, mu, sigma2, epsilon=DEFAULT_EPSILON):
        self.mu = np.asarray(mu, dtype=np.float64).reshape(-1)
        self.sigma2 = np.asarray(sigma2, dtype=np.float64).reshape(-1)
        self.epsilon = float(epsilon)
        if self.mu.shape != self.sigma2.shape:
            raise DimensionMismatch(
                'mean has %d columns but variance has %d' % (
                    self.mu.shape[0], self.sigma2.shape[0]))
        if np.any(self.sigma2 < 0):
            raise ValueError('variance must be non-negative')
        if not self.epsilon >= 0:
            raise ValueError('epsilon must be non-negative, got %r' %
                             epsilon)

    @property
    def width(self):
        return self.mu.shape[0]

    def to_dict(self):
        return {
            'mu': self.mu.tolist(),
            'sigma2': self.sigma2.tolist(),
            'epsilon': self.epsilon,
        }

    @classmethod
    def from_dict(cls, values):
        return cls(values['mu'], values['sigma2'], values['epsilon'])

    def __eq__(self, other):
        return isinstance(other, BatchNormStats) \
            and np.array_equal(self.mu, other.mu) \
            and np.array_equal(self.sigma2, other.sigma2) \
            and self.epsilon == other.epsilon

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'BatchNormStats(width=%d, epsilon=%r)' % (
            self.width, self.epsilon)


class BatchNormParams(object):
    """
    Fixed scale and shift applied after normalizing. They are tuned as
    hyperparameters instead of being learned.
    """
    def __init__(self, gamma=1.0, alpha=0.0):
        self.gamma = float(gamma)
        self.alpha = float(alpha)
        if not (np.isfinite(self.gamma) and np.isfinite(self.alpha)):
            raise ValueError('gamma and alpha must be finite')

    def __repr__(self):
        return 'BatchNormParams(gamma=%r, alpha=%r)' % (self.gamma, self.alpha)


def batch_norm_fit(H, epsilon=DEFAULT_EPSILON):
    """
    Computes per-column mean and population variance (divisor m).

    :param H: matrix with at least one row.
    :param epsilon: stabilizer stored along the statistics.
    :type epsilon: float
    :rtype: :py:class:`BatchNormStats`
    :raises: :py:exc:`edrvfl.solvers.EmptyMatrix`
    """
    H = np.asarray(H, dtype=np.float64)
    if H.ndim != 2 or H.shape[0] == 0:
        raise EmptyMatrix('cannot fit batch statistics on shape %s' %
                          (H.shape,))
    mu = H.mean(axis=0)
    sigma2 = np.mean((H - mu) ** 2, axis=0)
    return BatchNormStats(mu, sigma2, epsilon)


def batch_norm_normalize(H, stats):
    """
    Centers and scales H with frozen statistics, before gamma and alpha.
    Entries whose denominator is zero are mapped to 0.
    """
    H = np.asarray(H, dtype=np.float64)
    if H.ndim != 2 or H.shape[1] != stats.width:
        raise DimensionMismatch(
            'matrix of shape %s does not match statistics of width %d' % (
                H.shape, stats.width))
    denominator = np.sqrt(stats.sigma2 + stats.epsilon)
    centered = H - stats.mu
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.where(denominator > 0, centered / denominator, 0.0)


def batch_norm_apply(H, stats, params):
    """
    Re-normalizes H: ``gamma * (x - mu) / sqrt(sigma2 + epsilon) + alpha``.

    :param H: matrix with ``stats.width`` columns.
    :param stats: frozen statistics.
    :type stats: :py:class:`BatchNormStats`
    :param params: scale and shift.
    :type params: :py:class:`BatchNormParams`
    :raises: :py:exc:`edrvfl.solvers.DimensionMismatch`
    """
    return params.gamma * batch_norm_normalize(H, stats) + params.alpha
