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

import logging

import numpy as np

logger = logging.getLogger(__name__)

# Upper bound for the weight of wrongly predicted samples.
MAX_WRONG_WEIGHT = 1e6


def update_sample_weights(correct_flags, omega_r):
    """
    Computes the sample weights for the next layer from the correct and
    wrong predictions of the current one.

    Correct samples get ``omega_r`` and wrong ones
    ``omega_w = (m - n_r * omega_r) / n_w``, so that the weights still add
    up to ``m``. When every sample is correct all the weights are 1.

    :param correct_flags: boolean vector, True for correctly predicted
        samples.
    :param omega_r: weight of correct samples, in ``(0, 1]``.
    :type omega_r: float
    :returns: sample weights.
    :rtype: numpy.ndarray
    """
    if not 0 < omega_r <= 1:
        raise ValueError('omega_r must be in (0, 1], got %r' % omega_r)
    correct = np.asarray(correct_flags, dtype=bool)
    m = correct.shape[0]
    n_wrong = m - int(correct.sum())
    if n_wrong == 0:
        return np.ones(m)
    n_right = m - n_wrong
    omega_w = (m - n_right * omega_r) / n_wrong
    if omega_w > MAX_WRONG_WEIGHT:
        logger.warning('Weight of %d wrong samples clamped from %g to %g',
                       n_wrong, omega_w, MAX_WRONG_WEIGHT)
        omega_w = MAX_WRONG_WEIGHT
    logger.debug('Sample weights: %d right at %g, %d wrong at %g',
                 n_right, omega_r, n_wrong, omega_w)
    return np.where(correct, float(omega_r), omega_w)


def weights_conserved(w, tolerance=1e-9):
    """
    Checks that the weights add up to the number of samples within
    ``tolerance * m``.
    """
    m = len(w)
    return abs(float(np.sum(w)) - m) <= tolerance * max(m, 1)
