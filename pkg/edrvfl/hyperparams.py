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
import numbers

from edrvfl.normalization import ACTIVATIONS, DEFAULT_EPSILON, BatchNormParams
from edrvfl.solvers import RIDGE, SOLVER_METHODS

MEAN_SCORE = 'mean_score'
MAJORITY_VOTE = 'majority_vote'
AGGREGATIONS = (MEAN_SCORE, MAJORITY_VOTE)


class HyperParamsError(ValueError):
    """ Raised when a hyperparameter is missing, unknown or out of range.
    """
    pass


def _as_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, numbers.Real) \
            or int(value) != value:
        raise HyperParamsError('%s must be an integer, got %r' % (name, value))
    value = int(value)
    if value < minimum:
        raise HyperParamsError('%s must be >= %d, got %d' % (
            name, minimum, value))
    return value


def _as_float(name, value):
    if isinstance(value, bool) or not isinstance(value, numbers.Real) \
            or not math.isfinite(value):
        raise HyperParamsError('%s must be a finite number, got %r' % (
            name, value))
    return float(value)


def _as_choice(name, value, choices):
    if value not in choices:
        raise HyperParamsError('%s must be one of %s, got %r' % (
            name, ', '.join(choices), value))
    return value


def _as_flag(name, value):
    if not isinstance(value, bool):
        raise HyperParamsError('%s must be true or false, got %r' % (
            name, value))
    return value


class HyperParams(dict):
    """
    Validated hyperparameters of one network. Missing keys take the values
    in :py:attr:`DEFAULTS`; instances are read-only, use :py:meth:`replace`
    to derive new ones.

    ``omega_r = 1`` disables sample weighting and ``p = 0`` disables pruning,
    so one configuration type covers every variant of the family.
    """

    DEFAULTS = {
        'lambda': 1.0,
        'n': 100,
        'l_max': 10,
        'gamma': 1.0,
        'alpha': 0.0,
        'omega_r': 1.0,
        'p': 0.0,
        'activation': 'relu',
        'aggregation': MEAN_SCORE,
        'epsilon': DEFAULT_EPSILON,
        'include_bias': True,
        'seed': 0,
        'renormalize': True,
        'solver': RIDGE,
    }

    def __init__(self, *args, **kwargs):
        values = dict(self.DEFAULTS)
        values.update(dict(*args, **kwargs))
        unknown = sorted(set(values) - set(self.DEFAULTS))
        if unknown:
            raise HyperParamsError('Unknown hyperparameter(s): %s' %
                                   ', '.join(unknown))
        super(HyperParams, self).__init__(self._validate(values))

    @staticmethod
    def _validate(values):
        checked = {
            'lambda': _as_float('lambda', values['lambda']),
            'n': _as_int('n', values['n'], 1),
            'l_max': _as_int('l_max', values['l_max'], 1),
            'gamma': _as_float('gamma', values['gamma']),
            'alpha': _as_float('alpha', values['alpha']),
            'omega_r': _as_float('omega_r', values['omega_r']),
            'p': _as_float('p', values['p']),
            'activation': _as_choice('activation', values['activation'],
                                     sorted(ACTIVATIONS)),
            'aggregation': _as_choice('aggregation', values['aggregation'],
                                      AGGREGATIONS),
            'epsilon': _as_float('epsilon', values['epsilon']),
            'include_bias': _as_flag('include_bias', values['include_bias']),
            'seed': _as_int('seed', values['seed'], 0),
            'renormalize': _as_flag('renormalize', values['renormalize']),
            'solver': _as_choice('solver', values['solver'], SOLVER_METHODS),
        }
        if checked['lambda'] < 0:
            raise HyperParamsError('lambda must be >= 0')
        if not 0 < checked['omega_r'] <= 1:
            raise HyperParamsError('omega_r must be in (0, 1], got %r' %
                                   checked['omega_r'])
        if not 0 <= checked['p'] < 1:
            raise HyperParamsError('p must be in [0, 1), got %r' %
                                   checked['p'])
        if checked['epsilon'] <= 0:
            raise HyperParamsError('epsilon must be > 0')
        return checked

    def _read_only(self, *args, **kwargs):
        raise TypeError('HyperParams are read-only, use replace()')

    __setitem__ = __delitem__ = _read_only
    clear = pop = popitem = setdefault = update = _read_only

    def __reduce__(self):
        return (self.__class__, (dict(self),))

    def replace(self, **changes):
        """
        Returns a copy with some values changed, validated again.
        """
        values = dict(self)
        values.update(changes)
        return self.__class__(values)

    @property
    def lambda_(self):
        return self['lambda']

    @property
    def n(self):
        return self['n']

    @property
    def l_max(self):
        return self['l_max']

    @property
    def gamma(self):
        return self['gamma']

    @property
    def alpha(self):
        return self['alpha']

    @property
    def omega_r(self):
        return self['omega_r']

    @property
    def p(self):
        return self['p']

    @property
    def activation(self):
        return self['activation']

    @property
    def aggregation(self):
        return self['aggregation']

    @property
    def epsilon(self):
        return self['epsilon']

    @property
    def include_bias(self):
        return self['include_bias']

    @property
    def seed(self):
        return self['seed']

    @property
    def renormalize(self):
        return self['renormalize']

    @property
    def solver(self):
        return self['solver']

    @property
    def weighting(self):
        return self['omega_r'] < 1

    @property
    def pruning(self):
        return self['p'] > 0

    @property
    def bn_params(self):
        return BatchNormParams(self['gamma'], self['alpha'])

    def __repr__(self):
        return 'HyperParams(%s)' % ', '.join(
            '%s=%r' % (key, self[key]) for key in sorted(self))
