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
Hyper-parameter grids searched by cross-validation.
"""

import itertools
import json
import logging
import math
import numbers

from edrvfl.hyperparams import HyperParams

logger = logging.getLogger(__name__)

GRID_FORMAT_VERSION = '1'

# Search order, which is also the tie-break order between grid points.
PARAMETERS = ('lambda', 'n', 'l_max', 'gamma', 'alpha', 'omega_r', 'p')

LAMBDA_EXPONENT_RANGE = (-12, 12)


class GridError(ValueError):
    pass


def _in_closed(low, high):
    return lambda value: low <= value <= high


RANGES = {
    'lambda': (_in_closed(2.0 ** LAMBDA_EXPONENT_RANGE[0],
                          2.0 ** LAMBDA_EXPONENT_RANGE[1]),
               '[2^-12, 2^12]'),
    'n': (_in_closed(20, 1000), '[20, 1000]'),
    'l_max': (_in_closed(1, 10), '[1, 10]'),
    'gamma': (_in_closed(0.5, 2.0), '[0.5, 2]'),
    'alpha': (_in_closed(-2.0, 2.0), '[-2, 2]'),
    'omega_r': (lambda value: 0 < value <= 1, '(0, 1]'),
    'p': (lambda value: 0 <= value < 1, '[0, 1)'),
}

INTEGER_PARAMETERS = ('n', 'l_max')


def _check_candidates(name, values):
    if isinstance(values, (str, bytes)) or not hasattr(values, '__iter__'):
        values = [values]
    values = list(values)
    if not values:
        raise GridError('grid has no candidates for %s' % name)
    accepted, description = RANGES[name]
    checked = set()
    for value in values:
        if isinstance(value, bool) or not isinstance(value, numbers.Real) \
                or not math.isfinite(value):
            raise GridError('%s candidate %r is not a number' % (name, value))
        if name in INTEGER_PARAMETERS:
            if value != int(value):
                raise GridError('%s candidate %r is not an integer' % (
                    name, value))
            value = int(value)
        else:
            value = float(value)
        if not accepted(value):
            raise GridError('%s candidate %r is outside %s' % (
                name, value, description))
        checked.add(value)
    return sorted(checked)


class GridSpec(object):
    """
    Candidate values of every tuned hyper-parameter. Parameters left out
    take the single default value of
    :py:attr:`edrvfl.hyperparams.HyperParams.DEFAULTS`.

    Candidates are de-duplicated and sorted ascending; points are produced
    in :py:data:`PARAMETERS` order, so the first best point on validation is
    always the same one.

    :param candidates: dict from parameter name to candidate list.
    :raises: :py:exc:`GridError`
    """
    def __init__(self, candidates=None):
        candidates = dict(candidates or {})
        unknown = sorted(set(candidates) - set(PARAMETERS))
        if unknown:
            raise GridError('Unknown grid parameter(s): %s' %
                            ', '.join(unknown))
        self.candidates = {}
        for name in PARAMETERS:
            values = candidates.get(name, [HyperParams.DEFAULTS[name]])
            self.candidates[name] = _check_candidates(name, values)

    def __getitem__(self, name):
        return list(self.candidates[name])

    def __len__(self):
        size = 1
        for name in PARAMETERS:
            size *= len(self.candidates[name])
        return size

    def __eq__(self, other):
        return isinstance(other, GridSpec) \
            and self.candidates == other.candidates

    def __ne__(self, other):
        return not self == other

    def restrict(self, **candidates):
        """
        Returns a copy with the candidate lists of some parameters replaced.
        """
        values = dict(self.candidates)
        values.update(candidates)
        return GridSpec(values)

    def points(self, base=None):
        """
        Yields one :py:class:`edrvfl.hyperparams.HyperParams` per grid point,
        taking non-tuned values (activation, seed...) from ``base``.
        """
        base = base or HyperParams()
        for combination in itertools.product(
                *[self.candidates[name] for name in PARAMETERS]):
            yield base.replace(**dict(zip(PARAMETERS, combination)))

    def to_dict(self):
        document = {'format_version': GRID_FORMAT_VERSION}
        document.update((name, self[name]) for name in PARAMETERS)
        return document

    def __repr__(self):
        return 'GridSpec(%s)' % ', '.join(
            '%s=%r' % (name, self.candidates[name]) for name in PARAMETERS)


def coarse_grid():
    """
    Default desk-scale grid: 5 values of lambda, 3 of n, 3 of omega_r and
    3 of p, 135 points in total.
    """
    return GridSpec({
        'lambda': [2.0 ** x for x in (-6, -3, 0, 3, 6)],
        'n': [256, 512, 1000],
        'l_max': [10],
        'gamma': [1.0],
        'alpha': [0.0],
        'omega_r': [0.5, 0.75, 1.0],
        'p': [0.0, 0.25, 0.5],
    })


def singleton_grid(hp):
    """
    Grid with the tuned values of ``hp`` as its only point.
    """
    return GridSpec(dict((name, [hp[name]]) for name in PARAMETERS))


def grid_from_dict(document):
    """
    Builds a grid from its JSON form. ``lambda_exponents`` may be given
    instead of ``lambda``, as the powers of two to try.

    :raises: :py:exc:`GridError`
    """
    if not isinstance(document, dict):
        raise GridError('grid must be a JSON object')
    document = dict(document)
    version = document.pop('format_version', GRID_FORMAT_VERSION)
    if str(version) != GRID_FORMAT_VERSION:
        raise GridError('Unsupported grid format version %r' % version)
    exponents = document.pop('lambda_exponents', None)
    if exponents is not None:
        if 'lambda' in document:
            raise GridError('give either lambda or lambda_exponents')
        low, high = LAMBDA_EXPONENT_RANGE
        if isinstance(exponents, numbers.Real):
            exponents = [exponents]
        for exponent in exponents:
            if not isinstance(exponent, numbers.Real) \
                    or not low <= exponent <= high:
                raise GridError('lambda exponent %r is outside [%d, %d]' % (
                    exponent, low, high))
        document['lambda'] = [2.0 ** x for x in exponents]
    return GridSpec(document)


def load_grid(path):
    """
    Reads a JSON grid file.

    :raises: :py:exc:`GridError`
    """
    try:
        with open(path) as fd:
            document = json.load(fd)
    except (OSError, ValueError) as e:
        raise GridError('Cannot read grid %s: %s' % (path, e))
    grid = grid_from_dict(document)
    logger.info('Grid %s: %d points', path, len(grid))
    return grid
