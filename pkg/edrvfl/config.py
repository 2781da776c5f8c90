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
Run configuration: a JSON file whose values command-line flags override.
"""

import json
import logging
import numbers
import os

logger = logging.getLogger(__name__)

CONFIG_FORMAT_VERSION = '1'


class ConfigError(Exception):
    pass


def _integer(name, value, minimum, optional=False):
    if value is None and optional:
        return None
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) \
            or value < minimum:
        raise ConfigError('%s must be an integer >= %d, got %r' % (
            name, minimum, value))
    return int(value)


class RunConfig(object):
    """
    Everything a command needs besides its positional arguments.

    ``hyperparams`` holds one network configuration (train, sweep) and
    ``grid`` the candidates searched by the benchmark: an object, the path
    of a grid file or None for the coarse default grid.
    """

    DEFAULTS = {
        'dataset': None,
        'label_column': -1,
        'has_header': True,
        'variant': 'edrvfl',
        'variants': None,
        'hyperparams': {},
        'grid': None,
        'folds': 4,
        'val_fraction': 0.25,
        'repetitions': 10,
        'seed': None,
        'fold_seed': None,
        'jobs': 1,
        'out': None,
    }

    def __init__(self, values=None):
        merged = dict(self.DEFAULTS)
        merged.update(values or {})
        unknown = sorted(set(merged) - set(self.DEFAULTS))
        if unknown:
            raise ConfigError('Unknown configuration key(s): %s' %
                              ', '.join(unknown))
        self.values = self._validate(merged)

    @staticmethod
    def _validate(values):
        if values['variants'] is None:
            values['variants'] = [values['variant']]
        if isinstance(values['variants'], str):
            values['variants'] = [values['variants']]
        if not values['variants'] or not all(
                isinstance(v, str) for v in values['variants']):
            raise ConfigError('variants must be a non-empty list of names')
        if not isinstance(values['hyperparams'], dict):
            raise ConfigError('hyperparams must be an object')
        if values['grid'] is not None and \
                not isinstance(values['grid'], (dict, str)):
            raise ConfigError('grid must be an object or a file path')
        if not isinstance(values['has_header'], bool):
            raise ConfigError('has_header must be true or false')
        values['folds'] = _integer('folds', values['folds'], 2)
        values['repetitions'] = _integer('repetitions',
                                         values['repetitions'], 1)
        values['seed'] = _integer('seed', values['seed'], 0, optional=True)
        values['fold_seed'] = _integer('fold_seed', values['fold_seed'], 0,
                                       optional=True)
        values['jobs'] = _integer('jobs', values['jobs'], -1)
        if values['jobs'] == 0:
            raise ConfigError('jobs must not be 0')
        fraction = values['val_fraction']
        if isinstance(fraction, bool) or \
                not isinstance(fraction, numbers.Real) or \
                not 0 < fraction < 1:
            raise ConfigError('val_fraction must be in (0, 1), got %r' %
                              fraction)
        return values

    def __getattr__(self, name):
        try:
            return self.__dict__['values'][name]
        except KeyError:
            raise AttributeError(name)

    def override(self, **flags):
        """
        Returns a new configuration with the flags that are not None
        replacing the file values.
        """
        values = dict(self.values)
        values.update((k, v) for k, v in flags.items() if v is not None)
        if flags.get('variant') is not None and flags.get('variants') is None:
            values['variants'] = None
        return RunConfig(values)

    def __repr__(self):
        return 'RunConfig(%r)' % self.values


def load_run_config(path):
    """
    Reads a JSON configuration file. Relative ``dataset`` and ``grid`` paths
    are resolved from the directory of the file.

    :raises: :py:exc:`ConfigError`
    """
    try:
        with open(path) as fd:
            document = json.load(fd)
    except (OSError, ValueError) as e:
        raise ConfigError('Cannot read configuration %s: %s' % (path, e))
    if not isinstance(document, dict):
        raise ConfigError('Configuration %s must be a JSON object' % path)
    version = document.pop('format_version', None)
    if version != CONFIG_FORMAT_VERSION:
        raise ConfigError('format_version must be "%s" in %s, got %r' % (
            CONFIG_FORMAT_VERSION, path, version))
    base = os.path.dirname(os.path.abspath(path))
    for key in ('dataset', 'grid'):
        if isinstance(document.get(key), str):
            document[key] = os.path.join(base, document[key])
    logger.debug('Configuration read from %s', path)
    return RunConfig(document)
