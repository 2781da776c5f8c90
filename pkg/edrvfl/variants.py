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
Named members of the network family. A variant only decides which of the
two mechanisms, sample weighting and neuron pruning, may be active and
whether hidden features are re-normalized; the training code is shared.
"""

import logging

from edrvfl.config import ConfigError
from edrvfl.utils.introspection.dynamic_class_loading import \
    get_class_from_name

logger = logging.getLogger(__name__)


class UnknownVariant(ConfigError):
    pass


class Variant(object):
    """
    Base variant: both mechanisms allowed, re-normalization on.
    Subclasses switch the class attributes.
    """
    NAME = 'wpedrvfl'
    WEIGHTING = True
    PRUNING = True
    RENORMALIZE = True

    @property
    def name(self):
        return self.NAME

    def check(self, hp):
        """
        Verifies that ``hp`` is a configuration of this variant.

        :raises: :py:exc:`edrvfl.config.ConfigError` naming the offending
            field.
        """
        if hp.weighting and not self.WEIGHTING:
            raise ConfigError('omega_r must be 1 for variant %s, got %r' % (
                self.name, hp.omega_r))
        if hp.pruning and not self.PRUNING:
            raise ConfigError('p must be 0 for variant %s, got %r' % (
                self.name, hp.p))
        if hp.renormalize != self.RENORMALIZE:
            raise ConfigError('renormalize must be %s for variant %s' % (
                str(self.RENORMALIZE).lower(), self.name))
        return hp

    def constrain(self, hp):
        """
        Returns ``hp`` with the disabled mechanisms switched off.
        """
        changes = {'renormalize': self.RENORMALIZE}
        if not self.WEIGHTING:
            changes['omega_r'] = 1.0
        if not self.PRUNING:
            changes['p'] = 0.0
        return hp.replace(**changes)

    def restrict_grid(self, grid):
        """
        Returns a grid whose weighting and pruning candidates are limited to
        the disabled values where this variant requires it.
        """
        lists = {}
        if not self.WEIGHTING:
            lists['omega_r'] = [1.0]
        if not self.PRUNING:
            lists['p'] = [0.0]
        return grid.restrict(**lists) if lists else grid

    def __eq__(self, other):
        return type(self) is type(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return '%s()' % self.__class__.__name__


class WPedRVFL(Variant):
    pass


class EdRVFL(Variant):
    NAME = 'edrvfl'
    WEIGHTING = False
    PRUNING = False


class EdRVFLNoRenormalization(EdRVFL):
    NAME = 'edrvfl_o'
    RENORMALIZE = False


class WedRVFL(Variant):
    NAME = 'wedrvfl'
    PRUNING = False


class PedRVFL(Variant):
    NAME = 'pedrvfl'
    WEIGHTING = False


VARIANTS = dict((cls.NAME, cls) for cls in (
    EdRVFL, EdRVFLNoRenormalization, WedRVFL, PedRVFL, WPedRVFL))


def variant_factory(name):
    """ Factory to create Variant objects.

    :param name: registered variant name (``edrvfl``, ``edrvfl_o``,
        ``wedrvfl``, ``pedrvfl``, ``wpedrvfl``) or the dotted path of a
        :py:class:`Variant` subclass.
    :type name: string
    :raises: :py:exc:`UnknownVariant`
    """
    if isinstance(name, Variant):
        return name
    if name in VARIANTS:
        return VARIANTS[name]()
    try:
        clazz = get_class_from_name(name)
    except (ImportError, AttributeError, ValueError) as e:
        logger.debug('Cannot load variant %s: %s', name, e)
        clazz = None
    if not (isinstance(clazz, type) and issubclass(clazz, Variant)):
        raise UnknownVariant('variant must be one of %s, got %r' % (
            ', '.join(sorted(VARIANTS)), name))
    return clazz()
