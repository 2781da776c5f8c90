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

import importlib
import logging

logger = logging.getLogger(__name__)


def get_class_from_name(clazz_name):
    """
    Returns a valid class, if it exists, from a module name + class name.

    :param clazz_name: dotted path such as ``package.module.Class``.
    :type clazz_name: string
    :returns: a valid class.
    :raises: ImportError, AttributeError, ValueError
    """
    logger.debug('Loading class: %s', clazz_name)
    if '.' not in clazz_name:
        raise ValueError('%r is not a dotted class path' % clazz_name)
    module_name, clazz_name = clazz_name.rsplit('.', 1)
    module = importlib.import_module(module_name)
    return getattr(module, clazz_name)
