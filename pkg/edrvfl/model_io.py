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

import json
import logging
import os
import tempfile

import numpy as np

from edrvfl.dataset import NormStats
from edrvfl.hyperparams import HyperParams, HyperParamsError
from edrvfl.layer import LayerModel, NetworkError
from edrvfl.network import EnsembleModel
from edrvfl.normalization import BatchNormStats

logger = logging.getLogger(__name__)

FORMAT_VERSION = '1'


class ModelFileError(Exception):
    pass


class ModelIoError(ModelFileError):
    pass


class FormatVersionMismatch(ModelFileError):
    pass


def _matrix(values):
    return None if values is None else np.asarray(values).tolist()


def marshall_layer(layer):
    """
    Adapter for serializing a layer into plain JSON types.

    :param layer: LayerModel to be serialized.
    """
    return {
        'W': _matrix(layer.W),
        'bias_row': _matrix(layer.bias_row),
        'bn_stats': None if layer.bn_stats is None else
        layer.bn_stats.to_dict(),
        'keep_mask': layer.keep_mask.tolist(),
        'beta': _matrix(layer.beta),
    }


def unmarshall_layer(document):
    """
    Creates a LayerModel from its JSON form.

    :param document: dict as produced by :func:`marshall_layer`.
    """
    bn_stats = document.get('bn_stats')
    return LayerModel(
        document['W'],
        document.get('bias_row'),
        None if bn_stats is None else BatchNormStats.from_dict(bn_stats),
        document['keep_mask'],
        document['beta'])


def marshall(model):
    return {
        'format_version': FORMAT_VERSION,
        'hyperparams': dict(model.hyperparams),
        'norm_stats': model.norm_stats.to_dict(),
        'label_names': model.label_names,
        'k': model.k,
        'layers': [marshall_layer(layer) for layer in model.layers],
    }


def unmarshall(document):
    """
    Creates an EnsembleModel from a parsed model document.

    :raises: :py:exc:`FormatVersionMismatch`, :py:exc:`ModelIoError`
    """
    if not isinstance(document, dict):
        raise ModelIoError('Model document must be a JSON object')
    version = document.get('format_version')
    if version != FORMAT_VERSION:
        raise FormatVersionMismatch(
            'Unsupported model format version %r, expected %r' % (
                version, FORMAT_VERSION))
    try:
        label_names = document['label_names']
        model = EnsembleModel(
            [unmarshall_layer(layer) for layer in document['layers']],
            HyperParams(document['hyperparams']),
            NormStats.from_dict(document['norm_stats']),
            label_names,
            document.get('k', len(label_names)))
    except (KeyError, TypeError, ValueError, HyperParamsError,
            NetworkError) as e:
        raise ModelIoError('Malformed model document: %s' % e)
    if not model.layers:
        raise ModelIoError('Model document has no layers')
    return model


def save_model(model, path):
    """
    Writes the model as JSON. The file is written to a temporary sibling
    and renamed, so an existing model is never left half written.

    :raises: :py:exc:`ModelIoError`
    """
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, temporary = tempfile.mkstemp(prefix='.model-', suffix='.json',
                                         dir=directory)
    except OSError as e:
        raise ModelIoError('Cannot write model to %s: %s' % (path, e))
    try:
        with os.fdopen(fd, 'w') as out:
            json.dump(marshall(model), out)
        os.replace(temporary, path)
    except (OSError, TypeError, ValueError) as e:
        if os.path.exists(temporary):
            os.unlink(temporary)
        raise ModelIoError('Cannot write model to %s: %s' % (path, e))
    logger.info('Model with %d layers written to %s', model.depth, path)


def load_model(path):
    """
    Reads a model written by :func:`save_model`.

    :rtype: :py:class:`edrvfl.network.EnsembleModel`
    :raises: :py:exc:`ModelIoError`, :py:exc:`FormatVersionMismatch`
    """
    try:
        with open(path) as fd:
            document = json.load(fd)
    except (OSError, ValueError) as e:
        raise ModelIoError('Cannot read model %s: %s' % (path, e))
    return unmarshall(document)
