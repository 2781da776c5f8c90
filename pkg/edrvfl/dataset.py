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
Tabular data ingestion: CSV parsing, label encoding, z-score normalization
and the :py:class:`Dataset` handed to the network.
"""

import csv
import json
import logging
import os

import numpy as np

logger = logging.getLogger(__name__)


class DatasetError(Exception):
    """ Any error relative to reading or preparing data.
    """
    pass


class ParseError(DatasetError):
    """ A CSV file could not be parsed.

    :param row: 1-based line number in the file, if known.
    :param column: 0-based field index, if known.
    """
    def __init__(self, message, row=None, column=None):
        if row is not None:
            message = '%s (row %s, column %s)' % (message, row, column)
        super(ParseError, self).__init__(message)
        self.row = row
        self.column = column


class MissingLabelColumn(DatasetError):
    pass


class SingleClass(DatasetError):
    """ Classification needs at least two distinct labels.
    """
    pass


class ClassTooSmall(DatasetError):
    """ A class has too few members to be split as requested.
    """
    def __init__(self, label, message):
        super(ClassTooSmall, self).__init__(message)
        self.label = label


class ManifestError(DatasetError):
    pass


class RawTable(object):
    """
    Parsed CSV content: a real feature matrix plus the label of every row,
    kept as strings.
    """
    def __init__(self, features, labels, header, label_name):
        self.features = features
        self.labels = labels
        self.header = header
        self.label_name = label_name

    @property
    def n_rows(self):
        return self.features.shape[0]

    @property
    def n_features(self):
        return self.features.shape[1]

    def __repr__(self):
        return 'RawTable(rows=%d, features=%d, label=%r)' % (
            self.n_rows, self.n_features, self.label_name)


def _read_rows(path):
    try:
        with open(path, newline='') as fd:
            return [(number, [field.strip() for field in row])
                    for number, row in enumerate(csv.reader(fd), 1)
                    if row]
    except OSError as e:
        raise DatasetError('Cannot read %s: %s' % (path, e))
    except csv.Error as e:
        raise ParseError('Malformed CSV in %s: %s' % (path, e))


def _resolve_column(label_column, header, width):
    if isinstance(label_column, int) or \
            str(label_column).lstrip('-').isdigit():
        index = int(label_column)
        if not -width <= index < width:
            raise MissingLabelColumn(
                'Label column %d out of range for %d columns' % (index, width))
        return index % width
    if header is None:
        raise MissingLabelColumn(
            'Label column %r given by name but the file has no header' %
            label_column)
    try:
        return header.index(label_column)
    except ValueError:
        raise MissingLabelColumn('No column named %r in header %s' % (
            label_column, header))


def _parse_number(text, number, column):
    if not text:
        raise ParseError('Missing value', number, column)
    try:
        value = float(text)
    except ValueError:
        raise ParseError('Non-numeric value %r' % text, number, column)
    if not np.isfinite(value):
        raise ParseError('Non-finite value %r' % text, number, column)
    return value


def _parse_rows(rows, width, skip_column=None):
    features = []
    for number, row in rows:
        if len(row) != width:
            raise ParseError('Expected %d fields, found %d' % (
                width, len(row)), number, min(len(row), width))
        features.append([_parse_number(text, number, column)
                         for column, text in enumerate(row)
                         if column != skip_column])
    columns = width - (0 if skip_column is None else 1)
    return np.array(features, dtype=np.float64).reshape(len(rows), columns)


def load_csv(path, label_column, has_header=True):
    """
    Loads a comma separated file with numeric features and one label column.

    :param path: file to read.
    :type path: string
    :param label_column: label column name, or its index (negative indexes
        count from the end).
    :param has_header: whether the first line holds column names.
    :type has_header: bool
    :rtype: :py:class:`RawTable`
    :raises: :py:exc:`ParseError`, :py:exc:`MissingLabelColumn`
    """
    rows = _read_rows(path)
    if not rows:
        raise ParseError('Empty file %s' % path)
    header = None
    if has_header:
        header = rows.pop(0)[1]
        if not rows:
            raise ParseError('No data rows in %s' % path)
    width = len(header) if header is not None else len(rows[0][1])
    index = _resolve_column(label_column, header, width)
    features = _parse_rows(rows, width, skip_column=index)
    labels = [row[index] for _, row in rows]
    if header is None:
        header = ['x%d' % column for column in range(width)]
    label_name = header[index]
    logger.debug('Loaded %d rows and %d features from %s',
                 features.shape[0], features.shape[1], path)
    return RawTable(features, labels,
                    [name for column, name in enumerate(header)
                     if column != index],
                    label_name)


def load_feature_csv(path, has_header=False, drop_column=None):
    """
    Loads a CSV file holding only features, as used for prediction. An empty
    file gives a matrix with no rows.

    :param drop_column: optional column (name or index) to ignore, e.g. the
        label column of a training file.
    :returns: feature matrix.
    :rtype: numpy.ndarray
    """
    rows = _read_rows(path)
    header = None
    if has_header and rows:
        header = rows.pop(0)[1]
    if not rows:
        return np.empty((0, 0))
    width = len(header) if header is not None else len(rows[0][1])
    skip = None
    if drop_column is not None:
        skip = _resolve_column(drop_column, header, width)
    return _parse_rows(rows, width, skip_column=skip)


def encode_labels(raw):
    """
    Maps labels to dense integers following the lexicographic order of the
    label strings.

    :param raw: table with the labels to encode, or any sequence of labels.
    :returns: tuple ``(y, k, label_names)``.
    :raises: :py:exc:`SingleClass`
    """
    labels = raw.labels if isinstance(raw, RawTable) else list(raw)
    labels = [str(label) for label in labels]
    label_names = sorted(set(labels))
    if len(label_names) < 2:
        raise SingleClass('Found %d distinct label(s), at least 2 needed' %
                          len(label_names))
    index = dict((name, code) for code, name in enumerate(label_names))
    y = np.array([index[label] for label in labels], dtype=np.int64)
    return y, len(label_names), label_names


def decode_labels(y, label_names):
    return [label_names[code] for code in np.asarray(y, dtype=np.int64)]


def one_hot(y, k):
    """
    Builds the target matrix, one row per sample with a single 1.0.
    """
    y = np.asarray(y, dtype=np.int64)
    Y = np.zeros((y.shape[0], k), dtype=np.float64)
    Y[np.arange(y.shape[0]), y] = 1.0
    return Y


class NormStats(object):
    """
    Per-feature mean and population standard deviation of the rows the
    normalization was fit on.
    """
    def __init__(self, mean, std):
        self.mean = np.asarray(mean, dtype=np.float64).reshape(-1)
        self.std = np.asarray(std, dtype=np.float64).reshape(-1)

    @property
    def width(self):
        return self.mean.shape[0]

    def to_dict(self):
        return {'mean': self.mean.tolist(), 'std': self.std.tolist()}

    @classmethod
    def from_dict(cls, values):
        return cls(values['mean'], values['std'])


def zscore_fit(X_train):
    X_train = np.asarray(X_train, dtype=np.float64)
    if X_train.ndim != 2 or X_train.shape[0] == 0:
        raise DatasetError('cannot fit normalization on shape %s' %
                           (X_train.shape,))
    std = X_train.std(axis=0)
    # rounding in the mean can leave a tiny std on constant columns
    std[np.ptp(X_train, axis=0) == 0] = 0.0
    return NormStats(X_train.mean(axis=0), std)


def zscore_apply(X, norm_stats):
    """
    Normalizes X with training statistics. Features with zero variance in
    the training rows are mapped to 0.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != norm_stats.width:
        raise DatasetError(
            'expected %d features, got shape %s' % (norm_stats.width, X.shape))
    constant = norm_stats.std == 0
    scale = np.where(constant, 1.0, norm_stats.std)
    normalized = (X - norm_stats.mean) / scale
    normalized[:, constant] = 0.0
    return normalized


class Dataset(object):
    """
    Encoded classification data ready for training.

    The raw feature matrix is kept so that any subset can be re-normalized
    with statistics of its own rows, see :py:meth:`subset`.

    :param features: raw feature matrix, samples by features.
    :param y: integer labels in ``[0, k)``.
    :param k: number of classes.
    :param label_names: original label of every class index.
    :param norm_stats: normalization to use; fit on ``features`` if None.
    :param name: dataset name for reports.
    """
    def __init__(self, features, y, k, label_names, norm_stats=None,
                 name=None):
        self.features = np.asarray(features, dtype=np.float64)
        self.y = np.asarray(y, dtype=np.int64)
        self.k = int(k)
        self.label_names = list(label_names)
        self.name = name
        if self.features.shape[0] != self.y.shape[0]:
            raise DatasetError('%d feature rows but %d labels' % (
                self.features.shape[0], self.y.shape[0]))
        if self.y.size and (self.y.min() < 0 or self.y.max() >= self.k):
            raise DatasetError('labels must lie in [0, %d)' % self.k)
        self.norm_stats = norm_stats or zscore_fit(self.features)
        self.X = zscore_apply(self.features, self.norm_stats)

    @classmethod
    def from_table(cls, raw, name=None):
        y, k, label_names = encode_labels(raw)
        return cls(raw.features, y, k, label_names, name=name)

    @property
    def Y(self):
        return one_hot(self.y, self.k)

    @property
    def m(self):
        return self.features.shape[0]

    @property
    def d(self):
        return self.features.shape[1]

    def subset(self, indices):
        """
        Returns the rows at ``indices`` normalized with their own statistics.
        """
        indices = np.asarray(indices, dtype=np.int64)
        return Dataset(self.features[indices], self.y[indices], self.k,
                       self.label_names, name=self.name)

    def __repr__(self):
        return 'Dataset(name=%r, m=%d, d=%d, k=%d)' % (
            self.name, self.m, self.d, self.k)


def load_dataset(path, label_column, has_header=True, name=None):
    """
    Convenience wrapper: :func:`load_csv` followed by
    :py:meth:`Dataset.from_table`.
    """
    raw = load_csv(path, label_column, has_header)
    if name is None:
        name = os.path.splitext(os.path.basename(path))[0]
    dataset = Dataset.from_table(raw, name=name)
    logger.info('Dataset %s: m=%d d=%d k=%d', name, dataset.m, dataset.d,
                dataset.k)
    return dataset


def load_manifest(path):
    """
    Reads a JSON dataset manifest. It can hold one entry, a list of entries
    or an object with a ``datasets`` list; each entry has ``name``, ``path``,
    ``label_column`` and optionally ``has_header`` (default true). Relative
    paths are resolved from the manifest directory.

    :returns: list of entries as dicts.
    :raises: :py:exc:`ManifestError`
    """
    try:
        with open(path) as fd:
            document = json.load(fd)
    except (OSError, ValueError) as e:
        raise ManifestError('Cannot read manifest %s: %s' % (path, e))
    if isinstance(document, dict):
        document = document.get('datasets', [document])
    if not isinstance(document, list) or not document:
        raise ManifestError('Manifest %s lists no datasets' % path)
    base = os.path.dirname(os.path.abspath(path))
    entries = []
    for position, entry in enumerate(document):
        if not isinstance(entry, dict) or 'path' not in entry \
                or 'label_column' not in entry:
            raise ManifestError(
                'Entry %d of %s needs "path" and "label_column"' % (
                    position, path))
        data_path = os.path.join(base, entry['path'])
        entries.append({
            'name': entry.get('name') or os.path.splitext(
                os.path.basename(data_path))[0],
            'path': data_path,
            'label_column': entry['label_column'],
            'has_header': bool(entry.get('has_header', True)),
        })
    return entries


def load_manifest_entry(entry):
    return load_dataset(entry['path'], entry['label_column'],
                        entry['has_header'], entry['name'])
